// Copyright 2026 The pmh Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Explicit constructions: witness matchings for prisms and odd crossed
// prisms, and the case-split extension algorithm for even crossed prisms,
// dispatching on the size of the matching's intersection with the principal
// 4-edge-cut. Constructions are never trusted: every operation re-verifies
// its output before returning and falls back to the exhaustive search when
// a structural construction fails verification, recording the event in the
// trace.

#include <optional>
#include <vector>

#include "core/families.hpp"
#include "core/matching.hpp"

namespace pmh {

enum class Subcase {
  Cut2Complementary,  // |m ∩ X| = 2: complementary-matching construction
  Cut4Explicit,       // |m ∩ X| = 4: explicit closed-form partner
  Cut0BothEven,       // m ∩ X = ∅, Φ_right = Φ_left = +1: chain-walk assembly
  Cut0OneOdd,         // m ∩ X = ∅, exactly one side -1: all-cut partner
  FallbackSearch,     // structural construction failed; exhaustive search used
};

const char* subcase_name(Subcase s);

struct CaseTrace {
  int cut_size = 0;
  Subcase subcase = Subcase::FallbackSearch;
  std::optional<int> phi_right;  // populated only when cut_size == 0
  std::optional<int> phi_left;
};

struct ExtensionResult {
  PerfectMatching extension;           // disjoint from the input matching
  CaseTrace trace;
  std::vector<int> hamiltonian_cycle;  // canonical vertex order of the union
};

// M = {u_{3k}u_{3k+1}, v_{3k}v_{3k+1} : k = 1..⌊(n-1)/3⌋} plus the spokes at
// every position those pairs leave uncovered; n even, n >= 6. The longest
// cyclic spoke run is 4, 3 or 2 according to n mod 6 = 0, 2 or 4.
PerfectMatching witness_prism(const PrismGraph& p);

// Longest cyclic run of consecutive spoke positions in m.
int consecutive_spoke_run(const PrismGraph& p, const PerfectMatching& m);

// M = ∪_{i=1..2n} {u_{2i-1}u_{2i}, v_{2i-1}v_{2i}}; n odd.
PerfectMatching witness_crossed_prism_odd(const CrossedPrismGraph& cp);

// True iff every 2-factor containing m is either two 4n-cycles or 2n
// disjoint 4-cycles.
bool odd_witness_obstruction_holds(const CrossedPrismGraph& cp, const PerfectMatching& m);

// |m ∩ X| = 2. Removes the matched edge from each pole, leaving a 3-edge
// path P^(j); the returned extension N takes the two end edges of every
// path. m ∪ N is the complementary 2-factor of the remaining matching
// E \ (m ∪ N), a Hamiltonian cycle.
ExtensionResult extend_cut2(const CrossedPrismGraph& cp, const PerfectMatching& m);

// |m ∩ X| = 4 (m is then the unique matching made of all pole-external
// edges). Returns the closed-form partner: spokes on T_1, parallel edges on
// every other pole.
ExtensionResult extend_cut4(const CrossedPrismGraph& cp, const PerfectMatching& m);

// m ∩ X = ∅. Computes Φ over the two chain sides: both +1 -> chain walk
// closed with cut edges a and d; exactly one -1 -> the all-cut partner; both
// -1 -> the all-cut attempt fails verification and the exhaustive fallback
// is recorded.
ExtensionResult extend_cut0(const CrossedPrismGraph& cp, const PerfectMatching& m);

// Dispatches on |m ∩ X|. n must be even; odd n is out of theorem scope and
// callers are pointed at witness_crossed_prism_odd.
ExtensionResult extend_crossed_prism(const CrossedPrismGraph& cp, const PerfectMatching& m);

}  // namespace pmh
