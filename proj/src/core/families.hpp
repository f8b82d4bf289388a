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

// Prism and crossed-prism builders plus the structural vocabulary used by the
// constructive extension algorithm: principal 4-edge-cut, C4-poles, chain
// sides, 2-chain symmetry classes.
//
// Labeling. Outer vertices are u1..uN on a cycle, inner vertices v1..vN, and
// every u_i v_i is a spoke (N = n for prisms, N = 4n for crossed prisms).
// Prism inner edges run v_i v_{i+1}; crossed-prism inner edges are the pairs
// v_{2i-1} v_{2i}, the crossings v_{2i-1} v_{2i+2} and the wrap v_{4n-1} v_2,
// which together form a single 4n-cycle.
//
// Edge indices are assigned deterministically: outer edges first (u1u2,
// u2u3, ..., wrap), then inner edges (for crossed prisms: pairs in i order,
// then crossings in i order, then the wrap), then spokes in i order. Edge
// sets are therefore reproducible across runs.

#include <array>
#include <string>

#include "core/graph.hpp"

namespace pmh {

struct PrismGraph {
  int n = 0;
  Graph graph;

  int outer_vertex(int i) const { return (i - 1 + n) % n; }          // 1-based, wraps
  int inner_vertex(int i) const { return n + (i - 1 + n) % n; }
  int outer_edge(int i) const { return (i - 1 + n) % n; }            // u_i u_{i+1}
  int inner_edge(int i) const { return n + (i - 1 + n) % n; }        // v_i v_{i+1}
  int spoke(int i) const { return 2 * n + (i - 1 + n) % n; }         // u_i v_i
};

// n >= 3; 2n vertices, 3n edges, 3-regular.
PrismGraph build_prism(int n);

// The four edges a = u1 u_{4n}, b = v2 v_{4n-1}, c = v_{2n-1} v_{2n+2},
// d = u_{2n} u_{2n+1} separating poles T_1..T_n from T_{n+1}..T_{2n}.
struct PrincipalCut {
  int a = -1, b = -1, c = -1, d = -1;

  bool contains(int e) const { return e == a || e == b || e == c || e == d; }
  EdgeSet as_set(const Graph& g) const { return EdgeSet::of(g.size(), {a, b, c, d}); }
  int intersection_size(const EdgeSet& m) const {
    return (m.test(a) ? 1 : 0) + (m.test(b) ? 1 : 0) + (m.test(c) ? 1 : 0) + (m.test(d) ? 1 : 0);
  }
};

struct CrossedPrismGraph {
  int n = 0;  // 8n vertices, 12n edges, poles T_1..T_{2n}
  Graph graph;
  PrincipalCut cut;

  int outer_vertex(int i) const { return (i - 1 + 4 * n) % (4 * n); }
  int inner_vertex(int i) const { return 4 * n + (i - 1 + 4 * n) % (4 * n); }
  int outer_edge(int i) const { return (i - 1 + 4 * n) % (4 * n); }  // u_i u_{i+1}
  int inner_pair(int i) const { return 4 * n + i - 1; }              // v_{2i-1} v_{2i}
  int inner_cross(int i) const {                                     // v_{2i-1} v_{2i+2}
    return i == 2 * n ? 8 * n - 1 : 6 * n + i - 1;                   // i = 2n is the wrap b
  }
  int spoke(int i) const { return 8 * n + (i - 1 + 4 * n) % (4 * n); }
};

// n >= 1; the inner edge set is verified to be a single 4n-cycle.
CrossedPrismGraph build_crossed_prism(int n);

enum class ChainSide { Right, Left };  // poles T_1..T_n vs T_{n+1}..T_{2n}

enum class SymmetryClass { Symmetric, Asymmetric };

// The two ways a C4-pole can be matched internally.
enum class PoleMatching { Spokes, Parallel };

// The j-th C4-pole of a crossed prism: vertices u_{2j-1}, u_{2j}, v_{2j-1},
// v_{2j}, the internal 4-cycle (u_{2j-1}, u_{2j}, v_{2j}, v_{2j-1}), and four
// semiedge slots. The inner twist attaches the lower-left external edge at
// v_{2j} and the lower-right one at v_{2j-1}:
//   e1 @ u_{2j-1} (upper left)    e2 @ u_{2j}   (upper right)
//   e3 @ v_{2j}   (lower left)    e4 @ v_{2j-1} (lower right)
// With these slots the left semiedges of T_1 are exactly {a, b} and the
// diagonal pairs {e1,e3}, {e2,e4} are the ones a 2-cut matching never takes.
struct C4PoleView {
  int j = 0;
  std::array<int, 4> vertices{};        // u_{2j-1}, u_{2j}, v_{2j-1}, v_{2j}
  std::array<int, 4> internal_edges{};  // the 4-cycle listed above
  int e1 = -1, e2 = -1, e3 = -1, e4 = -1;

  EdgeSet boundary(const Graph& g) const {  // δT_j
    return EdgeSet::of(g.size(), {e1, e2, e3, e4});
  }
  EdgeSet internal(const Graph& g) const {
    return EdgeSet::of(g.size(), {internal_edges[0], internal_edges[1], internal_edges[2],
                                  internal_edges[3]});
  }
};

C4PoleView c4_pole(const CrossedPrismGraph& cp, int j);  // 1 <= j <= 2n

ChainSide pole_side(const CrossedPrismGraph& cp, int j);

// Internal matching type of pole T_j; requires m ∩ δT_j = ∅.
PoleMatching pole_matching(const CrossedPrismGraph& cp, const PerfectMatching& m, int j);

// Symmetry of the 2-chain (T_j, T_{j+1}); j odd so the chains are the
// disjoint pairs (T_1,T_2), (T_3,T_4), ... used by the chain walk. Requires
// n even, n >= 2, and m ∩ X = ∅.
SymmetryClass classify_two_chain(const CrossedPrismGraph& cp, const PerfectMatching& m, int j);

// Product of ±1 over the side's 2-chains; -1 iff the side has an odd number
// of asymmetric 2-chains. Requires n even and m ∩ X = ∅.
int phi_product(const CrossedPrismGraph& cp, const PerfectMatching& m, ChainSide side);

// DOT text with the principal cut colored; highlight may be null.
std::string to_dot(const CrossedPrismGraph& cp, const EdgeSet* highlight = nullptr);
std::string to_dot(const PrismGraph& p, const EdgeSet* highlight = nullptr);

}  // namespace pmh
