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

#include "core/extend.hpp"

#include <algorithm>
#include <array>

namespace pmh {

const char* subcase_name(Subcase s) {
  switch (s) {
    case Subcase::Cut2Complementary: return "Cut2Complementary";
    case Subcase::Cut4Explicit: return "Cut4Explicit";
    case Subcase::Cut0BothEven: return "Cut0BothEven";
    case Subcase::Cut0OneOdd: return "Cut0OneOdd";
    case Subcase::FallbackSearch: return "FallbackSearch";
  }
  return "?";
}

PerfectMatching witness_prism(const PrismGraph& p) {
  const int n = p.n;
  if (n < 6 || n % 2 != 0)
    fail(Errc::InvalidParameter, "prism witness needs an even n >= 6");
  EdgeSet m = p.graph.edge_set();
  std::vector<char> paired(static_cast<std::size_t>(n + 1), 0);
  for (int k = 1; 3 * k + 1 <= n; ++k) {  // k runs to ⌊(n-1)/3⌋
    m.set(p.outer_edge(3 * k));
    m.set(p.inner_edge(3 * k));
    paired[static_cast<std::size_t>(3 * k)] = paired[static_cast<std::size_t>(3 * k + 1)] = 1;
  }
  for (int i = 1; i <= n; ++i)
    if (!paired[static_cast<std::size_t>(i)]) m.set(p.spoke(i));
  return PerfectMatching::checked(p.graph, m);
}

int consecutive_spoke_run(const PrismGraph& p, const PerfectMatching& m) {
  const int n = p.n;
  std::vector<char> has(static_cast<std::size_t>(n), 0);
  int total = 0;
  for (int i = 1; i <= n; ++i)
    if (m.edges.test(p.spoke(i))) {
      has[static_cast<std::size_t>(i - 1)] = 1;
      ++total;
    }
  if (total == n) return n;
  int best = 0, run = 0;
  for (int i = 0; i < 2 * n; ++i) {  // doubled scan handles the wrap
    if (has[static_cast<std::size_t>(i % n)])
      best = std::max(best, ++run);
    else
      run = 0;
  }
  return best;
}

PerfectMatching witness_crossed_prism_odd(const CrossedPrismGraph& cp) {
  if (cp.n % 2 == 0)
    fail(Errc::InvalidParameter, "the pair matching is a witness candidate only for odd n");
  EdgeSet m = cp.graph.edge_set();
  for (int i = 1; i <= 2 * cp.n; ++i) {
    m.set(cp.outer_edge(2 * i - 1));  // u_{2i-1} u_{2i}
    m.set(cp.inner_pair(i));          // v_{2i-1} v_{2i}
  }
  return PerfectMatching::checked(cp.graph, m);
}

bool odd_witness_obstruction_holds(const CrossedPrismGraph& cp, const PerfectMatching& m) {
  const Graph& g = cp.graph;
  if (!validate_perfect_matching(g, m.edges)) fail(Errc::NotAMatching, "not a perfect matching");

  // 2-factors containing m correspond to perfect matchings inside the
  // complement 2-factor of m, i.e. to alternation choices per cycle.
  EdgeSet comp = g.full_edge_set().minus(m.edges);
  std::vector<Cycle> cycles = cycle_decomposition(g, comp);
  for (const Cycle& c : cycles)
    if (c.length() % 2 != 0) return true;  // no 2-factor contains m at all

  std::vector<std::array<std::vector<int>, 2>> alternations;
  for (const Cycle& c : cycles) {
    std::array<std::vector<int>, 2> alt;
    for (int i = 0; i < c.length(); ++i) {
      int e = g.edge_between(c.vertices[static_cast<std::size_t>(i)],
                             c.vertices[static_cast<std::size_t>((i + 1) % c.length())]);
      alt[static_cast<std::size_t>(i % 2)].push_back(e);
    }
    alternations.push_back(std::move(alt));
  }

  const int fourn = 4 * cp.n;
  auto shape_allowed = [&](const EdgeSet& removed) {
    EdgeSet factor = g.full_edge_set().minus(removed);
    std::vector<Cycle> fc = cycle_decomposition(g, factor);
    bool two_long = fc.size() == 2 && fc[0].length() == fourn && fc[1].length() == fourn;
    bool all_squares = static_cast<int>(fc.size()) == 2 * cp.n;
    for (const Cycle& c : fc)
      if (c.length() != 4) all_squares = false;
    return two_long || all_squares;
  };

  std::vector<int> phase(alternations.size(), 0);
  auto walk = [&](auto&& self, std::size_t i) -> bool {
    if (i == alternations.size()) {
      EdgeSet removed = g.edge_set();
      for (std::size_t k = 0; k < alternations.size(); ++k)
        for (int e : alternations[k][static_cast<std::size_t>(phase[k])]) removed.set(e);
      return shape_allowed(removed);
    }
    for (int p = 0; p < 2; ++p) {
      phase[i] = p;
      if (!self(self, i + 1)) return false;
    }
    return true;
  };
  return walk(walk, 0);
}

namespace {

enum class Rail { Upper, Lower };

// Validates a candidate partner and extracts the Hamiltonian order; empty
// optional when the candidate is not a verified extension.
std::optional<std::vector<int>> verify_union(const Graph& g, const PerfectMatching& m,
                                             const EdgeSet& candidate) {
  if (!validate_perfect_matching(g, candidate)) return std::nullopt;
  if (m.edges.intersects(candidate)) return std::nullopt;
  std::vector<Cycle> cycles = cycle_decomposition(g, m.edges | candidate);
  if (cycles.size() != 1 || cycles[0].length() != g.order()) return std::nullopt;
  return cycles[0].vertices;
}

ExtensionResult finish_or_fall_back(const CrossedPrismGraph& cp, const PerfectMatching& m,
                                    const EdgeSet& candidate, CaseTrace trace) {
  const Graph& g = cp.graph;
  if (auto cycle = verify_union(g, m, candidate))
    return ExtensionResult{PerfectMatching{candidate}, trace, std::move(*cycle)};

  std::optional<PerfectMatching> found = find_extension(g, m);
  if (!found) fail(Errc::Internal, "no extension exists for the given matching");
  auto cycle = verify_union(g, m, found->edges);
  if (!cycle) fail(Errc::Internal, "exhaustive extension failed verification");
  trace.subcase = Subcase::FallbackSearch;
  return ExtensionResult{*found, trace, std::move(*cycle)};
}

// All pole-external edges; the unique matching meeting the cut in 4 edges.
EdgeSet all_external_matching(const CrossedPrismGraph& cp) {
  EdgeSet internal(cp.graph.size());
  for (int j = 1; j <= 2 * cp.n; ++j) {
    C4PoleView t = c4_pole(cp, j);
    for (int e : t.internal_edges) internal.set(e);
  }
  return cp.graph.full_edge_set().minus(internal);
}

// Walks the poles of one side left to right carrying the rail state: a
// spoke-matched pole keeps the rail and contributes the opposite parallel
// edge, a parallel-matched pole flips the rail and contributes a spoke.
// Joining edges between consecutive poles follow the rail. Returns the exit
// rail.
Rail walk_side(const CrossedPrismGraph& cp, const std::vector<PoleMatching>& types,
               int first_pole, int last_pole, Rail rail, EdgeSet& out) {
  for (int j = first_pole; j <= last_pole; ++j) {
    PoleMatching t = types[static_cast<std::size_t>(j - 1)];
    if (t == PoleMatching::Spokes) {
      out.set(rail == Rail::Upper ? cp.inner_pair(j) : cp.outer_edge(2 * j - 1));
    } else if (rail == Rail::Upper) {
      out.set(cp.spoke(2 * j));
      rail = Rail::Lower;
    } else {
      out.set(cp.spoke(2 * j - 1));
      rail = Rail::Upper;
    }
    if (j < last_pole)
      out.set(rail == Rail::Upper ? cp.outer_edge(2 * j) : cp.inner_cross(j));
  }
  return rail;
}

}  // namespace

ExtensionResult extend_cut2(const CrossedPrismGraph& cp, const PerfectMatching& m) {
  const Graph& g = cp.graph;
  if (!validate_perfect_matching(g, m.edges)) fail(Errc::NotAMatching, "not a perfect matching");
  if (cp.cut.intersection_size(m.edges) != 2)
    fail(Errc::WrongCase, "matching does not meet the principal cut in 2 edges");

  EdgeSet n_set(g.size());
  for (int j = 1; j <= 2 * cp.n; ++j) {
    C4PoleView t = c4_pole(cp, j);
    EdgeSet path = t.internal(g).minus(m.edges);
    if (path.count() != 3)
      fail(Errc::Internal, "pole " + std::to_string(j) + " does not leave a 3-edge path");
    // End edges of the path: the unique path edge at each degree-1 vertex.
    for (int v : t.vertices) {
      int deg = 0, last = -1;
      path.for_each([&](int ei) {
        const Edge& e = g.edge(ei);
        if (e.a == v || e.b == v) {
          ++deg;
          last = ei;
        }
      });
      if (deg == 1) n_set.set(last);
    }
  }
  // m ∪ N is the complementary 2-factor of the third matching E \ (m ∪ N).
  CaseTrace trace{2, Subcase::Cut2Complementary, std::nullopt, std::nullopt};
  return finish_or_fall_back(cp, m, n_set, trace);
}

ExtensionResult extend_cut4(const CrossedPrismGraph& cp, const PerfectMatching& m) {
  const Graph& g = cp.graph;
  if (!validate_perfect_matching(g, m.edges)) fail(Errc::NotAMatching, "not a perfect matching");
  if (cp.cut.intersection_size(m.edges) != 4)
    fail(Errc::WrongCase, "matching does not contain the principal cut");
  if (!(m.edges == all_external_matching(cp)))
    fail(Errc::Internal, "cut-4 matching is not the all-external matching");

  EdgeSet m2(g.size());
  m2.set(cp.spoke(1));
  m2.set(cp.spoke(2));
  for (int j = 2; j <= 2 * cp.n; ++j) {
    m2.set(cp.outer_edge(2 * j - 1));  // u_{2j-1} u_{2j}
    m2.set(cp.inner_pair(j));          // v_{2j-1} v_{2j}
  }
  CaseTrace trace{4, Subcase::Cut4Explicit, std::nullopt, std::nullopt};
  return finish_or_fall_back(cp, m, m2, trace);
}

ExtensionResult extend_cut0(const CrossedPrismGraph& cp, const PerfectMatching& m) {
  const Graph& g = cp.graph;
  if (!validate_perfect_matching(g, m.edges)) fail(Errc::NotAMatching, "not a perfect matching");
  if (cp.cut.intersection_size(m.edges) != 0)
    fail(Errc::WrongCase, "matching meets the principal cut");

  std::vector<PoleMatching> types;
  types.reserve(static_cast<std::size_t>(2 * cp.n));
  for (int j = 1; j <= 2 * cp.n; ++j) types.push_back(pole_matching(cp, m, j));

  int phi_right = phi_product(cp, m, ChainSide::Right);
  int phi_left = phi_product(cp, m, ChainSide::Left);

  CaseTrace trace{0, Subcase::Cut0BothEven, phi_right, phi_left};
  EdgeSet candidate(g.size());
  if (phi_right == 1 && phi_left == 1) {
    candidate.set(cp.cut.a);
    candidate.set(cp.cut.d);
    Rail right_exit = walk_side(cp, types, 1, cp.n, Rail::Upper, candidate);
    Rail left_exit = walk_side(cp, types, cp.n + 1, 2 * cp.n, Rail::Upper, candidate);
    if (right_exit != Rail::Upper || left_exit != Rail::Upper)
      fail(Errc::Internal, "chain walk exited on the wrong rail");
  } else {
    // The all-cut partner; when both sides are -1 this is known to close two
    // half cycles and verification hands the matching to the fallback.
    trace.subcase = Subcase::Cut0OneOdd;
    candidate = all_external_matching(cp);
  }
  return finish_or_fall_back(cp, m, candidate, trace);
}

ExtensionResult extend_crossed_prism(const CrossedPrismGraph& cp, const PerfectMatching& m) {
  if (cp.n % 2 != 0)
    fail(Errc::TheoremScope,
         "extension construction covers even n; for odd n see witness_crossed_prism_odd");
  if (!validate_perfect_matching(cp.graph, m.edges))
    fail(Errc::NotAMatching, "not a perfect matching");
  switch (cp.cut.intersection_size(m.edges)) {
    case 0: return extend_cut0(cp, m);
    case 2: return extend_cut2(cp, m);
    case 4: return extend_cut4(cp, m);
    default: fail(Errc::Internal, "cut parity violation");
  }
}

}  // namespace pmh
