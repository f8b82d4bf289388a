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

#include "core/families.hpp"

namespace pmh {

PrismGraph build_prism(int n) {
  if (n < 3) fail(Errc::InvalidParameter, "prism needs n >= 3");
  std::vector<VertexLabel> labels;
  labels.reserve(static_cast<std::size_t>(2 * n));
  for (int i = 1; i <= n; ++i) labels.push_back({VertexRole::Outer, i});
  for (int i = 1; i <= n; ++i) labels.push_back({VertexRole::Inner, i});

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(3 * n));
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, EdgeClass::OuterEdge});
  for (int i = 0; i < n; ++i) edges.push_back({n + i, n + (i + 1) % n, EdgeClass::InnerEdge});
  for (int i = 0; i < n; ++i) edges.push_back({i, n + i, EdgeClass::Spoke});

  PrismGraph p;
  p.n = n;
  p.graph = Graph::build("prism_" + std::to_string(n), std::move(labels), std::move(edges));
  return p;
}

CrossedPrismGraph build_crossed_prism(int n) {
  if (n < 1) fail(Errc::InvalidParameter, "crossed prism needs n >= 1");
  const int N = 4 * n;
  std::vector<VertexLabel> labels;
  labels.reserve(static_cast<std::size_t>(2 * N));
  for (int i = 1; i <= N; ++i) labels.push_back({VertexRole::Outer, i});
  for (int i = 1; i <= N; ++i) labels.push_back({VertexRole::Inner, i});

  auto u = [&](int i) { return (i - 1 + N) % N; };
  auto v = [&](int i) { return N + (i - 1 + N) % N; };

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(3 * N));
  for (int i = 1; i <= N; ++i) edges.push_back({u(i), u(i + 1), EdgeClass::OuterEdge});
  for (int i = 1; i <= 2 * n; ++i) edges.push_back({v(2 * i - 1), v(2 * i), EdgeClass::InnerEdge});
  for (int i = 1; i <= 2 * n - 1; ++i)
    edges.push_back({v(2 * i - 1), v(2 * i + 2), EdgeClass::InnerEdge});
  edges.push_back({v(N - 1), v(2), EdgeClass::InnerEdge});
  for (int i = 1; i <= N; ++i) edges.push_back({u(i), v(i), EdgeClass::Spoke});

  CrossedPrismGraph cp;
  cp.n = n;
  cp.graph =
      Graph::build("crossed_prism_" + std::to_string(n), std::move(labels), std::move(edges));
  cp.cut = PrincipalCut{4 * n - 1, 8 * n - 1, 7 * n - 1, 2 * n - 1};

  // The inner edges must induce a single cycle of length 4n. The outer cycle
  // spans the u side by construction, so decomposing the spoke-free subgraph
  // must give exactly two 4n-cycles.
  EdgeSet rings = cp.graph.edge_set();
  for (int e = 0; e < cp.graph.size(); ++e)
    if (cp.graph.edge(e).cls != EdgeClass::Spoke) rings.set(e);
  for (const Cycle& c : cycle_decomposition(cp.graph, rings))
    if (c.length() != N) fail(Errc::Internal, "inner edges do not form a single 4n-cycle");
  return cp;
}

C4PoleView c4_pole(const CrossedPrismGraph& cp, int j) {
  if (j < 1 || j > 2 * cp.n) fail(Errc::InvalidParameter, "pole index out of range");
  C4PoleView t;
  t.j = j;
  int ul = cp.outer_vertex(2 * j - 1);
  int ur = cp.outer_vertex(2 * j);
  int vl = cp.inner_vertex(2 * j - 1);
  int vr = cp.inner_vertex(2 * j);
  t.vertices = {ul, ur, vl, vr};
  const Graph& g = cp.graph;
  t.internal_edges = {g.edge_between(ul, ur), g.edge_between(ur, vr), g.edge_between(vr, vl),
                      g.edge_between(vl, ul)};
  t.e1 = j == 1 ? cp.cut.a : cp.outer_edge(2 * j - 2);
  t.e2 = j == 2 * cp.n ? cp.cut.a : cp.outer_edge(2 * j);
  t.e3 = j == 1 ? cp.cut.b : cp.inner_cross(j - 1);
  t.e4 = j == 2 * cp.n ? cp.cut.b : cp.inner_cross(j);
  return t;
}

ChainSide pole_side(const CrossedPrismGraph& cp, int j) {
  if (j < 1 || j > 2 * cp.n) fail(Errc::InvalidParameter, "pole index out of range");
  return j <= cp.n ? ChainSide::Right : ChainSide::Left;
}

PoleMatching pole_matching(const CrossedPrismGraph& cp, const PerfectMatching& m, int j) {
  C4PoleView t = c4_pole(cp, j);
  if (m.edges.intersects(t.boundary(cp.graph)))
    fail(Errc::UndefinedClassification, "matching meets the boundary of pole " + std::to_string(j));
  bool spokes = m.edges.test(t.internal_edges[1]) && m.edges.test(t.internal_edges[3]);
  bool parallel = m.edges.test(t.internal_edges[0]) && m.edges.test(t.internal_edges[2]);
  if (spokes == parallel)
    fail(Errc::UndefinedClassification, "pole " + std::to_string(j) + " is not internally matched");
  return spokes ? PoleMatching::Spokes : PoleMatching::Parallel;
}

SymmetryClass classify_two_chain(const CrossedPrismGraph& cp, const PerfectMatching& m, int j) {
  if (cp.n < 2 || cp.n % 2 != 0)
    fail(Errc::InvalidParameter, "2-chains need an even n >= 2");
  if (j < 1 || j >= 2 * cp.n || j % 2 == 0)
    fail(Errc::InvalidParameter, "2-chains start at odd pole indices");
  if (pole_side(cp, j) != pole_side(cp, j + 1))
    fail(Errc::InvalidParameter, "2-chain straddles the principal cut");
  if (cp.cut.intersection_size(m.edges) != 0)
    fail(Errc::UndefinedClassification, "matching meets the principal cut");
  return pole_matching(cp, m, j) == pole_matching(cp, m, j + 1) ? SymmetryClass::Symmetric
                                                                : SymmetryClass::Asymmetric;
}

int phi_product(const CrossedPrismGraph& cp, const PerfectMatching& m, ChainSide side) {
  if (cp.n % 2 != 0) fail(Errc::UnsupportedParameter, "phi product needs an even n");
  if (cp.cut.intersection_size(m.edges) != 0)
    fail(Errc::UndefinedClassification, "matching meets the principal cut");
  int base = side == ChainSide::Right ? 1 : cp.n + 1;
  int phi = 1;
  for (int j = base; j < base + cp.n; j += 2)
    if (classify_two_chain(cp, m, j) == SymmetryClass::Asymmetric) phi = -phi;
  return phi;
}

std::string to_dot(const CrossedPrismGraph& cp, const EdgeSet* highlight) {
  EdgeSet cut = cp.cut.as_set(cp.graph);
  return to_dot(cp.graph, highlight, &cut);
}

std::string to_dot(const PrismGraph& p, const EdgeSet* highlight) {
  return to_dot(p.graph, highlight, nullptr);
}

}  // namespace pmh
