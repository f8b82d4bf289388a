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

// Test fixtures and independent oracles. The brute-force matching counter
// walks all 2^|E| edge subsets and stays independent of the enumeration
// code it checks.

#include <bit>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "core/families.hpp"
#include "core/matching.hpp"

namespace pmh::test {

inline Graph make_c4() {
  std::vector<VertexLabel> labels;
  for (int i = 1; i <= 4; ++i) labels.push_back({VertexRole::Outer, i});
  std::vector<Edge> edges = {{0, 1, EdgeClass::Generic},
                             {1, 2, EdgeClass::Generic},
                             {2, 3, EdgeClass::Generic},
                             {0, 3, EdgeClass::Generic}};
  return Graph::build("c4", std::move(labels), std::move(edges));
}

inline Graph make_k4() {
  std::vector<VertexLabel> labels;
  for (int i = 1; i <= 4; ++i) labels.push_back({VertexRole::Outer, i});
  std::vector<Edge> edges;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) edges.push_back({a, b, EdgeClass::Generic});
  return Graph::build("k4", std::move(labels), std::move(edges));
}

inline Graph make_k33() {
  std::vector<VertexLabel> labels;
  for (int i = 1; i <= 3; ++i) labels.push_back({VertexRole::Outer, i});
  for (int i = 1; i <= 3; ++i) labels.push_back({VertexRole::Inner, i});
  std::vector<Edge> edges;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) edges.push_back({a, 3 + b, EdgeClass::Generic});
  return Graph::build("k33", std::move(labels), std::move(edges));
}

inline Graph make_petersen() {
  std::vector<VertexLabel> labels;
  for (int i = 1; i <= 5; ++i) labels.push_back({VertexRole::Outer, i});
  for (int i = 1; i <= 5; ++i) labels.push_back({VertexRole::Inner, i});
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5, EdgeClass::OuterEdge});
  for (int i = 0; i < 5; ++i)
    edges.push_back({5 + i, 5 + (i + 2) % 5, EdgeClass::InnerEdge});  // pentagram
  for (int i = 0; i < 5; ++i) edges.push_back({i, 5 + i, EdgeClass::Spoke});
  return Graph::build("petersen", std::move(labels), std::move(edges));
}

inline Graph make_k3() {  // odd order, for the no-matching error path
  std::vector<VertexLabel> labels;
  for (int i = 1; i <= 3; ++i) labels.push_back({VertexRole::Outer, i});
  std::vector<Edge> edges = {{0, 1, EdgeClass::Generic},
                             {1, 2, EdgeClass::Generic},
                             {0, 2, EdgeClass::Generic}};
  return Graph::build("k3", std::move(labels), std::move(edges));
}

inline std::uint64_t bitmask_pm_count(const Graph& g) {
  const int E = g.size();
  const int V = g.order();
  if (E > 24) throw std::runtime_error("bitmask oracle capped at 24 edges");
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << E); ++mask) {
    if (std::popcount(mask) * 2 != V) continue;
    std::uint32_t covered = 0;
    bool ok = true;
    for (int e = 0; e < E && ok; ++e) {
      if (!((mask >> e) & 1)) continue;
      std::uint32_t ends =
          (std::uint32_t{1} << g.edge(e).a) | (std::uint32_t{1} << g.edge(e).b);
      if (covered & ends) ok = false;
      covered |= ends;
    }
    if (ok && std::popcount(covered) == V) ++count;
  }
  return count;
}

inline int girth(const Graph& g) {
  int best = g.order() + 1;
  for (int e = 0; e < g.size(); ++e) {
    int src = g.edge(e).a, dst = g.edge(e).b;
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    std::deque<int> queue = {src};
    dist[static_cast<std::size_t>(src)] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int ei : g.incident(v)) {
        if (ei == e) continue;
        int w = g.other_end(ei, v);
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          queue.push_back(w);
        }
      }
    }
    if (dist[static_cast<std::size_t>(dst)] >= 0)
      best = std::min(best, dist[static_cast<std::size_t>(dst)] + 1);
  }
  return best;
}

// Outer/inner exchange automorphism: u_{2i-1} <-> v_{2i}, u_{2i} <-> v_{2i-1}.
// Maps a to b and d to c.
inline std::vector<int> psi_vertex_map(const CrossedPrismGraph& cp) {
  std::vector<int> map(static_cast<std::size_t>(cp.graph.order()), -1);
  for (int i = 1; i <= 2 * cp.n; ++i) {
    map[static_cast<std::size_t>(cp.outer_vertex(2 * i - 1))] = cp.inner_vertex(2 * i);
    map[static_cast<std::size_t>(cp.outer_vertex(2 * i))] = cp.inner_vertex(2 * i - 1);
    map[static_cast<std::size_t>(cp.inner_vertex(2 * i - 1))] = cp.outer_vertex(2 * i);
    map[static_cast<std::size_t>(cp.inner_vertex(2 * i))] = cp.outer_vertex(2 * i - 1);
  }
  return map;
}

inline EdgeSet map_edges(const Graph& g, const std::vector<int>& vmap, const EdgeSet& s) {
  EdgeSet out = g.edge_set();
  s.for_each([&](int ei) {
    const Edge& e = g.edge(ei);
    int mapped = g.edge_between(vmap[static_cast<std::size_t>(e.a)],
                                vmap[static_cast<std::size_t>(e.b)]);
    if (mapped < 0) throw std::runtime_error("vertex map is not an automorphism");
    out.set(mapped);
  });
  return out;
}

// Cut-free matching with the given pole types, e.g. "SPSP".
inline PerfectMatching pole_typed_matching(const CrossedPrismGraph& cp,
                                           const std::string& types) {
  if (static_cast<int>(types.size()) != 2 * cp.n)
    throw std::runtime_error("need one type per pole");
  EdgeSet m = cp.graph.edge_set();
  for (int j = 1; j <= 2 * cp.n; ++j) {
    if (types[static_cast<std::size_t>(j - 1)] == 'S') {
      m.set(cp.spoke(2 * j - 1));
      m.set(cp.spoke(2 * j));
    } else {
      m.set(cp.outer_edge(2 * j - 1));
      m.set(cp.inner_pair(j));
    }
  }
  return PerfectMatching::checked(cp.graph, m);
}

inline PerfectMatching matching_from_tokens(const Graph& g, const std::string& tokens) {
  return PerfectMatching::checked(g, parse_edge_list(g, tokens));
}

}  // namespace pmh::test
