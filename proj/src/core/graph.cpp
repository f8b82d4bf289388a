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

#include "core/graph.hpp"

#include <algorithm>
#include <sstream>

namespace pmh {

std::string vertex_name(const VertexLabel& label) {
  return (label.role == VertexRole::Outer ? "u" : "v") + std::to_string(label.index);
}

Graph Graph::build(std::string name, std::vector<VertexLabel> labels, std::vector<Edge> edges) {
  Graph g;
  g.name_ = std::move(name);
  g.labels_ = std::move(labels);
  const int n = g.order();
  if (n <= 0) fail(Errc::InvalidParameter, "graph needs at least one vertex");
  if (static_cast<int>(edges.size()) > kMaxEdges)
    fail(Errc::InvalidParameter, "graphs are capped at 4096 edges");

  for (int v = 0; v < n; ++v) {
    const VertexLabel& l = g.labels_[static_cast<std::size_t>(v)];
    auto key = std::make_pair(static_cast<int>(l.role), l.index);
    if (!g.by_label_.emplace(key, v).second)
      fail(Errc::InvalidParameter, "duplicate vertex label " + pmh::vertex_name(l));
  }

  g.incident_.assign(static_cast<std::size_t>(n), {});
  for (Edge e : edges) {
    if (e.a > e.b) std::swap(e.a, e.b);
    if (e.a < 0 || e.b >= n) fail(Errc::InvalidParameter, "edge endpoint out of range");
    if (e.a == e.b) fail(Errc::InvalidParameter, "loops are not allowed");
    auto key = std::make_pair(e.a, e.b);
    int idx = static_cast<int>(g.edges_.size());
    if (!g.by_endpoints_.emplace(key, idx).second)
      fail(Errc::InvalidParameter, "parallel edge between " + g.vertex_name(e.a) + " and " +
                                       g.vertex_name(e.b));
    g.edges_.push_back(e);
    g.incident_[static_cast<std::size_t>(e.a)].push_back(idx);
    g.incident_[static_cast<std::size_t>(e.b)].push_back(idx);
  }

  // connectivity
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int ei : g.incident(v)) {
      int w = g.other_end(ei, v);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) fail(Errc::InvalidParameter, "graph is not connected");
  return g;
}

int Graph::find_vertex(VertexRole role, int index) const {
  auto it = by_label_.find(std::make_pair(static_cast<int>(role), index));
  return it == by_label_.end() ? -1 : it->second;
}

int Graph::edge_between(int x, int y) const {
  if (x > y) std::swap(x, y);
  auto it = by_endpoints_.find(std::make_pair(x, y));
  return it == by_endpoints_.end() ? -1 : it->second;
}

bool Graph::is_cubic() const {
  for (int v = 0; v < order(); ++v)
    if (degree(v) != 3) return false;
  return true;
}

EdgeSet Graph::full_edge_set() const {
  EdgeSet s(size());
  for (int e = 0; e < size(); ++e) s.set(e);
  return s;
}

bool validate_perfect_matching(const Graph& g, const EdgeSet& m) {
  if (m.width() != g.size()) fail(Errc::MalformedInput, "edge set does not match the graph");
  std::vector<int> cover(static_cast<std::size_t>(g.order()), 0);
  m.for_each([&](int ei) {
    const Edge& e = g.edge(ei);
    ++cover[static_cast<std::size_t>(e.a)];
    ++cover[static_cast<std::size_t>(e.b)];
  });
  for (int c : cover)
    if (c != 1) return false;
  return true;
}

PerfectMatching PerfectMatching::checked(const Graph& g, EdgeSet edges) {
  if (!validate_perfect_matching(g, edges)) fail(Errc::NotAMatching, "not a perfect matching");
  return PerfectMatching{std::move(edges)};
}

std::vector<Cycle> cycle_decomposition(const Graph& g, const EdgeSet& f) {
  if (f.width() != g.size()) fail(Errc::MalformedInput, "edge set does not match the graph");
  const int n = g.order();
  std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n));
  f.for_each([&](int ei) {
    const Edge& e = g.edge(ei);
    nbr[static_cast<std::size_t>(e.a)].push_back(e.b);
    nbr[static_cast<std::size_t>(e.b)].push_back(e.a);
  });
  for (int v = 0; v < n; ++v) {
    if (nbr[static_cast<std::size_t>(v)].size() != 2)
      fail(Errc::MalformedFactor, "edge set is not 2-regular spanning at " + g.vertex_name(v));
    auto& a = nbr[static_cast<std::size_t>(v)];
    if (a[0] > a[1]) std::swap(a[0], a[1]);
  }

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Cycle> cycles;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    Cycle cyc;
    cyc.vertices.push_back(s);
    seen[static_cast<std::size_t>(s)] = 1;
    int prev = s;
    int cur = nbr[static_cast<std::size_t>(s)][0];  // toward the smaller neighbor
    while (cur != s) {
      cyc.vertices.push_back(cur);
      seen[static_cast<std::size_t>(cur)] = 1;
      const auto& a = nbr[static_cast<std::size_t>(cur)];
      int nxt = a[0] == prev ? a[1] : a[0];
      prev = cur;
      cur = nxt;
    }
    if (cyc.length() < 3) fail(Errc::MalformedFactor, "cycle shorter than 3");
    cycles.push_back(std::move(cyc));
  }
  std::sort(cycles.begin(), cycles.end(), [](const Cycle& x, const Cycle& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    return x.vertices[0] < y.vertices[0];
  });
  return cycles;
}

TwoFactor complement_two_factor(const Graph& g, const PerfectMatching& m) {
  if (!g.is_cubic()) fail(Errc::UnsupportedDegree, "complement 2-factor needs a cubic graph");
  if (!validate_perfect_matching(g, m.edges)) fail(Errc::NotAMatching, "not a perfect matching");
  EdgeSet comp = g.full_edge_set().minus(m.edges);
  TwoFactor f{comp, cycle_decomposition(g, comp)};
  return f;
}

bool is_hamiltonian_union(const Graph& g, const PerfectMatching& m, const PerfectMatching& n) {
  if (!validate_perfect_matching(g, m.edges) || !validate_perfect_matching(g, n.edges))
    fail(Errc::NotAMatching, "not a perfect matching");
  if (m.edges.intersects(n.edges)) return false;
  EdgeSet u = m.edges | n.edges;
  std::vector<Cycle> cycles = cycle_decomposition(g, u);
  return cycles.size() == 1 && cycles[0].length() == g.order();
}

std::string to_dot(const Graph& g, const EdgeSet* highlight, const EdgeSet* cut) {
  std::ostringstream out;
  out << "graph " << g.name() << " {\n";
  out << "  node [shape=circle];\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << g.vertex_name(v) << ";\n";
  for (int e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    out << "  " << g.vertex_name(ed.a) << " -- " << g.vertex_name(ed.b);
    bool bold = highlight != nullptr && highlight->test(e);
    bool cutedge = cut != nullptr && cut->test(e);
    if (bold && cutedge)
      out << " [style=bold, color=red]";
    else if (bold)
      out << " [style=bold]";
    else if (cutedge)
      out << " [color=red]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string edge_token(const Graph& g, int edge_index) {
  const Edge& e = g.edge(edge_index);
  return g.vertex_name(e.a) + "-" + g.vertex_name(e.b);
}

std::vector<std::string> edge_tokens(const Graph& g, const EdgeSet& s) {
  std::vector<std::string> out;
  s.for_each([&](int ei) { out.push_back(edge_token(g, ei)); });
  return out;
}

std::string format_edge_list(const Graph& g, const EdgeSet& s) {
  std::string out;
  bool first = true;
  s.for_each([&](int ei) {
    if (!first) out += ' ';
    out += edge_token(g, ei);
    first = false;
  });
  return out;
}

namespace {

int parse_vertex(const Graph& g, const std::string& tok) {
  if (tok.size() < 2 || (tok[0] != 'u' && tok[0] != 'v'))
    fail(Errc::MalformedInput, "bad vertex name '" + tok + "'");
  int idx = 0;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') fail(Errc::MalformedInput, "bad vertex name '" + tok + "'");
    idx = idx * 10 + (tok[i] - '0');
  }
  VertexRole role = tok[0] == 'u' ? VertexRole::Outer : VertexRole::Inner;
  int v = g.find_vertex(role, idx);
  if (v < 0) fail(Errc::MalformedInput, "vertex '" + tok + "' is not in the graph");
  return v;
}

}  // namespace

EdgeSet parse_edge_list(const Graph& g, const std::string& text) {
  EdgeSet s = g.edge_set();
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    auto dash = tok.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 >= tok.size())
      fail(Errc::MalformedInput, "bad edge token '" + tok + "' (expected u1-v1 style)");
    int x = parse_vertex(g, tok.substr(0, dash));
    int y = parse_vertex(g, tok.substr(dash + 1));
    int e = g.edge_between(x, y);
    if (e < 0) fail(Errc::MalformedInput, "edge '" + tok + "' is not in the graph");
    s.set(e);
  }
  return s;
}

}  // namespace pmh
