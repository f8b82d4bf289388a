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

// Immutable labeled simple graph plus the edge-subset, perfect-matching and
// 2-factor machinery shared by every other module. Graphs are never mutated
// after construction and are safe to share across threads.

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/errors.hpp"

namespace pmh {

enum class VertexRole : std::uint8_t { Outer, Inner };

// Role-tagged vertex label; `index` is the 1-based position used in vertex
// names ("u3" for Outer(3), "v3" for Inner(3)).
struct VertexLabel {
  VertexRole role = VertexRole::Outer;
  int index = 0;
  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

std::string vertex_name(const VertexLabel& label);

enum class EdgeClass : std::uint8_t { OuterEdge, InnerEdge, Spoke, Generic };

struct Edge {
  int a = 0;  // endpoints with a < b
  int b = 0;
  EdgeClass cls = EdgeClass::Generic;
};

// Fixed-width bitset over edge indices. The width is fixed when the owning
// graph is built; two sets are equal iff their widths and bits are identical,
// and set operations on mismatched widths are rejected.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int width) : width_(width), words_((width + 63) / 64, 0) {}

  int width() const { return width_; }

  bool test(int i) const {
    check_index(i);
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    check_index(i);
    words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    check_index(i);
    words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool intersects(const EdgeSet& o) const {
    check_width(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  EdgeSet operator|(const EdgeSet& o) const {
    check_width(o);
    EdgeSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
    return r;
  }
  EdgeSet operator&(const EdgeSet& o) const {
    check_width(o);
    EdgeSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  // Set difference: bits of *this not in `o`.
  EdgeSet minus(const EdgeSet& o) const {
    check_width(o);
    EdgeSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

  template <typename Fn>
  void for_each(Fn&& fn) const {  // ascending index order
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        fn(static_cast<int>(w * 64) + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }
  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  static EdgeSet of(int width, const std::vector<int>& indices) {
    EdgeSet s(width);
    for (int i : indices) s.set(i);
    return s;
  }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= width_) fail(Errc::MalformedInput, "edge index out of range");
  }
  void check_width(const EdgeSet& o) const {
    if (width_ != o.width_) fail(Errc::MalformedInput, "edge sets belong to different graphs");
  }

  int width_ = 0;
  std::vector<std::uint64_t> words_;
};

class Graph {
 public:
  // Validates: labels form a bijection, endpoints distinct and in range, no
  // parallel edges, connected, at most kMaxEdges edges.
  static Graph build(std::string name, std::vector<VertexLabel> labels,
                     std::vector<Edge> edges);

  static constexpr int kMaxEdges = 4096;

  int order() const { return static_cast<int>(labels_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  const VertexLabel& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  std::string vertex_name(int v) const { return pmh::vertex_name(label(v)); }
  int find_vertex(VertexRole role, int index) const;  // -1 when absent

  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<int>& incident(int v) const { return incident_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(incident(v).size()); }
  int other_end(int e, int v) const {
    const Edge& ed = edge(e);
    return ed.a == v ? ed.b : ed.a;
  }
  int edge_between(int x, int y) const;  // -1 when absent
  bool is_cubic() const;

  const std::string& name() const { return name_; }

  EdgeSet edge_set() const { return EdgeSet(size()); }
  EdgeSet full_edge_set() const;

 private:
  std::string name_;
  std::vector<VertexLabel> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::map<std::pair<int, int>, int> by_label_;      // (role, index) -> vertex
  std::map<std::pair<int, int>, int> by_endpoints_;  // (a, b) -> edge
};

// Canonical edge subset covering every vertex exactly once. Use
// PerfectMatching::checked to validate on entry into the library.
struct PerfectMatching {
  EdgeSet edges;
  static PerfectMatching checked(const Graph& g, EdgeSet edges);
};

struct Cycle {
  std::vector<int> vertices;  // starts at min vertex, steps toward smaller neighbor
  int length() const { return static_cast<int>(vertices.size()); }
};

struct TwoFactor {
  EdgeSet edges;
  std::vector<Cycle> cycles;
};

// True iff every vertex of g is covered exactly once by m.
bool validate_perfect_matching(const Graph& g, const EdgeSet& m);

// Cycle decomposition of a 2-regular spanning edge set, sorted by
// (length, smallest vertex index).
std::vector<Cycle> cycle_decomposition(const Graph& g, const EdgeSet& f);

// E(g) \ m with its cycle decomposition; g must be cubic.
TwoFactor complement_two_factor(const Graph& g, const PerfectMatching& m);

// True iff m and n are disjoint and m ∪ n is a single spanning cycle.
bool is_hamiltonian_union(const Graph& g, const PerfectMatching& m, const PerfectMatching& n);

// Deterministic DOT text. Edges in `highlight` get style=bold, edges in `cut`
// get color=red; both may be null.
std::string to_dot(const Graph& g, const EdgeSet* highlight = nullptr,
                   const EdgeSet* cut = nullptr);

// "u1-v1" style tokens, endpoints ordered by vertex index.
std::string edge_token(const Graph& g, int edge_index);
std::string format_edge_list(const Graph& g, const EdgeSet& s);
std::vector<std::string> edge_tokens(const Graph& g, const EdgeSet& s);
// Parses whitespace-separated tokens; every edge must exist in g.
EdgeSet parse_edge_list(const Graph& g, const std::string& text);

}  // namespace pmh
