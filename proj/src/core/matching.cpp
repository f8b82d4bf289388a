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

#include "core/matching.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace pmh {

namespace {

struct Enumerator {
  const Graph& g;
  const std::function<bool(const EdgeSet&)>& yield;
  std::vector<char> covered;
  EdgeSet current;
  bool stopped = false;

  Enumerator(const Graph& graph, const std::function<bool(const EdgeSet&)>& cb)
      : g(graph), yield(cb), covered(static_cast<std::size_t>(graph.order()), 0),
        current(graph.size()) {}

  void run(int from) {
    int v = from;
    while (v < g.order() && covered[static_cast<std::size_t>(v)]) ++v;
    if (v == g.order()) {
      if (!yield(current)) stopped = true;
      return;
    }
    for (int ei : g.incident(v)) {
      int w = g.other_end(ei, v);
      if (covered[static_cast<std::size_t>(w)]) continue;
      covered[static_cast<std::size_t>(v)] = covered[static_cast<std::size_t>(w)] = 1;
      current.set(ei);
      run(v + 1);
      current.reset(ei);
      covered[static_cast<std::size_t>(v)] = covered[static_cast<std::size_t>(w)] = 0;
      if (stopped) return;
    }
  }
};

void check_budget(const SearchBudget& budget, std::uint64_t produced) {
  if (produced > budget.max_matchings)
    fail(Errc::LimitExceeded, "matching-count cap exceeded");
  if (budget.deadline && (produced & 1023) == 1 &&  // first matching, then every 1024
      std::chrono::steady_clock::now() > *budget.deadline)
    fail(Errc::LimitExceeded, "per-instance timeout exceeded");
}

// Union-find over vertices with rollback, used to cut selections that close
// a cycle before the last edge.
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) : parent_(static_cast<std::size_t>(n)), size_(n, 1) {
    for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }

  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }

  // False when x and y were already connected (no-op in that case).
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    if (size_[static_cast<std::size_t>(rx)] < size_[static_cast<std::size_t>(ry)])
      std::swap(rx, ry);
    parent_[static_cast<std::size_t>(ry)] = rx;
    size_[static_cast<std::size_t>(rx)] += size_[static_cast<std::size_t>(ry)];
    trail_.push_back(ry);
    return true;
  }

  std::size_t mark() const { return trail_.size(); }
  void rollback(std::size_t mark) {
    while (trail_.size() > mark) {
      int ry = trail_.back();
      trail_.pop_back();
      int rx = parent_[static_cast<std::size_t>(ry)];
      parent_[static_cast<std::size_t>(ry)] = ry;
      size_[static_cast<std::size_t>(rx)] -= size_[static_cast<std::size_t>(ry)];
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> trail_;
};

}  // namespace

void enumerate_perfect_matchings(const Graph& g,
                                 const std::function<bool(const EdgeSet&)>& yield) {
  if (g.order() % 2 != 0)
    fail(Errc::NoMatchingPossible, "odd-order graphs have no perfect matching");
  Enumerator e(g, yield);
  e.run(0);
}

std::vector<EdgeSet> all_perfect_matchings(const Graph& g, const SearchBudget& budget) {
  std::vector<EdgeSet> out;
  enumerate_perfect_matchings(g, [&](const EdgeSet& m) {
    out.push_back(m);
    check_budget(budget, out.size());
    return true;
  });
  return out;
}

std::uint64_t count_perfect_matchings(const Graph& g, const SearchBudget& budget) {
  std::uint64_t count = 0;
  enumerate_perfect_matchings(g, [&](const EdgeSet&) {
    ++count;
    check_budget(budget, count);
    return true;
  });
  return count;
}

std::optional<PerfectMatching> find_extension(const Graph& g, const PerfectMatching& m) {
  if (!g.is_cubic()) fail(Errc::UnsupportedDegree, "extension search needs a cubic graph");
  if (!validate_perfect_matching(g, m.edges)) fail(Errc::NotAMatching, "not a perfect matching");

  EdgeSet comp = g.full_edge_set().minus(m.edges);
  std::vector<Cycle> cycles = cycle_decomposition(g, comp);
  for (const Cycle& c : cycles)
    if (c.length() % 2 != 0) return std::nullopt;  // no disjoint matching at all

  // Per cycle, the two alternations; phase 0 contains the first listed edge.
  std::vector<std::array<std::vector<int>, 2>> alternations;
  alternations.reserve(cycles.size());
  for (const Cycle& c : cycles) {
    std::array<std::vector<int>, 2> alt;
    const int len = c.length();
    for (int i = 0; i < len; ++i) {
      int e = g.edge_between(c.vertices[static_cast<std::size_t>(i)],
                             c.vertices[static_cast<std::size_t>((i + 1) % len)]);
      alt[static_cast<std::size_t>(i % 2)].push_back(e);
    }
    alternations.push_back(std::move(alt));
  }

  const int target = g.order();  // edges in a Hamiltonian m ∪ n
  RollbackDsu dsu(g.order());
  int added = 0;
  m.edges.for_each([&](int ei) {
    const Edge& e = g.edge(ei);
    dsu.unite(e.a, e.b);
    ++added;
  });

  std::vector<int> phase(cycles.size(), -1);
  auto search = [&](auto&& self, std::size_t i, int count) -> bool {
    if (i == alternations.size()) return count == target;
    for (int p = 0; p < 2; ++p) {
      std::size_t mark = dsu.mark();
      bool viable = true;
      int c = count;
      for (int ei : alternations[i][static_cast<std::size_t>(p)]) {
        const Edge& e = g.edge(ei);
        ++c;
        if (!dsu.unite(e.a, e.b) && c != target) {  // closed a short cycle
          viable = false;
          break;
        }
      }
      if (viable && self(self, i + 1, c)) {
        phase[i] = p;
        return true;
      }
      dsu.rollback(mark);
    }
    return false;
  };
  if (!search(search, 0, added)) return std::nullopt;

  EdgeSet n = g.edge_set();
  for (std::size_t i = 0; i < alternations.size(); ++i)
    for (int ei : alternations[i][static_cast<std::size_t>(phase[i])]) n.set(ei);
  return PerfectMatching{n};
}

PmhVerdict check_pmh(const Graph& g, int jobs, const SearchBudget& budget) {
  if (!g.is_cubic()) fail(Errc::UnsupportedDegree, "PMH check needs a cubic graph");
  std::vector<EdgeSet> matchings = all_perfect_matchings(g, budget);

  PmhVerdict verdict;
  verdict.stats.matchings = matchings.size();

  const std::size_t total = matchings.size();
  std::size_t first_failure = total;

  if (jobs <= 1 || total < 2) {
    for (std::size_t i = 0; i < total; ++i) {
      ++verdict.stats.extensions_checked;
      if (!find_extension(g, PerfectMatching{matchings[i]})) {
        first_failure = i;
        break;
      }
    }
  } else {
    std::atomic<std::size_t> failure{total};
    std::atomic<std::uint64_t> checked{0};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= total || i >= failure.load()) return;
        checked.fetch_add(1);
        if (!find_extension(g, PerfectMatching{matchings[i]})) {
          std::size_t cur = failure.load();
          while (i < cur && !failure.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    std::vector<std::thread> pool;
    int count = std::min<int>(jobs, static_cast<int>(total));
    pool.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    first_failure = failure.load();
    verdict.stats.extensions_checked = checked.load();
  }

  verdict.is_pmh = first_failure == total;
  if (!verdict.is_pmh) verdict.witness = PerfectMatching{matchings[first_failure]};
  return verdict;
}

bool complement_all_even(const Graph& g, const PerfectMatching& m) {
  TwoFactor f = complement_two_factor(g, m);
  for (const Cycle& c : f.cycles)
    if (c.length() % 2 != 0) return false;
  return true;
}

bool three_edge_colouring_search(const Graph& g, const PerfectMatching& m) {
  if (!g.is_cubic()) fail(Errc::UnsupportedDegree, "3-edge-colouring needs a cubic graph");
  if (!validate_perfect_matching(g, m.edges)) fail(Errc::NotAMatching, "not a perfect matching");

  std::vector<int> colour(static_cast<std::size_t>(g.size()), 0);  // 0 = uncoloured
  std::vector<int> rest;
  for (int e = 0; e < g.size(); ++e) {
    if (m.edges.test(e))
      colour[static_cast<std::size_t>(e)] = 1;
    else
      rest.push_back(e);
  }

  auto clashes = [&](int ei, int c) {
    const Edge& e = g.edge(ei);
    for (int v : {e.a, e.b})
      for (int other : g.incident(v))
        if (other != ei && colour[static_cast<std::size_t>(other)] == c) return true;
    return false;
  };

  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == rest.size()) return true;
    int ei = rest[k];
    for (int c : {2, 3}) {
      if (clashes(ei, c)) continue;
      colour[static_cast<std::size_t>(ei)] = c;
      if (self(self, k + 1)) return true;
      colour[static_cast<std::size_t>(ei)] = 0;
    }
    return false;
  };
  return search(search, 0);
}

bool extends_to_3ec(const Graph& g, const PerfectMatching& m) {
  bool parity = complement_all_even(g, m);
  bool coloured = three_edge_colouring_search(g, m);
  if (parity != coloured)
    fail(Errc::Internal, "3-edge-colouring routes disagree on " + g.name());
  return parity;
}

E2fVerdict proposition_e2f_check(const Graph& g, const SearchBudget& budget) {
  if (!g.is_cubic()) fail(Errc::UnsupportedDegree, "even-2-factor check needs a cubic graph");
  std::vector<EdgeSet> matchings = all_perfect_matchings(g, budget);
  if (matchings.empty()) return E2fVerdict{true, true, true};

  E2fVerdict v;
  v.every_pm_extends = true;
  v.all_two_factors_even = true;
  for (const EdgeSet& m : matchings) {
    if (v.every_pm_extends && !three_edge_colouring_search(g, PerfectMatching{m}))
      v.every_pm_extends = false;
    if (v.all_two_factors_even && !complement_all_even(g, PerfectMatching{m}))
      v.all_two_factors_even = false;
    if (!v.every_pm_extends && !v.all_two_factors_even) break;
  }
  return v;
}

}  // namespace pmh
