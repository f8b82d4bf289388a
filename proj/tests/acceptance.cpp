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

// Acceptance suite: one pass/fail line per criterion, exit code equal to the
// number of failing criteria. Criteria 1-6 drive the library directly;
// criterion 7 runs the installed CLI and compares output streams byte for
// byte.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "core/extend.hpp"
#include "core/matching.hpp"
#include "core/records.hpp"
#include "support.hpp"

using namespace pmh;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::vector<std::string>&)> run;
};

bool criterion_prism_table(std::vector<std::string>& notes) {
  bool ok = true;
  for (int n = 3; n <= 12; ++n) {
    PmhVerdict v = check_pmh(build_prism(n).graph);
    bool expected = n == 4;
    if (v.is_pmh != expected) {
      ok = false;
      notes.push_back("P_" + std::to_string(n) + ": verdict " +
                      (v.is_pmh ? "pmh" : "not-pmh") + ", expected " +
                      (expected ? "pmh" : "not-pmh"));
    }
  }
  return ok;
}

bool criterion_prism_witness(std::vector<std::string>& notes) {
  bool ok = true;
  for (int n : {6, 8, 10, 12}) {
    PrismGraph p = build_prism(n);
    PerfectMatching w = witness_prism(p);
    if (find_extension(p.graph, w).has_value()) {
      ok = false;
      notes.push_back("witness_prism(" + std::to_string(n) + "): extension found");
    }
    int expected_run = n % 6 == 0 ? 4 : (n % 6 == 2 ? 3 : 2);
    int run = consecutive_spoke_run(p, w);
    if (run != expected_run) {
      ok = false;
      notes.push_back("witness_prism(" + std::to_string(n) + "): spoke run " +
                      std::to_string(run) + ", expected " + std::to_string(expected_run));
    }
  }
  return ok;
}

bool criterion_crossed_table(std::vector<std::string>& notes) {
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    PmhVerdict v = check_pmh(build_crossed_prism(n).graph);
    bool expected = n == 2;
    if (v.is_pmh != expected) {
      ok = false;
      notes.push_back("CP_" + std::to_string(n) + ": verdict " +
                      (v.is_pmh ? "pmh" : "not-pmh") + ", expected " +
                      (expected ? "pmh" : "not-pmh"));
    }
  }
  CrossedPrismGraph cp3 = build_crossed_prism(3);
  PerfectMatching w = witness_crossed_prism_odd(cp3);
  if (find_extension(cp3.graph, w).has_value()) {
    ok = false;
    notes.push_back("CP_3 pair matching: extension found, expected inextensible");
  }
  return ok;
}

bool criterion_constructive_complete(std::vector<std::string>& notes) {
  bool ok = true;
  for (int n : {2, 4}) {
    CrossedPrismGraph cp = build_crossed_prism(n);
    const Graph& g = cp.graph;
    std::uint64_t checked = 0;
    for (const EdgeSet& edges : all_perfect_matchings(g)) {
      PerfectMatching m{edges};
      bool constructive_ok = true;
      try {
        ExtensionResult res = extend_crossed_prism(cp, m);
        if (res.extension.edges.intersects(edges) ||
            !is_hamiltonian_union(g, m, res.extension)) {
          constructive_ok = false;
        }
      } catch (const Error&) {
        constructive_ok = false;
      }
      bool oracle_ok = find_extension(g, m).has_value();
      if (!constructive_ok || constructive_ok != oracle_ok) {
        ok = false;
        notes.push_back("CP_" + std::to_string(n) + ": disagreement on " +
                        format_edge_list(g, edges));
        break;
      }
      ++checked;
    }
    notes.push_back("CP_" + std::to_string(n) + ": " + std::to_string(checked) +
                    " matchings verified");
  }
  return ok;
}

bool criterion_cut_parity(std::vector<std::string>& notes) {
  std::uint64_t violations = 0;
  std::uint64_t matchings = 0;
  for (int n = 1; n <= 3; ++n) {
    CrossedPrismGraph cp = build_crossed_prism(n);
    const Graph& g = cp.graph;
    std::vector<C4PoleView> poles;
    for (int j = 1; j <= 2 * n; ++j) poles.push_back(c4_pole(cp, j));
    for (const EdgeSet& m : all_perfect_matchings(g)) {
      ++matchings;
      int k = cp.cut.intersection_size(m);
      if (k != 0 && k != 2 && k != 4) ++violations;
      for (const C4PoleView& t : poles)
        if ((m & t.boundary(g)).count() != k) ++violations;
      if (k == 2) {
        bool ab = m.test(cp.cut.a) && m.test(cp.cut.b);
        bool cd = m.test(cp.cut.c) && m.test(cp.cut.d);
        if (ab || cd) ++violations;
      }
    }
  }
  notes.push_back(std::to_string(matchings) + " matchings checked, " +
                  std::to_string(violations) + " violations");
  return violations == 0;
}

bool criterion_e2f_equivalence(std::vector<std::string>& notes) {
  std::vector<std::pair<std::string, Graph>> corpus;
  corpus.emplace_back("K4", test::make_k4());
  corpus.emplace_back("K33", test::make_k33());
  corpus.emplace_back("Petersen", test::make_petersen());
  for (int n = 3; n <= 10; ++n)
    corpus.emplace_back("P_" + std::to_string(n), build_prism(n).graph);
  for (int n = 1; n <= 3; ++n)
    corpus.emplace_back("CP_" + std::to_string(n), build_crossed_prism(n).graph);

  bool ok = true;
  for (const auto& [name, g] : corpus) {
    E2fVerdict v = proposition_e2f_check(g);
    if (v.every_pm_extends != v.all_two_factors_even) {
      ok = false;
      notes.push_back(name + ": sides disagree");
    }
  }
  return ok;
}

std::string run_capture(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

bool criterion_cli_determinism(std::vector<std::string>& notes) {
  const char* cli = std::getenv("PMH_CLI");
  std::string path = cli != nullptr ? cli : "./tools/pmh";
  bool ok = true;
  std::string reference;
  for (int jobs : {1, 4}) {
    std::string cmd = path + " verify-theorems --n-max-prism 10 --n-max-crossed 3 --jobs " +
                      std::to_string(jobs) + " 2>/dev/null";
    std::string first = run_capture(cmd);
    std::string second = run_capture(cmd);
    if (first.empty()) {
      ok = false;
      notes.push_back("no output from: " + cmd);
      continue;
    }
    if (first != second) {
      ok = false;
      notes.push_back("two runs differ at --jobs " + std::to_string(jobs));
    }
    if (reference.empty())
      reference = first;
    else if (first != reference) {
      ok = false;
      notes.push_back("record stream depends on --jobs");
    }
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"prism verdict table, n = 3..12", criterion_prism_table},
      {"prism witness inextensibility and mod-6 signature", criterion_prism_witness},
      {"crossed-prism verdict table, n = 1..3", criterion_crossed_table},
      {"constructive completeness on CP_2 and CP_4", criterion_constructive_complete},
      {"cut-parity invariants over CP_1..CP_3", criterion_cut_parity},
      {"even-2-factor equivalence corpus", criterion_e2f_equivalence},
      {"verify-theorems byte determinism", criterion_cli_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::vector<std::string> notes;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[i].run(notes);
    } catch (const std::exception& e) {
      notes.push_back(std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << "criterion " << i + 1 << " (" << criteria[i].name
              << "): " << (ok ? "PASS" : "FAIL") << " [" << ms << " ms]\n";
    for (const std::string& note : notes) std::cout << "    " << note << "\n";
    if (!ok) ++failures;
  }
  std::cout << "acceptance: " << criteria.size() - static_cast<std::size_t>(failures) << "/"
            << criteria.size() << " criteria passed\n";
  return failures;
}
