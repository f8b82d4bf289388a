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

// JSON record builders for the library API and CLI. Records are ordered
// objects sharing the field prefix {family, n, verdict, witness_edges,
// matchings_count}; timing never enters these objects so record streams are
// byte-stable across runs and worker counts.

#include <string>

#include "core/extend.hpp"
#include "json.hpp"

namespace pmh {

using ojson = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Expectation table asserted by verify-theorems: prisms are expected PMH
// only at n = 4, crossed prisms only at even n.
bool expected_pmh(const std::string& family, int n);

ojson describe_record(const std::string& family, int n, const Graph& g, const PrincipalCut* cut);

ojson enumerate_record(const std::string& family, int n, const Graph& g,
                       const SearchBudget& budget);

ojson check_pmh_record(const std::string& family, int n, const Graph& g, int jobs,
                       const SearchBudget& budget);

ojson e2f_record(const std::string& family, int n, const Graph& g, const SearchBudget& budget);

ojson extend_record(const CrossedPrismGraph& cp, const PerfectMatching& m);

// Builds the named family instance, runs the PMH check against the
// expectation table and, for even crossed prisms, cross-checks the
// constructive extension against the exhaustive search on every matching.
// Budget overruns mark the record skipped instead of failing it.
ojson verify_instance_record(const std::string& family, int n, int jobs,
                             const SearchBudget& budget);

}  // namespace pmh
