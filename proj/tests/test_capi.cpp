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

// Black-box tests of the shared-library surface in pmh.h.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "pmh.h"

using nlohmann::ordered_json;

namespace {

struct Graph {
  pmh_graph* g = nullptr;
  ~Graph() { pmh_graph_destroy(g); }
};

struct Set {
  pmh_edgeset* s = nullptr;
  ~Set() { pmh_edgeset_destroy(s); }
};

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  pmh_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("graph lifecycle and describe") {
  Graph g;
  REQUIRE(pmh_prism_create(4, &g.g) == PMH_OK);
  CHECK(pmh_graph_order(g.g) == 8);
  CHECK(pmh_graph_size(g.g) == 12);

  char* json = nullptr;
  REQUIRE(pmh_graph_describe(g.g, &json) == PMH_OK);
  ordered_json r = ordered_json::parse(take(json));
  CHECK(r["family"] == "prism");
  CHECK(r["n"] == 4);
  CHECK(r["vertices"] == 8);
  CHECK(r["edges"] == 12);
  CHECK(r["principal_cut"].is_null());

  Graph cp;
  REQUIRE(pmh_crossed_prism_create(2, &cp.g) == PMH_OK);
  REQUIRE(pmh_graph_describe(cp.g, &json) == PMH_OK);
  r = ordered_json::parse(take(json));
  CHECK(r["principal_cut"]["a"] == "u1-u8");
  CHECK(r["principal_cut"]["b"] == "v2-v7");
  CHECK(r["principal_cut"]["c"] == "v3-v6");
  CHECK(r["principal_cut"]["d"] == "u4-u5");
}

TEST_CASE("creation errors") {
  pmh_graph* g = nullptr;
  CHECK(pmh_prism_create(2, &g) == PMH_ERROR_INVALID_ARGUMENT);
  CHECK(g == nullptr);
  CHECK(std::strlen(pmh_last_error()) > 0);
  CHECK(pmh_crossed_prism_create(0, &g) == PMH_ERROR_INVALID_ARGUMENT);
  CHECK(pmh_prism_create(4, nullptr) == PMH_ERROR_INVALID_ARGUMENT);
  CHECK(std::string(pmh_status_name(PMH_ERROR_THEOREM_SCOPE)) == "theorem-scope");
}

TEST_CASE("matching parse and format round trip") {
  Graph g;
  REQUIRE(pmh_prism_create(4, &g.g) == PMH_OK);
  Set m;
  REQUIRE(pmh_matching_parse(g.g, "u1-v1 u2-v2 u3-v3 u4-v4", &m.s) == PMH_OK);
  char* text = nullptr;
  REQUIRE(pmh_matching_format(g.g, m.s, &text) == PMH_OK);
  CHECK(take(text) == "u1-v1 u2-v2 u3-v3 u4-v4");

  pmh_edgeset* bad = nullptr;
  CHECK(pmh_matching_parse(g.g, "u1-??", &bad) == PMH_ERROR_PARSE);
  CHECK(pmh_matching_parse(g.g, "u1-u3", &bad) == PMH_ERROR_PARSE);
}

TEST_CASE("witnesses and extension search") {
  Graph p6;
  REQUIRE(pmh_prism_create(6, &p6.g) == PMH_OK);
  Set w;
  REQUIRE(pmh_witness_prism(p6.g, &w.s) == PMH_OK);
  char* text = nullptr;
  REQUIRE(pmh_matching_format(p6.g, w.s, &text) == PMH_OK);
  CHECK(take(text) == "u3-u4 v3-v4 u1-v1 u2-v2 u5-v5 u6-v6");

  int found = -1;
  Set ext;
  REQUIRE(pmh_find_extension(p6.g, w.s, &found, &ext.s) == PMH_OK);
  CHECK(found == 0);
  CHECK(ext.s == nullptr);

  Graph p5;
  REQUIRE(pmh_prism_create(5, &p5.g) == PMH_OK);
  Set w5;
  CHECK(pmh_witness_prism(p5.g, &w5.s) == PMH_ERROR_INVALID_ARGUMENT);

  Graph cp3;
  REQUIRE(pmh_crossed_prism_create(3, &cp3.g) == PMH_OK);
  Set w3;
  REQUIRE(pmh_witness_crossed_prism_odd(cp3.g, &w3.s) == PMH_OK);
  REQUIRE(pmh_find_extension(cp3.g, w3.s, &found, &ext.s) == PMH_OK);
  CHECK(found == 1);  // exhaustive search extends the pair matching
  REQUIRE(ext.s != nullptr);

  // odd n is outside the constructive algorithm's scope
  char* json = nullptr;
  CHECK(pmh_extend_record(cp3.g, w3.s, &json) == PMH_ERROR_THEOREM_SCOPE);
}

TEST_CASE("decision records") {
  Graph p4;
  REQUIRE(pmh_prism_create(4, &p4.g) == PMH_OK);

  char* json = nullptr;
  REQUIRE(pmh_enumerate_record(p4.g, 1000000, 0, &json) == PMH_OK);
  ordered_json r = ordered_json::parse(take(json));
  CHECK(r["family"] == "prism");
  CHECK(r["matchings_count"] == 9);
  CHECK(r["verdict"].is_null());
  CHECK(r.contains("elapsed_ms"));

  REQUIRE(pmh_check_pmh_record(p4.g, 2, 1000000, 0, &json) == PMH_OK);
  r = ordered_json::parse(take(json));
  CHECK(r["verdict"] == "pmh");
  CHECK(r["witness_edges"].is_null());

  Graph p7;
  REQUIRE(pmh_prism_create(7, &p7.g) == PMH_OK);
  REQUIRE(pmh_check_pmh_record(p7.g, 1, 1000000, 0, &json) == PMH_OK);
  r = ordered_json::parse(take(json));
  CHECK(r["verdict"] == "not-pmh");
  CHECK(r["witness_edges"].is_array());

  REQUIRE(pmh_e2f_record(p4.g, 1000000, 0, &json) == PMH_OK);
  r = ordered_json::parse(take(json));
  CHECK(r["verdict"] == "e2f");
  CHECK(r["every_pm_extends"] == true);
  CHECK(r["all_two_factors_even"] == true);
  CHECK(r["sides_agree"] == true);

  // budget overrun surfaces as a status code
  CHECK(pmh_check_pmh_record(p4.g, 1, 2, 0, &json) == PMH_ERROR_LIMIT_EXCEEDED);
}

TEST_CASE("constructive extension record") {
  Graph cp2;
  REQUIRE(pmh_crossed_prism_create(2, &cp2.g) == PMH_OK);
  Set m;
  REQUIRE(pmh_matching_parse(cp2.g, "u1-v1 u2-v2 u3-u4 v3-v4 u5-v5 u6-v6 u7-u8 v7-v8", &m.s) ==
          PMH_OK);
  char* json = nullptr;
  REQUIRE(pmh_extend_record(cp2.g, m.s, &json) == PMH_OK);
  ordered_json r = ordered_json::parse(take(json));
  CHECK(r["cut_size"] == 0);
  CHECK(r["subcase"] == "FallbackSearch");
  CHECK(r["phi_right"] == -1);
  CHECK(r["phi_left"] == -1);
  CHECK(r["hamiltonian_cycle"].size() == 16);
  CHECK(r["extension"].size() == 8);

  Set not_pm;
  REQUIRE(pmh_matching_parse(cp2.g, "u1-u2", &not_pm.s) == PMH_OK);
  CHECK(pmh_extend_record(cp2.g, not_pm.s, &json) == PMH_ERROR_NOT_A_MATCHING);
}

TEST_CASE("verify instance records") {
  char* json = nullptr;
  REQUIRE(pmh_verify_instance("prism", 4, 1, 1000000, 0, &json) == PMH_OK);
  ordered_json r = ordered_json::parse(take(json));
  CHECK(r["verdict"] == "pmh");
  CHECK(r["expected"] == "pmh");
  CHECK(r["ok"] == true);

  REQUIRE(pmh_verify_instance("crossed-prism", 2, 1, 1000000, 0, &json) == PMH_OK);
  r = ordered_json::parse(take(json));
  CHECK(r["ok"] == true);
  CHECK(r["constructive_checked"] == 33);
  CHECK(r["constructive_agreement"] == true);
  CHECK(r["fallback_count"] == 4);

  // the expectation table says not-pmh for odd n; the computation disagrees
  REQUIRE(pmh_verify_instance("crossed-prism", 1, 1, 1000000, 0, &json) == PMH_OK);
  r = ordered_json::parse(take(json));
  CHECK(r["verdict"] == "pmh");
  CHECK(r["expected"] == "not-pmh");
  CHECK(r["ok"] == false);

  // a tight cap flags the instance as skipped instead of failing it
  REQUIRE(pmh_verify_instance("prism", 8, 1, 3, 0, &json) == PMH_OK);
  r = ordered_json::parse(take(json));
  CHECK(r["verdict"] == "skipped");
  CHECK(r["skipped"] == true);
  CHECK(r["ok"].is_null());

  // so does an expired timeout
  REQUIRE(pmh_verify_instance("prism", 8, 1, 1000000, 1e-9, &json) == PMH_OK);
  r = ordered_json::parse(take(json));
  CHECK(r["verdict"] == "skipped");

  CHECK(pmh_verify_instance("moebius", 4, 1, 1000000, 0, &json) == PMH_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("dot export over the C surface") {
  Graph cp2;
  REQUIRE(pmh_crossed_prism_create(2, &cp2.g) == PMH_OK);
  Set m;
  REQUIRE(pmh_matching_parse(cp2.g, "u1-v1 u2-v2 u3-v3 u4-v4 u5-v5 u6-v6 u7-v7 u8-v8", &m.s) ==
          PMH_OK);
  char* dot = nullptr;
  REQUIRE(pmh_graph_dot(cp2.g, m.s, &dot) == PMH_OK);
  std::string text = take(dot);
  CHECK(text.find("u1 -- v1 [style=bold]") != std::string::npos);
  CHECK(text.find("u1 -- u8 [color=red]") != std::string::npos);

  char* again = nullptr;
  REQUIRE(pmh_graph_dot(cp2.g, m.s, &again) == PMH_OK);
  CHECK(take(again) == text);
}
