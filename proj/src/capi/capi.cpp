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

#include "pmh.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <string>
#include <variant>

#include "core/records.hpp"

namespace {

thread_local std::string g_last_error;

int map_code(pmh::Errc code) {
  switch (code) {
    case pmh::Errc::InvalidParameter: return PMH_ERROR_INVALID_ARGUMENT;
    case pmh::Errc::MalformedInput: return PMH_ERROR_PARSE;
    case pmh::Errc::UnsupportedDegree: return PMH_ERROR_UNSUPPORTED_DEGREE;
    case pmh::Errc::MalformedFactor: return PMH_ERROR_MALFORMED_FACTOR;
    case pmh::Errc::NotAMatching: return PMH_ERROR_NOT_A_MATCHING;
    case pmh::Errc::NoMatchingPossible: return PMH_ERROR_NO_MATCHING_POSSIBLE;
    case pmh::Errc::UndefinedClassification: return PMH_ERROR_UNDEFINED_CLASSIFICATION;
    case pmh::Errc::UnsupportedParameter: return PMH_ERROR_UNSUPPORTED_PARAMETER;
    case pmh::Errc::WrongCase: return PMH_ERROR_WRONG_CASE;
    case pmh::Errc::TheoremScope: return PMH_ERROR_THEOREM_SCOPE;
    case pmh::Errc::LimitExceeded: return PMH_ERROR_LIMIT_EXCEEDED;
    case pmh::Errc::Internal: return PMH_ERROR_INTERNAL;
  }
  return PMH_ERROR_INTERNAL;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return PMH_OK;
  } catch (const pmh::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PMH_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

struct pmh_graph {
  std::variant<pmh::PrismGraph, pmh::CrossedPrismGraph> value;

  const pmh::Graph& graph() const {
    if (const auto* p = std::get_if<pmh::PrismGraph>(&value)) return p->graph;
    return std::get<pmh::CrossedPrismGraph>(value).graph;
  }
  const char* family() const {
    return std::holds_alternative<pmh::PrismGraph>(value) ? "prism" : "crossed-prism";
  }
  int n() const {
    if (const auto* p = std::get_if<pmh::PrismGraph>(&value)) return p->n;
    return std::get<pmh::CrossedPrismGraph>(value).n;
  }
  const pmh::CrossedPrismGraph* crossed() const {
    return std::get_if<pmh::CrossedPrismGraph>(&value);
  }
  const pmh::PrismGraph* prism() const { return std::get_if<pmh::PrismGraph>(&value); }
};

struct pmh_edgeset {
  pmh::EdgeSet set;
};

extern "C" {

const char* pmh_status_name(int status) {
  switch (status) {
    case PMH_OK: return "ok";
    case PMH_ERROR_INVALID_ARGUMENT: return "invalid-argument";
    case PMH_ERROR_PARSE: return "parse-error";
    case PMH_ERROR_UNSUPPORTED_DEGREE: return "unsupported-degree";
    case PMH_ERROR_NOT_A_MATCHING: return "not-a-matching";
    case PMH_ERROR_MALFORMED_FACTOR: return "malformed-factor";
    case PMH_ERROR_NO_MATCHING_POSSIBLE: return "no-matching-possible";
    case PMH_ERROR_UNDEFINED_CLASSIFICATION: return "undefined-classification";
    case PMH_ERROR_UNSUPPORTED_PARAMETER: return "unsupported-parameter";
    case PMH_ERROR_WRONG_CASE: return "wrong-case";
    case PMH_ERROR_THEOREM_SCOPE: return "theorem-scope";
    case PMH_ERROR_LIMIT_EXCEEDED: return "limit-exceeded";
    case PMH_ERROR_INTERNAL: return "internal-error";
    default: return "unknown";
  }
}

const char* pmh_last_error(void) { return g_last_error.c_str(); }

void pmh_string_free(char* s) { std::free(s); }

int pmh_prism_create(int n, pmh_graph** out) {
  if (out == nullptr) return PMH_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = new pmh_graph{pmh::build_prism(n)}; });
}

int pmh_crossed_prism_create(int n, pmh_graph** out) {
  if (out == nullptr) return PMH_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = new pmh_graph{pmh::build_crossed_prism(n)}; });
}

void pmh_graph_destroy(pmh_graph* g) { delete g; }

int pmh_graph_order(const pmh_graph* g) { return g == nullptr ? -1 : g->graph().order(); }

int pmh_graph_size(const pmh_graph* g) { return g == nullptr ? -1 : g->graph().size(); }

int pmh_graph_describe(const pmh_graph* g, char** json_out) {
  if (g == nullptr || json_out == nullptr) return PMH_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const pmh::PrincipalCut* cut = g->crossed() ? &g->crossed()->cut : nullptr;
    pmh::ojson r = pmh::describe_record(g->family(), g->n(), g->graph(), cut);
    *json_out = dup_string(r.dump());
  });
}

int pmh_graph_dot(const pmh_graph* g, const pmh_edgeset* highlight, char** dot_out) {
  if (g == nullptr || dot_out == nullptr) return PMH_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const pmh::EdgeSet* h = highlight == nullptr ? nullptr : &highlight->set;
    if (const auto* cp = g->crossed())
      *dot_out = dup_string(pmh::to_dot(*cp, h));
    else
      *dot_out = dup_string(pmh::to_dot(g->graph(), h, nullptr));
  });
}

int pmh_matching_parse(const pmh_graph* g, const char* text, pmh_edgeset** out) {
  if (g == nullptr || text == nullptr || out == nullptr) return PMH_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = new pmh_edgeset{pmh::parse_edge_list(g->graph(), text)}; });
}

int pmh_matching_format(const pmh_graph* g, const pmh_edgeset* s, char** out) {
  if (g == nullptr || s == nullptr || out == nullptr) return PMH_ERROR_INVALID_ARGUMENT;
  return guarded([&] { *out = dup_string(pmh::format_edge_list(g->graph(), s->set)); });
}

void pmh_edgeset_destroy(pmh_edgeset* s) { delete s; }

int pmh_witness_prism(const pmh_graph* g, pmh_edgeset** out) {
  if (g == nullptr || out == nullptr) return PMH_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const pmh::PrismGraph* p = g->prism();
    if (p == nullptr) pmh::fail(pmh::Errc::InvalidParameter, "prism witness needs a prism");
    *out = new pmh_edgeset{pmh::witness_prism(*p).edges};
  });
}

int pmh_witness_crossed_prism_odd(const pmh_graph* g, pmh_edgeset** out) {
  if (g == nullptr || out == nullptr) return PMH_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const pmh::CrossedPrismGraph* cp = g->crossed();
    if (cp == nullptr)
      pmh::fail(pmh::Errc::InvalidParameter, "odd witness needs a crossed prism");
    *out = new pmh_edgeset{pmh::witness_crossed_prism_odd(*cp).edges};
  });
}

int pmh_find_extension(const pmh_graph* g, const pmh_edgeset* m, int* found, pmh_edgeset** out) {
  if (g == nullptr || m == nullptr || found == nullptr || out == nullptr)
    return PMH_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    pmh::PerfectMatching pm = pmh::PerfectMatching::checked(g->graph(), m->set);
    auto n = pmh::find_extension(g->graph(), pm);
    *found = n.has_value() ? 1 : 0;
    *out = n ? new pmh_edgeset{n->edges} : nullptr;
  });
}

int pmh_extend_record(const pmh_graph* g, const pmh_edgeset* m, char** json_out) {
  if (g == nullptr || m == nullptr || json_out == nullptr) return PMH_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const pmh::CrossedPrismGraph* cp = g->crossed();
    if (cp == nullptr)
      pmh::fail(pmh::Errc::InvalidParameter, "extension construction needs a crossed prism");
    auto start = std::chrono::steady_clock::now();
    pmh::ojson r =
        pmh::extend_record(*cp, pmh::PerfectMatching::checked(g->graph(), m->set));
    r["elapsed_ms"] = ms_since(start);
    *json_out = dup_string(r.dump());
  });
}

int pmh_enumerate_record(const pmh_graph* g, unsigned long long cap, double timeout_s,
                         char** json_out) {
  if (g == nullptr || json_out == nullptr) return PMH_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    auto start = std::chrono::steady_clock::now();
    pmh::ojson r = pmh::enumerate_record(g->family(), g->n(), g->graph(),
                                         pmh::SearchBudget::with_timeout(cap, timeout_s));
    r["elapsed_ms"] = ms_since(start);
    *json_out = dup_string(r.dump());
  });
}

int pmh_check_pmh_record(const pmh_graph* g, int jobs, unsigned long long cap, double timeout_s,
                         char** json_out) {
  if (g == nullptr || json_out == nullptr) return PMH_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    auto start = std::chrono::steady_clock::now();
    pmh::ojson r = pmh::check_pmh_record(g->family(), g->n(), g->graph(), jobs,
                                         pmh::SearchBudget::with_timeout(cap, timeout_s));
    r["elapsed_ms"] = ms_since(start);
    *json_out = dup_string(r.dump());
  });
}

int pmh_e2f_record(const pmh_graph* g, unsigned long long cap, double timeout_s,
                   char** json_out) {
  if (g == nullptr || json_out == nullptr) return PMH_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    auto start = std::chrono::steady_clock::now();
    pmh::ojson r = pmh::e2f_record(g->family(), g->n(), g->graph(),
                                   pmh::SearchBudget::with_timeout(cap, timeout_s));
    r["elapsed_ms"] = ms_since(start);
    *json_out = dup_string(r.dump());
  });
}

int pmh_verify_instance(const char* family, int n, int jobs, unsigned long long cap,
                        double timeout_s, char** json_out) {
  if (family == nullptr || json_out == nullptr) return PMH_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    auto start = std::chrono::steady_clock::now();
    pmh::ojson r = pmh::verify_instance_record(family, n, jobs,
                                               pmh::SearchBudget::with_timeout(cap, timeout_s));
    r["elapsed_ms"] = ms_since(start);
    *json_out = dup_string(r.dump());
  });
}

}  // extern "C"
