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

// Command-line front end. All graph work goes through the C API in pmh.h;
// CLI11 and the JSON parser are used only for flags and output formatting.
//
// Record protocol: JSON-lines on stdout with the timing quarantined to
// stderr, so the primary output stream is byte-identical across runs and
// worker counts. --csv projects the canonical record fields into CSV rows.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pmh.h"

namespace {

using ojson = nlohmann::ordered_json;

constexpr unsigned long long kDefaultCap = 10'000'000ULL;
constexpr double kDefaultTimeoutS = 300.0;

[[noreturn]] void die(int status) {
  std::cerr << "error: " << pmh_last_error() << " (" << pmh_status_name(status) << ")\n";
  std::exit(2);
}

void check(int status) {
  if (status != PMH_OK) die(status);
}

struct GraphHandle {
  pmh_graph* g = nullptr;
  ~GraphHandle() { pmh_graph_destroy(g); }
};

struct EdgeSetHandle {
  pmh_edgeset* s = nullptr;
  ~EdgeSetHandle() { pmh_edgeset_destroy(s); }
};

void make_graph(const std::string& family, int n, GraphHandle& out) {
  if (family == "prism")
    check(pmh_prism_create(n, &out.g));
  else if (family == "crossed-prism")
    check(pmh_crossed_prism_create(n, &out.g));
  else {
    std::cerr << "error: unknown family '" << family << "' (use prism or crossed-prism)\n";
    std::exit(2);
  }
}

std::string read_matching_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) {
      std::cerr << "error: cannot read matching file '" << arg.substr(1) << "'\n";
      std::exit(2);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

std::string csv_cell(const ojson& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_array()) {
    std::string joined;
    for (const auto& item : v) {
      if (!joined.empty()) joined += ' ';
      joined += item.get<std::string>();
    }
    return "\"" + joined + "\"";
  }
  return v.dump();
}

// Splits the timing field onto stderr and prints the rest of the record.
void emit_record(const std::string& json_text, bool csv,
                 const std::vector<std::string>& csv_columns) {
  ojson r = ojson::parse(json_text);
  if (r.contains("elapsed_ms")) {
    ojson timing;
    timing["family"] = r.value("family", ojson(nullptr));
    timing["n"] = r.value("n", ojson(nullptr));
    timing["elapsed_ms"] = r["elapsed_ms"];
    std::cerr << timing.dump() << "\n";
    r.erase("elapsed_ms");
  }
  if (!csv) {
    std::cout << r.dump() << "\n";
    return;
  }
  std::string row;
  for (const std::string& col : csv_columns) {
    if (!row.empty()) row += ',';
    row += csv_cell(r.value(col, ojson(nullptr)));
  }
  std::cout << row << "\n";
}

void emit_csv_header(const std::vector<std::string>& columns) {
  std::string head;
  for (const std::string& col : columns) {
    if (!head.empty()) head += ',';
    head += col;
  }
  std::cout << head << "\n";
}

const std::vector<std::string> kRecordColumns = {"family", "n", "verdict", "witness_edges",
                                                 "matchings_count"};
const std::vector<std::string> kVerifyColumns = {"family", "n",  "verdict",
                                                 "expected", "ok", "witness_edges",
                                                 "matchings_count"};

struct RangeSpec {
  int n = -1;
  int n_max = -1;

  std::vector<int> instances(const std::string& family) const {
    int lo = family == "prism" ? 3 : 1;
    if (n >= 0 && n_max >= 0) {
      std::cerr << "error: give either --n or --n-max, not both\n";
      std::exit(2);
    }
    if (n >= 0) return {n};
    if (n_max >= 0) {
      std::vector<int> out;
      for (int k = lo; k <= n_max; ++k) out.push_back(k);
      return out;
    }
    std::cerr << "error: --n or --n-max is required\n";
    std::exit(2);
  }
};

int run_record_command(const std::string& family, const RangeSpec& range, bool csv, int jobs,
                       unsigned long long cap, double timeout_s,
                       int (*fn)(const pmh_graph*, int, unsigned long long, double, char**)) {
  if (csv) emit_csv_header(kRecordColumns);
  for (int n : range.instances(family)) {
    GraphHandle g;
    make_graph(family, n, g);
    char* json = nullptr;
    check(fn(g.g, jobs, cap, timeout_s, &json));
    emit_record(json, csv, kRecordColumns);
    pmh_string_free(json);
  }
  return 0;
}

// Uniform signature shims for run_record_command.
int enumerate_shim(const pmh_graph* g, int, unsigned long long cap, double t, char** out) {
  return pmh_enumerate_record(g, cap, t, out);
}
int check_pmh_shim(const pmh_graph* g, int jobs, unsigned long long cap, double t, char** out) {
  return pmh_check_pmh_record(g, jobs, cap, t, out);
}
int e2f_shim(const pmh_graph* g, int, unsigned long long cap, double t, char** out) {
  return pmh_e2f_record(g, cap, t, out);
}

int cmd_verify_theorems(int n_max_prism, int n_max_crossed, int jobs, bool csv,
                        unsigned long long cap, double timeout_s) {
  std::vector<std::pair<std::string, int>> instances;
  for (int n = 3; n <= n_max_prism; ++n) instances.emplace_back("prism", n);
  for (int n = 1; n <= n_max_crossed; ++n) instances.emplace_back("crossed-prism", n);

  std::vector<std::string> records(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= instances.size()) return;
      char* json = nullptr;
      check(pmh_verify_instance(instances[i].first.c_str(), instances[i].second, 1, cap,
                                timeout_s, &json));
      records[i] = json;
      pmh_string_free(json);
    }
  };
  int pool_size = std::max(1, std::min<int>(jobs, static_cast<int>(instances.size())));
  std::vector<std::thread> pool;
  for (int t = 0; t < pool_size; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  if (csv) emit_csv_header(kVerifyColumns);
  int failures = 0;
  std::string first_failure;
  for (std::size_t i = 0; i < records.size(); ++i) {
    ojson r = ojson::parse(records[i]);
    bool ok = !r.contains("ok") || r["ok"].is_null() || r["ok"].get<bool>();
    if (!ok) {
      ++failures;
      if (first_failure.empty())
        first_failure = instances[i].first + " n=" + std::to_string(instances[i].second) +
                        " (verdict " + r.value("verdict", std::string("?")) + ", expected " +
                        r.value("expected", std::string("?")) + ")";
    }
    emit_record(records[i], csv, kVerifyColumns);
  }
  if (!csv) {
    ojson summary;
    summary["command"] = "verify-theorems";
    summary["n_max_prism"] = n_max_prism;
    summary["n_max_crossed"] = n_max_crossed;
    summary["schema_version"] = 1;
    summary["instances"] = instances.size();
    summary["failures"] = failures;
    summary["first_failure"] = first_failure.empty() ? ojson(nullptr) : ojson(first_failure);
    std::cout << summary.dump() << "\n";
  }
  if (failures > 0) {
    std::cerr << "verify-theorems: first failing instance: " << first_failure << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect-matching Hamiltonicity toolkit for prism and crossed-prism graphs"};
  app.require_subcommand(1);

  std::string family;
  RangeSpec range;
  std::string matching;
  bool json_flag = false;
  bool csv_flag = false;
  int jobs = 1;
  double timeout_s = kDefaultTimeoutS;
  unsigned long long cap = kDefaultCap;
  unsigned long long seed = 0;

  auto add_common = [&](CLI::App* cmd, bool with_range) {
    cmd->add_option("--family", family, "Graph family: prism or crossed-prism")->required();
    cmd->add_option("--n", range.n, "Instance parameter n");
    if (with_range) cmd->add_option("--n-max", range.n_max, "Run every n up to this bound");
    cmd->add_flag("--json", json_flag, "JSON-lines output (default)");
    cmd->add_flag("--csv", csv_flag, "CSV projection of the record stream");
    cmd->add_option("--timeout-s", timeout_s, "Per-instance timeout in seconds (0 disables)");
    cmd->add_option("--jobs", jobs, "Worker threads");
    cmd->add_option("--matching-cap", cap, "Per-instance matching enumeration cap");
    cmd->add_option("--seed", seed, "Reserved; all algorithms are deterministic");
  };

  CLI::App* generate = app.add_subcommand("generate", "Build a family instance and describe it");
  add_common(generate, false);

  CLI::App* enumerate = app.add_subcommand("enumerate", "Count perfect matchings");
  add_common(enumerate, true);

  CLI::App* check_cmd = app.add_subcommand("check-pmh", "Exhaustive PMH decision");
  add_common(check_cmd, true);

  CLI::App* e2f = app.add_subcommand(
      "e2f", "Check the 3-edge-colouring / even-2-factor equivalence on both routes");
  add_common(e2f, true);

  CLI::App* extend = app.add_subcommand(
      "extend", "Constructive Hamiltonian extension of a crossed-prism matching");
  add_common(extend, false);
  extend->add_option("--matching", matching, "Edge tokens (u1-v1 ...) or @file")->required();

  CLI::App* witness = app.add_subcommand("witness", "Inextensible witness matching");
  add_common(witness, false);

  CLI::App* export_dot = app.add_subcommand("export-dot", "DOT text for external rendering");
  add_common(export_dot, false);
  export_dot->add_option("--matching", matching, "Edge tokens to highlight, or @file");

  int n_max_prism = 10;
  int n_max_crossed = 3;
  CLI::App* verify = app.add_subcommand(
      "verify-theorems", "Check computed verdicts against the built-in expectation table");
  verify->add_option("--n-max-prism", n_max_prism, "Largest prism instance");
  verify->add_option("--n-max-crossed", n_max_crossed, "Largest crossed-prism instance");
  verify->add_flag("--json", json_flag, "JSON-lines output (default)");
  verify->add_flag("--csv", csv_flag, "CSV projection of the record stream");
  verify->add_option("--timeout-s", timeout_s, "Per-instance timeout in seconds (0 disables)");
  verify->add_option("--jobs", jobs, "Instances checked in parallel");
  verify->add_option("--matching-cap", cap, "Per-instance matching enumeration cap");
  verify->add_option("--seed", seed, "Reserved; all algorithms are deterministic");

  CLI11_PARSE(app, argc, argv);

  if (generate->parsed()) {
    for (int n : range.instances(family)) {
      GraphHandle g;
      make_graph(family, n, g);
      char* json = nullptr;
      check(pmh_graph_describe(g.g, &json));
      emit_record(json, false, {});
      pmh_string_free(json);
    }
    return 0;
  }
  if (enumerate->parsed())
    return run_record_command(family, range, csv_flag, jobs, cap, timeout_s, enumerate_shim);
  if (check_cmd->parsed())
    return run_record_command(family, range, csv_flag, jobs, cap, timeout_s, check_pmh_shim);
  if (e2f->parsed())
    return run_record_command(family, range, csv_flag, jobs, cap, timeout_s, e2f_shim);

  if (extend->parsed()) {
    int n = range.instances(family).front();
    GraphHandle g;
    make_graph(family, n, g);
    EdgeSetHandle m;
    check(pmh_matching_parse(g.g, read_matching_arg(matching).c_str(), &m.s));
    char* json = nullptr;
    check(pmh_extend_record(g.g, m.s, &json));
    emit_record(json, false, {});
    pmh_string_free(json);
    return 0;
  }

  if (witness->parsed()) {
    int n = range.instances(family).front();
    GraphHandle g;
    make_graph(family, n, g);
    EdgeSetHandle w;
    if (family == "prism")
      check(pmh_witness_prism(g.g, &w.s));
    else
      check(pmh_witness_crossed_prism_odd(g.g, &w.s));
    char* text = nullptr;
    check(pmh_matching_format(g.g, w.s, &text));
    if (json_flag) {
      ojson r;
      r["family"] = family;
      r["n"] = n;
      r["witness_edges"] = ojson::array();
      std::istringstream in(text);
      std::string tok;
      while (in >> tok) r["witness_edges"].push_back(tok);
      std::cout << r.dump() << "\n";
    } else {
      std::cout << text << "\n";
    }
    pmh_string_free(text);
    return 0;
  }

  if (export_dot->parsed()) {
    int n = range.instances(family).front();
    GraphHandle g;
    make_graph(family, n, g);
    EdgeSetHandle h;
    if (!matching.empty())
      check(pmh_matching_parse(g.g, read_matching_arg(matching).c_str(), &h.s));
    char* dot = nullptr;
    check(pmh_graph_dot(g.g, h.s, &dot));
    std::cout << dot;
    pmh_string_free(dot);
    return 0;
  }

  if (verify->parsed())
    return cmd_verify_theorems(n_max_prism, n_max_crossed, jobs, csv_flag, cap, timeout_s);

  return 0;
}
