// Copyright 2026 The aqedst Authors
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

// Command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "aqedst/aqedst.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw aqedst::error(aqedst::errc::invalid_argument, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw aqedst::error(aqedst::errc::invalid_argument, "cannot write '" + path + "'");
  out << text;
}

aqedst::JsonOptions json_options(int n, bool compact) {
  aqedst::JsonOptions opts;
  opts.provenance = aqedst::Provenance{};
  opts.provenance->n = n;
  opts.indent = compact ? -1 : 2;
  return opts;
}

struct Settings {
  int max_dimension = aqedst::kDefaultMaxDimension;

  // build
  int build_n = 0;
  std::string build_out;
  bool build_compact = false;

  // verify
  std::string verify_file;
  bool verify_json = false;

  // export
  std::string export_format = "json";
  int export_n = 0;
  std::string export_in;
  std::string export_out;
  bool export_graph = false;
  bool export_compact = false;

  // simulate
  int sim_n = 0;
  int sim_k = 0;
  bool sim_exhaustive = false;
  std::uint64_t sim_trials = 10000;
  std::uint64_t sim_seed = 42;
  std::string sim_source;
  std::uint64_t sim_budget = aqedst::kDefaultEnumerationBudget;

  // stats
  int stats_n = 0;
};

int run_build(const Settings& s) {
  const auto d = aqedst::build(s.build_n, s.max_dimension);
  write_output(aqedst::export_json(d, json_options(d.n, s.build_compact)), s.build_out);
  return kExitOk;
}

int run_verify(const Settings& s) {
  aqedst::ImportOptions opts;
  opts.verify = false;
  opts.max_dimension = s.max_dimension;
  const auto d = aqedst::import_json(read_file(s.verify_file), opts);
  const auto report = aqedst::verify_all(aqedst::build_aq(d.n, s.max_dimension), d);
  if (s.verify_json) {
    std::cout << aqedst::report_to_json(report).dump(2) << "\n";
  } else {
    std::cout << "n = " << d.n << ", " << d.trees.size() << " spanning trees, leftover " << d.leftover.size()
              << " edges\n";
    if (report.passed()) {
      std::cout << "PASS\n";
    } else {
      for (const auto& f : report.failures()) std::cout << "FAIL " << f << "\n";
    }
  }
  return report.passed() ? kExitOk : kExitVerification;
}

int run_export(const Settings& s) {
  if (s.export_n == 0 && s.export_in.empty()) {
    throw aqedst::error(aqedst::errc::invalid_argument, "export needs -n <dim> or --input <file>");
  }
  if (s.export_graph) {
    if (s.export_format != "dot") throw aqedst::error(aqedst::errc::invalid_argument, "--graph supports dot only");
    if (s.export_n == 0) throw aqedst::error(aqedst::errc::invalid_argument, "--graph needs -n <dim>");
    write_output(aqedst::export_dot(aqedst::build_aq(s.export_n, s.max_dimension)), s.export_out);
    return kExitOk;
  }
  aqedst::Decomposition d;
  if (!s.export_in.empty()) {
    aqedst::ImportOptions opts;
    opts.max_dimension = s.max_dimension;
    d = aqedst::import_json(read_file(s.export_in), opts);
  } else {
    d = aqedst::build(s.export_n, s.max_dimension);
  }
  if (s.export_format == "dot") {
    write_output(aqedst::export_dot(d), s.export_out);
  } else {
    write_output(aqedst::export_json(d, json_options(d.n, s.export_compact)), s.export_out);
  }
  return kExitOk;
}

int run_simulate(const Settings& s) {
  const auto g = aqedst::build_aq(s.sim_n, s.max_dimension);
  const auto d = aqedst::build(s.sim_n, s.max_dimension);
  if (s.sim_exhaustive) {
    const auto r = aqedst::exhaustive_fault_check(g, d, s.sim_k, s.sim_budget);
    std::cout << aqedst::fault_check_to_json(r, d.n).dump(2) << "\n";
    return r.passed ? kExitOk : kExitVerification;
  }
  aqedst::Vertex source{0};
  if (!s.sim_source.empty()) source = aqedst::parse_bits(s.sim_source, s.sim_n);
  const auto stats = aqedst::monte_carlo(g, d, s.sim_k, s.sim_trials, s.sim_seed, source);
  std::cout << aqedst::monte_carlo_to_json(stats, d.n).dump(2) << "\n";
  return kExitOk;
}

int run_stats(const Settings& s) {
  const auto g = aqedst::build_aq(s.stats_n, s.max_dimension);
  std::size_t hyper = 0;
  for (std::size_t i = 0; i < g.edge_count(); ++i) hyper += g.kind(i).kind == aqedst::EdgeClass::hypercube ? 1 : 0;
  std::size_t min_deg = g.degree(aqedst::Vertex{0});
  std::size_t max_deg = min_deg;
  for (std::uint32_t x = 1; x < g.vertex_count(); ++x) {
    min_deg = std::min(min_deg, g.degree(aqedst::Vertex{x}));
    max_deg = std::max(max_deg, g.degree(aqedst::Vertex{x}));
  }
  nlohmann::ordered_json j;
  j["n"] = g.dimension();
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["hypercube_edges"] = hyper;
  j["complement_edges"] = g.edge_count() - hyper;
  j["min_degree"] = min_deg;
  j["max_degree"] = max_deg;
  if (g.dimension() <= aqedst::kDefaultMaxDiameterDimension) {
    j["diameter"] = aqedst::diameter(g);
  } else {
    j["diameter"] = nullptr;
  }
  j["eccentricity_of_origin"] = aqedst::eccentricity(g, aqedst::Vertex{0});
  if (g.dimension() >= 2) {
    j["max_edst_upper_bound"] = aqedst::max_edst_upper_bound(g.dimension());
  } else {
    j["max_edst_upper_bound"] = nullptr;
  }
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-disjoint spanning trees in augmented cubes"};
  app.set_version_flag("--version", AQEDST_VERSION);
  app.require_subcommand(1);
  Settings s;
  app.add_option("--max-dimension", s.max_dimension, "Refuse dimensions above this")
      ->capture_default_str()
      ->check(CLI::Range(1, aqedst::kHardMaxDimension));

  auto* build = app.add_subcommand("build", "Construct the decomposition of AQ_n and write it as JSON");
  build->add_option("-n", s.build_n, "Dimension (>= 3)")->required();
  build->add_option("-o,--output", s.build_out, "Output file (default stdout)");
  build->add_flag("--compact", s.build_compact, "Single-line JSON");

  auto* verify = app.add_subcommand("verify", "Check every property of a decomposition document");
  verify->add_option("file", s.verify_file, "Decomposition JSON")->required();
  verify->add_flag("--json", s.verify_json, "Print the full report as JSON");

  auto* exp = app.add_subcommand("export", "Write a decomposition (or the graph) as JSON or DOT");
  exp->add_option("--format", s.export_format, "dot or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"dot", "json"}));
  auto* exp_n = exp->add_option("-n", s.export_n, "Build the decomposition of this dimension");
  auto* exp_in = exp->add_option("-i,--input", s.export_in, "Read a decomposition document instead");
  exp_n->excludes(exp_in);
  exp->add_flag("--graph", s.export_graph, "Export AQ_n itself (DOT only)");
  exp->add_option("-o,--output", s.export_out, "Output file (default stdout)");
  exp->add_flag("--compact", s.export_compact, "Single-line JSON");

  auto* sim = app.add_subcommand("simulate", "Broadcast over the spanning trees with failed links");
  sim->add_option("-n", s.sim_n, "Dimension (>= 3)")->required();
  sim->add_option("-k", s.sim_k, "Number of failed links")->required()->check(CLI::NonNegativeNumber);
  auto* exhaustive = sim->add_flag("--exhaustive", s.sim_exhaustive, "Enumerate every k-subset of links");
  auto* trials = sim->add_option("--trials", s.sim_trials, "Monte Carlo trials")->capture_default_str();
  auto* seed = sim->add_option("--seed", s.sim_seed, "Monte Carlo seed")->capture_default_str();
  exhaustive->excludes(trials);
  exhaustive->excludes(seed);
  sim->add_option("--source", s.sim_source, "Source vertex as a bit string (default all zeros)");
  sim->add_option("--budget", s.sim_budget, "Maximum failure sets for --exhaustive")->capture_default_str();

  auto* stats = app.add_subcommand("stats", "Vertex/edge counts, degree, diameter and EDST upper bound");
  stats->add_option("-n", s.stats_n, "Dimension (>= 1)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) return run_build(s);
    if (*verify) return run_verify(s);
    if (*exp) return run_export(s);
    if (*sim) return run_simulate(s);
    if (*stats) return run_stats(s);
  } catch (const aqedst::error& e) {
    std::cerr << "aqedst: " << e.what() << "\n";
    const bool failed_check =
        e.code() == aqedst::errc::verification_failed || e.code() == aqedst::errc::construction_bug;
    return failed_check ? kExitVerification : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "aqedst: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
