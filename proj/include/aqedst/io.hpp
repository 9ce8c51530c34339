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

#pragma once

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "aqedst/aq_graph.hpp"
#include "aqedst/broadcast_sim.hpp"
#include "aqedst/decomposition.hpp"
#include "aqedst/error.hpp"
#include "aqedst/verifier.hpp"
#include "aqedst/version.hpp"

// Interchange formats: the JSON decomposition document and DOT text.

namespace aqedst {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kDocumentFormat = "aqedst.decomposition";

struct Provenance {
  std::string tool = "aqedst";
  std::string version = AQEDST_VERSION;
  int n = 0;
};

struct JsonOptions {
  std::optional<Provenance> provenance;
  /// nlohmann indent; -1 writes a single line.
  int indent = 2;
};

struct ImportOptions {
  bool verify = true;
  int max_dimension = kDefaultMaxDimension;
};

namespace detail {

using ordered_json = nlohmann::ordered_json;

inline ordered_json edges_to_json(const EdgeList& edges, int n) {
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  ordered_json arr = ordered_json::array();
  for (const Edge& e : sorted) arr.push_back(ordered_json::array({to_bits(e.a, n), to_bits(e.b, n)}));
  return arr;
}

inline ordered_json vertices_to_json(const std::vector<Vertex>& vs, int n) {
  ordered_json arr = ordered_json::array();
  for (Vertex x : vs) arr.push_back(to_bits(x, n));
  return arr;
}

[[noreturn]] inline void schema_fail(const std::string& what) { throw error(errc::schema_error, what); }

inline const nlohmann::json& field(const nlohmann::json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(std::string("missing field '") + key + "'");
  return *it;
}

inline Vertex vertex_from_json(const nlohmann::json& j, int n) {
  if (!j.is_string()) schema_fail("vertex must be a bit string");
  try {
    return parse_bits(j.get<std::string>(), n);
  } catch (const error& e) {
    schema_fail(e.what());
  }
}

inline EdgeList edges_from_json(const nlohmann::json& j, int n, const std::string& where) {
  if (!j.is_array()) schema_fail(where + " must be an array of edges");
  EdgeList out;
  out.reserve(j.size());
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) schema_fail(where + ": each edge must be a pair of bit strings");
    const Vertex a = vertex_from_json(pair[0], n);
    const Vertex b = vertex_from_json(pair[1], n);
    if (a == b) schema_fail(where + ": self-loop at " + to_bits(a, n));
    out.push_back(Edge::make(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Vertex> vertices_from_json(const nlohmann::json& j, int n, const std::string& where) {
  if (!j.is_array()) schema_fail(where + " must be an array of bit strings");
  std::vector<Vertex> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(vertex_from_json(x, n));
  return out;
}

}  // namespace detail

/// Canonical JSON: bit-string vertices, sorted edges, fixed key order.
/// Refuses structurally broken input (wrong tree count, empty trees, wrong
/// label counts) rather than writing a document that cannot be re-imported.
inline std::string export_json(const Decomposition& d, const JsonOptions& opts = {}) {
  if (d.n < 3 || d.n > kHardMaxDimension) throw error(errc::invalid_argument, "decomposition dimension out of range");
  if (d.trees.size() != static_cast<std::size_t>(d.n - 1)) {
    throw error(errc::invalid_argument, "decomposition must hold n-1 trees");
  }
  for (std::size_t i = 0; i < d.trees.size(); ++i) {
    if (d.trees[i].empty()) throw error(errc::invalid_argument, "tree T_" + std::to_string(i + 1) + " is empty");
  }
  if (d.leftover.empty()) throw error(errc::invalid_argument, "leftover tree is empty");
  const std::size_t half = std::size_t{1} << (d.n - 1);
  if (d.labeling.u.size() != half || d.labeling.v.size() != half) {
    throw error(errc::invalid_argument, "labeling must hold 2^(n-1) u- and v-vertices");
  }

  detail::ordered_json doc;
  doc["format"] = kDocumentFormat;
  doc["schema_version"] = kSchemaVersion;
  doc["n"] = d.n;
  doc["labeling"]["u"] = detail::vertices_to_json(d.labeling.u, d.n);
  doc["labeling"]["v"] = detail::vertices_to_json(d.labeling.v, d.n);
  auto trees = detail::ordered_json::array();
  for (const auto& t : d.trees) trees.push_back(detail::edges_to_json(t, d.n));
  doc["trees"] = std::move(trees);
  doc["leftover"] = detail::edges_to_json(d.leftover, d.n);
  if (opts.provenance) {
    doc["provenance"]["tool"] = opts.provenance->tool;
    doc["provenance"]["version"] = opts.provenance->version;
    doc["provenance"]["parameters"]["n"] = opts.provenance->n;
  }
  return doc.dump(opts.indent) + "\n";
}

/// Parses a decomposition document. Unless opts.verify is false the result
/// must pass verify_all; otherwise a verification_failed error lists every
/// failing check.
inline Decomposition import_json(std::string_view text, const ImportOptions& opts = {}) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    detail::schema_fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) detail::schema_fail("document must be a JSON object");
  if (auto it = doc.find("format"); it != doc.end() && *it != kDocumentFormat) {
    detail::schema_fail("unexpected document format");
  }
  const auto& version = detail::field(doc, "schema_version");
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
    detail::schema_fail("unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
  }
  const auto& nj = detail::field(doc, "n");
  if (!nj.is_number_integer()) detail::schema_fail("'n' must be an integer");
  const int n = nj.get<int>();
  if (n < 3) throw error(errc::invalid_argument, "decompositions exist only for n >= 3, got " + std::to_string(n));
  detail::check_dimension(n, opts.max_dimension);

  Decomposition d;
  d.n = n;
  const auto& lab = detail::field(doc, "labeling");
  if (!lab.is_object()) detail::schema_fail("'labeling' must be an object");
  d.labeling.u = detail::vertices_from_json(detail::field(lab, "u"), n, "labeling.u");
  d.labeling.v = detail::vertices_from_json(detail::field(lab, "v"), n, "labeling.v");
  const auto& trees = detail::field(doc, "trees");
  if (!trees.is_array()) detail::schema_fail("'trees' must be an array");
  for (std::size_t i = 0; i < trees.size(); ++i) {
    d.trees.push_back(detail::edges_from_json(trees[i], n, "trees[" + std::to_string(i) + "]"));
  }
  d.leftover = detail::edges_from_json(detail::field(doc, "leftover"), n, "leftover");

  if (opts.verify) {
    const auto report = verify_all(build_aq(n, opts.max_dimension), d);
    if (!report.passed()) {
      std::string msg = "document does not describe a valid decomposition";
      for (const auto& f : report.failures()) msg += "\n  " + f;
      throw error(errc::verification_failed, msg);
    }
  }
  return d;
}

struct DotOptions {
  std::string graph_name = "AQ";
};

namespace detail {

/// Evenly spaced hues; distinct for any tree count.
inline std::string tree_color(std::size_t index, std::size_t count) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f 0.800 0.750", static_cast<double>(index) / static_cast<double>(count));
  return buf;
}

inline void dot_nodes(std::ostringstream& out, int n) {
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::uint32_t x = 0; x < (1u << n); ++x) out << "  \"" << to_bits(Vertex{x}, n) << "\";\n";
}

inline void dot_edges(std::ostringstream& out, const EdgeList& edges, int n) {
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  for (const Edge& e : sorted) out << "    \"" << to_bits(e.a, n) << "\" -- \"" << to_bits(e.b, n) << "\";\n";
}

}  // namespace detail

/// One subgraph per spanning tree, each with its own color; the leftover
/// tree is dashed.
inline std::string export_dot(const Decomposition& d, const DotOptions& opts = {}) {
  std::ostringstream out;
  out << "graph \"" << opts.graph_name << d.n << "_edst\" {\n";
  detail::dot_nodes(out, d.n);
  for (std::size_t i = 0; i < d.trees.size(); ++i) {
    out << "  subgraph tree_" << i + 1 << " {\n";
    out << "    edge [color=\"" << detail::tree_color(i, d.trees.size()) << "\", penwidth=2];\n";
    detail::dot_edges(out, d.trees[i], d.n);
    out << "  }\n";
  }
  out << "  subgraph leftover {\n";
  out << "    edge [color=\"gray40\", style=dashed];\n";
  detail::dot_edges(out, d.leftover, d.n);
  out << "  }\n";
  out << "}\n";
  return out.str();
}

/// The graph itself, hypercube edges solid and complement edges dashed.
inline std::string export_dot(const AugmentedCube& g, const DotOptions& opts = {}) {
  const int n = g.dimension();
  EdgeList hyper;
  EdgeList comp;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    (g.kind(i).kind == EdgeClass::hypercube ? hyper : comp).push_back(g.edges()[i]);
  }
  std::ostringstream out;
  out << "graph \"" << opts.graph_name << n << "\" {\n";
  detail::dot_nodes(out, n);
  out << "  subgraph hypercube {\n";
  out << "    edge [color=\"black\"];\n";
  detail::dot_edges(out, hyper, n);
  out << "  }\n";
  out << "  subgraph complement {\n";
  out << "    edge [color=\"steelblue\", style=dashed];\n";
  detail::dot_edges(out, comp, n);
  out << "  }\n";
  out << "}\n";
  return out.str();
}

namespace detail {

inline ordered_json optional_edge(const std::optional<Edge>& e, int n) {
  return e ? ordered_json(to_bits(*e, n)) : ordered_json(nullptr);
}

inline ordered_json optional_vertex(const std::optional<Vertex>& v, int n) {
  return v ? ordered_json(to_bits(*v, n)) : ordered_json(nullptr);
}

inline ordered_json edge_strings(const EdgeList& edges, int n) {
  ordered_json arr = ordered_json::array();
  for (const Edge& e : edges) arr.push_back(to_bits(e, n));
  return arr;
}

}  // namespace detail

inline nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  using detail::ordered_json;
  const int n = r.n;
  ordered_json j;
  j["n"] = n;
  j["passed"] = r.passed();
  ordered_json trees = ordered_json::array();
  for (const auto& t : r.trees) {
    ordered_json tj;
    tj["ok"] = t.ok;
    tj["edge_count"] = t.edge_count;
    tj["expected_edge_count"] = t.expected_edge_count;
    tj["acyclic"] = t.acyclic;
    tj["spanning"] = t.spanning;
    tj["foreign_edge"] = t.foreign_edge ? ordered_json(std::to_string(t.foreign_edge->a.value) + "-" +
                                                       std::to_string(t.foreign_edge->b.value))
                                        : ordered_json(nullptr);
    tj["cycle_edge"] = detail::optional_edge(t.cycle_edge, n);
    tj["unreachable"] = detail::optional_vertex(t.unreachable, n);
    trees.push_back(std::move(tj));
  }
  j["trees"] = std::move(trees);
  j["tree_count"] = {{"ok", r.tree_count.ok},
                     {"count", r.tree_count.tree_count},
                     {"upper_bound", r.tree_count.upper_bound}};
  j["disjoint"] = {{"ok", r.disjoint.ok}, {"shared_edge", detail::optional_edge(r.disjoint.shared_edge, n)}};
  j["partition"] = {{"ok", r.partition.ok},
                    {"leftover_size", r.partition.leftover_size},
                    {"expected_leftover_size", r.partition.expected_leftover_size},
                    {"uncovered", detail::edge_strings(r.partition.uncovered, n)},
                    {"doubly_covered", detail::edge_strings(r.partition.doubly_covered, n)},
                    {"foreign_count", r.partition.foreign.size()}};
  j["labeling"] = {{"ok", r.labeling.ok}, {"detail", r.labeling.detail}};
  j["leftover"] = {{"ok", r.leftover.ok},
                   {"acyclic", r.leftover.acyclic},
                   {"connected", r.leftover.connected},
                   {"support_size", r.leftover.support_size},
                   {"expected_support_size", r.leftover.expected_support_size},
                   {"missing_vertex", detail::optional_vertex(r.leftover.missing_vertex, n)}};
  j["internality"] = {{"ok", r.internality.ok},
                      {"degrees", r.internality.degrees},
                      {"failing_index", r.internality.failing_index ? ordered_json(*r.internality.failing_index)
                                                                    : ordered_json(nullptr)}};
  j["failures"] = r.failures();
  return j;
}

inline nlohmann::ordered_json fault_check_to_json(const FaultCheckReport& r, int n) {
  detail::ordered_json j;
  j["mode"] = "exhaustive";
  j["n"] = n;
  j["k"] = r.k;
  j["passed"] = r.passed;
  j["subsets"] = r.subsets;
  j["sources"] = r.sources;
  j["cases"] = r.cases;
  j["undelivered_cases"] = r.undelivered_cases;
  j["subsets_without_intact_tree"] = r.subsets_without_intact_tree;
  j["union_rescued_cases"] = r.union_rescued_cases;
  if (r.first_failure) {
    j["first_failure"] = {{"failed", detail::edge_strings(*r.first_failure, n)},
                          {"source", to_bits(*r.first_failure_source, n)}};
  } else {
    j["first_failure"] = nullptr;
  }
  return j;
}

inline nlohmann::ordered_json monte_carlo_to_json(const MonteCarloStats& s, int n) {
  detail::ordered_json j;
  j["mode"] = "monte_carlo";
  j["n"] = n;
  j["k"] = s.k;
  j["trials"] = s.trials;
  j["seed"] = s.seed;
  j["source"] = to_bits(s.source, n);
  j["delivered"] = s.delivered;
  j["with_intact_tree"] = s.with_intact_tree;
  j["union_delivered"] = s.union_delivered;
  j["delivered_fraction"] = s.delivered_fraction();
  j["intact_fraction"] = s.intact_fraction();
  j["union_fraction"] = s.union_fraction();
  j["min_intact_trees"] = s.min_intact_trees;
  return j;
}

}  // namespace aqedst
