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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "aqedst/aq_graph.hpp"
#include "aqedst/decomposition.hpp"
#include "aqedst/disjoint_set.hpp"
#include "aqedst/error.hpp"

// Independent checks of every property claimed for a decomposition. Nothing
// here calls into the builder; the checks rely only on the graph and on
// union-find.

namespace aqedst {

struct SpanningTreeVerdict {
  bool ok = false;
  std::size_t edge_count = 0;
  std::size_t expected_edge_count = 0;
  bool acyclic = true;
  bool spanning = true;
  std::optional<Edge> foreign_edge;
  std::optional<Edge> cycle_edge;
  std::optional<Vertex> unreachable;
  std::string detail;
};

struct DisjointVerdict {
  bool ok = true;
  std::optional<Edge> shared_edge;
  // 0-based part indices holding shared_edge.
  std::size_t first_part = 0;
  std::size_t second_part = 0;
  std::string detail;
};

struct PartitionVerdict {
  bool ok = true;
  EdgeList uncovered;
  EdgeList doubly_covered;
  EdgeList foreign;
  std::size_t leftover_size = 0;
  std::size_t expected_leftover_size = 0;
  std::string detail;
};

struct LabelingVerdict {
  bool ok = true;
  std::optional<Vertex> offending;
  std::string detail;
};

struct LeftoverVerdict {
  bool ok = true;
  bool acyclic = true;
  bool connected = true;
  std::size_t support_size = 0;
  std::size_t expected_support_size = 0;
  std::optional<Vertex> missing_vertex;
  std::optional<Vertex> foreign_vertex;
  std::optional<Edge> cycle_edge;
  std::string detail;
};

struct InternalityVerdict {
  bool ok = true;
  /// degrees[i] is the degree of v_{i+1} in T_{i+1}.
  std::vector<std::size_t> degrees;
  /// 1-based index of the first tree whose v_i is a leaf (or absent).
  std::optional<int> failing_index;
  std::string detail;
};

struct TreeCountVerdict {
  bool ok = true;
  std::size_t tree_count = 0;
  std::uint64_t upper_bound = 0;
  std::string detail;
};

struct VerificationReport {
  int n = 0;
  std::vector<SpanningTreeVerdict> trees;
  TreeCountVerdict tree_count;
  DisjointVerdict disjoint;
  PartitionVerdict partition;
  LabelingVerdict labeling;
  LeftoverVerdict leftover;
  InternalityVerdict internality;

  bool passed() const {
    return std::all_of(trees.begin(), trees.end(), [](const auto& t) { return t.ok; }) && tree_count.ok &&
           disjoint.ok && partition.ok && labeling.ok && leftover.ok && internality.ok;
  }

  /// One line per failing sub-check.
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      if (!trees[i].ok) out.push_back("spanning tree T_" + std::to_string(i + 1) + ": " + trees[i].detail);
    }
    if (!tree_count.ok) out.push_back("tree count: " + tree_count.detail);
    if (!disjoint.ok) out.push_back("disjointness: " + disjoint.detail);
    if (!partition.ok) out.push_back("partition: " + partition.detail);
    if (!labeling.ok) out.push_back("labeling: " + labeling.detail);
    if (!leftover.ok) out.push_back("leftover: " + leftover.detail);
    if (!internality.ok) out.push_back("internality: " + internality.detail);
    return out;
  }
};

/// floor(|E(AQ_n)| / (2^n - 1)): no more edge-disjoint spanning trees fit in
/// the edge budget.
inline std::uint64_t max_edst_upper_bound(int n) {
  if (n < 2 || n > 62) throw error(errc::invalid_argument, "upper bound defined for 2 <= n <= 62");
  const std::uint64_t edges = static_cast<std::uint64_t>(2 * n - 1) << (n - 1);
  const std::uint64_t per_tree = (std::uint64_t{1} << n) - 1;
  return edges / per_tree;
}

inline SpanningTreeVerdict check_spanning_tree(const AugmentedCube& g, std::span<const Edge> edges) {
  SpanningTreeVerdict v;
  const int n = g.dimension();
  v.edge_count = edges.size();
  v.expected_edge_count = g.vertex_count() - 1;

  DisjointSet dsu(g.vertex_count());
  for (const Edge& e : edges) {
    if (!g.contains(e)) {
      if (!v.foreign_edge) v.foreign_edge = e;
      continue;
    }
    if (!dsu.unite(e.a.value, e.b.value) && !v.cycle_edge) v.cycle_edge = e;
  }
  v.acyclic = !v.cycle_edge.has_value();
  for (std::uint32_t x = 1; x < g.vertex_count(); ++x) {
    if (dsu.find(x) != dsu.find(0)) {
      v.unreachable = Vertex{x};
      break;
    }
  }
  v.spanning = !v.unreachable.has_value();
  v.ok = !v.foreign_edge && v.acyclic && v.spanning && v.edge_count == v.expected_edge_count;

  if (!v.ok) {
    std::string d;
    auto add = [&d](const std::string& s) { d += (d.empty() ? "" : "; ") + s; };
    if (v.foreign_edge) add("foreign edge " + to_bits(*v.foreign_edge, n));
    if (v.edge_count != v.expected_edge_count) {
      add("edge count " + std::to_string(v.edge_count) + " (expected " + std::to_string(v.expected_edge_count) + ")");
    }
    if (v.cycle_edge) add("cycle detected at edge " + to_bits(*v.cycle_edge, n));
    if (v.unreachable) add("vertex " + to_bits(*v.unreachable, n) + " unreachable");
    v.detail = d;
  }
  return v;
}

/// Reports the smallest edge shared by two parts, if any.
inline DisjointVerdict check_disjoint(std::span<const EdgeList> parts) {
  std::vector<std::pair<Edge, std::size_t>> all;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  all.reserve(total);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const Edge& e : parts[i]) all.emplace_back(e, i);
  }
  std::sort(all.begin(), all.end());
  DisjointVerdict v;
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i].first == all[i - 1].first && all[i].second != all[i - 1].second) {
      v.ok = false;
      v.shared_edge = all[i].first;
      v.first_part = all[i - 1].second;
      v.second_part = all[i].second;
      v.detail = "edge " + std::to_string(v.shared_edge->a.value) + "-" + std::to_string(v.shared_edge->b.value) +
                 " shared by parts " + std::to_string(v.first_part + 1) + " and " +
                 std::to_string(v.second_part + 1);
      break;
    }
  }
  return v;
}

/// Trees plus leftover must cover E(G) exactly once, and the leftover must
/// hold exactly 2^(n-1) + n - 1 edges.
inline PartitionVerdict check_partition(const AugmentedCube& g, const Decomposition& d) {
  const int n = g.dimension();
  PartitionVerdict v;
  v.leftover_size = d.leftover.size();
  v.expected_leftover_size = (std::size_t{1} << (n - 1)) + static_cast<std::size_t>(n) - 1;

  std::vector<Edge> covered;
  std::size_t total = d.leftover.size();
  for (const auto& t : d.trees) total += t.size();
  covered.reserve(total);
  for (const auto& t : d.trees) covered.insert(covered.end(), t.begin(), t.end());
  covered.insert(covered.end(), d.leftover.begin(), d.leftover.end());
  std::sort(covered.begin(), covered.end());

  const auto graph_edges = g.edges();
  std::size_t gi = 0;
  std::size_t ci = 0;
  while (gi < graph_edges.size() || ci < covered.size()) {
    if (ci == covered.size() || (gi < graph_edges.size() && graph_edges[gi] < covered[ci])) {
      v.uncovered.push_back(graph_edges[gi++]);
    } else if (gi == graph_edges.size() || covered[ci] < graph_edges[gi]) {
      if (v.foreign.empty() || v.foreign.back() != covered[ci]) v.foreign.push_back(covered[ci]);
      ++ci;
    } else {
      const Edge e = covered[ci];
      std::size_t times = 0;
      while (ci < covered.size() && covered[ci] == e) {
        ++ci;
        ++times;
      }
      if (times > 1) v.doubly_covered.push_back(e);
      ++gi;
    }
  }

  v.ok = v.uncovered.empty() && v.doubly_covered.empty() && v.foreign.empty() &&
         v.leftover_size == v.expected_leftover_size;
  if (!v.ok) {
    std::string s;
    auto add = [&s](const std::string& x) { s += (s.empty() ? "" : "; ") + x; };
    if (!v.uncovered.empty()) {
      add(std::to_string(v.uncovered.size()) + " uncovered edge(s), first " + to_bits(v.uncovered.front(), n));
    }
    if (!v.doubly_covered.empty()) {
      add(std::to_string(v.doubly_covered.size()) + " doubly covered edge(s), first " +
          to_bits(v.doubly_covered.front(), n));
    }
    if (!v.foreign.empty()) {
      add(std::to_string(v.foreign.size()) + " edge(s) not in the graph, first " +
          std::to_string(v.foreign.front().a.value) + "-" + std::to_string(v.foreign.front().b.value));
    }
    if (v.leftover_size != v.expected_leftover_size) {
      add("leftover size " + std::to_string(v.leftover_size) + " (expected " +
          std::to_string(v.expected_leftover_size) + ")");
    }
    v.detail = s;
  }
  return v;
}

/// u and v must each hold 2^(n-1) distinct in-range vertices and together
/// cover V(AQ_n).
inline LabelingVerdict check_labeling(const Decomposition& d) {
  LabelingVerdict v;
  const int n = d.n;
  if (n < 1 || n > kHardMaxDimension) {
    v.ok = false;
    v.detail = "bad dimension";
    return v;
  }
  const std::size_t half = std::size_t{1} << (n - 1);
  if (d.labeling.u.size() != half || d.labeling.v.size() != half) {
    v.ok = false;
    v.detail = "u and v must each hold " + std::to_string(half) + " vertices (got " +
               std::to_string(d.labeling.u.size()) + " and " + std::to_string(d.labeling.v.size()) + ")";
    return v;
  }
  std::vector<char> seen(std::size_t{1} << n, 0);
  for (const auto* side : {&d.labeling.u, &d.labeling.v}) {
    for (Vertex x : *side) {
      if (x.value >> n) {
        v.ok = false;
        v.offending = x;
        v.detail = "vertex " + std::to_string(x.value) + " out of range";
        return v;
      }
      if (seen[x.value]) {
        v.ok = false;
        v.offending = x;
        v.detail = "vertex " + to_bits(x, n) + " labeled twice";
        return v;
      }
      seen[x.value] = 1;
    }
  }
  return v;
}

/// The leftover must be a tree whose vertex set is exactly
/// {u_1..u_{2^(n-1)}} + {v_1..v_n}.
inline LeftoverVerdict check_leftover(const Decomposition& d) {
  LeftoverVerdict v;
  const int n = d.n;
  if (n < 1 || n > kHardMaxDimension) {
    v.ok = false;
    v.detail = "bad dimension";
    return v;
  }
  const std::uint32_t count = 1u << n;

  std::vector<char> expected(count, 0);
  for (Vertex x : d.labeling.u) {
    if (x.value < count) expected[x.value] = 1;
  }
  for (std::size_t i = 0; i < d.labeling.v.size() && i < static_cast<std::size_t>(n); ++i) {
    if (d.labeling.v[i].value < count) expected[d.labeling.v[i].value] = 1;
  }
  v.expected_support_size = static_cast<std::size_t>(std::count(expected.begin(), expected.end(), 1));

  std::vector<char> support(count, 0);
  DisjointSet dsu(count);
  std::size_t merges = 0;
  for (const Edge& e : d.leftover) {
    if (e.a.value >= count || e.b.value >= count) {
      if (!v.foreign_vertex) v.foreign_vertex = e.a.value >= count ? e.a : e.b;
      continue;
    }
    support[e.a.value] = support[e.b.value] = 1;
    if (dsu.unite(e.a.value, e.b.value)) {
      ++merges;
    } else if (!v.cycle_edge) {
      v.cycle_edge = e;
    }
  }
  v.support_size = static_cast<std::size_t>(std::count(support.begin(), support.end(), 1));
  v.acyclic = !v.cycle_edge.has_value();
  v.connected = v.support_size > 0 && merges + 1 == v.support_size;
  for (std::uint32_t x = 0; x < count; ++x) {
    if (support[x] && !expected[x] && !v.foreign_vertex) v.foreign_vertex = Vertex{x};
    if (!support[x] && expected[x] && !v.missing_vertex) v.missing_vertex = Vertex{x};
  }
  const bool labels_complete = d.labeling.v.size() >= static_cast<std::size_t>(n);

  v.ok = labels_complete && v.acyclic && v.connected && !v.foreign_vertex && !v.missing_vertex;
  if (!v.ok) {
    std::string s;
    auto add = [&s](const std::string& x) { s += (s.empty() ? "" : "; ") + x; };
    if (!labels_complete) add("labeling has fewer than n v-vertices");
    if (v.cycle_edge) add("cycle detected at edge " + to_bits(*v.cycle_edge, n));
    if (!v.connected) add("not connected on its " + std::to_string(v.support_size) + " vertices");
    if (v.foreign_vertex) add("touches unexpected vertex " + std::to_string(v.foreign_vertex->value));
    if (v.missing_vertex) add("misses labeled vertex " + to_bits(*v.missing_vertex, n));
    v.detail = s;
  }
  return v;
}

/// v_i must have degree >= 2 in T_i for 1 <= i <= n-1.
inline InternalityVerdict check_internal_vertices(const Decomposition& d) {
  InternalityVerdict v;
  const int needed = d.n - 1;
  for (int i = 0; i < needed; ++i) {
    std::size_t deg = 0;
    const bool have = static_cast<std::size_t>(i) < d.trees.size() && static_cast<std::size_t>(i) < d.labeling.v.size();
    if (have) {
      const Vertex x = d.labeling.v[static_cast<std::size_t>(i)];
      for (const Edge& e : d.trees[static_cast<std::size_t>(i)]) deg += (e.a == x || e.b == x) ? 1 : 0;
    }
    v.degrees.push_back(deg);
    if (deg < 2 && !v.failing_index) {
      v.failing_index = i + 1;
      v.ok = false;
      v.detail = have ? "v_" + std::to_string(i + 1) + " = " + to_bits(d.labeling.v[static_cast<std::size_t>(i)], d.n) +
                            " has degree " + std::to_string(deg) + " in T_" + std::to_string(i + 1)
                      : "missing tree or label for index " + std::to_string(i + 1);
    }
  }
  return v;
}

/// The unique a-b path in a tree, as edges in walk order.
inline EdgeList tree_path(std::span<const Edge> tree, Vertex a, Vertex b) {
  if (a == b) throw error(errc::invalid_argument, "tree_path needs distinct endpoints");
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> adj;
  adj.reserve(tree.size() * 2);
  for (const Edge& e : tree) {
    adj[e.a.value].push_back(e.b.value);
    adj[e.b.value].push_back(e.a.value);
  }
  if (!adj.contains(a.value) || !adj.contains(b.value)) {
    throw error(errc::invalid_argument, "path endpoint outside the tree's vertex set");
  }
  std::unordered_map<std::uint32_t, std::uint32_t> parent;
  parent.reserve(adj.size());
  parent[a.value] = a.value;
  std::vector<std::uint32_t> queue{a.value};
  for (std::size_t head = 0; head < queue.size() && !parent.contains(b.value); ++head) {
    const std::uint32_t x = queue[head];
    for (std::uint32_t y : adj[x]) {
      if (parent.emplace(y, x).second) queue.push_back(y);
    }
  }
  if (!parent.contains(b.value)) throw error(errc::invalid_argument, "endpoints are not connected");
  EdgeList path;
  for (std::uint32_t x = b.value; x != a.value; x = parent[x]) path.push_back(Edge::make(x, parent[x]));
  std::reverse(path.begin(), path.end());
  return path;
}

inline VerificationReport verify_all(const AugmentedCube& g, const Decomposition& d) {
  if (d.n != g.dimension()) {
    throw error(errc::dimension_mismatch, "decomposition has n = " + std::to_string(d.n) + " but graph has n = " +
                                              std::to_string(g.dimension()));
  }
  const int n = d.n;
  VerificationReport r;
  r.n = n;
  for (const auto& t : d.trees) r.trees.push_back(check_spanning_tree(g, t));

  r.tree_count.tree_count = d.trees.size();
  r.tree_count.upper_bound = n >= 2 ? max_edst_upper_bound(n) : 0;
  r.tree_count.ok = n >= 2 && d.trees.size() == static_cast<std::size_t>(n - 1) &&
                    r.tree_count.upper_bound == static_cast<std::uint64_t>(n - 1);
  if (!r.tree_count.ok) {
    r.tree_count.detail = std::to_string(d.trees.size()) + " trees; expected n-1 = " + std::to_string(n - 1) +
                          " matching the upper bound " + std::to_string(r.tree_count.upper_bound);
  }

  std::vector<EdgeList> parts = d.trees;
  parts.push_back(d.leftover);
  r.disjoint = check_disjoint(parts);
  r.partition = check_partition(g, d);
  r.labeling = check_labeling(d);
  r.leftover = check_leftover(d);
  r.internality = check_internal_vertices(d);
  return r;
}

}  // namespace aqedst
