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
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aqedst/aq_graph.hpp"
#include "aqedst/decomposition.hpp"
#include "aqedst/disjoint_set.hpp"
#include "aqedst/error.hpp"

// Broadcast over edge-disjoint spanning trees with failed links.

namespace aqedst {

/// SplitMix64 (Steele, Lea and Flood). Chosen for reproducibility: the
/// output sequence is fixed by the seed on every platform, unlike the
/// standard distributions.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Unbiased draw from [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t r;
    do {
      r = (*this)();
    } while (r >= limit);
    return r % bound;
  }

  /// Independent stream for a sub-task.
  SplitMix64 split() { return SplitMix64((*this)()); }

 private:
  std::uint64_t state_;
};

/// Set of failed (removed) links.
class FailureSet {
 public:
  FailureSet() = default;
  explicit FailureSet(EdgeList edges) : edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  /// Like the constructor but rejects links that are not edges of g.
  static FailureSet of(const AugmentedCube& g, EdgeList edges) {
    for (const Edge& e : edges) {
      if (!g.contains(e)) {
        throw error(errc::invalid_argument,
                    "failed link " + std::to_string(e.a.value) + "-" + std::to_string(e.b.value) + " is not an edge");
      }
    }
    return FailureSet(std::move(edges));
  }

  bool contains(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }

 private:
  EdgeList edges_;
};

struct TreeDelivery {
  std::vector<Vertex> reached;  // sorted
  bool intact = false;
};

struct BroadcastOutcome {
  std::vector<TreeDelivery> trees;
  bool delivered = false;        // some single tree reaches every vertex
  bool union_delivered = false;  // surviving tree edges together reach every vertex

  std::size_t intact_count() const {
    return static_cast<std::size_t>(std::count_if(trees.begin(), trees.end(), [](const auto& t) { return t.intact; }));
  }
};

namespace detail {

inline void check_source(int n, Vertex source) {
  if (n < 1 || n > kHardMaxDimension || (source.value >> n)) {
    throw error(errc::invalid_argument, "source vertex " + std::to_string(source.value) + " out of range");
  }
}

inline DisjointSet surviving_components(int n, std::span<const Edge> tree, const FailureSet& failed) {
  DisjointSet dsu(std::size_t{1} << n);
  for (const Edge& e : tree) {
    if (!failed.contains(e)) dsu.unite(e.a.value, e.b.value);
  }
  return dsu;
}

}  // namespace detail

/// Vertices reachable from `source` in tree minus the failed links.
inline std::vector<Vertex> deliver(int n, std::span<const Edge> tree, Vertex source, const FailureSet& failed) {
  detail::check_source(n, source);
  auto dsu = detail::surviving_components(n, tree, failed);
  std::vector<Vertex> reached;
  const std::uint32_t root = dsu.find(source.value);
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    if (dsu.find(x) == root) reached.push_back(Vertex{x});
  }
  return reached;
}

inline BroadcastOutcome simulate(const Decomposition& d, Vertex source, const FailureSet& failed) {
  detail::check_source(d.n, source);
  const std::size_t all = std::size_t{1} << d.n;
  BroadcastOutcome out;
  DisjointSet combined(all);
  for (const auto& tree : d.trees) {
    TreeDelivery td;
    td.intact = std::none_of(tree.begin(), tree.end(), [&](const Edge& e) { return failed.contains(e); });
    td.reached = deliver(d.n, tree, source, failed);
    out.delivered = out.delivered || td.reached.size() == all;
    for (const Edge& e : tree) {
      if (!failed.contains(e)) combined.unite(e.a.value, e.b.value);
    }
    out.trees.push_back(std::move(td));
  }
  out.union_delivered = combined.components() == 1;
  return out;
}

/// C(n, k), saturating at uint64 max.
inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

inline constexpr std::uint64_t kDefaultEnumerationBudget = 2'000'000;

struct FaultCheckReport {
  bool passed = true;
  int k = 0;
  std::uint64_t subsets = 0;
  std::uint64_t sources = 0;
  std::uint64_t cases = 0;
  std::uint64_t undelivered_cases = 0;
  /// Failure sets that leave no tree intact.
  std::uint64_t subsets_without_intact_tree = 0;
  /// Cases not delivered by any single tree but reached by the union of
  /// surviving tree edges.
  std::uint64_t union_rescued_cases = 0;
  std::optional<EdgeList> first_failure;
  std::optional<Vertex> first_failure_source;
};

/// Every k-subset of E(AQ_n) as the failure set, every vertex as source.
/// Throws budget_exceeded when C(|E|, k) is above `budget`.
inline FaultCheckReport exhaustive_fault_check(const AugmentedCube& g, const Decomposition& d, int k,
                                               std::uint64_t budget = kDefaultEnumerationBudget) {
  if (g.dimension() != d.n) throw error(errc::dimension_mismatch, "graph and decomposition dimensions differ");
  const auto edges = g.edges();
  if (k < 0 || static_cast<std::size_t>(k) > edges.size()) {
    throw error(errc::invalid_argument, "failure count " + std::to_string(k) + " outside 0.." +
                                            std::to_string(edges.size()));
  }
  const std::uint64_t subsets = choose(edges.size(), static_cast<std::uint64_t>(k));
  if (subsets > budget) {
    throw error(errc::budget_exceeded, std::to_string(subsets) + " failure sets exceed the budget of " +
                                           std::to_string(budget) + "; use monte_carlo instead");
  }

  FaultCheckReport r;
  r.k = k;
  r.subsets = subsets;
  r.sources = g.vertex_count();
  const std::size_t all = g.vertex_count();

  std::vector<std::size_t> idx(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  EdgeList chosen(idx.size());
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) chosen[i] = edges[idx[i]];
    const FailureSet failed(chosen);

    // Components depend only on the failure set; every source then reads
    // its own component off them.
    DisjointSet combined(all);
    bool any_intact = false;
    for (const auto& tree : d.trees) {
      any_intact = any_intact || detail::surviving_components(d.n, tree, failed).components() == 1;
      for (const Edge& e : tree) {
        if (!failed.contains(e)) combined.unite(e.a.value, e.b.value);
      }
    }
    if (!any_intact) ++r.subsets_without_intact_tree;
    const bool union_ok = combined.components() == 1;
    for (std::uint32_t s = 0; s < all; ++s) {
      ++r.cases;
      // A spanning tree reaches every vertex from s iff it is still one component.
      const bool delivered = any_intact;
      if (!delivered) {
        ++r.undelivered_cases;
        if (union_ok) ++r.union_rescued_cases;
        if (!r.first_failure) {
          r.first_failure = chosen;
          r.first_failure_source = Vertex{s};
        }
      }
    }

    // Next combination in lexicographic order.
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] == edges.size() - idx.size() + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < idx.size(); ++i) idx[i] = idx[i - 1] + 1;
  }
  r.passed = r.undelivered_cases == 0;
  return r;
}

struct MonteCarloStats {
  int k = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  Vertex source;
  std::uint64_t delivered = 0;
  std::uint64_t with_intact_tree = 0;
  std::uint64_t union_delivered = 0;
  std::size_t min_intact_trees = 0;

  double delivered_fraction() const { return static_cast<double>(delivered) / static_cast<double>(trials); }
  double intact_fraction() const { return static_cast<double>(with_intact_tree) / static_cast<double>(trials); }
  double union_fraction() const { return static_cast<double>(union_delivered) / static_cast<double>(trials); }
};

/// Uniform k-subset of {0..population-1} (Floyd's algorithm), sorted.
inline std::vector<std::size_t> sample_subset(SplitMix64& rng, std::size_t population, std::size_t k) {
  std::vector<std::size_t> picked;
  picked.reserve(k);
  for (std::size_t j = population - k; j < population; ++j) {
    const auto t = static_cast<std::size_t>(rng.below(j + 1));
    if (std::find(picked.begin(), picked.end(), t) == picked.end()) {
      picked.push_back(t);
    } else {
      picked.push_back(j);
    }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

/// Random k-link failures, `trials` times, from a fixed seed.
inline MonteCarloStats monte_carlo(const AugmentedCube& g, const Decomposition& d, int k, std::uint64_t trials,
                                   std::uint64_t seed, Vertex source = Vertex{0}) {
  if (g.dimension() != d.n) throw error(errc::dimension_mismatch, "graph and decomposition dimensions differ");
  detail::check_source(d.n, source);
  const auto edges = g.edges();
  if (trials < 1) throw error(errc::invalid_argument, "at least one trial is required");
  if (k < 0 || static_cast<std::size_t>(k) > edges.size()) {
    throw error(errc::invalid_argument, "failure count " + std::to_string(k) + " exceeds the " +
                                            std::to_string(edges.size()) + " edges of the graph");
  }

  MonteCarloStats s;
  s.k = k;
  s.trials = trials;
  s.seed = seed;
  s.source = source;
  s.min_intact_trees = d.trees.size();
  SplitMix64 rng(seed);
  EdgeList chosen;
  for (std::uint64_t t = 0; t < trials; ++t) {
    chosen.clear();
    for (std::size_t i : sample_subset(rng, edges.size(), static_cast<std::size_t>(k))) chosen.push_back(edges[i]);
    const auto outcome = simulate(d, source, FailureSet(chosen));
    const auto intact = outcome.intact_count();
    s.delivered += outcome.delivered ? 1 : 0;
    s.with_intact_tree += intact > 0 ? 1 : 0;
    s.union_delivered += outcome.union_delivered ? 1 : 0;
    s.min_intact_trees = std::min(s.min_intact_trees, intact);
  }
  return s;
}

}  // namespace aqedst
