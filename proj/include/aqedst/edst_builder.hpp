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
#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aqedst/aq_graph.hpp"
#include "aqedst/decomposition.hpp"
#include "aqedst/error.hpp"
#include "aqedst/verifier.hpp"

namespace aqedst {

namespace detail {

inline EdgeList edges_from_bits(std::initializer_list<std::pair<std::string_view, std::string_view>> pairs) {
  EdgeList out;
  for (const auto& [x, y] : pairs) out.push_back(Edge::make(parse_bits(x, 3), parse_bits(y, 3)));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Vertex> vertices_from_bits(std::initializer_list<std::string_view> labels) {
  std::vector<Vertex> out;
  for (auto s : labels) out.push_back(parse_bits(s, 3));
  return out;
}

inline void require_valid(const AugmentedCube& g, const Decomposition& d, errc code, const std::string& stage) {
  const auto report = verify_all(g, d);
  if (report.passed()) return;
  std::string msg = stage + " (n = " + std::to_string(d.n) + ")";
  for (const auto& f : report.failures()) msg += "\n  " + f;
  throw error(code, msg);
}

}  // namespace detail

/// The AQ_3 decomposition: T_1, T_2 and the 6-edge leftover tree on
/// V(AQ_3) minus {100}.
///
/// Labeling: v_4 = 100 is forced (the only vertex off the leftover tree).
/// v_1 = 000 is internal in T_1 and v_2 = 001 internal in T_2; the remaining
/// choices take the smallest admissible label.
inline Decomposition base_decomposition() {
  Decomposition d;
  d.n = 3;
  d.trees.push_back(detail::edges_from_bits({{"000", "010"},
                                             {"010", "011"},
                                             {"010", "110"},
                                             {"110", "101"},
                                             {"011", "111"},
                                             {"000", "100"},
                                             {"001", "101"}}));
  d.trees.push_back(detail::edges_from_bits({{"000", "001"},
                                             {"001", "011"},
                                             {"001", "010"},
                                             {"011", "100"},
                                             {"100", "110"},
                                             {"100", "101"},
                                             {"100", "111"}}));
  d.leftover = detail::edges_from_bits(
      {{"101", "111"}, {"110", "111"}, {"000", "111"}, {"001", "110"}, {"010", "101"}, {"000", "011"}});
  d.labeling.v = detail::vertices_from_bits({"000", "001", "010", "100"});
  d.labeling.u = detail::vertices_from_bits({"011", "101", "110", "111"});

  detail::require_valid(build_aq(3), d, errc::construction_bug, "base decomposition failed verification");
  return d;
}

namespace detail {

/// One induction step without checking input or output. Copy 0 of AQ_{n+1}
/// is the vertex values below 2^n, copy 1 the values with bit n set.
inline Decomposition extend_unchecked(const Decomposition& d) {
  const int n = d.n;
  const std::uint32_t top = 1u << n;
  const std::uint32_t half = 1u << (n - 1);  // |u| = |v| in AQ_n
  const auto& u = d.labeling.u;
  const auto& v = d.labeling.v;

  auto lift = [top](Vertex x) { return Vertex{x.value | top}; };
  auto cross = [top](Vertex x) { return Edge::make(x.value, x.value | top); };
  auto append_copies = [&](EdgeList& out, const EdgeList& src, bool copy0, bool copy1) {
    if (copy0) out.insert(out.end(), src.begin(), src.end());
    if (copy1) {
      for (const Edge& e : src) out.push_back(Edge{lift(e.a), lift(e.b)});
    }
  };

  Decomposition next;
  next.n = n + 1;
  next.trees.resize(static_cast<std::size_t>(n));

  // Trees 1..n-2: both copies joined by the hypercube edge at v_i.
  for (int i = 0; i < n - 2; ++i) {
    auto& t = next.trees[static_cast<std::size_t>(i)];
    const auto& src = d.trees[static_cast<std::size_t>(i)];
    t.reserve(2 * src.size() + 1);
    append_copies(t, src, true, true);
    t.push_back(cross(v[static_cast<std::size_t>(i)]));
  }

  // Tree n-1: copy 0 of T_{n-1} plus every complement cross edge.
  {
    auto& t = next.trees[static_cast<std::size_t>(n - 2)];
    const auto& src = d.trees[static_cast<std::size_t>(n - 2)];
    t.reserve(src.size() + top);
    append_copies(t, src, true, false);
    const std::uint32_t full = detail::low_mask(n + 1);
    for (std::uint32_t x = 0; x < top; ++x) t.push_back(Edge::make(x, x ^ full));
  }

  // Tree n: copy 1 of T_{n-1}, hypercube cross edges at v_n..v_{2^(n-1)},
  // and copy 0 of the old leftover hanging off v_n.
  {
    auto& t = next.trees[static_cast<std::size_t>(n - 1)];
    const auto& src = d.trees[static_cast<std::size_t>(n - 2)];
    t.reserve(src.size() + half + d.leftover.size());
    append_copies(t, src, false, true);
    for (std::size_t i = static_cast<std::size_t>(n - 1); i < half; ++i) t.push_back(cross(v[i]));
    append_copies(t, d.leftover, true, false);
  }

  // Leftover: copy 1 of the old leftover with hypercube cross edges at
  // v_{n-1} and at every u_i.
  next.leftover.reserve(d.leftover.size() + 1 + half);
  append_copies(next.leftover, d.leftover, false, true);
  next.leftover.push_back(cross(v[static_cast<std::size_t>(n - 2)]));
  for (Vertex x : u) next.leftover.push_back(cross(x));

  for (auto& t : next.trees) std::sort(t.begin(), t.end());
  std::sort(next.leftover.begin(), next.leftover.end());

  // Labeling for the next round. The new leftover covers both copies of u,
  // copy 0 of v_{n-1} and copy 1 of v_1..v_n; the labels below keep v'_i
  // internal in T'_i for i <= n.
  auto& nu = next.labeling.u;
  nu.reserve(2 * half);
  for (Vertex x : u) nu.push_back(x);
  for (Vertex x : u) nu.push_back(lift(x));

  auto& nv = next.labeling.v;
  nv.reserve(2 * half);
  for (int i = 0; i < n - 2; ++i) nv.push_back(lift(v[static_cast<std::size_t>(i)]));
  nv.push_back(v[static_cast<std::size_t>(n - 2)]);
  nv.push_back(lift(v[static_cast<std::size_t>(n - 2)]));
  nv.push_back(lift(v[static_cast<std::size_t>(n - 1)]));
  std::vector<Vertex> rest;
  rest.reserve(2 * half - nv.size());
  for (std::size_t i = 0; i < half; ++i) {
    if (i != static_cast<std::size_t>(n - 2)) rest.push_back(v[i]);
  }
  for (std::size_t i = static_cast<std::size_t>(n); i < half; ++i) rest.push_back(lift(v[i]));
  std::sort(rest.begin(), rest.end());
  nv.insert(nv.end(), rest.begin(), rest.end());
  return next;
}

}  // namespace detail

/// Lifts a verified decomposition of AQ_n to one of AQ_{n+1}. Rejects an
/// input that fails verify_all; an output that fails is a construction bug.
inline Decomposition extend(const Decomposition& d, int max_dimension = kDefaultMaxDimension) {
  if (d.n < 3) throw error(errc::invalid_argument, "extend needs a decomposition with n >= 3");
  detail::check_dimension(d.n + 1, max_dimension);
  detail::require_valid(build_aq(d.n, max_dimension), d, errc::verification_failed, "extend input is not valid");
  Decomposition next = detail::extend_unchecked(d);
  detail::require_valid(build_aq(next.n, max_dimension), next, errc::construction_bug,
                        "extend produced an invalid decomposition");
  return next;
}

/// n-1 edge-disjoint spanning trees of AQ_n plus the leftover tree, n >= 3.
/// Every intermediate dimension is verified as it is produced.
inline Decomposition build(int n, int max_dimension = kDefaultMaxDimension) {
  if (n < 3) throw error(errc::invalid_argument, "construction starts at n = 3, got " + std::to_string(n));
  detail::check_dimension(n, max_dimension);
  Decomposition d = base_decomposition();
  while (d.n < n) {
    d = detail::extend_unchecked(d);
    detail::require_valid(build_aq(d.n, max_dimension), d, errc::construction_bug,
                          "extend produced an invalid decomposition");
  }
  return d;
}

}  // namespace aqedst
