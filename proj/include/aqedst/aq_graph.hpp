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
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aqedst/error.hpp"

namespace aqedst {

inline constexpr int kDefaultMaxDimension = 20;
// Vertex labels are stored in 32 bits and edge keys pack two of them.
inline constexpr int kHardMaxDimension = 30;
// All-sources BFS is quadratic in the vertex count.
inline constexpr int kDefaultMaxDiameterDimension = 12;

/// n-bit label u_1 u_2 ... u_n with u_1 stored as the most significant bit,
/// so copy 0 of the outermost recursion is exactly the values below 2^(n-1).
struct Vertex {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(Vertex, Vertex) = default;
};

/// Undirected edge, canonical form a < b.
struct Edge {
  Vertex a;
  Vertex b;

  static constexpr Edge make(Vertex x, Vertex y) {
    return x.value < y.value ? Edge{x, y} : Edge{y, x};
  }
  static constexpr Edge make(std::uint32_t x, std::uint32_t y) { return make(Vertex{x}, Vertex{y}); }

  constexpr std::uint64_t key() const {
    return (std::uint64_t{a.value} << 32) | b.value;
  }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

enum class EdgeClass { hypercube, complement };

/// Recursion level that introduced an edge. Hypercube edges exist on levels
/// 1..n, complement edges on levels 2..n (level 1 would coincide with the
/// hypercube edge).
struct EdgeKind {
  EdgeClass kind = EdgeClass::hypercube;
  int level = 1;

  friend constexpr bool operator==(const EdgeKind&, const EdgeKind&) = default;
};

inline std::string to_string(const EdgeKind& k) {
  return std::string(k.kind == EdgeClass::hypercube ? "hypercube" : "complement") + "(" +
         std::to_string(k.level) + ")";
}

namespace detail {

inline void check_dimension(int n, int max_dimension) {
  if (n < 1) throw error(errc::size_limit, "dimension must be at least 1, got " + std::to_string(n));
  const int cap = std::min(max_dimension, kHardMaxDimension);
  if (n > cap) {
    throw error(errc::size_limit,
                "dimension " + std::to_string(n) + " exceeds the configured maximum " + std::to_string(cap));
  }
}

inline void check_vertex(int n, Vertex x) {
  if (n < 1 || n > kHardMaxDimension) throw error(errc::invalid_argument, "bad dimension " + std::to_string(n));
  if (x.value >> n) {
    throw error(errc::invalid_argument,
                "vertex " + std::to_string(x.value) + " out of range for dimension " + std::to_string(n));
  }
}

constexpr std::uint32_t low_mask(int bits) { return bits >= 32 ? ~0u : ((1u << bits) - 1u); }

}  // namespace detail

/// Zero-padded bit string, u_1 first.
inline std::string to_bits(Vertex x, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((x.value >> (n - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

inline std::string to_bits(const Edge& e, int n) { return to_bits(e.a, n) + "-" + to_bits(e.b, n); }

/// Inverse of to_bits. Throws invalid_argument on anything but exactly n
/// characters from {0,1}.
inline Vertex parse_bits(std::string_view s, int n) {
  if (static_cast<int>(s.size()) != n) {
    throw error(errc::invalid_argument,
                "bit string '" + std::string(s) + "' must have length " + std::to_string(n));
  }
  std::uint32_t v = 0;
  for (char c : s) {
    if (c != '0' && c != '1') throw error(errc::invalid_argument, "malformed bit string '" + std::string(s) + "'");
    v = (v << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return Vertex{v};
}

/// x with bit position n-level+1 flipped (position 1 is the MSB).
inline Vertex hypercube_partner(int n, Vertex x, int level) {
  detail::check_vertex(n, x);
  if (level < 1 || level > n) {
    throw error(errc::invalid_argument, "hypercube level " + std::to_string(level) + " outside 1.." + std::to_string(n));
  }
  return Vertex{x.value ^ (1u << (level - 1))};
}

/// x with its trailing `level` bits flipped.
inline Vertex complement_partner(int n, Vertex x, int level) {
  detail::check_vertex(n, x);
  if (level < 2 || level > n) {
    throw error(errc::invalid_argument,
                "complement level " + std::to_string(level) + " outside 2.." + std::to_string(n));
  }
  return Vertex{x.value ^ detail::low_mask(level)};
}

/// Classification of the pair (x, y) in AQ_n, or nullopt when not adjacent.
inline std::optional<EdgeKind> classify_pair(int n, Vertex x, Vertex y) {
  detail::check_vertex(n, x);
  detail::check_vertex(n, y);
  if (x == y) throw error(errc::invalid_argument, "classify_pair needs distinct vertices");
  const std::uint32_t diff = x.value ^ y.value;
  const int top = 31 - __builtin_clz(diff);  // 0-based from the LSB
  const int level = top + 1;
  if (diff == (1u << top)) return EdgeKind{EdgeClass::hypercube, level};
  if (level >= 2 && diff == detail::low_mask(level)) return EdgeKind{EdgeClass::complement, level};
  return std::nullopt;
}

/// The augmented cube AQ_n. Immutable after construction; every query is
/// const and safe to share between threads.
class AugmentedCube {
 public:
  int dimension() const { return n_; }
  std::uint32_t vertex_count() const { return 1u << n_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Sorted canonical edge list.
  std::span<const Edge> edges() const { return edges_; }
  const EdgeKind& kind(std::size_t edge_index) const { return kinds_[edge_index]; }

  std::span<const std::uint32_t> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v.value], neighbors_.data() + offsets_[v.value + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v.value + 1] - offsets_[v.value]; }

  bool contains(Vertex v) const { return v.value < vertex_count(); }
  bool contains(const Edge& e) const {
    return contains(e.a) && contains(e.b) && e.a != e.b && classify_pair(n_, e.a, e.b).has_value();
  }

  /// Kind of an edge of this graph; nullopt for non-edges.
  std::optional<EdgeKind> kind_of(const Edge& e) const {
    if (!contains(e.a) || !contains(e.b) || e.a == e.b) return std::nullopt;
    return classify_pair(n_, e.a, e.b);
  }

 private:
  friend AugmentedCube build_aq(int n, int max_dimension);

  int n_ = 0;
  EdgeList edges_;
  std::vector<EdgeKind> kinds_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> neighbors_;
};

/// Builds AQ_n level by level: level l contributes the hypercube edges that
/// flip bit l-1 and (for l >= 2) the complement edges that flip bits 0..l-1.
inline AugmentedCube build_aq(int n, int max_dimension = kDefaultMaxDimension) {
  detail::check_dimension(n, max_dimension);
  AugmentedCube g;
  g.n_ = n;
  const std::uint32_t count = 1u << n;

  struct Tagged {
    Edge edge;
    EdgeKind kind;
  };
  std::vector<Tagged> tagged;
  tagged.reserve(static_cast<std::size_t>(2 * n - 1) * (count / 2));
  for (int level = 1; level <= n; ++level) {
    const std::uint32_t hbit = 1u << (level - 1);
    const std::uint32_t cmask = detail::low_mask(level);
    for (std::uint32_t x = 0; x < count; ++x) {
      if (x & hbit) continue;  // each cross edge once, from its copy-0 endpoint
      tagged.push_back({Edge::make(x, x ^ hbit), {EdgeClass::hypercube, level}});
      if (level >= 2) tagged.push_back({Edge::make(x, x ^ cmask), {EdgeClass::complement, level}});
    }
  }
  std::sort(tagged.begin(), tagged.end(), [](const Tagged& l, const Tagged& r) { return l.edge < r.edge; });
  g.edges_.reserve(tagged.size());
  g.kinds_.reserve(tagged.size());
  for (const auto& t : tagged) {
    g.edges_.push_back(t.edge);
    g.kinds_.push_back(t.kind);
  }

  const std::uint32_t deg = n == 1 ? 1u : static_cast<std::uint32_t>(2 * n - 1);
  g.offsets_.resize(count + 1);
  g.neighbors_.reserve(static_cast<std::size_t>(count) * deg);
  for (std::uint32_t x = 0; x < count; ++x) {
    g.offsets_[x] = static_cast<std::uint32_t>(g.neighbors_.size());
    const auto first = g.neighbors_.size();
    for (int level = 1; level <= n; ++level) {
      g.neighbors_.push_back(x ^ (1u << (level - 1)));
      if (level >= 2) g.neighbors_.push_back(x ^ detail::low_mask(level));
    }
    std::sort(g.neighbors_.begin() + static_cast<std::ptrdiff_t>(first), g.neighbors_.end());
  }
  g.offsets_[count] = static_cast<std::uint32_t>(g.neighbors_.size());
  return g;
}

/// The two copies of AQ_{n-1} inside AQ_n and the cross edges E^h_n, E^c_n
/// joining them.
struct CopySplit {
  std::vector<Vertex> copy0;
  std::vector<Vertex> copy1;
  EdgeList hypercube_cross;
  EdgeList complement_cross;
};

inline CopySplit split_copies(const AugmentedCube& g) {
  const int n = g.dimension();
  if (n < 2) throw error(errc::invalid_argument, "split_copies needs dimension >= 2");
  const std::uint32_t half = 1u << (n - 1);
  CopySplit s;
  s.copy0.reserve(half);
  s.copy1.reserve(half);
  for (std::uint32_t x = 0; x < half; ++x) {
    s.copy0.push_back(Vertex{x});
    s.copy1.push_back(Vertex{x | half});
    s.hypercube_cross.push_back(Edge::make(x, x | half));
    s.complement_cross.push_back(Edge::make(x, x ^ detail::low_mask(n)));
  }
  std::sort(s.complement_cross.begin(), s.complement_cross.end());
  return s;
}

/// Largest BFS distance from `source`.
inline int eccentricity(const AugmentedCube& g, Vertex source) {
  if (!g.contains(source)) throw error(errc::invalid_argument, "source out of range");
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<std::uint32_t> queue;
  queue.reserve(g.vertex_count());
  queue.push_back(source.value);
  dist[source.value] = 0;
  int far = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t x = queue[head];
    for (std::uint32_t y : g.neighbors(Vertex{x})) {
      if (dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      far = std::max(far, dist[y]);
      queue.push_back(y);
    }
  }
  return far;
}

/// Exact diameter by BFS from every vertex.
inline int diameter(const AugmentedCube& g, int max_dimension = kDefaultMaxDiameterDimension) {
  if (g.dimension() > max_dimension) {
    throw error(errc::size_limit, "all-sources diameter limited to dimension " + std::to_string(max_dimension));
  }
  int d = 0;
  for (std::uint32_t x = 0; x < g.vertex_count(); ++x) d = std::max(d, eccentricity(g, Vertex{x}));
  return d;
}

}  // namespace aqedst
