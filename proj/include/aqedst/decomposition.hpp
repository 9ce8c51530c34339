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

#include <vector>

#include "aqedst/aq_graph.hpp"

namespace aqedst {

/// Split of V(AQ_n) into 2^(n-1) u-vertices (all inside the leftover tree)
/// and 2^(n-1) v-vertices, of which only v_1..v_n touch the leftover tree.
/// Index 0 of each vector holds u_1 / v_1.
struct Labeling {
  std::vector<Vertex> u;
  std::vector<Vertex> v;

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// n-1 edge-disjoint spanning trees of AQ_n plus the tree formed by the
/// edges none of them use. Every edge list is sorted and canonical.
struct Decomposition {
  int n = 0;
  std::vector<EdgeList> trees;
  EdgeList leftover;
  Labeling labeling;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

}  // namespace aqedst
