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

#include "aqedst/broadcast_sim.hpp"

#include <algorithm>
#include <set>

#include "aqedst/edst_builder.hpp"
#include "gtest/gtest.h"

namespace aqedst {
namespace {

Vertex B(std::string_view bits) { return parse_bits(bits, static_cast<int>(bits.size())); }
Edge E(std::string_view a, std::string_view b) { return Edge::make(B(a), B(b)); }

std::vector<Vertex> all_vertices(int n) {
  std::vector<Vertex> out;
  for (std::uint32_t x = 0; x < (1u << n); ++x) out.push_back(Vertex{x});
  return out;
}

TEST(SplitMix64, ReferenceSequence) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng(), 0xE220A8397B1DCDAFull);
  EXPECT_EQ(rng(), 0x6E789E6AA1B965F4ull);
  EXPECT_EQ(rng(), 0x06C45D188009454Full);
}

TEST(SplitMix64, BoundedDrawsStayInRange) {
  SplitMix64 rng(3);
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 7000; ++i) ++hist[rng.below(7)];
  for (int c : hist) EXPECT_GT(c, 800);
}

TEST(SampleSubset, DistinctSortedAndUniformish) {
  SplitMix64 rng(11);
  std::vector<int> hits(20, 0);
  for (int t = 0; t < 20000; ++t) {
    const auto s = sample_subset(rng, 20, 3);
    ASSERT_EQ(s.size(), 3u);
    ASSERT_TRUE(std::is_sorted(s.begin(), s.end()));
    ASSERT_TRUE(std::adjacent_find(s.begin(), s.end()) == s.end());
    for (auto i : s) ++hits[i];
  }
  // Each index is expected 3000 times.
  for (int h : hits) {
    EXPECT_GT(h, 2700);
    EXPECT_LT(h, 3300);
  }
}

TEST(Deliver, Examples) {
  const auto d = base_decomposition();
  const auto& t1 = d.trees[0];
  const auto& t2 = d.trees[1];
  EXPECT_EQ(deliver(3, t1, B("000"), FailureSet{}), all_vertices(3));
  EXPECT_EQ(deliver(3, t1, B("000"), FailureSet({E("010", "110")})),
            (std::vector<Vertex>{B("000"), B("010"), B("011"), B("100"), B("111")}));
  EXPECT_EQ(deliver(3, t2, B("000"), FailureSet({E("010", "110")})), all_vertices(3));
  EXPECT_THROW(deliver(3, t1, Vertex{8}, FailureSet{}), error);
}

TEST(Deliver, MonotoneInFailures) {
  const auto g = build_aq(5);
  const auto d = build(5);
  SplitMix64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    EdgeList small;
    for (auto i : sample_subset(rng, g.edge_count(), 3)) small.push_back(g.edges()[i]);
    EdgeList large = small;
    for (auto i : sample_subset(rng, g.edge_count(), 4)) large.push_back(g.edges()[i]);
    const Vertex src{static_cast<std::uint32_t>(rng.below(32))};
    for (const auto& t : d.trees) {
      const auto r_small = deliver(5, t, src, FailureSet(small));
      const auto r_large = deliver(5, t, src, FailureSet(large));
      ASSERT_TRUE(std::includes(r_small.begin(), r_small.end(), r_large.begin(), r_large.end()));
    }
  }
}

TEST(FailureSet, RejectsNonEdges) {
  const auto g = build_aq(3);
  EXPECT_THROW(FailureSet::of(g, {E("001", "100")}), error);
  EXPECT_EQ(FailureSet::of(g, {E("000", "001"), E("000", "001")}).size(), 1u);
}

TEST(Simulate, Examples) {
  const auto d = build(3);
  const auto clean = simulate(d, B("000"), FailureSet{});
  ASSERT_EQ(clean.trees.size(), 2u);
  EXPECT_TRUE(clean.trees[0].intact);
  EXPECT_TRUE(clean.trees[1].intact);
  EXPECT_TRUE(clean.delivered);
  EXPECT_TRUE(clean.union_delivered);

  for (const Edge& e : d.trees[0]) {
    const auto o = simulate(d, B("000"), FailureSet({e}));
    EXPECT_FALSE(o.trees[0].intact);
    EXPECT_TRUE(o.trees[1].intact);
    EXPECT_TRUE(o.delivered);
  }
  EXPECT_THROW(simulate(d, Vertex{9}, FailureSet{}), error);
}

TEST(Simulate, IntactTreeReachesEverything) {
  const auto g = build_aq(5);
  const auto d = build(5);
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    EdgeList failed;
    for (auto i : sample_subset(rng, g.edge_count(), 6)) failed.push_back(g.edges()[i]);
    const auto o = simulate(d, Vertex{static_cast<std::uint32_t>(rng.below(32))}, FailureSet(failed));
    for (const auto& t : o.trees) {
      if (t.intact) {
        ASSERT_EQ(t.reached.size(), 32u);
      }
    }
    if (o.delivered) {
      ASSERT_TRUE(o.union_delivered);
    }
  }
}

TEST(Simulate, AnyTwoFailuresAtFour) {
  const auto g = build_aq(4);
  const auto d = build(4);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto o = simulate(d, Vertex{0}, FailureSet({edges[i], edges[j]}));
      ASSERT_GE(o.intact_count(), 1u);
      ASSERT_TRUE(o.delivered);
    }
  }
}

TEST(ExhaustiveFaultCheck, SingleFailureAtThree) {
  const auto r = exhaustive_fault_check(build_aq(3), build(3), 1);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.subsets, 20u);
  EXPECT_EQ(r.sources, 8u);
  EXPECT_EQ(r.cases, 160u);
  EXPECT_EQ(r.subsets_without_intact_tree, 0u);
}

TEST(ExhaustiveFaultCheck, TwoFailuresAtFour) {
  const auto r = exhaustive_fault_check(build_aq(4), build(4), 2);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.subsets, 1540u);
  EXPECT_EQ(r.cases, 1540u * 16u);
}

TEST(ExhaustiveFaultCheck, AgreesWithPerSourceSimulation) {
  // Two failures at n = 3 can take out both trees; the fast path must match
  // running simulate for every (subset, source).
  const auto g = build_aq(3);
  const auto d = build(3);
  const auto r = exhaustive_fault_check(g, d, 2);
  EXPECT_EQ(r.subsets, 190u);
  std::uint64_t undelivered = 0;
  std::uint64_t rescued = 0;
  std::uint64_t dead = 0;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const FailureSet f({edges[i], edges[j]});
      bool any_intact = false;
      for (std::uint32_t s = 0; s < 8; ++s) {
        const auto o = simulate(d, Vertex{s}, f);
        any_intact = o.intact_count() > 0;
        if (!o.delivered) {
          ++undelivered;
          if (o.union_delivered) ++rescued;
        }
      }
      if (!any_intact) ++dead;
    }
  }
  EXPECT_EQ(r.undelivered_cases, undelivered);
  EXPECT_EQ(r.union_rescued_cases, rescued);
  EXPECT_EQ(r.subsets_without_intact_tree, dead);
  EXPECT_EQ(r.passed, undelivered == 0);
  // 7 x 7 pairs hit one edge of each tree.
  EXPECT_EQ(dead, 49u);
}

TEST(ExhaustiveFaultCheck, BudgetRefusal) {
  try {
    exhaustive_fault_check(build_aq(5), build(5), 3, 1000);
    FAIL() << "expected budget refusal";
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::budget_exceeded);
  }
  EXPECT_THROW(exhaustive_fault_check(build_aq(3), build(3), 21), error);
}

TEST(Choose, Values) {
  EXPECT_EQ(choose(20, 1), 20u);
  EXPECT_EQ(choose(56, 2), 1540u);
  EXPECT_EQ(choose(5, 7), 0u);
  EXPECT_EQ(choose(1000, 500), std::numeric_limits<std::uint64_t>::max());
}

TEST(MonteCarlo, Examples) {
  const auto g = build_aq(5);
  const auto d = build(5);
  const auto s3 = monte_carlo(g, d, 3, 10000, 42);
  EXPECT_EQ(s3.intact_fraction(), 1.0);
  EXPECT_EQ(s3.delivered_fraction(), 1.0);

  const auto a = monte_carlo(g, d, 4, 10000, 42);
  const auto b = monte_carlo(g, d, 4, 10000, 42);
  EXPECT_LE(a.intact_fraction(), 1.0);
  EXPECT_EQ(a.with_intact_tree, b.with_intact_tree);
  EXPECT_EQ(a.delivered, b.delivered);
  EXPECT_EQ(a.union_delivered, b.union_delivered);

  const auto c = monte_carlo(g, d, 4, 10000, 43);
  EXPECT_LE(c.intact_fraction(), 1.0);

  EXPECT_THROW(monte_carlo(build_aq(3), build(3), 25, 10, 1), error);
  EXPECT_THROW(monte_carlo(g, d, 1, 0, 1), error);
  EXPECT_THROW(monte_carlo(g, d, 1, 10, 1, Vertex{32}), error);
}

TEST(MonteCarlo, PigeonholeUpToEight) {
  for (int n = 5; n <= 8; ++n) {
    const auto s = monte_carlo(build_aq(n), build(n), n - 2, 500, 1234);
    EXPECT_EQ(s.with_intact_tree, s.trials) << n;
    EXPECT_GE(s.min_intact_trees, 1u);
  }
}

}  // namespace
}  // namespace aqedst
