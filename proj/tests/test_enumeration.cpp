// Copyright 2026 The Authors.
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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "positroid/positroid.hpp"

namespace {

using namespace positroid;

DepSet crossing() {
  return canonicalize({{1, 2}, {2, 4}, {1, 4}, {3, 5}, {3, 6}, {5, 6}, {7, 1}, {7, 2}, {7, 3}, {7, 4}, {7, 5},
                       {7, 6}, {7, 8}},
                      8);
}

// Worklist output on the crossing set, built step by step from the
// component operations.
std::vector<DepSet> crossing_pos() {
  const DepSet d = crossing();
  const DepSet f = add_vanishing(d, {1, 2});
  const DepSet g = add_vanishing(d, {5, 6});
  std::vector<DepSet> out = {
      connect(d, {1, 2, 4}, {3}),        full_set(8),
      add_vanishing(d, {4}),             add_vanishing(d, {3}),
      connect(f, {3, 5, 6}, {4}),        connect(f, {3, 5, 6}, {8}),
      add_vanishing(f, {3}),             add_vanishing(f, {5, 6}),
      connect(g, {1, 2, 4}, {3}),        connect(g, {1, 2, 4}, {8}),
      add_vanishing(g, {4}),
  };
  canonical_sort(out);
  return out;
}

TEST(MinimalElements, DropsSupersets) {
  const DepSet a = canonicalize({{1, 2}}, 4);
  const DepSet b = canonicalize({{1, 2}, {3, 4}}, 4);
  const DepSet c = canonicalize({{2, 3}}, 4);
  EXPECT_EQ(minimal_elements({b, a, c, a}), (std::vector<DepSet>{a, c}));
  EXPECT_TRUE(minimal_elements({}).empty());
}

TEST(Mat, PaperFixtures) {
  const DepSet d = canonicalize({{2, 3}, {2, 4}, {2, 6}, {3, 4}}, 6);
  std::vector<DepSet> want = {closure(d), add_vanishing(d, {2})};
  canonical_sort(want);
  EXPECT_EQ(mat_maximal(d), want);

  const DepSet e = canonicalize({{2, 3}, {3, 4}, {5, 6}}, 6);
  std::vector<DepSet> want_e = {canonicalize({{2, 3}, {2, 4}, {3, 4}, {5, 6}}, 6), add_vanishing(e, {3})};
  canonical_sort(want_e);
  EXPECT_EQ(mat_maximal(e), want_e);
}

TEST(Mat, MatroidIsItsOwnMaximum) {
  EXPECT_EQ(mat_maximal(crossing()), std::vector<DepSet>{crossing()});
}

TEST(Mat, MatchesOracleExhaustively) {
  for (int n = 3; n <= 5; ++n) {
    const auto matroids = oracle::sweep(n, oracle::exchange_matroid);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
      const DepSet d = oracle::from_mask(n, mask);
      ASSERT_EQ(mat_maximal(d), oracle::minimal_supersets(d, matroids)) << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(Pos, CrossingSetElevenSets) {
  EXPECT_EQ(pos_enumerate(crossing()), crossing_pos());
}

TEST(Pos, NiceInputReturnsItself) {
  const DepSet d = canonicalize({{1, 2}, {1, 3}, {2, 3}, {4, 5}}, 6);
  EXPECT_EQ(pos_enumerate(d), std::vector<DepSet>{d});
}

TEST(Pos, ParallelMatchesSerial) {
  std::mt19937_64 rng(29);
  EXPECT_EQ(pos_enumerate(crossing(), 4), pos_enumerate(crossing()));
  for (int trial = 0; trial < 40; ++trial) {
    const DepSet d = closure(oracle::random_depset(7 + trial % 3, rng, 0.05, 0.25));
    EXPECT_EQ(pos_enumerate(d, 3), pos_enumerate(d, 1));
    EXPECT_EQ(mpos(d, 3), mpos(d, 1));
  }
}

TEST(Pos, RejectsNonMatroid) {
  try {
    pos_enumerate(canonicalize({{1, 2}, {2, 3}}, 4));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_a_matroid);
  }
}

TEST(MPos, CrossingSetMaximalPositroids) {
  const DepSet d = crossing();
  const DepSet f = add_vanishing(d, {1, 2});
  const DepSet g = add_vanishing(d, {5, 6});
  std::vector<DepSet> want = {connect(d, {1, 2, 4}, {3}), add_vanishing(d, {4}),       add_vanishing(d, {3}),
                              connect(f, {3, 5, 6}, {8}), add_vanishing(f, {5, 6}), connect(g, {1, 2, 4}, {8})};
  canonical_sort(want);
  const std::vector<DepSet> got = mpos(d);
  EXPECT_EQ(got, want);
  std::multiset<int> dims;
  for (const DepSet& x : got) dims.insert(dimension(x));
  EXPECT_EQ(dims, (std::multiset<int>{2, 3, 3, 5, 5, 5}));
}

TEST(MPos, CrossingSetNonMaximalCandidates) {
  // D+{1,2,3} and D+{4,5,6} are nice but strictly contain nice D+{3} and D+{4}.
  const DepSet d = crossing();
  EXPECT_TRUE(is_nice(add_vanishing(d, {3})));
  EXPECT_TRUE(is_nice(add_vanishing(d, {4})));
  EXPECT_TRUE(is_subset(add_vanishing(d, {3}), add_vanishing(d, {1, 2, 3})));
  EXPECT_TRUE(is_subset(add_vanishing(d, {4}), add_vanishing(d, {4, 5, 6})));
  EXPECT_EQ(dimension(add_vanishing(d, {1, 2, 3})), 3);
}

TEST(MPos, UnionFixture) {
  const DepSet e = canonicalize({{2, 3}, {3, 4}, {5, 6}}, 6);
  EXPECT_EQ(mpos(e), mat_maximal(e));
}

TEST(MPos, MatchesOracleExhaustively) {
  for (int n = 2; n <= 5; ++n) {
    const auto nice = oracle::sweep(n, oracle::pattern_nice);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
      const DepSet d = oracle::from_mask(n, mask);
      ASSERT_EQ(mpos(d), oracle::minimal_supersets(d, nice)) << "n=" << n << " mask=" << mask;
    }
  }
}

TEST(Includes, PaperFixtureAndRandom) {
  EXPECT_TRUE(includes(canonicalize({{3, 4}}, 4), canonicalize({{1, 3}, {2, 3}, {3, 4}}, 4)));
  EXPECT_FALSE(includes(canonicalize({{1, 3}, {2, 3}, {3, 4}}, 4), canonicalize({{3, 4}}, 4)));
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + trial % 6;
    const DepSet a = closure(oracle::random_depset(n, rng, 0.0, 0.3));
    const DepSet b = trial % 2 ? closure(set_union(a, oracle::random_depset(n, rng, 0.0, 0.2)))
                               : closure(oracle::random_depset(n, rng, 0.0, 0.3));
    EXPECT_EQ(includes(a, b), is_subset(a, b));
  }
  EXPECT_THROW(includes(canonicalize({{1, 2}, {2, 3}}, 4), DepSet(4)), error);
}

TEST(Order, MakesMatroidNice) {
  const DepSet d = canonicalize({{1, 2}, {1, 5}, {2, 5}, {3, 8}, {3, 9}, {8, 9}, {4, 7}, {4, 10}, {7, 10}}, 10);
  ASSERT_FALSE(is_nice(d));
  EXPECT_TRUE(is_nice(relabel(d, positroid_order(d))));
  EXPECT_TRUE(is_nice(relabel(crossing(), positroid_order(crossing()))));
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const DepSet m = closure(oracle::random_depset(4 + trial % 7, rng));
    EXPECT_TRUE(is_nice(relabel(m, positroid_order(m))));
  }
  EXPECT_THROW(positroid_order(canonicalize({{1, 2}, {2, 3}}, 4)), error);
}

}  // namespace
