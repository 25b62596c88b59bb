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

TEST(Canonicalize, SortsAndDeduplicates) {
  const DepSet d = canonicalize({{2, 1}, {1, 2}, {4, 3}}, 4);
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d.pairs()[0], (Pair{1, 2}));
  EXPECT_EQ(d.pairs()[1], (Pair{3, 4}));
}

TEST(Canonicalize, RejectsBadInput) {
  try {
    canonicalize({{1, 5}}, 4);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::out_of_range);
  }
  try {
    canonicalize({{3, 3}}, 4);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::degenerate_pair);
  }
  EXPECT_THROW(canonicalize({{0, 1}}, 4), error);
}

TEST(Loops, CrossingSet) {
  EXPECT_EQ(loops(crossing()), (VertexSet{7}));
  EXPECT_EQ(non_loops(crossing()), (VertexSet{1, 2, 3, 4, 5, 6, 8}));
}

TEST(Loops, EmptyAndFull) {
  EXPECT_TRUE(loops(DepSet(5)).empty());
  EXPECT_EQ(loops(full_set(4)), (VertexSet{1, 2, 3, 4}));
  // n = 2: a single pair makes both elements loops.
  EXPECT_EQ(loops(canonicalize({{1, 2}}, 2)), (VertexSet{1, 2}));
}

TEST(Complement, Involution) {
  const DepSet d = crossing();
  EXPECT_EQ(complement(complement(d)), d);
  EXPECT_EQ(complement(d).size() + d.size(), pair_count(8));
  EXPECT_EQ(complement(DepSet(6)), full_set(6));
}

TEST(AddVanishing, TwoExamples) {
  const DepSet d = canonicalize({{2, 3}, {2, 4}, {2, 6}, {3, 4}}, 6);
  const DepSet expect = canonicalize({{1, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 4}}, 6);
  EXPECT_EQ(add_vanishing(d, {2}), expect);
  EXPECT_EQ(add_vanishing(DepSet(4), {}), DepSet(4));
  EXPECT_THROW(add_vanishing(d, {7}), error);
}

TEST(AddVanishing, LoopsGrowAtLeastByT) {
  // Making 3 a loop of {12} on [3] also turns 1 and 2 into loops.
  const DepSet d = add_vanishing(canonicalize({{1, 2}}, 3), {3});
  EXPECT_EQ(loops(d), (VertexSet{1, 2, 3}));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 6;
    const DepSet base = oracle::random_depset(n, rng);
    VertexSet t;
    for (int e = 1; e <= n; ++e)
      if (rng() % 3 == 0) t.push_back(e);
    VertexSet want = loops(base);
    want.insert(want.end(), t.begin(), t.end());
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    const VertexSet got = loops(add_vanishing(base, t));
    EXPECT_TRUE(std::includes(got.begin(), got.end(), want.begin(), want.end()));
  }
}

TEST(Closure, CompletesComponents) {
  const DepSet path = canonicalize({{1, 2}, {2, 3}}, 5);
  EXPECT_EQ(closure(path), canonicalize({{1, 2}, {1, 3}, {2, 3}}, 5));
}

TEST(Closure, CascadesIntoLoops) {
  // Completing the 4-cycle gives every element degree n-1.
  const DepSet d = canonicalize({{1, 2}, {2, 3}, {3, 4}, {1, 4}}, 4);
  EXPECT_EQ(closure(d), full_set(4));
  EXPECT_EQ(loops(closure(d)), (VertexSet{1, 2, 3, 4}));
  // Completing {1,2,3} on [5] adds 13 but creates no loop.
  EXPECT_EQ(closure(canonicalize({{1, 2}, {2, 3}}, 5)), canonicalize({{1, 2}, {1, 3}, {2, 3}}, 5));
}

TEST(Closure, IdempotentExtensiveMatroid) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 8;
    const DepSet a = oracle::random_depset(n, rng);
    const DepSet ca = closure(a);
    EXPECT_TRUE(is_subset(a, ca));
    EXPECT_EQ(closure(ca), ca);
    EXPECT_TRUE(oracle::exchange_matroid(ca));
    EXPECT_EQ(ca == a, oracle::exchange_matroid(a));
  }
}

TEST(Closure, NotMonotone) {
  // Adding 24 turns 2 into a loop, so the triangle is never completed.
  const DepSet a = canonicalize({{1, 2}, {2, 3}}, 4);
  const DepSet b = canonicalize({{1, 2}, {2, 3}, {2, 4}}, 4);
  EXPECT_EQ(closure(a), canonicalize({{1, 2}, {1, 3}, {2, 3}}, 4));
  EXPECT_EQ(closure(b), b);
}

TEST(Connect, CrossingComponents) {
  const DepSet d = crossing();
  const DepSet d1 = connect(d, {1, 2, 4}, {3, 5, 6});
  DepSet expect = d;
  std::vector<std::array<int, 2>> extra;
  for (int i : {1, 2, 4})
    for (int j : {3, 5, 6}) extra.push_back({i, j});
  for (const Pair& p : d.pairs()) extra.push_back({p.lo, p.hi});
  EXPECT_EQ(d1, canonicalize(extra, 8));
  EXPECT_TRUE(is_matroid(d1));
}

TEST(Connect, Errors) {
  const DepSet d = crossing();
  try {
    connect(d, {1, 2}, {2, 3});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::overlap);
  }
  EXPECT_THROW(connect(d, {}, {3}), error);
  EXPECT_THROW(connect(d, {1}, {7}), error);
}

TEST(Relabel, CyclicShift) {
  const DepSet d = canonicalize({{1, 2}}, 4);
  EXPECT_EQ(relabel(d, Relabeling::cyclic_shift(4, 1)), canonicalize({{2, 3}}, 4));
  EXPECT_EQ(relabel(d, Relabeling::cyclic_shift(4, 3)), canonicalize({{1, 4}}, 4));
  EXPECT_EQ(relabel(d, Relabeling::identity(4)), d);
}

TEST(Relabel, InverseAndCompose) {
  const Relabeling r = Relabeling::from_order(std::vector<int>{3, 1, 4, 2});
  const DepSet d = crossing();
  const Relabeling s = Relabeling::cyclic_shift(8, 3);
  EXPECT_EQ(relabel(relabel(d, s), s.inverse()), d);
  EXPECT_EQ(r.compose(r.inverse()).order(), Relabeling::identity(4).order());
  EXPECT_THROW(Relabeling(std::vector<int>{1, 1, 2}), error);
}

TEST(Subset, UnionAndInclusion) {
  const DepSet a = canonicalize({{1, 2}}, 4);
  const DepSet b = canonicalize({{3, 4}}, 4);
  const DepSet u = set_union(a, b);
  EXPECT_TRUE(is_subset(a, u));
  EXPECT_TRUE(is_subset(b, u));
  EXPECT_FALSE(is_subset(u, a));
}

TEST(PairMatrix, RoundTrip) {
  const DepSet d = crossing();
  const PairMatrix m(d);
  EXPECT_EQ(m.to_depset(), d);
  EXPECT_EQ(m.degree(7), 7);
  EXPECT_TRUE(m.test(4, 1));
  EXPECT_FALSE(m.test(4, 3));
}

}  // namespace
