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

TEST(Dimension, Formula) {
  EXPECT_EQ(dimension(canonicalize({{1, 2}, {1, 3}, {2, 3}, {4, 5}}, 6)), 5);
  for (int n = 4; n <= 12; ++n) EXPECT_EQ(dimension(DepSet(n)), 2 * n - 4);
  EXPECT_EQ(cell_dimension(full_set(5)), std::nullopt);
}

TEST(Dimension, Errors) {
  try {
    dimension(canonicalize({{1, 3}}, 4));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_nice);
  }
  try {
    dimension(add_vanishing(DepSet(4), {1, 2, 3}));
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::rank_deficient);
  }
}

TEST(Dimension, EqualsPlusCount) {
  for (int n = 2; n <= 7; ++n)
    for (const DepSet& d : census(n, CensusKind::nice)) {
      const auto dim = cell_dimension(d);
      if (!dim) continue;
      EXPECT_EQ(*dim, plus_count(diagram_from_necklace(necklace_from_bases(bases_of(d)))));
      EXPECT_EQ(*dim, oracle::formula_dimension(d));
    }
}

TEST(Boundary, FourElementFixture) {
  const DepSet d = canonicalize({{3, 4}}, 4);
  const BoundaryResult b = boundary_codim1(d);
  const DepSet b1 = canonicalize({{1, 3}, {2, 3}, {3, 4}}, 4);
  EXPECT_NE(std::find(b.cells.begin(), b.cells.end(), b1), b.cells.end());
  std::vector<DepSet> want = {connect(d, {1}, {2}), connect(d, {2}, {3, 4}), connect(d, {1}, {3, 4}),
                              add_vanishing(d, {3}), add_vanishing(d, {4})};
  canonical_sort(want);
  EXPECT_EQ(b.cells, want);
  for (const DepSet& f : b.cells) EXPECT_EQ(dimension(f), 2);
  EXPECT_TRUE(b.degenerate.empty());
}

TEST(Boundary, TwoComponentsMergeOnce) {
  const DepSet d = canonicalize({{1, 2}, {3, 4}}, 4);
  const BoundaryResult b = boundary_codim1(d);
  // One merge (rank-deficient) plus four vanishings.
  EXPECT_EQ(b.degenerate, std::vector<DepSet>{closure(connect(d, {1, 2}, {3, 4}))});
  EXPECT_EQ(b.cells.size(), 4u);
}

TEST(Boundary, MatchesCensusOracle) {
  for (int n = 3; n <= 6; ++n) {
    const auto nice = oracle::sweep(n, oracle::pattern_nice);
    for (const DepSet& d : nice) {
      const auto dim = cell_dimension(d);
      if (!dim) continue;
      std::vector<DepSet> want;
      for (const DepSet& f : nice) {
        const auto df = cell_dimension(f);
        if (df && *df == *dim - 1 && f != d && is_subset(d, f)) want.push_back(f);
      }
      ASSERT_EQ(boundary_codim1(d).cells, want) << "n=" << n;
    }
  }
}

TEST(Boundary, CodimTwoCount) {
  const DepSet d = canonicalize({{1, 2}, {1, 3}, {2, 3}, {4, 5}}, 6);
  const auto nice = census(6, CensusKind::nice);
  std::size_t brute = 0;
  for (const DepSet& f : nice) {
    const auto df = cell_dimension(f);
    if (df && *df == 3 && is_subset(d, f)) ++brute;
  }
  EXPECT_EQ(boundary_codimk(d, 2).cells.size(), brute);
  EXPECT_EQ(boundary_codimk(d, 1).cells, boundary_codim1(d).cells);
  EXPECT_THROW(boundary_codimk(d, 0), error);
}

TEST(Boundary, Errors) {
  EXPECT_THROW(boundary_codim1(canonicalize({{1, 3}}, 4)), error);
  EXPECT_THROW(boundary_codim1(full_set(4)), error);
}

TEST(Intersection, TwoCellFixture) {
  const DepSet d1 = canonicalize({{3, 4}, {5, 6}}, 6);
  const DepSet d2 = canonicalize({{2, 3}, {5, 6}}, 6);
  const auto cells = intersection_mpos({d1, d2});
  std::vector<DepSet> want = {canonicalize({{2, 3}, {2, 4}, {3, 4}, {5, 6}}, 6),
                              add_vanishing(canonicalize({{5, 6}}, 6), {3})};
  canonical_sort(want);
  EXPECT_EQ(cells, want);
  for (const DepSet& c : cells) EXPECT_EQ(dimension(c), 5);
  EXPECT_THROW(intersection_mpos({}), error);
}

TEST(Dual, Example24) {
  const BasesSet b = bases_of(canonicalize({{1, 2}, {1, 3}, {2, 3}, {4, 5}}, 6));
  const BasesSet d = dualize(b);
  EXPECT_EQ(d.k, 4);
  EXPECT_EQ(d.bases.size(), 11u);
  EXPECT_EQ(dualize(d), b);
}

TEST(Poset, LevelsAndCovers) {
  const DepSet d = canonicalize({{3, 4}}, 4);
  const BoundaryPoset p = boundary_poset(d, 3);
  ASSERT_GE(p.levels.size(), 2u);
  EXPECT_EQ(p.levels[0], std::vector<DepSet>{d});
  EXPECT_EQ(p.levels[1], boundary_codim1(d).cells);
  EXPECT_FALSE(p.covers.empty());
  EXPECT_NE(poset_dot(p).find("digraph"), std::string::npos);
  EXPECT_EQ(depset_label(canonicalize({{1, 2}, {3, 4}}, 4)), "{12,34}");
}

TEST(Dimension, CyclicShiftInvariance) {
  for (const DepSet& d : census(7, CensusKind::nice)) {
    const auto dim = cell_dimension(d);
    for (int s = 1; s < 7; ++s) EXPECT_EQ(cell_dimension(relabel(d, Relabeling::cyclic_shift(7, s))), dim);
  }
}

}  // namespace
