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

#ifndef POSITROID_CELLS_HPP
#define POSITROID_CELLS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "positroid/core_sets.hpp"
#include "positroid/dep_graph.hpp"
#include "positroid/enumeration.hpp"
#include "positroid/le_necklace.hpp"

namespace positroid {

/// Cell dimension n - |T_D| + c(D) - 4, or nullopt when D is nice but has
/// rank below 2 (c(D) <= 1). Does not check niceness.
inline std::optional<int> cell_dimension(const DepSet& d) {
  const int c = component_count(d);
  if (c <= 1) return std::nullopt;
  return d.n() - static_cast<int>(loops(d).size()) + c - 4;
}

inline int dimension(const DepSet& d) {
  if (!is_nice(d)) throw error(errc::not_nice, "dimension is defined for nice sets");
  const std::optional<int> dim = cell_dimension(d);
  if (!dim) throw error(errc::rank_deficient, "fewer than two components: the bases set has rank < 2");
  return *dim;
}

/// A nice set with its cached decomposition.
struct PositroidCell {
  DepSet dep;
  std::optional<int> dim;
  VertexSet loops;
  std::vector<VertexSet> components;

  bool degenerate() const noexcept { return !dim.has_value(); }
};

inline PositroidCell make_cell(const DepSet& d) {
  if (!is_nice(d)) throw error(errc::not_nice, "cells are indexed by nice sets");
  const DecomposedGraph g = build_graph(d);
  return PositroidCell{d, cell_dimension(d), g.graph.vanishing, g.parts.components};
}

/// Boundary cells of a fixed codimension; members whose rank collapses
/// (the empty positroid) are listed separately.
struct BoundaryResult {
  std::vector<DepSet> cells;
  std::vector<DepSet> degenerate;
};

inline void require_nondegenerate_nice(const DepSet& d) {
  if (!is_nice(d)) throw error(errc::not_nice, "boundary requires a nice set");
  if (component_count(d) < 2) throw error(errc::rank_deficient, "boundary requires at least two components");
}

/// Codimension-one positroid boundary: merges of cyclically consecutive
/// components, and single vertices of non-singleton components sent to the
/// vanishing set.
inline BoundaryResult boundary_codim1(const DepSet& d) {
  require_nondegenerate_nice(d);
  const int dim = dimension(d);
  const DecomposedGraph g = build_graph(d);
  const std::vector<VertexSet>& comps = g.parts.components;
  const std::size_t m = comps.size();
  std::vector<DepSet> candidates;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    if (j == i || (m == 2 && i == 1)) continue;
    candidates.push_back(connect(d, comps[i], comps[j]));
  }
  for (const VertexSet& comp : comps)
    if (comp.size() > 1)
      for (Element v : comp) candidates.push_back(closure(add_vanishing(d, {v})));

  BoundaryResult out;
  for (DepSet& f : candidates) {
    POSITROID_CHECK(is_nice(f), "boundary member is not nice");
    POSITROID_CHECK(is_subset(d, f) && f != d, "boundary member does not strictly contain the cell");
    const std::optional<int> fdim = cell_dimension(f);
    if (!fdim) {
      out.degenerate.push_back(std::move(f));
    } else {
      POSITROID_CHECK(*fdim == dim - 1, "boundary member has the wrong dimension");
      out.cells.push_back(std::move(f));
    }
  }
  canonical_sort(out.cells);
  canonical_sort(out.degenerate);
  return out;
}

/// k-fold iterated codimension-one boundary, deduplicated per level.
/// Degenerate members met at any level are collected but not expanded.
inline BoundaryResult boundary_codimk(const DepSet& d, int k) {
  if (k < 1) throw error(errc::invalid_argument, "codimension must be positive");
  require_nondegenerate_nice(d);
  std::vector<DepSet> level{d};
  std::set<DepSet> degenerate;
  for (int step = 0; step < k; ++step) {
    std::set<DepSet> next;
    for (const DepSet& f : level) {
      BoundaryResult b = boundary_codim1(f);
      next.insert(b.cells.begin(), b.cells.end());
      degenerate.insert(b.degenerate.begin(), b.degenerate.end());
    }
    level.assign(next.begin(), next.end());
  }
  return BoundaryResult{std::move(level), {degenerate.begin(), degenerate.end()}};
}

/// Maximal positroids in the common boundary of the cells of nice sets:
/// the maximal matroids above their union.
inline std::vector<DepSet> intersection_mpos(const std::vector<DepSet>& sets) {
  if (sets.empty()) throw error(errc::invalid_argument, "intersection of no cells");
  DepSet all(sets.front().n());
  for (const DepSet& s : sets) {
    if (!is_nice(s)) throw error(errc::not_nice, "intersection inputs must be nice");
    all = set_union(all, s);
  }
  std::vector<DepSet> out = mat_maximal(all);
  for (const DepSet& f : out) POSITROID_CHECK(is_nice(f), "intersection member is not nice");
  POSITROID_CHECK(out == mpos(all), "maximal matroids differ from maximal positroids on a union of nice sets");
  return out;
}

/// Bases replaced by their complements in [n]; rank becomes n - k.
inline BasesSet dualize(const BasesSet& b) {
  if (b.bases.empty()) throw error(errc::empty_bases, "dual of an empty bases set");
  std::vector<VertexSet> out;
  out.reserve(b.bases.size());
  for (const VertexSet& s : b.bases) {
    VertexSet c;
    for (Element e = 1; e <= b.n; ++e)
      if (!std::binary_search(s.begin(), s.end(), e)) c.push_back(e);
    out.push_back(std::move(c));
  }
  return make_bases(b.n, b.n - b.k, std::move(out));
}

/// Boundary poset below a cell down to `max_codim`: nodes are cells, arcs
/// are codimension-one relations.
struct BoundaryPoset {
  std::vector<std::vector<DepSet>> levels;  // levels[c] = cells of codimension c
  std::vector<std::pair<DepSet, DepSet>> covers;
};

inline BoundaryPoset boundary_poset(const DepSet& d, int max_codim) {
  require_nondegenerate_nice(d);
  BoundaryPoset poset;
  poset.levels.push_back({d});
  for (int c = 0; c < max_codim; ++c) {
    std::set<DepSet> next;
    for (const DepSet& f : poset.levels.back()) {
      for (const DepSet& g : boundary_codim1(f).cells) {
        poset.covers.emplace_back(f, g);
        next.insert(g);
      }
    }
    if (next.empty()) break;
    poset.levels.emplace_back(next.begin(), next.end());
  }
  return poset;
}

inline std::string depset_label(const DepSet& d) {
  std::ostringstream os;
  os << "{";
  const char* sep = d.n() < 10 ? "" : "-";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d.pairs()[i].lo << sep << d.pairs()[i].hi;
  os << "}";
  return os.str();
}

inline std::string poset_dot(const BoundaryPoset& poset) {
  std::map<DepSet, int> id;
  std::ostringstream os;
  os << "digraph Boundary {\n  rankdir=TB;\n";
  for (std::size_t c = 0; c < poset.levels.size(); ++c)
    for (const DepSet& f : poset.levels[c]) {
      const int node = static_cast<int>(id.size());
      id[f] = node;
      os << "  c" << node << " [label=\"" << depset_label(f) << "\\ndim " << *cell_dimension(f) << "\"];\n";
    }
  for (const auto& [hi, lo] : poset.covers) os << "  c" << id.at(hi) << " -> c" << id.at(lo) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace positroid

#endif  // POSITROID_CELLS_HPP
