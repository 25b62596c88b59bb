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

#ifndef POSITROID_DEP_GRAPH_HPP
#define POSITROID_DEP_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "positroid/core_sets.hpp"

namespace positroid {

/// Practical bound on n for operations that enumerate vertex subsets.
inline constexpr int kEnumerationLimit = 14;

/// G_D: the simple graph on [n] \ T_D whose edges are the dependent pairs
/// between non-loops.
struct DepGraph {
  int n = 0;
  VertexSet vanishing;
  std::map<Element, VertexSet> adjacency;

  VertexSet vertices() const {
    VertexSet out;
    out.reserve(adjacency.size());
    for (const auto& [v, _] : adjacency) out.push_back(v);
    return out;
  }

  std::vector<Pair> edges() const {
    std::vector<Pair> out;
    for (const auto& [v, nbrs] : adjacency)
      for (Element w : nbrs)
        if (v < w) out.push_back({v, w});
    return out;
  }
};

struct ComponentDecomposition {
  std::vector<VertexSet> components;
  std::vector<bool> is_complete;
  std::vector<bool> is_cyclic_interval;

  std::size_t count() const noexcept { return components.size(); }
};

struct DecomposedGraph {
  DepGraph graph;
  ComponentDecomposition parts;
};

/// Cyclic-interval pieces of the polygon P_{n,T} relative to a component C.
/// outside[i] follows inside[i] when walking the polygon forward.
struct SplitData {
  std::vector<VertexSet> outside;
  std::vector<VertexSet> inside;
  bool covers_all = false;

  bool polygon_connected() const noexcept { return outside.size() <= 1; }
};

namespace detail {

/// Number of maximal cyclic runs of members of `subset` along `ring`.
/// Returns 0 when every ring vertex is a member.
inline int cyclic_runs(const VertexSet& ring, const std::vector<bool>& member) {
  const std::size_t m = ring.size();
  int runs = 0;
  for (std::size_t p = 0; p < m; ++p)
    if (member[ring[p]] && !member[ring[(p + m - 1) % m]]) ++runs;
  return runs;
}

/// Connectivity of the polygon on `ring` after deleting the members, by BFS
/// along polygon edges.
inline bool polygon_minus_connected(const VertexSet& ring, const std::vector<bool>& removed) {
  const std::size_t m = ring.size();
  std::vector<std::size_t> left;
  for (std::size_t p = 0; p < m; ++p)
    if (!removed[ring[p]]) left.push_back(p);
  if (left.size() <= 1) return true;
  std::vector<bool> seen(m, false);
  std::queue<std::size_t> frontier;
  frontier.push(left.front());
  seen[left.front()] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const std::size_t p = frontier.front();
    frontier.pop();
    for (std::size_t q : {(p + 1) % m, (p + m - 1) % m}) {
      if (seen[q] || removed[ring[q]]) continue;
      seen[q] = true;
      ++reached;
      frontier.push(q);
    }
  }
  return reached == left.size();
}

inline std::vector<bool> member_mask(int n, const VertexSet& set) {
  std::vector<bool> mask(n + 1, false);
  for (Element v : set) mask[v] = true;
  return mask;
}

}  // namespace detail

inline DecomposedGraph build_graph(const DepSet& d) {
  DecomposedGraph out;
  out.graph.n = d.n();
  out.graph.vanishing = loops(d);
  const VertexSet ring = non_loops(d);
  for (Element v : ring) out.graph.adjacency[v];
  const std::vector<bool> is_loop = detail::member_mask(d.n(), out.graph.vanishing);
  for (const Pair& p : d.pairs()) {
    if (is_loop[p.lo] || is_loop[p.hi]) continue;
    out.graph.adjacency[p.lo].push_back(p.hi);
    out.graph.adjacency[p.hi].push_back(p.lo);
  }
  for (auto& [_, nbrs] : out.graph.adjacency) std::sort(nbrs.begin(), nbrs.end());

  out.parts.components = detail::components_of(d, ring);
  for (const VertexSet& comp : out.parts.components) {
    bool complete = true;
    for (Element v : comp)
      if (out.graph.adjacency[v].size() != comp.size() - 1) complete = false;
    out.parts.is_complete.push_back(complete);
    const int runs = detail::cyclic_runs(ring, detail::member_mask(d.n(), comp));
    out.parts.is_cyclic_interval.push_back(runs <= 1);
  }
  return out;
}

/// c(D).
inline int component_count(const DepSet& d) {
  return static_cast<int>(detail::components_of(d, non_loops(d)).size());
}

inline bool is_matroid(const DepSet& d) {
  const DecomposedGraph g = build_graph(d);
  return std::all_of(g.parts.is_complete.begin(), g.parts.is_complete.end(), [](bool b) { return b; });
}

inline bool is_nice(const DepSet& d) {
  const DecomposedGraph g = build_graph(d);
  const VertexSet ring = g.graph.vertices();
  bool complete = true;
  bool intervals = true;
  bool polygon = true;
  for (std::size_t c = 0; c < g.parts.count(); ++c) {
    complete = complete && g.parts.is_complete[c];
    intervals = intervals && g.parts.is_cyclic_interval[c];
    polygon = polygon &&
              detail::polygon_minus_connected(ring, detail::member_mask(d.n(), g.parts.components[c]));
  }
  POSITROID_CHECK(intervals == polygon, "interval test and polygon test disagree");
  return complete && intervals;
}

/// Splits the polygon P_{n,T_D} at component C. The walk starts at the
/// smallest vertex of C whose polygon predecessor is outside C.
inline SplitData split(const DepSet& d, const VertexSet& component) {
  const DecomposedGraph g = build_graph(d);
  VertexSet sorted = component;
  std::sort(sorted.begin(), sorted.end());
  if (std::find(g.parts.components.begin(), g.parts.components.end(), sorted) == g.parts.components.end())
    throw error(errc::not_a_component, "vertex set is not a component of G_D");

  const VertexSet ring = g.graph.vertices();
  const std::size_t m = ring.size();
  const std::vector<bool> in_c = detail::member_mask(d.n(), sorted);
  SplitData out;
  if (sorted.size() == m) {
    out.covers_all = true;
    out.inside.push_back(sorted);
    return out;
  }
  std::size_t start = 0;
  while (!(in_c[ring[start]] && !in_c[ring[(start + m - 1) % m]])) ++start;

  VertexSet run;
  bool run_inside = true;
  auto flush = [&] {
    std::sort(run.begin(), run.end());
    (run_inside ? out.inside : out.outside).push_back(std::move(run));
    run.clear();
  };
  for (std::size_t step = 0; step < m; ++step) {
    const Element v = ring[(start + step) % m];
    if (in_c[v] != run_inside) {
      flush();
      run_inside = in_c[v];
    }
    run.push_back(v);
  }
  flush();
  POSITROID_CHECK(out.inside.size() == out.outside.size(), "split produced unbalanced intervals");
  POSITROID_CHECK(out.polygon_connected() == detail::polygon_minus_connected(ring, in_c),
                  "split disagrees with polygon connectivity");
  return out;
}

/// The family of vertex sets T (T ⊆ [n] \ T_D) such that removing any one
/// element of T from the vanishing set strictly lowers c(D + T). Every
/// subset is examined; results are ordered by size, then lexicographically.
inline std::vector<VertexSet> t_family(const DepSet& d) {
  if (d.n() > kEnumerationLimit)
    throw error(errc::size_limit, "t_family supports n <= " + std::to_string(kEnumerationLimit));
  const VertexSet free = non_loops(d);
  const std::size_t m = free.size();
  const std::uint32_t total = std::uint32_t{1} << m;
  auto members = [&](std::uint32_t mask) {
    VertexSet t;
    for (std::size_t b = 0; b < m; ++b)
      if (mask & (std::uint32_t{1} << b)) t.push_back(free[b]);
    return t;
  };
  std::vector<int> count(total);
  for (std::uint32_t mask = 0; mask < total; ++mask) count[mask] = component_count(add_vanishing(d, members(mask)));

  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    bool cut_points = true;
    for (std::size_t b = 0; b < m && cut_points; ++b) {
      const std::uint32_t bit = std::uint32_t{1} << b;
      if ((mask & bit) && count[mask] <= count[mask ^ bit]) cut_points = false;
    }
    if (cut_points) out.push_back(members(mask));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// DOT rendering of G_D: solid edges for dependent pairs, the polygon
/// P_{n,T_D} dashed, loops omitted.
inline std::string to_dot(const DepSet& d) {
  const DecomposedGraph g = build_graph(d);
  const VertexSet ring = g.graph.vertices();
  std::ostringstream os;
  os << "graph G {\n";
  os << "  layout=circo;\n";
  for (Element v : ring) os << "  " << v << " [label=\"" << v << "\"];\n";
  if (ring.size() >= 2) {
    const std::size_t m = ring.size();
    const std::size_t sides = m == 2 ? 1 : m;
    for (std::size_t p = 0; p < sides; ++p)
      os << "  " << ring[p] << " -- " << ring[(p + 1) % m] << " [style=dashed];\n";
  }
  for (const Pair& e : g.graph.edges()) os << "  " << e.lo << " -- " << e.hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace positroid

#endif  // POSITROID_DEP_GRAPH_HPP
