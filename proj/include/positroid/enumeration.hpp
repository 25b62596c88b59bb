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

#ifndef POSITROID_ENUMERATION_HPP
#define POSITROID_ENUMERATION_HPP

#include <algorithm>
#include <set>
#include <thread>
#include <vector>

#include "positroid/core_sets.hpp"
#include "positroid/dep_graph.hpp"

namespace positroid {

/// Keeps only the inclusion-minimal dependent sets (= maximal bases
/// families). Input order is irrelevant; output is canonical.
inline std::vector<DepSet> minimal_elements(std::vector<DepSet> sets) {
  canonical_sort(sets);
  std::vector<DepSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < sets.size() && minimal; ++j)
      if (i != j && sets[j].size() < sets[i].size() && is_subset(sets[j], sets[i])) minimal = false;
    if (minimal) out.push_back(sets[i]);
  }
  return out;
}

/// Maximal matroids inside D^c: the inclusion-minimal sets among
/// closure(D + T) for T in the t-family.
inline std::vector<DepSet> mat_maximal(const DepSet& d) {
  std::vector<DepSet> candidates;
  for (const VertexSet& t : t_family(d)) candidates.push_back(closure(add_vanishing(d, t)));
  std::vector<DepSet> out = minimal_elements(std::move(candidates));
  for (const DepSet& m : out) POSITROID_CHECK(is_matroid(m), "closure is not a matroid dependent set");
  return out;
}

namespace detail {

/// Children of a non-nice matroid dependent set F: for every component C
/// whose removal disconnects the polygon, connect C to each outside
/// interval, or send each inside interval to the vanishing set.
inline std::vector<DepSet> expand(const DepSet& f, bool& nice) {
  const DecomposedGraph g = build_graph(f);
  std::vector<DepSet> children;
  nice = true;
  for (const VertexSet& comp : g.parts.components) {
    const SplitData s = split(f, comp);
    if (s.polygon_connected()) continue;
    nice = false;
    for (const VertexSet& d_i : s.outside) children.push_back(connect(f, comp, d_i));
    for (const VertexSet& f_i : s.inside) children.push_back(closure(add_vanishing(f, f_i)));
  }
  for (const DepSet& child : children)
    POSITROID_CHECK(child.size() > f.size() && is_subset(f, child), "worklist child does not strictly grow");
  return children;
}

}  // namespace detail

/// Worklist search from a matroid dependent set D. Returns every nice set
/// reached (the family Pos(D)), canonically sorted. `jobs` > 1 expands each
/// frontier level on that many threads; the output does not depend on it.
inline std::vector<DepSet> pos_enumerate(const DepSet& d, unsigned jobs = 1) {
  if (!is_matroid(d)) throw error(errc::not_a_matroid, "pos_enumerate requires complete components");
  std::set<DepSet> visited{d};
  std::vector<DepSet> frontier{d};
  std::vector<DepSet> emitted;
  while (!frontier.empty()) {
    std::vector<std::vector<DepSet>> children(frontier.size());
    std::vector<char> nice(frontier.size(), 0);
    auto work = [&](std::size_t begin, std::size_t stride) {
      for (std::size_t i = begin; i < frontier.size(); i += stride) {
        bool is_nice_set = false;
        children[i] = detail::expand(frontier[i], is_nice_set);
        nice[i] = is_nice_set ? 1 : 0;
      }
    };
    const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), frontier.size());
    if (workers <= 1) {
      work(0, 1);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    }
    std::vector<DepSet> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      if (nice[i]) emitted.push_back(frontier[i]);
      for (DepSet& child : children[i])
        if (visited.insert(child).second) next.push_back(std::move(child));
    }
    frontier = std::move(next);
  }
  canonical_sort(emitted);
  return emitted;
}

/// Maximal positroids contained in D^c, as their (inclusion-minimal)
/// dependent sets. D need not be a matroid.
inline std::vector<DepSet> mpos(const DepSet& d, unsigned jobs = 1) {
  std::vector<DepSet> all;
  for (const VertexSet& t : t_family(d)) {
    std::vector<DepSet> part = pos_enumerate(closure(add_vanishing(d, t)), jobs);
    all.insert(all.end(), part.begin(), part.end());
  }
  return minimal_elements(std::move(all));
}

/// D ⊆ F for matroid dependent sets, decided from loops and components.
inline bool includes(const DepSet& d, const DepSet& f) {
  if (d.n() != f.n()) throw error(errc::dimension_mismatch, "ground sets differ");
  if (!is_matroid(d) || !is_matroid(f)) throw error(errc::not_a_matroid, "includes requires matroid dependent sets");
  const DecomposedGraph gd = build_graph(d);
  const DecomposedGraph gf = build_graph(f);
  const VertexSet& loops_f = gf.graph.vanishing;
  bool result = std::includes(loops_f.begin(), loops_f.end(), gd.graph.vanishing.begin(), gd.graph.vanishing.end());
  std::vector<int> component_of(f.n() + 1, -1);
  for (std::size_t c = 0; c < gf.parts.count(); ++c)
    for (Element v : gf.parts.components[c]) component_of[v] = static_cast<int>(c);
  for (const VertexSet& comp : gd.parts.components) {
    if (!result) break;
    int target = -1;
    for (Element v : comp) {
      if (component_of[v] < 0) continue;  // v is a loop of F
      if (target < 0) target = component_of[v];
      if (component_of[v] != target) result = false;
    }
  }
  POSITROID_CHECK(result == is_subset(d, f), "component inclusion test disagrees with pair inclusion");
  return result;
}

/// A relabeling under which the matroid D becomes nice: components listed
/// consecutively by smallest member, loops last.
inline Relabeling positroid_order(const DepSet& d) {
  const DecomposedGraph g = build_graph(d);
  if (!std::all_of(g.parts.is_complete.begin(), g.parts.is_complete.end(), [](bool b) { return b; }))
    throw error(errc::not_a_matroid, "positroid_order requires complete components");
  std::vector<Element> order;
  for (const VertexSet& comp : g.parts.components) order.insert(order.end(), comp.begin(), comp.end());
  order.insert(order.end(), g.graph.vanishing.begin(), g.graph.vanishing.end());
  Relabeling r = Relabeling::from_order(order);
  POSITROID_CHECK(is_nice(relabel(d, r)), "component order did not produce a nice set");
  return r;
}

}  // namespace positroid

#endif  // POSITROID_ENUMERATION_HPP
