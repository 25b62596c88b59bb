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

#ifndef POSITROID_CORE_SETS_HPP
#define POSITROID_CORE_SETS_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "positroid/error.hpp"

namespace positroid {

/// Elements of the ground set [n] are 1-indexed.
using Element = int;

/// Sorted, duplicate-free list of elements.
using VertexSet = std::vector<Element>;

/// The cyclically ordered ground set [n] = {1, ..., n}.
class GroundSet {
 public:
  constexpr GroundSet() = default;
  constexpr explicit GroundSet(int n) : n_(n) {
    if (n < 0) throw error(errc::out_of_range, "ground set size must be non-negative");
  }

  constexpr int size() const noexcept { return n_; }
  constexpr bool contains(Element e) const noexcept { return e >= 1 && e <= n_; }
  constexpr Element successor(Element e) const noexcept { return e == n_ ? 1 : e + 1; }

  /// Position of e in the shifted order start < start+1 < ... < start-1.
  constexpr int shifted_rank(Element e, Element start) const noexcept {
    return ((e - start) % n_ + n_) % n_;
  }

  friend constexpr bool operator==(GroundSet, GroundSet) = default;

 private:
  int n_ = 0;
};

/// Unordered 2-subset {lo, hi} stored with lo < hi.
struct Pair {
  Element lo = 0;
  Element hi = 0;

  friend constexpr auto operator<=>(const Pair&, const Pair&) = default;
};

constexpr std::size_t pair_count(int n) noexcept {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// A collection of dependent 2-subsets of [n] in canonical form: pairs sorted
/// lexicographically, no duplicates, every pair inside [n].
class DepSet {
 public:
  DepSet() = default;
  explicit DepSet(int n) : n_(n) {
    if (n < 0) throw error(errc::out_of_range, "ground set size must be non-negative");
  }

  int n() const noexcept { return n_; }
  GroundSet ground() const noexcept { return GroundSet(n_); }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  bool contains(Element i, Element j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(pairs_.begin(), pairs_.end(), Pair{i, j});
  }
  bool contains(Pair p) const { return contains(p.lo, p.hi); }

  /// Builds from pairs that are already canonical. Callers inside the
  /// library use this after generating pairs in sorted order.
  static DepSet from_sorted(int n, std::vector<Pair> pairs) {
    DepSet d(n);
    d.pairs_ = std::move(pairs);
    return d;
  }

  friend auto operator<=>(const DepSet&, const DepSet&) = default;
  friend bool operator==(const DepSet&, const DepSet&) = default;

 private:
  int n_ = 0;
  std::vector<Pair> pairs_;
};

/// Dense symmetric 0/1 matrix over [n]; the working representation for
/// set-building operators.
class PairMatrix {
 public:
  explicit PairMatrix(int n) : n_(n), bits_(static_cast<std::size_t>(n) * n, 0) {}
  explicit PairMatrix(const DepSet& d) : PairMatrix(d.n()) {
    for (const Pair& p : d.pairs()) set(p.lo, p.hi);
  }

  int n() const noexcept { return n_; }
  bool test(Element i, Element j) const { return bits_[index(i, j)] != 0; }
  void set(Element i, Element j) {
    bits_[index(i, j)] = 1;
    bits_[index(j, i)] = 1;
  }

  int degree(Element i) const {
    int deg = 0;
    for (Element j = 1; j <= n_; ++j) deg += (j != i && test(i, j)) ? 1 : 0;
    return deg;
  }

  DepSet to_depset() const {
    std::vector<Pair> out;
    for (Element i = 1; i <= n_; ++i)
      for (Element j = i + 1; j <= n_; ++j)
        if (test(i, j)) out.push_back({i, j});
    return DepSet::from_sorted(n_, std::move(out));
  }

 private:
  std::size_t index(Element i, Element j) const {
    return static_cast<std::size_t>(i - 1) * n_ + static_cast<std::size_t>(j - 1);
  }

  int n_;
  std::vector<std::uint8_t> bits_;
};

/// A bijection [n] -> [n]; image(e) is the new label of element e.
class Relabeling {
 public:
  Relabeling() = default;
  explicit Relabeling(std::vector<Element> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    std::vector<bool> seen(n + 1, false);
    for (Element e : images_) {
      if (e < 1 || e > n || seen[e]) throw error(errc::invalid_argument, "relabeling is not a permutation");
      seen[e] = true;
    }
  }

  static Relabeling identity(int n) {
    std::vector<Element> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Relabeling(std::move(v));
  }

  /// e -> e + s (mod n).
  static Relabeling cyclic_shift(int n, int s) {
    std::vector<Element> v(n);
    for (int i = 0; i < n; ++i) v[i] = ((i + s) % n + n) % n + 1;
    return Relabeling(std::move(v));
  }

  /// order lists the elements in their new order: order[p] receives label p+1.
  static Relabeling from_order(std::span<const Element> order) {
    const int n = static_cast<int>(order.size());
    std::vector<Element> v(n, 0);
    for (int p = 0; p < n; ++p) {
      if (order[p] < 1 || order[p] > n) throw error(errc::invalid_argument, "order entry outside [n]");
      v[order[p] - 1] = p + 1;
    }
    return Relabeling(std::move(v));
  }

  int n() const noexcept { return static_cast<int>(images_.size()); }
  Element operator()(Element e) const { return images_.at(e - 1); }
  const std::vector<Element>& images() const noexcept { return images_; }

  Relabeling inverse() const {
    std::vector<Element> v(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) v[images_[i] - 1] = static_cast<Element>(i + 1);
    return Relabeling(std::move(v));
  }

  /// Elements listed by their new label.
  std::vector<Element> order() const { return inverse().images_; }

  /// (this o other)(e) = this(other(e)).
  Relabeling compose(const Relabeling& other) const {
    std::vector<Element> v(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) v[i] = (*this)(other.images_[i]);
    return Relabeling(std::move(v));
  }

  friend bool operator==(const Relabeling&, const Relabeling&) = default;

 private:
  std::vector<Element> images_;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

inline DepSet canonicalize(std::span<const std::array<int, 2>> raw, int n) {
  if (n < 0) throw error(errc::out_of_range, "ground set size must be non-negative");
  std::vector<Pair> pairs;
  pairs.reserve(raw.size());
  for (const auto& [a, b] : raw) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw error(errc::out_of_range,
                  "pair {" + std::to_string(a) + "," + std::to_string(b) + "} outside [" + std::to_string(n) + "]");
    if (a == b) throw error(errc::degenerate_pair, "pair {" + std::to_string(a) + "," + std::to_string(a) + "}");
    pairs.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return DepSet::from_sorted(n, std::move(pairs));
}

inline DepSet canonicalize(std::initializer_list<std::array<int, 2>> raw, int n) {
  return canonicalize(std::span<const std::array<int, 2>>(raw.begin(), raw.size()), n);
}

/// All of C(n, 2).
inline DepSet full_set(int n) {
  std::vector<Pair> out;
  out.reserve(pair_count(n));
  for (Element i = 1; i <= n; ++i)
    for (Element j = i + 1; j <= n; ++j) out.push_back({i, j});
  return DepSet::from_sorted(n, std::move(out));
}

/// T_D: elements paired with every other element.
inline VertexSet loops(const DepSet& d) {
  std::vector<int> degree(d.n() + 1, 0);
  for (const Pair& p : d.pairs()) {
    ++degree[p.lo];
    ++degree[p.hi];
  }
  VertexSet out;
  for (Element i = 1; i <= d.n(); ++i)
    if (degree[i] == d.n() - 1) out.push_back(i);
  return out;
}

/// Elements of [n] that are not loops, ascending.
inline VertexSet non_loops(const DepSet& d) {
  const VertexSet l = loops(d);
  VertexSet out;
  for (Element i = 1; i <= d.n(); ++i)
    if (!std::binary_search(l.begin(), l.end(), i)) out.push_back(i);
  return out;
}

inline DepSet complement(const DepSet& d) {
  std::vector<Pair> out;
  out.reserve(pair_count(d.n()) - d.size());
  auto it = d.pairs().begin();
  for (Element i = 1; i <= d.n(); ++i)
    for (Element j = i + 1; j <= d.n(); ++j) {
      const Pair p{i, j};
      if (it != d.pairs().end() && *it == p) {
        ++it;
      } else {
        out.push_back(p);
      }
    }
  return DepSet::from_sorted(d.n(), std::move(out));
}

inline bool is_subset(const DepSet& sub, const DepSet& super) {
  return sub.n() == super.n() &&
         std::includes(super.pairs().begin(), super.pairs().end(), sub.pairs().begin(), sub.pairs().end());
}

inline DepSet set_union(const DepSet& a, const DepSet& b) {
  if (a.n() != b.n()) throw error(errc::dimension_mismatch, "union of sets on different ground sets");
  std::vector<Pair> out;
  std::set_union(a.pairs().begin(), a.pairs().end(), b.pairs().begin(), b.pairs().end(), std::back_inserter(out));
  return DepSet::from_sorted(a.n(), std::move(out));
}

namespace detail {

inline void check_elements(const DepSet& d, std::span<const Element> set, const char* what) {
  for (Element e : set)
    if (e < 1 || e > d.n())
      throw error(errc::out_of_range, std::string(what) + " element " + std::to_string(e) + " outside [" +
                                          std::to_string(d.n()) + "]");
}

/// Union-find over [n], used for component extraction.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n + 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

/// Connected components of G_D, each sorted, ordered by smallest member.
inline std::vector<VertexSet> components_of(const DepSet& d, const VertexSet& vertices) {
  std::vector<bool> active(d.n() + 1, false);
  for (Element v : vertices) active[v] = true;
  DisjointSets sets(d.n());
  for (const Pair& p : d.pairs())
    if (active[p.lo] && active[p.hi]) sets.unite(p.lo, p.hi);
  std::vector<VertexSet> by_root(d.n() + 1);
  for (Element v : vertices) by_root[sets.find(v)].push_back(v);
  std::vector<VertexSet> out;
  for (Element v : vertices)
    if (sets.find(v) == v) out.push_back(std::move(by_root[v]));
  return out;
}

}  // namespace detail

/// D + T: every element of T becomes a loop.
inline DepSet add_vanishing(const DepSet& d, std::span<const Element> t) {
  detail::check_elements(d, t, "vanishing set");
  if (t.empty()) return d;
  PairMatrix m(d);
  for (Element i : t)
    for (Element j = 1; j <= d.n(); ++j)
      if (j != i) m.set(i, j);
  return m.to_depset();
}

inline DepSet add_vanishing(const DepSet& d, std::initializer_list<Element> t) {
  return add_vanishing(d, std::span<const Element>(t.begin(), t.size()));
}

/// Completes every connected component of G_D; repeated until no pair is
/// added (a completion can turn vertices into loops).
inline DepSet closure(const DepSet& d) {
  DepSet current = d;
  while (true) {
    const VertexSet free = non_loops(current);
    PairMatrix m(current);
    bool changed = false;
    for (const VertexSet& comp : detail::components_of(current, free))
      for (std::size_t a = 0; a < comp.size(); ++a)
        for (std::size_t b = a + 1; b < comp.size(); ++b)
          if (!m.test(comp[a], comp[b])) {
            m.set(comp[a], comp[b]);
            changed = true;
          }
    if (!changed) return current;
    current = m.to_depset();
  }
}

/// closure(D ∪ {{i,j} : i in A, j in B}).
inline DepSet connect(const DepSet& d, std::span<const Element> a, std::span<const Element> b) {
  detail::check_elements(d, a, "connect");
  detail::check_elements(d, b, "connect");
  if (a.empty() || b.empty()) throw error(errc::invalid_argument, "connect requires nonempty vertex sets");
  for (Element x : a)
    if (std::find(b.begin(), b.end(), x) != b.end())
      throw error(errc::overlap, "vertex " + std::to_string(x) + " appears on both sides");
  const VertexSet l = loops(d);
  for (auto side : {a, b})
    for (Element x : side)
      if (std::binary_search(l.begin(), l.end(), x))
        throw error(errc::invalid_argument, "connect endpoint " + std::to_string(x) + " is a loop");
  PairMatrix m(d);
  for (Element x : a)
    for (Element y : b) m.set(x, y);
  return closure(m.to_depset());
}

inline DepSet connect(const DepSet& d, std::initializer_list<Element> a, std::initializer_list<Element> b) {
  return connect(d, std::span<const Element>(a.begin(), a.size()), std::span<const Element>(b.begin(), b.size()));
}

inline DepSet relabel(const DepSet& d, const Relabeling& r) {
  if (r.n() != d.n()) throw error(errc::dimension_mismatch, "relabeling size differs from ground set");
  std::vector<Pair> out;
  out.reserve(d.size());
  for (const Pair& p : d.pairs()) {
    const Element a = r(p.lo);
    const Element b = r(p.hi);
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(out.begin(), out.end());
  return DepSet::from_sorted(d.n(), std::move(out));
}

/// Sorts and deduplicates a list of dependent sets into canonical order.
inline void canonical_sort(std::vector<DepSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

}  // namespace positroid

#endif  // POSITROID_CORE_SETS_HPP
