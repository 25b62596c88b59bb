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

#ifndef POSITROID_REALIZE_HPP
#define POSITROID_REALIZE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "positroid/core_sets.hpp"
#include "positroid/dep_graph.hpp"
#include "positroid/le_necklace.hpp"

namespace positroid {

/// Exact rational, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

/// Accepts "p/q" or "p".
inline Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(text));
    const boost::multiprecision::cpp_int num(text.substr(0, slash));
    const boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw error(errc::parse_error, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const error*>(&e)) throw;
    throw error(errc::parse_error, "malformed rational '" + text + "'");
  }
}

/// A 2 x n matrix given by its columns.
struct WitnessMatrix {
  int n = 0;
  std::vector<std::array<Rational, 2>> columns;

  /// det of columns (i, j), 1-indexed.
  Rational minor(Element i, Element j) const {
    const auto& a = columns.at(i - 1);
    const auto& b = columns.at(j - 1);
    return a[0] * b[1] - a[1] * b[0];
  }

  friend bool operator==(const WitnessMatrix&, const WitnessMatrix&) = default;
};

/// Minors vanish exactly on D and are strictly positive elsewhere.
inline bool verify_witness(const WitnessMatrix& m, const DepSet& d) {
  if (m.n != d.n() || static_cast<int>(m.columns.size()) != d.n())
    throw error(errc::dimension_mismatch, "witness has " + std::to_string(m.columns.size()) + " columns, ground set has " +
                                              std::to_string(d.n()));
  for (Element i = 1; i <= d.n(); ++i)
    for (Element j = i + 1; j <= d.n(); ++j) {
      const Rational det = m.minor(i, j);
      if (d.contains(i, j) ? det != 0 : det <= 0) return false;
    }
  return true;
}

/// Totally nonnegative witness for a nice set: loops get zero columns; in a
/// cyclic shift where no component wraps, component number t gets column
/// (1, t); columns moved past position n are negated on the way back.
inline WitnessMatrix realize_nice(const DepSet& d) {
  if (!is_nice(d)) throw error(errc::not_nice, "only nice sets have nonnegative witnesses");
  const DecomposedGraph g = build_graph(d);
  if (g.parts.count() < 2) throw error(errc::rank_deficient, "fewer than two components");
  const int n = d.n();
  std::vector<int> component_of(n + 1, -1);
  for (std::size_t c = 0; c < g.parts.count(); ++c)
    for (Element v : g.parts.components[c]) component_of[v] = static_cast<int>(c);

  // Smallest shift s such that the first and last non-loops of the order
  // s+1, ..., n, 1, ..., s fall in different components.
  const VertexSet ring = g.graph.vertices();
  auto rotated = [&](int s) {
    VertexSet seq;
    for (Element v : ring)
      if (v > s) seq.push_back(v);
    for (Element v : ring)
      if (v <= s) seq.push_back(v);
    return seq;
  };
  int shift = 0;
  while (true) {
    const VertexSet seq = rotated(shift);
    if (component_of[seq.front()] != component_of[seq.back()]) break;
    ++shift;
    POSITROID_CHECK(shift < n, "no cyclic shift separates the components");
  }

  WitnessMatrix m{n, std::vector<std::array<Rational, 2>>(n, {Rational(0), Rational(0)})};
  int rank = -1;
  int last_component = -1;
  for (Element v : rotated(shift)) {
    if (component_of[v] != last_component) {
      ++rank;
      last_component = component_of[v];
    }
    const Rational sign = v <= shift ? Rational(-1) : Rational(1);
    m.columns[v - 1] = {sign, sign * rank};
  }
  POSITROID_CHECK(verify_witness(m, d), "constructed witness fails verification");
  return m;
}

/// Exchange axiom by exhaustion: for all B1, B2 and b1 in B1 \ B2 there is
/// b2 in B2 \ B1 with B1 - b1 + b2 a basis. Empty families are rejected.
inline bool brute_matroid_check(const BasesSet& b) {
  if (b.bases.empty()) return false;
  const std::set<VertexSet> family(b.bases.begin(), b.bases.end());
  for (const VertexSet& b1 : b.bases)
    for (const VertexSet& b2 : b.bases)
      for (Element x : b1) {
        if (std::binary_search(b2.begin(), b2.end(), x)) continue;
        bool found = false;
        for (Element y : b2) {
          if (std::binary_search(b1.begin(), b1.end(), y)) continue;
          VertexSet swapped;
          for (Element e : b1)
            if (e != x) swapped.push_back(e);
          swapped.push_back(y);
          std::sort(swapped.begin(), swapped.end());
          if (family.count(swapped)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
  return true;
}

enum class CensusKind { matroids, nice };

inline constexpr int kCensusLimit = 9;
inline constexpr int kExhaustiveCensusLimit = 6;

namespace detail {

/// Calls fn with every set partition of `items` (restricted growth strings).
template <typename Fn>
void for_each_partition(const VertexSet& items, Fn&& fn) {
  const std::size_t m = items.size();
  std::vector<int> block(m, 0);
  while (true) {
    std::vector<VertexSet> parts;
    for (std::size_t i = 0; i < m; ++i) {
      if (block[i] >= static_cast<int>(parts.size())) parts.resize(block[i] + 1);
      parts[block[i]].push_back(items[i]);
    }
    fn(parts);
    // Advance to the next restricted growth string: bump the last position
    // that may still grow, reset everything after it.
    std::size_t i = m;
    bool advanced = false;
    while (i > 1 && !advanced) {
      --i;
      const int limit = *std::max_element(block.begin(), block.begin() + i) + 1;
      if (block[i] < limit) {
        ++block[i];
        std::fill(block.begin() + i + 1, block.end(), 0);
        advanced = true;
      }
    }
    if (!advanced) return;
  }
}

/// Partitions of a cyclically ordered ring into cyclic intervals: every
/// nonempty set of cut gaps, plus the one-block partition.
template <typename Fn>
void for_each_interval_partition(const VertexSet& ring, Fn&& fn) {
  const std::size_t m = ring.size();
  if (m == 0) {
    fn(std::vector<VertexSet>{});
    return;
  }
  fn(std::vector<VertexSet>{ring});
  // gap g sits between ring[g] and ring[(g+1) % m]
  for (std::uint32_t cuts = 1; cuts < (std::uint32_t{1} << m); ++cuts) {
    if (__builtin_popcount(cuts) == 1) continue;  // one cut leaves the ring whole
    std::size_t first = 0;
    while (!(cuts & (std::uint32_t{1} << first))) ++first;
    std::vector<VertexSet> parts;
    VertexSet run;
    for (std::size_t step = 1; step <= m; ++step) {
      const std::size_t p = (first + step) % m;
      run.push_back(ring[p]);
      if (cuts & (std::uint32_t{1} << p)) {
        std::sort(run.begin(), run.end());
        parts.push_back(std::move(run));
        run.clear();
      }
    }
    fn(parts);
  }
}

inline DepSet depset_of_graph(int n, const VertexSet& vanishing, const std::vector<VertexSet>& blocks) {
  PairMatrix m(n);
  for (Element t : vanishing)
    for (Element j = 1; j <= n; ++j)
      if (j != t) m.set(t, j);
  for (const VertexSet& b : blocks)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) m.set(b[i], b[j]);
  return m.to_depset();
}

}  // namespace detail

/// Every matroid (or nice) dependent set on [n], generated from a choice of
/// loops and a partition of the remaining elements into complete
/// components (cyclic intervals for nice sets). Sorted, deduplicated.
inline std::vector<DepSet> census(int n, CensusKind kind) {
  if (n < 0) throw error(errc::out_of_range, "negative ground set");
  if (n > kCensusLimit) throw error(errc::size_limit, "census supports n <= " + std::to_string(kCensusLimit));
  std::set<DepSet> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    VertexSet vanishing, rest;
    for (Element e = 1; e <= n; ++e) ((mask >> (e - 1)) & 1 ? vanishing : rest).push_back(e);
    auto emit = [&](const std::vector<VertexSet>& blocks) { out.insert(detail::depset_of_graph(n, vanishing, blocks)); };
    if (kind == CensusKind::matroids) {
      detail::for_each_partition(rest, emit);
    } else {
      detail::for_each_interval_partition(rest, emit);
    }
  }
  return {out.begin(), out.end()};
}

/// The same census by sweeping all 2^C(n,2) subsets and testing each with
/// the exchange axiom (matroids) and additionally the Le round trip (nice).
/// C(n,2), whose complement is empty, is included in both.
inline std::vector<DepSet> census_exhaustive(int n, CensusKind kind) {
  if (n < 0) throw error(errc::out_of_range, "negative ground set");
  if (n > kExhaustiveCensusLimit)
    throw error(errc::size_limit, "exhaustive census supports n <= " + std::to_string(kExhaustiveCensusLimit));
  const DepSet all = full_set(n);
  const std::size_t m = all.size();
  std::vector<DepSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Pair> pairs;
    for (std::size_t b = 0; b < m; ++b)
      if ((mask >> b) & 1) pairs.push_back(all.pairs()[b]);
    const DepSet d = DepSet::from_sorted(n, std::move(pairs));
    if (d.size() == m) {
      out.push_back(d);
      continue;
    }
    const BasesSet b = bases_of(d);
    if (!brute_matroid_check(b)) continue;
    if (kind == CensusKind::nice && !positroid_roundtrip_check(b)) continue;
    out.push_back(d);
  }
  canonical_sort(out);
  return out;
}

}  // namespace positroid

#endif  // POSITROID_REALIZE_HPP
