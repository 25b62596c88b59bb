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

#ifndef POSITROID_LE_NECKLACE_HPP
#define POSITROID_LE_NECKLACE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "positroid/core_sets.hpp"

namespace positroid {

/// A family of k-subsets of [n], each sorted, the family sorted and
/// duplicate-free.
struct BasesSet {
  int n = 0;
  int k = 0;
  std::vector<VertexSet> bases;

  friend bool operator==(const BasesSet&, const BasesSet&) = default;
};

inline BasesSet make_bases(int n, int k, std::vector<VertexSet> bases) {
  if (n < 0 || k < 0 || k > n) throw error(errc::out_of_range, "invalid (n, k) for bases set");
  for (VertexSet& b : bases) {
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
      throw error(errc::invalid_argument, "basis has repeated elements");
    if (static_cast<int>(b.size()) != k)
      throw error(errc::invalid_argument, "basis of size " + std::to_string(b.size()) + ", expected " +
                                              std::to_string(k));
    for (Element e : b)
      if (e < 1 || e > n) throw error(errc::out_of_range, "basis element " + std::to_string(e) + " outside [n]");
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return BasesSet{n, k, std::move(bases)};
}

/// Calls fn on every k-subset of [n] in lexicographic order.
inline void for_each_subset(int n, int k, const std::function<void(const VertexSet&)>& fn) {
  if (k < 0 || k > n) return;
  VertexSet s(k);
  for (int i = 0; i < k; ++i) s[i] = i + 1;
  while (true) {
    fn(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i + 1) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

/// Rank-2 bases from a dependent set: the complement, as 2-subsets.
inline BasesSet bases_of(const DepSet& d) {
  BasesSet out{d.n(), 2, {}};
  const DepSet independent = complement(d);
  for (const Pair& p : independent.pairs()) out.bases.push_back({p.lo, p.hi});
  return out;
}

/// Inverse of bases_of; requires k = 2.
inline DepSet dependents_of(const BasesSet& b) {
  if (b.k != 2) throw error(errc::invalid_argument, "dependent pairs are defined for rank 2 only");
  std::vector<Pair> pairs;
  for (const VertexSet& s : b.bases) pairs.push_back({s[0], s[1]});
  std::sort(pairs.begin(), pairs.end());
  return complement(DepSet::from_sorted(b.n, std::move(pairs)));
}

struct GrassmannNecklace {
  int n = 0;
  int k = 0;
  std::vector<VertexSet> entries;  // entries[i-1] = I_i, sorted ascending

  friend bool operator==(const GrassmannNecklace&, const GrassmannNecklace&) = default;
};

/// I_i is the minimum of the bases under the order i < i+1 < ... < i-1,
/// comparing each basis as its sequence sorted under that order.
inline GrassmannNecklace necklace_from_bases(const BasesSet& b) {
  if (b.bases.empty()) throw error(errc::empty_bases, "necklace of an empty bases set");
  const GroundSet ground(b.n);
  GrassmannNecklace out{b.n, b.k, {}};
  std::vector<int> key(b.k), best_key;
  for (Element i = 1; i <= b.n; ++i) {
    const VertexSet* best = nullptr;
    for (const VertexSet& s : b.bases) {
      for (int j = 0; j < b.k; ++j) key[j] = ground.shifted_rank(s[j], i);
      std::sort(key.begin(), key.end());
      if (best == nullptr || key < best_key) {
        best = &s;
        best_key = key;
      }
    }
    out.entries.push_back(*best);
  }
  return out;
}

enum class Box : unsigned char { zero, plus };

/// A {+,0}-filled Young shape in the k x (n-k) box. Walking the southeast
/// border from the northeast corner labels the steps 1..n; vertical steps
/// label rows, horizontal steps label columns. Row r (top first) holds the
/// columns whose label exceeds its row label, leftmost column = largest
/// label. Box (a, b) is the box in the row labeled a and column labeled b.
class LeDiagram {
 public:
  LeDiagram() = default;

  /// All-zero diagram whose row labels are `rows`.
  static LeDiagram from_row_labels(int n, VertexSet rows) {
    std::sort(rows.begin(), rows.end());
    if (std::adjacent_find(rows.begin(), rows.end()) != rows.end())
      throw error(errc::invalid_argument, "repeated row label");
    for (Element r : rows)
      if (r < 1 || r > n) throw error(errc::out_of_range, "row label outside [n]");
    LeDiagram d;
    d.n_ = n;
    d.k_ = static_cast<int>(rows.size());
    d.rows_ = std::move(rows);
    for (Element e = 1; e <= n; ++e)
      if (!std::binary_search(d.rows_.begin(), d.rows_.end(), e)) d.cols_.push_back(e);
    for (Element r : d.rows_) {
      const int len = static_cast<int>(d.cols_.end() - std::upper_bound(d.cols_.begin(), d.cols_.end(), r));
      d.shape_.push_back(len);
      d.fill_.emplace_back(len, Box::zero);
    }
    return d;
  }

  /// All-zero diagram of the given shape; shorter shapes are padded with 0.
  static LeDiagram from_shape(int n, int k, std::vector<int> shape) {
    if (n < 0 || k < 0 || k > n) throw error(errc::out_of_range, "invalid (n, k) for a Le diagram");
    if (static_cast<int>(shape.size()) > k) throw error(errc::invalid_argument, "shape has more than k rows");
    shape.resize(k, 0);
    for (int r = 0; r < k; ++r) {
      if (shape[r] < 0 || shape[r] > n - k) throw error(errc::invalid_argument, "row length outside [0, n-k]");
      if (r > 0 && shape[r] > shape[r - 1]) throw error(errc::invalid_argument, "shape is not weakly decreasing");
    }
    VertexSet rows;
    int x = n - k;
    int r = 0;
    for (Element step = 1; step <= n; ++step) {
      if (r < k && x == shape[r]) {
        rows.push_back(step);
        ++r;
      } else {
        --x;
      }
    }
    return from_row_labels(n, std::move(rows));
  }

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  const std::vector<int>& shape() const noexcept { return shape_; }
  const VertexSet& row_labels() const noexcept { return rows_; }
  const VertexSet& col_labels() const noexcept { return cols_; }
  int width() const noexcept { return static_cast<int>(cols_.size()); }

  /// Column label at 0-based position c from the left.
  Element column_label(int c) const { return cols_[cols_.size() - 1 - c]; }
  int column_index(Element b) const {
    auto it = std::lower_bound(cols_.begin(), cols_.end(), b);
    return static_cast<int>(cols_.end() - it) - 1;
  }
  int row_index(Element a) const {
    return static_cast<int>(std::lower_bound(rows_.begin(), rows_.end(), a) - rows_.begin());
  }

  bool has_box(Element a, Element b) const {
    return std::binary_search(rows_.begin(), rows_.end(), a) && std::binary_search(cols_.begin(), cols_.end(), b) &&
           b > a;
  }

  /// Access by position: row r (top = 0), column c (left = 0).
  Box at_position(int r, int c) const { return fill_[r][c]; }
  void set_position(int r, int c, Box value) { fill_[r][c] = value; }

  Box at(Element a, Element b) const { return fill_.at(row_index(a)).at(column_index(b)); }
  void set(Element a, Element b, Box value) {
    if (!has_box(a, b))
      throw error(errc::box_outside_shape,
                  "box (" + std::to_string(a) + "," + std::to_string(b) + ") is not in the diagram");
    fill_[row_index(a)][column_index(b)] = value;
  }

  /// One string per row, left to right, '+' or '0'.
  std::vector<std::string> fill_strings() const {
    std::vector<std::string> out;
    for (const auto& row : fill_) {
      std::string s;
      for (Box b : row) s.push_back(b == Box::plus ? '+' : '0');
      out.push_back(std::move(s));
    }
    return out;
  }

  void set_fill(const std::vector<std::string>& rows) {
    std::vector<std::string> padded = rows;
    padded.resize(k_);
    for (int r = 0; r < k_; ++r) {
      if (static_cast<int>(padded[r].size()) != shape_[r])
        throw error(errc::invalid_argument, "fill row " + std::to_string(r + 1) + " has length " +
                                                std::to_string(padded[r].size()) + ", shape requires " +
                                                std::to_string(shape_[r]));
      for (int c = 0; c < shape_[r]; ++c) {
        const char ch = padded[r][c];
        if (ch != '+' && ch != '0') throw error(errc::parse_error, "fill characters must be '+' or '0'");
        fill_[r][c] = ch == '+' ? Box::plus : Box::zero;
      }
    }
    if (rows.size() > static_cast<std::size_t>(k_))
      for (std::size_t r = k_; r < rows.size(); ++r)
        if (!rows[r].empty()) throw error(errc::invalid_argument, "fill has more nonempty rows than k");
  }

  friend bool operator==(const LeDiagram&, const LeDiagram&) = default;

 private:
  int n_ = 0;
  int k_ = 0;
  VertexSet rows_;
  VertexSet cols_;
  std::vector<int> shape_;
  std::vector<std::vector<Box>> fill_;
};

/// Fills the diagram prescribed by a necklace. The result is not checked
/// against the Le condition.
inline LeDiagram diagram_from_necklace(const GrassmannNecklace& necklace) {
  if (static_cast<int>(necklace.entries.size()) != necklace.n)
    throw error(errc::invalid_argument, "necklace must have n entries");
  for (const VertexSet& e : necklace.entries)
    if (static_cast<int>(e.size()) != necklace.k) throw error(errc::invalid_argument, "necklace entry of wrong size");
  if (necklace.n == 0) return LeDiagram::from_row_labels(0, {});
  const VertexSet& first = necklace.entries.front();
  LeDiagram out = LeDiagram::from_row_labels(necklace.n, first);
  for (std::size_t i = 1; i < necklace.entries.size(); ++i) {
    const VertexSet& cur = necklace.entries[i];
    VertexSet removed, added;
    std::set_difference(first.begin(), first.end(), cur.begin(), cur.end(), std::back_inserter(removed));
    std::set_difference(cur.begin(), cur.end(), first.begin(), first.end(), std::back_inserter(added));
    std::reverse(removed.begin(), removed.end());
    for (std::size_t j = 0; j < removed.size(); ++j) out.set(removed[j], added[j], Box::plus);
  }
  return out;
}

/// A zero is allowed only if everything to its left or everything above it
/// is zero.
inline bool is_le(const LeDiagram& d) {
  for (int r = 0; r < d.k(); ++r)
    for (int c = 0; c < d.shape()[r]; ++c) {
      if (d.at_position(r, c) == Box::plus) continue;
      bool left_zero = true;
      for (int c2 = 0; c2 < c; ++c2) left_zero = left_zero && d.at_position(r, c2) == Box::zero;
      bool above_zero = true;
      for (int r2 = 0; r2 < r; ++r2) above_zero = above_zero && d.at_position(r2, c) == Box::zero;
      if (!left_zero && !above_zero) return false;
    }
  return true;
}

inline int plus_count(const LeDiagram& d) {
  int count = 0;
  for (int r = 0; r < d.k(); ++r)
    for (int c = 0; c < d.shape()[r]; ++c) count += d.at_position(r, c) == Box::plus ? 1 : 0;
  return count;
}

/// Γ(L): one vertex per row label, per column label and per plus box.
/// Arcs run leftward along rows and downward along columns between
/// consecutive vertices.
struct LeNetwork {
  int vertex_count = 0;
  std::vector<std::vector<int>> out;
  std::map<Element, int> row_vertex;
  std::map<Element, int> column_vertex;
  std::vector<Pair> box_of_vertex;  // (a, b) for plus-box vertices, {0,0} for labels

  int inner_count() const {
    return vertex_count - static_cast<int>(row_vertex.size() + column_vertex.size());
  }
};

inline LeNetwork build_network(const LeDiagram& d) {
  LeNetwork net;
  auto add_vertex = [&](Pair box) {
    net.out.emplace_back();
    net.box_of_vertex.push_back(box);
    return net.vertex_count++;
  };
  for (Element a : d.row_labels()) net.row_vertex[a] = add_vertex({0, 0});
  for (Element b : d.col_labels()) net.column_vertex[b] = add_vertex({0, 0});
  std::vector<std::vector<int>> box_vertex(d.k(), std::vector<int>(d.width(), -1));
  for (int r = 0; r < d.k(); ++r)
    for (int c = 0; c < d.shape()[r]; ++c)
      if (d.at_position(r, c) == Box::plus)
        box_vertex[r][c] = add_vertex({d.row_labels()[r], d.column_label(c)});

  for (int r = 0; r < d.k(); ++r) {
    int prev = net.row_vertex[d.row_labels()[r]];
    for (int c = d.shape()[r] - 1; c >= 0; --c)
      if (box_vertex[r][c] >= 0) {
        net.out[prev].push_back(box_vertex[r][c]);
        prev = box_vertex[r][c];
      }
  }
  for (int c = 0; c < d.width(); ++c) {
    int prev = -1;
    for (int r = 0; r < d.k(); ++r)
      if (c < d.shape()[r] && box_vertex[r][c] >= 0) {
        if (prev >= 0) net.out[prev].push_back(box_vertex[r][c]);
        prev = box_vertex[r][c];
      }
    if (prev >= 0) net.out[prev].push_back(net.column_vertex[d.column_label(c)]);
  }
  return net;
}

namespace detail {

/// Unit-capacity max flow on the vertex-split graph.
class UnitFlow {
 public:
  explicit UnitFlow(int nodes) : adj_(nodes) {}

  void add_arc(int from, int to) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, 1});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  int max_flow(int source, int sink) {
    int flow = 0;
    while (augment(source, sink)) ++flow;
    return flow;
  }

 private:
  struct Arc {
    int to;
    int capacity;
  };

  bool augment(int source, int sink) {
    std::vector<int> via(adj_.size(), -1);
    std::vector<bool> seen(adj_.size(), false);
    std::queue<int> frontier;
    frontier.push(source);
    seen[source] = true;
    while (!frontier.empty() && !seen[sink]) {
      const int v = frontier.front();
      frontier.pop();
      for (int a : adj_[v]) {
        const Arc& arc = arcs_[a];
        if (arc.capacity == 0 || seen[arc.to]) continue;
        seen[arc.to] = true;
        via[arc.to] = a;
        frontier.push(arc.to);
      }
    }
    if (!seen[sink]) return false;
    for (int v = sink; v != source;) {
      const int a = via[v];
      arcs_[a].capacity -= 1;
      arcs_[a ^ 1].capacity += 1;
      v = arcs_[a ^ 1].to;
    }
    return true;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
};

}  // namespace detail

/// True iff the row labels `sources` can be joined to the column labels
/// `sinks` by pairwise vertex-disjoint paths (under some bijection).
inline bool admits_path_system(const LeNetwork& net, const VertexSet& sources, const VertexSet& sinks) {
  if (sources.size() != sinks.size()) return false;
  if (sources.empty()) return true;
  const int super_source = 2 * net.vertex_count;
  const int super_sink = super_source + 1;
  detail::UnitFlow flow(super_sink + 1);
  for (int v = 0; v < net.vertex_count; ++v) {
    flow.add_arc(2 * v, 2 * v + 1);
    for (int w : net.out[v]) flow.add_arc(2 * v + 1, 2 * w);
  }
  for (Element s : sources) flow.add_arc(super_source, 2 * net.row_vertex.at(s));
  for (Element t : sinks) flow.add_arc(2 * net.column_vertex.at(t) + 1, super_sink);
  return flow.max_flow(super_source, super_sink) == static_cast<int>(sources.size());
}

/// Bases of the positroid of a Le diagram: B with |B| = k such that
/// (S \ B, T ∩ B) admits a vertex-disjoint path system in Γ(L).
inline BasesSet bases_from_le(const LeDiagram& d) {
  if (!is_le(d)) throw error(errc::not_le, "diagram violates the Le condition");
  const LeNetwork net = build_network(d);
  BasesSet out{d.n(), d.k(), {}};
  for_each_subset(d.n(), d.k(), [&](const VertexSet& b) {
    VertexSet sources, sinks;
    std::set_difference(d.row_labels().begin(), d.row_labels().end(), b.begin(), b.end(),
                        std::back_inserter(sources));
    std::set_intersection(d.col_labels().begin(), d.col_labels().end(), b.begin(), b.end(),
                          std::back_inserter(sinks));
    if (admits_path_system(net, sources, sinks)) out.bases.push_back(b);
  });
  return out;
}

/// Positroid test through the Le machinery: the diagram built from the
/// necklace must satisfy the Le condition and reproduce the bases exactly.
/// Meaningful only when b is a matroid.
inline bool positroid_roundtrip_check(const BasesSet& b) {
  if (b.bases.empty()) throw error(errc::empty_bases, "round trip of an empty bases set");
  LeDiagram d;
  try {
    d = diagram_from_necklace(necklace_from_bases(b));
  } catch (const error& e) {
    if (e.code() == errc::box_outside_shape) return false;
    throw;
  }
  if (!is_le(d)) return false;
  return bases_from_le(d).bases == b.bases;
}

/// Text form: one line per nonempty row, then a legend line that fixes the
/// border labels. parse_ascii inverts it.
inline std::string render_ascii(const LeDiagram& d) {
  std::ostringstream os;
  for (const std::string& row : d.fill_strings())
    if (!row.empty()) os << row << '\n';
  auto list = [](const VertexSet& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  os << "# n=" << d.n() << " k=" << d.k() << " rows=" << list(d.row_labels()) << " cols=" << list(d.col_labels())
     << '\n';
  return os.str();
}

inline LeDiagram parse_ascii(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<std::string> rows;
  std::string legend;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      legend = line;
      break;
    }
    rows.push_back(line);
  }
  if (legend.empty()) throw error(errc::parse_error, "missing legend line");
  int n = -1, k = -1;
  VertexSet labels;
  std::istringstream ls(legend.substr(1));
  std::string field;
  while (ls >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw error(errc::parse_error, "malformed legend field '" + field + "'");
    const std::string key = field.substr(0, eq), value = field.substr(eq + 1);
    try {
      if (key == "n") {
        n = std::stoi(value);
      } else if (key == "k") {
        k = std::stoi(value);
      } else if (key == "rows") {
        std::istringstream vs(value);
        std::string item;
        while (std::getline(vs, item, ','))
          if (!item.empty()) labels.push_back(std::stoi(item));
      }
    } catch (const std::logic_error&) {
      throw error(errc::parse_error, "malformed legend value '" + field + "'");
    }
  }
  if (n < 0 || k < 0) throw error(errc::parse_error, "legend must give n and k");
  if (static_cast<int>(labels.size()) != k) throw error(errc::parse_error, "legend row labels do not match k");
  LeDiagram d = LeDiagram::from_row_labels(n, labels);
  std::vector<std::string> fill;
  std::size_t next = 0;
  for (int r = 0; r < k; ++r) {
    if (d.shape()[r] == 0) {
      fill.emplace_back();
    } else {
      if (next >= rows.size()) throw error(errc::parse_error, "missing fill row");
      fill.push_back(rows[next++]);
    }
  }
  if (next != rows.size()) throw error(errc::parse_error, "too many fill rows");
  d.set_fill(fill);
  return d;
}

/// DOT rendering of Γ(L).
inline std::string network_dot(const LeDiagram& d) {
  const LeNetwork net = build_network(d);
  std::ostringstream os;
  os << "digraph Gamma {\n  rankdir=LR;\n";
  for (const auto& [a, v] : net.row_vertex) os << "  v" << v << " [label=\"" << a << "\", shape=box];\n";
  for (const auto& [b, v] : net.column_vertex) os << "  v" << v << " [label=\"" << b << "\", shape=box];\n";
  for (int v = 0; v < net.vertex_count; ++v) {
    const Pair box = net.box_of_vertex[v];
    if (box.lo != 0) os << "  v" << v << " [label=\"(" << box.lo << "," << box.hi << ")\", shape=point];\n";
  }
  for (int v = 0; v < net.vertex_count; ++v)
    for (int w : net.out[v]) os << "  v" << v << " -> v" << w << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace positroid

#endif  // POSITROID_LE_NECKLACE_HPP
