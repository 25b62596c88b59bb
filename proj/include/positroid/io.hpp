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

#ifndef POSITROID_IO_HPP
#define POSITROID_IO_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "positroid/cells.hpp"
#include "positroid/core_sets.hpp"
#include "positroid/dep_graph.hpp"
#include "positroid/le_necklace.hpp"
#include "positroid/realize.hpp"

namespace positroid::io {

using json = nlohmann::ordered_json;

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw error(errc::parse_error, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw error(errc::parse_error, std::string("missing field \"") + key + "\"");
  return *it;
}

inline int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw error(errc::parse_error, std::string(what) + " must be an integer");
  return j.get<int>();
}

inline std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw error(errc::parse_error, std::string(what) + " must be an array");
  std::vector<int> out;
  for (const json& e : j) out.push_back(integer(e, what));
  return out;
}

inline json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace detail

inline json to_json(const VertexSet& v) { return json(v); }

inline json to_json(const std::vector<VertexSet>& v) {
  json out = json::array();
  for (const VertexSet& s : v) out.push_back(s);
  return out;
}

/// {"n": <int>, "dependent": [[i,j],...]}
inline json to_json(const DepSet& d) {
  json pairs = json::array();
  for (const Pair& p : d.pairs()) pairs.push_back({p.lo, p.hi});
  return json{{"n", d.n()}, {"dependent", std::move(pairs)}};
}

inline DepSet depset_from_json(const json& j) {
  const int n = detail::integer(detail::field(j, "n"), "n");
  const json& list = detail::field(j, "dependent");
  if (!list.is_array()) throw error(errc::parse_error, "\"dependent\" must be an array");
  std::vector<std::array<int, 2>> raw;
  for (const json& p : list) {
    const std::vector<int> v = detail::int_list(p, "pair");
    if (v.size() != 2) throw error(errc::parse_error, "each dependent entry must have two elements");
    raw.push_back({v[0], v[1]});
  }
  return canonicalize(raw, n);
}

/// DepSet plus "loops", "components" and "dim" (null unless nice of rank 2).
inline json annotated(const DepSet& d) {
  json out = to_json(d);
  const DecomposedGraph g = build_graph(d);
  out["loops"] = g.graph.vanishing;
  out["components"] = to_json(g.parts.components);
  out["dim"] = is_nice(d) ? detail::optional_int(cell_dimension(d)) : json(nullptr);
  return out;
}

inline json annotated_list(const std::vector<DepSet>& sets) {
  json out = json::array();
  for (const DepSet& d : sets) out.push_back(annotated(d));
  return out;
}

inline json check_report(const DepSet& d) {
  const bool matroid = is_matroid(d);
  const bool nice = is_nice(d);
  const DecomposedGraph g = build_graph(d);
  return json{{"is_matroid", matroid},
              {"is_positroid", nice},
              {"dim", nice ? detail::optional_int(cell_dimension(d)) : json(nullptr)},
              {"loops", g.graph.vanishing},
              {"components", to_json(g.parts.components)}};
}

/// {"n":int,"k":int,"bases":[[...],...]}
inline json to_json(const BasesSet& b) {
  return json{{"n", b.n}, {"k", b.k}, {"bases", to_json(b.bases)}};
}

inline BasesSet bases_from_json(const json& j) {
  const int n = detail::integer(detail::field(j, "n"), "n");
  const int k = detail::integer(detail::field(j, "k"), "k");
  const json& list = detail::field(j, "bases");
  if (!list.is_array()) throw error(errc::parse_error, "\"bases\" must be an array");
  std::vector<VertexSet> bases;
  for (const json& e : list) bases.push_back(detail::int_list(e, "basis"));
  return make_bases(n, k, std::move(bases));
}

inline json to_json(const GrassmannNecklace& nk) {
  return json{{"n", nk.n}, {"k", nk.k}, {"necklace", to_json(nk.entries)}};
}

/// {"n":int,"k":int,"shape":[...],"fill":["+0++","++"]}
inline json to_json(const LeDiagram& d) {
  json fill = json::array();
  for (const std::string& row : d.fill_strings()) fill.push_back(row);
  return json{{"n", d.n()}, {"k", d.k()}, {"shape", d.shape()}, {"fill", std::move(fill)}};
}

inline LeDiagram le_from_json(const json& j) {
  const int n = detail::integer(detail::field(j, "n"), "n");
  const int k = detail::integer(detail::field(j, "k"), "k");
  LeDiagram d = LeDiagram::from_shape(n, k, detail::int_list(detail::field(j, "shape"), "shape"));
  const json& fill = detail::field(j, "fill");
  if (!fill.is_array()) throw error(errc::parse_error, "\"fill\" must be an array of strings");
  std::vector<std::string> rows;
  for (const json& r : fill) {
    if (!r.is_string()) throw error(errc::parse_error, "\"fill\" must be an array of strings");
    rows.push_back(r.get<std::string>());
  }
  d.set_fill(rows);
  return d;
}

/// {"n":int,"columns":[["p/q","r/s"],...]}
inline json to_json(const WitnessMatrix& m) {
  json cols = json::array();
  for (const auto& c : m.columns) cols.push_back({to_string(c[0]), to_string(c[1])});
  return json{{"n", m.n}, {"columns", std::move(cols)}};
}

inline WitnessMatrix witness_from_json(const json& j) {
  WitnessMatrix m;
  m.n = detail::integer(detail::field(j, "n"), "n");
  const json& cols = detail::field(j, "columns");
  if (!cols.is_array()) throw error(errc::parse_error, "\"columns\" must be an array");
  for (const json& c : cols) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      throw error(errc::parse_error, "each column must be two rational strings");
    m.columns.push_back({parse_rational(c[0].get<std::string>()), parse_rational(c[1].get<std::string>())});
  }
  return m;
}

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw error(errc::parse_error, e.what());
  }
}

}  // namespace positroid::io

#endif  // POSITROID_IO_HPP
