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

#ifndef POSITROID_CLI_HPP
#define POSITROID_CLI_HPP

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "positroid/io.hpp"
#include "positroid/positroid.hpp"

namespace positroid::cli {

/// Process exit statuses.
enum exit_status : int {
  ok = 0,
  assertion_failed = 1,
  invalid_input = 2,
  size_refused = 3,
};

namespace detail {

using io::json;

inline std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline std::string read_text(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return slurp(in);
  std::ifstream file(path);
  if (!file) throw error(errc::parse_error, "cannot open input file '" + path + "'");
  return slurp(file);
}

inline bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' || c == '[';
  }
  return false;
}

/// BasesSet JSON, or a DepSet JSON read as its rank-2 complement.
inline BasesSet bases_input(const json& j) {
  if (j.is_object() && j.contains("dependent")) return bases_of(io::depset_from_json(j));
  return io::bases_from_json(j);
}

/// LeDiagram JSON or ASCII; BasesSet/DepSet JSON gives the diagram built
/// from its necklace.
inline LeDiagram diagram_input(const std::string& text) {
  if (!looks_like_json(text)) return parse_ascii(text);
  const json j = io::parse(text);
  if (j.is_object() && j.contains("fill")) return io::le_from_json(j);
  return diagram_from_necklace(necklace_from_bases(bases_input(j)));
}

inline std::string graph_ascii(const DepSet& d) {
  const DecomposedGraph g = build_graph(d);
  std::ostringstream os;
  auto braces = [](const VertexSet& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  os << "n=" << d.n() << " loops=" << braces(g.graph.vanishing) << '\n';
  for (std::size_t c = 0; c < g.parts.count(); ++c)
    os << "component " << braces(g.parts.components[c]) << (g.parts.is_complete[c] ? "" : " incomplete")
       << (g.parts.is_cyclic_interval[c] ? "" : " non-interval") << '\n';
  return os.str();
}

inline std::string poset_ascii(const BoundaryPoset& poset) {
  std::ostringstream os;
  for (std::size_t c = 0; c < poset.levels.size(); ++c)
    for (const DepSet& f : poset.levels[c])
      os << "codim " << c << " dim " << *cell_dimension(f) << " " << depset_label(f) << '\n';
  return os.str();
}

}  // namespace detail

/// Parses `args` (without the program name) and runs one verb. Data goes to
/// `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  using detail::json;
  CLI::App app{"Rank-2 positroid toolkit: matroid/positroid tests, Le diagrams, maximal positroids, cells"};
  app.require_subcommand(1);

  std::string input_path, output_path;
  unsigned jobs = 1;
  auto data_options = [&](CLI::App* sub) {
    sub->add_option("--input,-i", input_path, "Input file (default: stdin)");
    sub->add_option("--output,-o", output_path, "Output file (default: stdout)");
  };
  auto jobs_option = [&](CLI::App* sub) {
    sub->add_option("--jobs,-j", jobs, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));
  };

  std::string assert_kind;
  auto* check = app.add_subcommand("check", "Matroid/positroid test with loops, components and dimension");
  data_options(check);
  check->add_option("--assert", assert_kind, "Exit 1 unless the predicate holds")
      ->check(CLI::IsMember({"matroid", "positroid"}));

  std::string le_mode;
  auto* le = app.add_subcommand("le", "Convert between Le diagrams and bases");
  data_options(le);
  le->add_option("mode", le_mode, "to-bases | from-bases")->required()->check(CLI::IsMember({"to-bases", "from-bases"}));

  auto* necklace = app.add_subcommand("necklace", "Grassmann necklace of a bases set");
  data_options(necklace);
  auto* mat = app.add_subcommand("mat", "Maximal matroids contained in the complement");
  data_options(mat);
  auto* pos = app.add_subcommand("pos", "Worklist search for positroids inside a matroid");
  data_options(pos);
  jobs_option(pos);
  auto* mpos_cmd = app.add_subcommand("mpos", "Maximal positroids contained in the complement");
  data_options(mpos_cmd);
  jobs_option(mpos_cmd);

  int codim = 1;
  auto* boundary = app.add_subcommand("boundary", "Positroid boundary cells of a given codimension");
  data_options(boundary);
  boundary->add_option("--codim,-k", codim, "Codimension")->check(CLI::PositiveNumber);

  std::vector<std::string> intersect_files;
  auto* intersect = app.add_subcommand("intersect", "Maximal positroids in the common boundary of cells");
  intersect->add_option("files", intersect_files, "DepSet files (default: JSON array on stdin)");
  intersect->add_option("--output,-o", output_path, "Output file (default: stdout)");

  auto* dim = app.add_subcommand("dim", "Dimension of the positroid cell");
  data_options(dim);
  auto* realize = app.add_subcommand("realize", "Exact totally nonnegative 2 x n witness matrix");
  data_options(realize);
  auto* order = app.add_subcommand("order", "Reordering of the ground set that makes a matroid a positroid");
  data_options(order);
  auto* dual = app.add_subcommand("dual", "Dual bases set");
  data_options(dual);

  int census_n = 0;
  std::string census_kind;
  bool slow = false;
  auto* census_cmd = app.add_subcommand("census", "All matroid or nice dependent sets on [n]");
  census_cmd->add_option("--n", census_n, "Ground set size")->required()->check(CLI::NonNegativeNumber);
  census_cmd->add_option("--kind", census_kind, "matroids | nice")->required()->check(
      CLI::IsMember({"matroids", "nice"}));
  census_cmd->add_flag("--slow", slow, "Sweep all subsets with the exchange-axiom and Le oracles");
  census_cmd->add_option("--output,-o", output_path, "Output file (default: stdout)");

  std::string target, format = "ascii";
  std::optional<int> poset_codim;
  auto* render = app.add_subcommand("render", "Text renderings: graph, Le diagram, boundary poset");
  data_options(render);
  render->add_option("--target", target, "graph | lediagram | poset")->required()->check(
      CLI::IsMember({"graph", "lediagram", "poset"}));
  render->add_option("--format", format, "ascii | dot")->check(CLI::IsMember({"ascii", "dot"}));
  render->add_option("--codim,-k", poset_codim, "Poset depth (default: down to dimension 0)")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_status::ok : exit_status::invalid_input;
  }

  int status = exit_status::ok;
  std::string text;
  try {
    auto input = [&] { return io::parse(detail::read_text(input_path, in)); };
    auto depset = [&] { return io::depset_from_json(input()); };
    auto emit = [&](const json& j) { text = j.dump() + "\n"; };

    if (check->parsed()) {
      const DepSet d = depset();
      const json report = io::check_report(d);
      emit(report);
      if (!assert_kind.empty()) {
        const bool holds = report[assert_kind == "matroid" ? "is_matroid" : "is_positroid"].get<bool>();
        if (!holds) status = exit_status::assertion_failed;
      }
    } else if (le->parsed()) {
      if (le_mode == "to-bases") {
        emit(io::to_json(bases_from_le(detail::diagram_input(detail::read_text(input_path, in)))));
      } else {
        emit(io::to_json(diagram_from_necklace(necklace_from_bases(detail::bases_input(input())))));
      }
    } else if (necklace->parsed()) {
      emit(io::to_json(necklace_from_bases(detail::bases_input(input()))));
    } else if (mat->parsed()) {
      emit(io::annotated_list(mat_maximal(depset())));
    } else if (pos->parsed()) {
      emit(io::annotated_list(pos_enumerate(depset(), jobs)));
    } else if (mpos_cmd->parsed()) {
      emit(io::annotated_list(mpos(depset(), jobs)));
    } else if (boundary->parsed()) {
      const BoundaryResult b = boundary_codimk(depset(), codim);
      json cells = io::annotated_list(b.cells);
      for (json& c : cells) c["codim_from_input"] = codim;
      emit(json{{"boundary", std::move(cells)}, {"degenerate", io::annotated_list(b.degenerate)}});
    } else if (intersect->parsed()) {
      std::vector<DepSet> sets;
      if (intersect_files.empty()) {
        const json arr = io::parse(detail::slurp(in));
        if (!arr.is_array()) throw error(errc::parse_error, "expected a JSON array of dependent sets on stdin");
        for (const json& j : arr) sets.push_back(io::depset_from_json(j));
      } else {
        for (const std::string& f : intersect_files)
          sets.push_back(io::depset_from_json(io::parse(detail::read_text(f, in))));
      }
      for (const DepSet& s : sets)
        if (s.n() != sets.front().n()) throw error(errc::dimension_mismatch, "inputs have different ground sets");
      emit(io::annotated_list(intersection_mpos(sets)));
    } else if (dim->parsed()) {
      emit(json{{"dim", dimension(depset())}});
    } else if (realize->parsed()) {
      emit(io::to_json(realize_nice(depset())));
    } else if (order->parsed()) {
      const DepSet d = depset();
      const Relabeling r = positroid_order(d);
      emit(json{{"order", r.order()}, {"relabeled", io::annotated(relabel(d, r))}});
    } else if (dual->parsed()) {
      emit(io::to_json(dualize(detail::bases_input(input()))));
    } else if (census_cmd->parsed()) {
      const CensusKind kind = census_kind == "nice" ? CensusKind::nice : CensusKind::matroids;
      const std::vector<DepSet> sets = slow ? census_exhaustive(census_n, kind) : census(census_n, kind);
      json arr = json::array();
      for (const DepSet& d : sets) arr.push_back(io::to_json(d));
      emit(arr);
    } else if (render->parsed()) {
      const std::string raw = detail::read_text(input_path, in);
      if (target == "lediagram") {
        const LeDiagram d = detail::diagram_input(raw);
        text = format == "dot" ? network_dot(d) : render_ascii(d);
      } else {
        const DepSet d = io::depset_from_json(io::parse(raw));
        if (target == "graph") {
          text = format == "dot" ? to_dot(d) : detail::graph_ascii(d);
        } else {
          const BoundaryPoset poset = boundary_poset(d, poset_codim.value_or(dimension(d)));
          text = format == "dot" ? poset_dot(poset) : detail::poset_ascii(poset);
        }
      }
    }
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == errc::size_limit ? exit_status::size_refused : exit_status::invalid_input;
  } catch (const invariant_violation& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_status::invalid_input;
  }

  if (output_path.empty() || output_path == "-") {
    out << text;
  } else {
    std::ofstream file(output_path);
    if (!file) {
      err << "error: cannot open output file '" << output_path << "'\n";
      return exit_status::invalid_input;
    }
    file << text;
  }
  return status;
}

}  // namespace positroid::cli

#endif  // POSITROID_CLI_HPP
