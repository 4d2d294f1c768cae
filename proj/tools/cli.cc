// Copyright 2026 The symtk Authors.
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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "symtk/error.h"
#include "symtk/graph.h"
#include "symtk/graph_io.h"
#include "symtk/group.h"
#include "symtk/search.h"
#include "symtk/theorem.h"

namespace symtk::cli {
namespace {

// Raised for I/O and usage problems found after flag parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadAll(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string ReadSource(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return ReadAll(stdin_stream);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path);
  return ReadAll(file);
}

// First non-empty line, surrounding whitespace removed.
Graph ParseGraph6Input(const std::string& text, const std::string& source) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    try {
      return Graph6Decode(std::string_view(line).substr(first, last - first + 1));
    } catch (const Error& e) {
      throw UsageError(source + ": " + e.what());
    }
  }
  throw UsageError(source + ": no graph6 line found");
}

void WriteOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text) || !file.flush()) {
    throw UsageError("cannot write " + path);
  }
}

// Vertices of PetersenSubsets() placed so that the drawing is the usual
// pentagon, pentagram and spokes: classic vertex i's position goes to the
// subset vertex it maps to under an explicit isomorphism.
Layout SubsetFigureLayout(const Graph& subsets) {
  const auto mapping = AreIsomorphic(PetersenClassic(), subsets);
  if (!mapping) throw std::logic_error("Petersen constructions disagree");
  const Layout classic = PetersenLayout();
  Layout layout(classic.size());
  for (Point i = 0; i < classic.size(); ++i) layout[(*mapping)[i]] = classic[i];
  return layout;
}

std::string MappingLine(const Permutation& mapping) {
  std::string line;
  for (Point v = 0; v < mapping.degree(); ++v) {
    if (v > 0) line += ' ';
    line += std::to_string(v + 1) + "->" + std::to_string(mapping[v] + 1);
  }
  return line + "\n";
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation-group and graph-automorphism toolkit", "symtk"};
  app.require_subcommand(1);

  std::string family;
  std::optional<int> n_param;
  std::optional<int> k_param;
  std::optional<int> t_param;
  std::string format = "graph6";
  std::string output;
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("family", family, "Graph family")
      ->required()
      ->check(CLI::IsMember(
          {"johnson", "kneser", "petersen-subsets", "petersen-classic"}));
  gen->add_option("-n", n_param, "Ground set size");
  gen->add_option("-k", k_param, "Subset size");
  gen->add_option("-t", t_param, "Intersection size (johnson)");
  gen->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"graph6", "dot"}));
  gen->add_option("-o,--output", output, "Output file (default stdout)");

  std::string aut_input = "-";
  auto* aut = app.add_subcommand("aut", "Automorphism group generators");
  aut->add_option("input", aut_input, "graph6 file, - for stdin");

  std::string canon_input = "-";
  auto* canon = app.add_subcommand("canon", "Canonical certificate");
  canon->add_option("input", canon_input, "graph6 file, - for stdin");

  std::string iso_a;
  std::string iso_b;
  auto* iso = app.add_subcommand("iso", "Isomorphism test");
  iso->add_option("a", iso_a, "First graph6 file, - for stdin")->required();
  iso->add_option("b", iso_b, "Second graph6 file, - for stdin")->required();

  bool brute = false;
  std::string json_path;
  unsigned threads = 1;
  auto* verify = app.add_subcommand(
      "verify-petersen", "Certify Aut(Petersen) is isomorphic to S5");
  verify->add_flag("--brute", brute, "Also scan all 10! vertex permutations");
  verify->add_option("--json", json_path, "Write the JSON report here");
  verify->add_option("--threads", threads, "Workers for --brute")
      ->check(CLI::Range(1u, 64u));

  std::string layout_mode = "default";
  std::string render_output;
  auto* render = app.add_subcommand("render", "DOT drawing of the subset graph");
  render->add_option("--layout", layout_mode, "Vertex positions")
      ->check(CLI::IsMember({"default", "none"}));
  render->add_option("-o,--output", render_output,
                     "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      Graph g;
      auto need = [&](const std::optional<int>& v, const char* flag) {
        if (!v) throw UsageError(family + " needs " + flag);
        return *v;
      };
      if (family == "johnson") {
        g = JohnsonGeneral(need(n_param, "-n"), need(k_param, "-k"),
                           need(t_param, "-t"));
      } else if (family == "kneser") {
        g = Kneser(need(n_param, "-n"), need(k_param, "-k"));
      } else if (family == "petersen-subsets") {
        g = PetersenSubsets();
      } else {
        g = PetersenClassic();
      }
      WriteOutput(output, format == "dot" ? ToDot(g) : Graph6Encode(g) + "\n",
                  out);
      return kExitOk;
    }
    if (*aut) {
      const Graph g = ParseGraph6Input(ReadSource(aut_input, in), aut_input);
      if (g.n() == 0) throw UsageError("graph has no vertices");
      const auto gens = AutomorphismGroup(g);
      for (const Permutation& p : gens) out << p.ToCycleString() << "\n";
      out << "order " << (gens.empty() ? 1 : SchreierSims(gens).Order())
          << "\n";
      return kExitOk;
    }
    if (*canon) {
      const Graph g = ParseGraph6Input(ReadSource(canon_input, in), canon_input);
      if (g.n() == 0) throw UsageError("graph has no vertices");
      out << ComputeCanonicalForm(g).ToString() << "\n";
      return kExitOk;
    }
    if (*iso) {
      if (iso_a == "-" && iso_b == "-") {
        throw UsageError("only one input may come from stdin");
      }
      const Graph a = ParseGraph6Input(ReadSource(iso_a, in), iso_a);
      const Graph b = ParseGraph6Input(ReadSource(iso_b, in), iso_b);
      std::optional<Permutation> mapping;
      if (a.n() == b.n() && a.n() > 0) mapping = AreIsomorphic(a, b);
      if (!mapping) {
        out << "non-isomorphic\n";
        return kExitNegative;
      }
      out << MappingLine(*mapping);
      return kExitOk;
    }
    if (*verify) {
      VerifyOptions options;
      options.run_brute = brute;
      options.brute_threads = threads;
      const VerificationReport report = VerifyTheorem(options);
      out << FormatSummary(report);
      if (!json_path.empty()) WriteOutput(json_path, ReportToJson(report), out);
      return report.verdict == Verdict::kVerified ? kExitOk : kExitNegative;
    }
    if (*render) {
      const Graph g = PetersenSubsets();
      std::optional<Layout> layout;
      if (layout_mode == "default") layout = SubsetFigureLayout(g);
      WriteOutput(render_output, ToDot(g, layout), out);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "symtk: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "symtk: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace symtk::cli
