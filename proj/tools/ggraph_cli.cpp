// Copyright 2026 The ggraph Authors
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

// Command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success or ACCEPT, 1 internal error, 2 bad input (parse,
// spec, I/O, limits), 3 non-generating set, 4 REFUSE, 5 UNDETERMINED.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ggraph/ggraph.h"

namespace {

using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitNotGenerating = 3;
constexpr int kExitRefuse = 4;
constexpr int kExitUndetermined = 5;

struct Failure {
  int code;
};

int ExitCodeOf(gg_status s) {
  switch (s) {
    case GG_OK: return kExitOk;
    case GG_ERR_NOT_GENERATING: return kExitNotGenerating;
    case GG_ERR_INTERNAL: return kExitInternal;
    default: return kExitInput;
  }
}

void Check(gg_status s) {
  if (s == GG_OK) return;
  std::cerr << "error (" << gg_status_name(s) << "): " << gg_last_error() << "\n";
  throw Failure{ExitCodeOf(s)};
}

void Usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  throw Failure{kExitInput};
}

struct StringDeleter {
  void operator()(char* s) const { gg_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
  void operator()(gg_graph* g) const { gg_graph_free(g); }
};
using Graph = std::unique_ptr<gg_graph, GraphDeleter>;

struct GroupDeleter {
  void operator()(gg_group* g) const { gg_group_free(g); }
};

struct Source {
  std::string input;
  std::string group;
  std::string gens;
};

void AddSource(CLI::App* cmd, Source& src) {
  cmd->add_option("input", src.input, "Graph file (JSON document or edge list)");
  cmd->add_option("--group", src.group, "Group spec, e.g. sym:4 or cyclic:3*cyclic:3");
  cmd->add_option("--gens", src.gens, "Comma separated generators, e.g. \"(1 2),(2 3 4)\"");
}

Graph Build(const std::string& group_spec, const std::string& gens) {
  gg_group* raw_group = nullptr;
  Check(gg_group_parse(group_spec.c_str(), &raw_group));
  std::unique_ptr<gg_group, GroupDeleter> group(raw_group);
  gg_graph* raw = nullptr;
  Check(gg_graph_build(group.get(), gens.c_str(), &raw));
  return Graph(raw);
}

Graph Load(const Source& src) {
  if (!src.input.empty()) {
    if (!src.group.empty() || !src.gens.empty()) Usage("give either an input file or --group/--gens, not both");
    gg_graph* raw = nullptr;
    Check(gg_graph_load(src.input.c_str(), &raw));
    return Graph(raw);
  }
  if (src.group.empty() || src.gens.empty()) Usage("an input file or both --group and --gens are required");
  return Build(src.group, src.gens);
}

gg_format FormatOf(const std::string& name) {
  if (name == "json") return GG_FORMAT_JSON;
  if (name == "dot") return GG_FORMAT_DOT;
  if (name == "edges") return GG_FORMAT_EDGES;
  Usage("format must be json, dot or edges for graph output");
  return GG_FORMAT_JSON;
}

void Emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(out, std::ios::binary);
  file << text;
  if (!file) {
    std::cerr << "error (io): cannot write '" << out << "'\n";
    throw Failure{kExitInput};
  }
}

std::string Serialize(const gg_graph* g, gg_format format) {
  char* raw = nullptr;
  Check(gg_graph_serialize(g, format, &raw));
  OwnedString s(raw);
  return s.get();
}

std::string Report(gg_status (*fn)(const gg_graph*, char**), const gg_graph* g) {
  char* raw = nullptr;
  Check(fn(g, &raw));
  OwnedString s(raw);
  return s.get();
}

std::string StatsTable(const json& st) {
  std::ostringstream out;
  const auto& p = st["predicted"];
  const auto& m = st["measured"];
  out << "group order " << st["group_order"] << ", k = " << st["gen_orders"].size() << "\n";
  out << "class  order  vertices  predicted  degree  predicted\n";
  for (std::size_t i = 0; i < st["gen_orders"].size(); ++i) {
    out << std::left << std::setw(7) << i + 1 << std::setw(7) << st["gen_orders"][i].dump() << std::setw(10)
        << m["class_vertex_counts"][i].dump() << std::setw(11) << p["class_vertex_counts"][i].dump()
        << std::setw(8) << m["class_degrees"][i].dump() << p["class_degrees"][i].dump() << "\n";
  }
  out << "total: " << st["vertex_count"] << " vertices (predicted " << p["total_vertices"] << "), "
      << st["edge_multiplicity"] << " edges (predicted " << p["total_edge_multiplicity"] << "), "
      << st["edge_records"] << " adjacent pairs: " << (st["matches"].get<bool>() ? "match" : "MISMATCH") << "\n";
  return out.str();
}

int Run(int argc, char** argv) {
  CLI::App app{"G-graphs of groups: construction, analysis, characterization and spectra"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gg_version()));

  std::string group, gens, out, format = "json", partition, turan;
  std::size_t radius = 0;
  bool witness = false;

  auto* build = app.add_subcommand("build", "Build the G-graph of a group and generating sequence");
  build->add_option("--group", group, "Group spec")->required();
  build->add_option("--gens", gens, "Comma separated generators")->required();
  build->add_option("--out", out, "Write the graph here ('-' for stdout)");
  build->add_option("--format", format, "json, dot or edges");

  Source analyze_src, char_src, spec_src, dot_src;
  auto* analyze = app.add_subcommand("analyze", "Structural report and family recognition");
  AddSource(analyze, analyze_src);

  auto* characterize = app.add_subcommand("characterize", "Decide whether a graph is a G-graph");
  AddSource(characterize, char_src);
  characterize->add_option("--partition", partition,
                           "auto, bipartite, or one class index per vertex (default: the file's partition)");
  characterize->add_flag("--witness", witness, "Search a group catalog for a realizing (G, S)");
  characterize->add_option("--turan", turan, "Verdict for the Turan graph T(n,r), given as n,r");

  auto* spectrum = app.add_subcommand("spectrum", "Adjacency spectrum and energy");
  AddSource(spectrum, spec_src);
  spectrum->add_option("--format", format, "json (spectrum) or csv (adjacency matrix)");

  auto* infinite = app.add_subcommand("infinite", "Ball in an infinite G-graph");
  infinite->add_option("--group", group, "sl2z or affine")->required();
  infinite->add_option("--radius", radius, "Ball radius")->required();
  infinite->add_option("--out", out, "Write the ball here (default stdout)");
  infinite->add_option("--format", format, "json, dot or edges");

  auto* export_dot = app.add_subcommand("export-dot", "Graphviz DOT export");
  AddSource(export_dot, dot_src);
  export_dot->add_option("--out", out, "Write the DOT file here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (build->parsed()) {
    const gg_format f = FormatOf(format);
    Graph g = Build(group, gens);
    const std::string table = StatsTable(json::parse(Report(gg_graph_stats_json, g.get())));
    if (out == "-") {
      std::cerr << table;
      std::cout << Serialize(g.get(), f);
    } else {
      std::cout << table;
      if (!out.empty()) Emit(Serialize(g.get(), f), out);
    }
    return kExitOk;
  }
  if (analyze->parsed()) {
    Graph g = Load(analyze_src);
    std::cout << Report(gg_graph_analyze_json, g.get());
    return kExitOk;
  }
  if (characterize->parsed()) {
    char* raw = nullptr;
    gg_verdict verdict = GG_VERDICT_UNDETERMINED;
    if (!turan.empty()) {
      std::size_t n = 0, r = 0;
      char comma = 0;
      std::istringstream in(turan);
      if (!(in >> n >> comma >> r) || comma != ',') Usage("--turan expects n,r");
      Check(gg_turan_verdict_json(n, r, &verdict, &raw));
    } else {
      Graph g = Load(char_src);
      Check(gg_graph_characterize_json(g.get(), partition.empty() ? nullptr : partition.c_str(), witness ? 1 : 0,
                                       &verdict, &raw));
    }
    OwnedString s(raw);
    std::cout << s.get();
    if (verdict == GG_VERDICT_REFUSE) {
      std::cerr << "REFUSE: " << json::parse(s.get())["reason"].get<std::string>() << "\n";
      return kExitRefuse;
    }
    return verdict == GG_VERDICT_ACCEPT ? kExitOk : kExitUndetermined;
  }
  if (spectrum->parsed()) {
    Graph g = Load(spec_src);
    if (format == "csv") std::cout << Report(gg_graph_matrix_csv, g.get());
    else if (format == "json") std::cout << Report(gg_graph_spectrum_json, g.get());
    else Usage("spectrum format must be json or csv");
    return kExitOk;
  }
  if (infinite->parsed()) {
    const gg_format f = FormatOf(format);
    gg_graph* raw = nullptr;
    Check(gg_graph_ball(group.c_str(), radius, &raw));
    Graph g(raw);
    Emit(Serialize(g.get(), f), out);
    if (!out.empty() && out != "-")
      std::cout << "ball radius " << radius << ": " << gg_graph_vertex_count(g.get()) << " vertices, "
                << gg_graph_edge_multiplicity(g.get()) << " edges (with multiplicity)\n";
    return kExitOk;
  }
  if (export_dot->parsed()) {
    Graph g = Load(dot_src);
    Emit(Serialize(g.get(), GG_FORMAT_DOT), out);
    return kExitOk;
  }
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
