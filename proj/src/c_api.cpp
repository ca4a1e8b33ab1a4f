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

#include "ggraph/ggraph.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "ggraph/analysis.hpp"
#include "ggraph/characterize.hpp"
#include "ggraph/error.hpp"
#include "ggraph/ggraph.hpp"
#include "ggraph/group.hpp"
#include "ggraph/group_spec.hpp"
#include "ggraph/infinite.hpp"
#include "ggraph/io.hpp"
#include "ggraph/iso.hpp"
#include "ggraph/spectral.hpp"

struct gg_group {
  std::string spec;
  ggraph::GroupTable table;
};

struct gg_graph {
  ggraph::GraphDocument doc;
  // Present when the graph was built from a group, or when a loaded G-graph
  // document could be rebuilt from its metadata.
  std::shared_ptr<const ggraph::GroupTable> group;
  std::optional<ggraph::GenSequence> gens;
  std::optional<ggraph::GGraph> gg;
};

namespace {

using json = nlohmann::ordered_json;
using ggraph::ErrorCode;

thread_local std::string last_error;

gg_status StatusOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParameter: return GG_ERR_INVALID_PARAMETER;
    case ErrorCode::kSizeLimit: return GG_ERR_SIZE_LIMIT;
    case ErrorCode::kClosureOverflow: return GG_ERR_CLOSURE_OVERFLOW;
    case ErrorCode::kNotGenerating: return GG_ERR_NOT_GENERATING;
    case ErrorCode::kInvalidPartition: return GG_ERR_INVALID_PARTITION;
    case ErrorCode::kInvalidInput: return GG_ERR_INVALID_INPUT;
    case ErrorCode::kInvalidMatrix: return GG_ERR_INVALID_MATRIX;
    case ErrorCode::kInvalidPair: return GG_ERR_INVALID_PAIR;
    case ErrorCode::kTooLarge: return GG_ERR_TOO_LARGE;
    case ErrorCode::kParse: return GG_ERR_PARSE;
    case ErrorCode::kIo: return GG_ERR_IO;
    case ErrorCode::kOverflow: return GG_ERR_OVERFLOW;
  }
  return GG_ERR_INTERNAL;
}

template <typename F>
gg_status Guard(F&& body) {
  try {
    body();
    return GG_OK;
  } catch (const ggraph::Error& e) {
    last_error = e.what();
    return StatusOf(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return GG_ERR_INTERNAL;
}

void Require(bool ok, const char* what) {
  if (!ok) throw ggraph::Error(ErrorCode::kInvalidParameter, what);
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

double Round6(double x) {
  double r = std::round(x * 1e6) / 1e6;
  return r == 0 ? 0.0 : r;
}

template <typename T>
json OptionalJson(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

// Rebuilds the group data behind a loaded G-graph document; silently leaves
// the graph plain if the metadata does not reproduce the same document.
void TryRebuild(gg_graph& g) {
  if (g.doc.kind != "ggraph" || g.doc.metadata.group_spec.empty()) return;
  try {
    auto table = std::make_shared<const ggraph::GroupTable>(ggraph::ParseGroupSpec(g.doc.metadata.group_spec));
    std::vector<ggraph::Element> seq;
    for (const auto& label : g.doc.metadata.generators) seq.push_back(ggraph::ResolveElement(*table, label));
    ggraph::GenSequence s(*table, seq);
    ggraph::GGraph built = ggraph::BuildGGraph(*table, s);
    if (ggraph::DocumentFromGGraph(*table, s, built, g.doc.metadata.group_spec) != g.doc) return;
    g.group = std::move(table);
    g.gens.emplace(std::move(s));
    g.gg.emplace(std::move(built));
  } catch (const std::exception&) {
  }
}

ggraph::AdjMatrix MatrixOf(const gg_graph& g) {
  if (g.gg) return ggraph::AdjacencyMatrix(*g.gg);
  ggraph::AdjMatrix m = ggraph::AdjacencyMatrix(g.doc.graph());
  // Blocks only when the classes occupy consecutive id ranges.
  std::vector<std::size_t> starts;
  std::size_t next = 0;
  bool contiguous = g.doc.partitions.size() >= 2;
  for (const auto& p : g.doc.partitions) {
    starts.push_back(next);
    for (const auto& v : p.vertices) contiguous = contiguous && v.id == next++;
  }
  if (contiguous) {
    starts.push_back(next);
    m.block_starts = std::move(starts);
  }
  return m;
}

json VerdictJson(const ggraph::CharacterizationVerdict& v) {
  json j;
  j["status"] = ggraph::VerdictName(v.status);
  j["k"] = v.k;
  j["class_sizes"] = v.class_sizes;
  j["class_degrees"] = v.class_degrees;
  j["group_order"] = OptionalJson(v.group_order);
  j["gen_orders"] = v.gen_orders;
  j["order_constraints_presentation"] = v.presentation;
  j["reason"] = v.refusal_reason;
  j["partition"] = v.partition;
  j["search_log"] = v.search_log;
  return j;
}

gg_verdict VerdictOf(ggraph::VerdictStatus s) {
  switch (s) {
    case ggraph::VerdictStatus::kAccept: return GG_VERDICT_ACCEPT;
    case ggraph::VerdictStatus::kRefuse: return GG_VERDICT_REFUSE;
    case ggraph::VerdictStatus::kUndetermined: return GG_VERDICT_UNDETERMINED;
  }
  return GG_VERDICT_UNDETERMINED;
}

ggraph::Partition ParsePartitionList(const std::string& text, std::size_t n) {
  std::string spaced = text;
  for (char& c : spaced)
    if (c == ',') c = ' ';
  std::istringstream in(spaced);
  ggraph::Partition p;
  long long x;
  while (in >> x) {
    if (x < 0) throw ggraph::Error(ErrorCode::kInvalidPartition, "negative class index");
    p.push_back(static_cast<std::uint32_t>(x));
  }
  if (!in.eof()) throw ggraph::Error(ErrorCode::kParse, "partition must be a list of class indices");
  if (p.size() != n)
    throw ggraph::Error(ErrorCode::kInvalidPartition, "partition lists " + std::to_string(p.size()) +
                                                          " classes for " + std::to_string(n) + " vertices");
  return p;
}

std::string Serialize(const ggraph::GraphDocument& doc, gg_format format) {
  switch (format) {
    case GG_FORMAT_JSON: return ggraph::ToJson(doc);
    case GG_FORMAT_DOT: return ggraph::ToDot(doc);
    case GG_FORMAT_EDGES: return ggraph::ToEdgeList(doc);
  }
  throw ggraph::Error(ErrorCode::kInvalidParameter, "unknown format");
}

}  // namespace

extern "C" {

const char* gg_version(void) { return "1.0.0"; }

const char* gg_last_error(void) { return last_error.c_str(); }

const char* gg_status_name(gg_status status) {
  switch (status) {
    case GG_OK: return "ok";
    case GG_ERR_INVALID_PARAMETER: return "invalid-parameter";
    case GG_ERR_SIZE_LIMIT: return "size-limit";
    case GG_ERR_CLOSURE_OVERFLOW: return "closure-overflow";
    case GG_ERR_NOT_GENERATING: return "not-generating";
    case GG_ERR_INVALID_PARTITION: return "invalid-partition";
    case GG_ERR_INVALID_INPUT: return "invalid-input";
    case GG_ERR_INVALID_MATRIX: return "invalid-matrix";
    case GG_ERR_INVALID_PAIR: return "invalid-pair";
    case GG_ERR_TOO_LARGE: return "too-large";
    case GG_ERR_PARSE: return "parse";
    case GG_ERR_IO: return "io";
    case GG_ERR_OVERFLOW: return "overflow";
    case GG_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void gg_string_free(char* s) { std::free(s); }

gg_status gg_group_parse(const char* spec, gg_group** out) {
  return Guard([&] {
    Require(spec && out, "null argument");
    *out = nullptr;
    *out = new gg_group{spec, ggraph::ParseGroupSpec(spec)};
  });
}

void gg_group_free(gg_group* group) { delete group; }

size_t gg_group_order(const gg_group* group) { return group ? group->table.order() : 0; }

gg_status gg_graph_build(const gg_group* group, const char* generators, gg_graph** out) {
  return Guard([&] {
    Require(group && generators && out, "null argument");
    *out = nullptr;
    auto g = std::make_unique<gg_graph>();
    g->group = std::make_shared<const ggraph::GroupTable>(group->table);
    g->gens.emplace(*g->group, ggraph::ResolveGenerators(*g->group, generators));
    g->gg.emplace(ggraph::BuildGGraph(*g->group, *g->gens));
    g->doc = ggraph::DocumentFromGGraph(*g->group, *g->gens, *g->gg, group->spec);
    *out = g.release();
  });
}

gg_status gg_graph_parse(const char* text, gg_graph** out) {
  return Guard([&] {
    Require(text && out, "null argument");
    *out = nullptr;
    auto g = std::make_unique<gg_graph>();
    g->doc = ggraph::ParseDocument(text);
    TryRebuild(*g);
    *out = g.release();
  });
}

gg_status gg_graph_load(const char* path, gg_graph** out) {
  return Guard([&] {
    Require(path && out, "null argument");
    *out = nullptr;
    auto g = std::make_unique<gg_graph>();
    g->doc = ggraph::LoadDocument(path);
    TryRebuild(*g);
    *out = g.release();
  });
}

gg_status gg_graph_ball(const char* group, size_t radius, gg_graph** out) {
  return Guard([&] {
    Require(group && out, "null argument");
    *out = nullptr;
    const std::string name = group;
    ggraph::BallGraph ball;
    if (name == "sl2z") ball = ggraph::Sl2zBall(radius);
    else if (name == "affine") ball = ggraph::AffineBall(radius);
    else throw ggraph::Error(ErrorCode::kParse, "infinite group must be 'sl2z' or 'affine', got '" + name + "'");
    auto g = std::make_unique<gg_graph>();
    g->doc = ggraph::DocumentFromBall(ball, name);
    *out = g.release();
  });
}

void gg_graph_free(gg_graph* graph) { delete graph; }

size_t gg_graph_vertex_count(const gg_graph* graph) { return graph ? graph->doc.vertex_count() : 0; }

uint64_t gg_graph_edge_multiplicity(const gg_graph* graph) {
  if (!graph) return 0;
  std::uint64_t total = 0;
  for (const auto& e : graph->doc.edges) total += e.multiplicity;
  return total;
}

gg_status gg_graph_serialize(const gg_graph* graph, gg_format format, char** out) {
  return Guard([&] {
    Require(graph && out, "null argument");
    *out = nullptr;
    *out = Dup(Serialize(graph->doc, format));
  });
}

gg_status gg_graph_save(const gg_graph* graph, gg_format format, const char* path) {
  return Guard([&] {
    Require(graph && path, "null argument");
    ggraph::WriteFile(path, Serialize(graph->doc, format));
  });
}

gg_status gg_graph_stats_json(const gg_graph* graph, char** out) {
  return Guard([&] {
    Require(graph && out, "null argument");
    *out = nullptr;
    json j;
    const ggraph::Multigraph mg = graph->doc.graph();
    j["vertex_count"] = mg.vertex_count();
    j["edge_records"] = mg.edges().size();
    j["edge_multiplicity"] = mg.total_multiplicity();
    if (graph->gg) {
      const auto predicted = ggraph::PredictStats(*graph->group, *graph->gens);
      const auto measured = ggraph::MeasureStats(*graph->gg);
      j["group_order"] = graph->group->order();
      j["gen_orders"] = graph->gens->orders();
      j["predicted"] = {{"class_vertex_counts", predicted.class_vertex_counts},
                        {"class_degrees", predicted.class_degrees},
                        {"total_vertices", predicted.total_vertices},
                        {"total_edge_multiplicity", predicted.total_edge_multiplicity}};
      json degrees = json::array();
      for (const auto& d : measured.class_degrees) degrees.push_back(OptionalJson(d));
      j["measured"] = {{"class_vertex_counts", measured.class_vertex_counts},
                       {"class_degrees", degrees},
                       {"total_vertices", measured.total_vertices},
                       {"total_edge_multiplicity", measured.total_edge_multiplicity}};
      j["matches"] = ggraph::Matches(predicted, measured);
    }
    *out = Dup(j.dump(2) + "\n");
  });
}

gg_status gg_graph_analyze_json(const gg_graph* graph, char** out) {
  return Guard([&] {
    Require(graph && out, "null argument");
    *out = nullptr;
    const ggraph::Multigraph mg = graph->doc.graph();
    const auto partition = graph->doc.partition();
    const ggraph::StructureReport r =
        ggraph::Analyze(mg, partition ? *partition : ggraph::Partition(mg.vertex_count(), 0));
    json j;
    j["vertex_count"] = mg.vertex_count();
    j["edge_multiplicity"] = mg.total_multiplicity();
    j["k"] = partition ? graph->doc.partitions.size() : 1;
    j["is_k_partite_valid"] = r.is_k_partite_valid;
    j["per_class_degree_uniform"] = r.per_class_degree_uniform;
    json degrees = json::array();
    for (const auto& d : r.class_degrees) degrees.push_back(OptionalJson(d));
    j["class_degrees"] = degrees;
    j["connected"] = r.connected;
    j["eulerian"] = r.eulerian;
    j["bipartite"] = r.bipartite;
    j["biregular"] = r.biregular;
    j["biregular_degrees"] =
        r.biregular_degrees ? json::array({r.biregular_degrees->first, r.biregular_degrees->second}) : json(nullptr);
    j["family"] = mg.vertex_count() <= ggraph::kMaxIsoVertices ? ggraph::RecognizeFamily(mg).ToString()
                                                               : std::string("unknown (too large)");
    *out = Dup(j.dump(2) + "\n");
  });
}

gg_status gg_graph_spectrum_json(const gg_graph* graph, char** out) {
  return Guard([&] {
    Require(graph && out, "null argument");
    *out = nullptr;
    const ggraph::AdjMatrix m = MatrixOf(*graph);
    const ggraph::SpectrumReport r = ggraph::Spectrum(m);
    json j;
    j["dimension"] = r.dimension;
    j["eigenvalues"] = json::array();
    for (const auto& e : r.eigenvalues)
      j["eigenvalues"].push_back({{"value", Round6(e.value)}, {"multiplicity", e.multiplicity}});
    j["distinct_count"] = r.distinct_count;
    j["energy"] = Round6(r.energy);
    j["energy_class"] = ggraph::EnergyClassName(r.energy_class);
    j["energy_at_least_n"] = r.energy_at_least_n;
    j["energy_equals_2n_minus_2"] = r.energy_equals_2n_minus_2;
    if (graph->gg) {
      const ggraph::MatrixDiagnostics d = ggraph::DiagnoseMatrix(m, *graph->gg);
      json sums = json::array(), orders = json::array();
      for (const auto& s : d.block_row_sums) sums.push_back(OptionalJson(s));
      for (const auto& o : d.derived_orders) orders.push_back(OptionalJson(o));
      j["diagnostics"] = {{"row_sums_match_degrees", d.row_sums_match_degrees},
                          {"blocks_uniform", d.blocks_uniform},
                          {"block_row_sums", sums},
                          {"derived_orders", orders},
                          {"derived_orders_match", d.derived_orders_match},
                          {"edge_count", d.edge_count},
                          {"edge_count_matches", d.edge_count_matches},
                          {"off_by_one", d.off_by_one},
                          {"not_a_ggraph", d.not_a_ggraph}};
    }
    *out = Dup(j.dump(2) + "\n");
  });
}

gg_status gg_graph_matrix_csv(const gg_graph* graph, char** out) {
  return Guard([&] {
    Require(graph && out, "null argument");
    *out = nullptr;
    *out = Dup(ggraph::MatrixCsv(MatrixOf(*graph)));
  });
}

gg_status gg_graph_characterize_json(const gg_graph* graph, const char* partition, int witness,
                                     gg_verdict* verdict, char** out) {
  return Guard([&] {
    Require(graph && out, "null argument");
    *out = nullptr;
    const ggraph::Multigraph mg = graph->doc.graph();
    ggraph::CharacterizationVerdict v;
    const std::string mode = partition ? partition : "";
    if (!partition) v = ggraph::Characterize(mg, graph->doc.partition());
    else if (mode == "auto") v = ggraph::Characterize(mg);
    else if (mode == "bipartite") v = ggraph::CharacterizeBipartite(mg);
    else v = ggraph::Characterize(mg, ParsePartitionList(mode, mg.vertex_count()));
    json j = VerdictJson(v);
    if (witness) {
      json w = {{"found", false}};
      if (v.status == ggraph::VerdictStatus::kAccept && mg.vertex_count() <= ggraph::kMaxIsoVertices) {
        auto hits = ggraph::WitnessSearch(v, mg, 1);
        if (!hits.empty()) {
          json gens = json::array();
          for (auto x : hits[0].generators) gens.push_back(hits[0].group.label(x));
          w = {{"found", true}, {"group_spec", hits[0].group_spec}, {"generators", gens}};
        }
      }
      j["witness"] = w;
    }
    if (verdict) *verdict = VerdictOf(v.status);
    *out = Dup(j.dump(2) + "\n");
  });
}

gg_status gg_turan_verdict_json(size_t n, size_t r, gg_verdict* verdict, char** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    *out = nullptr;
    const ggraph::CharacterizationVerdict v = ggraph::TuranVerdict(n, r);
    if (verdict) *verdict = VerdictOf(v.status);
    *out = Dup(VerdictJson(v).dump(2) + "\n");
  });
}

gg_status gg_graph_are_isomorphic(const gg_graph* a, const gg_graph* b, int* out) {
  return Guard([&] {
    Require(a && b && out, "null argument");
    *out = ggraph::AreIsomorphic(a->doc.graph(), b->doc.graph()) ? 1 : 0;
  });
}

int gg_is_locally_finite(const int64_t* orders, size_t count) {
  std::vector<std::optional<std::uint64_t>> v;
  for (size_t i = 0; i < count; ++i)
    v.push_back(orders[i] > 0 ? std::optional<std::uint64_t>(static_cast<std::uint64_t>(orders[i])) : std::nullopt);
  return ggraph::IsLocallyFinite(v) ? 1 : 0;
}

}  // extern "C"
