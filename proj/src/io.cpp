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

#include "ggraph/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ggraph/error.hpp"

namespace ggraph {

using json = nlohmann::ordered_json;

namespace {

std::string TupleLabel(const std::vector<std::int64_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

[[noreturn]] void Fail(const std::string& what) { throw Error(ErrorCode::kParse, what); }

// Vertex ids must be exactly 0..n-1, each in one partition.
void CheckDense(const GraphDocument& doc) {
  const std::size_t n = doc.vertex_count();
  std::vector<bool> seen(n, false);
  for (const auto& p : doc.partitions)
    for (const auto& v : p.vertices) {
      if (v.id >= n || seen[v.id]) Fail("vertex ids must be dense from 0 and unique");
      seen[v.id] = true;
    }
  for (const Edge& e : doc.edges) {
    if (e.u >= e.v) Fail("edge records need u < v");
    if (e.v >= n) Fail("edge endpoint " + std::to_string(e.v) + " is not a vertex");
    if (e.multiplicity == 0) Fail("edge multiplicity must be positive");
  }
}

}  // namespace

std::size_t GraphDocument::vertex_count() const {
  std::size_t n = 0;
  for (const auto& p : partitions) n += p.vertices.size();
  return n;
}

Multigraph GraphDocument::graph() const { return Multigraph(vertex_count(), edges); }

std::optional<Partition> GraphDocument::partition() const {
  if (partitions.size() < 2) return std::nullopt;
  Partition p(vertex_count());
  for (std::uint32_t c = 0; c < partitions.size(); ++c)
    for (const auto& v : partitions[c].vertices) p[v.id] = c;
  return p;
}

GraphDocument DocumentFromGGraph(const GroupTable& g, const GenSequence& s, const GGraph& gg,
                                 std::string group_spec) {
  GraphDocument doc;
  doc.kind = "ggraph";
  for (const PartitionClass& pc : gg.classes()) {
    DocPartition part;
    part.label = g.label(pc.generator);
    part.gen_order = pc.gen_order;
    for (std::size_t c = 0; c < pc.cosets.size(); ++c) {
      DocVertex v;
      v.id = pc.first_vertex + static_cast<VertexId>(c);
      for (Element x : pc.cosets[c].elements) v.coset_labels.push_back(g.label(x));
      part.vertices.push_back(std::move(v));
    }
    doc.partitions.push_back(std::move(part));
  }
  doc.edges = gg.edges();
  doc.metadata.group_spec = std::move(group_spec);
  for (std::size_t i = 0; i < s.size(); ++i) doc.metadata.generators.push_back(g.label(s[i]));
  doc.metadata.group_order = g.order();
  return doc;
}

GraphDocument DocumentFromGraph(const Multigraph& g, const std::optional<Partition>& partition) {
  GraphDocument doc;
  doc.kind = "plain";
  std::size_t k = 1;
  if (partition) {
    if (partition->size() != g.vertex_count())
      throw Error(ErrorCode::kInvalidPartition, "partition size does not match vertex count");
    if (!partition->empty()) k = *std::max_element(partition->begin(), partition->end()) + std::size_t{1};
  }
  doc.partitions.resize(g.vertex_count() == 0 ? 0 : k);
  for (std::size_t c = 0; c < doc.partitions.size(); ++c)
    doc.partitions[c].label = partition ? "V" + std::to_string(c + 1) : "V";
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    doc.partitions[partition ? (*partition)[v] : 0].vertices.push_back({v, {}, std::nullopt});
  doc.edges = g.edges();
  return doc;
}

GraphDocument DocumentFromBall(const BallGraph& ball, std::string group_spec) {
  GraphDocument doc;
  doc.kind = "ball";
  doc.partitions.resize(2);
  for (std::uint32_t c = 0; c < 2; ++c) {
    doc.partitions[c].gen_order = ball.gen_orders[c];
    doc.partitions[c].label = "s" + std::to_string(c + 1);
  }
  for (VertexId v = 0; v < ball.vertices.size(); ++v) {
    const BallVertex& bv = ball.vertices[v];
    DocVertex dv;
    dv.id = v;
    for (const auto& t : bv.elements) dv.coset_labels.push_back(TupleLabel(t));
    dv.interior = bv.interior;
    doc.partitions[bv.class_id].vertices.push_back(std::move(dv));
  }
  doc.edges = ball.edges;
  doc.metadata.group_spec = std::move(group_spec);
  doc.metadata.generators = {doc.partitions[0].label, doc.partitions[1].label};
  doc.metadata.radius = ball.radius;
  return doc;
}

std::string ToJson(const GraphDocument& doc) {
  json j;
  j["schema_version"] = doc.schema_version;
  j["kind"] = doc.kind;
  j["partitions"] = json::array();
  for (const auto& p : doc.partitions) {
    json jp;
    jp["label"] = p.label;
    jp["gen_order"] = p.gen_order ? json(*p.gen_order) : json(nullptr);
    jp["vertices"] = json::array();
    for (const auto& v : p.vertices) {
      json jv = {{"id", v.id}, {"coset_labels", v.coset_labels}};
      if (v.interior) jv["interior"] = *v.interior;
      jp["vertices"].push_back(std::move(jv));
    }
    j["partitions"].push_back(std::move(jp));
  }
  j["edges"] = json::array();
  for (const Edge& e : doc.edges) j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"multiplicity", e.multiplicity}});
  json meta;
  meta["group_spec"] = doc.metadata.group_spec;
  meta["generators"] = doc.metadata.generators;
  meta["group_order"] = doc.metadata.group_order ? json(*doc.metadata.group_order) : json(nullptr);
  if (doc.metadata.radius) meta["radius"] = *doc.metadata.radius;
  j["metadata"] = std::move(meta);
  return j.dump(2) + "\n";
}

GraphDocument FromJson(std::string_view text) {
  GraphDocument doc;
  try {
    const json j = json::parse(text);
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != "1") Fail("unsupported schema_version '" + doc.schema_version + "'");
    doc.kind = j.at("kind").get<std::string>();
    if (doc.kind != "ggraph" && doc.kind != "plain" && doc.kind != "ball") Fail("unknown kind '" + doc.kind + "'");
    for (const json& jp : j.at("partitions")) {
      DocPartition p;
      p.label = jp.at("label").get<std::string>();
      if (jp.contains("gen_order") && !jp["gen_order"].is_null()) p.gen_order = jp["gen_order"].get<std::uint64_t>();
      for (const json& jv : jp.at("vertices")) {
        DocVertex v;
        v.id = jv.at("id").get<VertexId>();
        if (jv.contains("coset_labels")) v.coset_labels = jv["coset_labels"].get<std::vector<std::string>>();
        if (jv.contains("interior")) v.interior = jv["interior"].get<bool>();
        p.vertices.push_back(std::move(v));
      }
      doc.partitions.push_back(std::move(p));
    }
    for (const json& je : j.at("edges"))
      doc.edges.push_back({je.at("u").get<VertexId>(), je.at("v").get<VertexId>(),
                           je.value("multiplicity", std::uint64_t{1})});
    if (j.contains("metadata")) {
      const json& m = j["metadata"];
      doc.metadata.group_spec = m.value("group_spec", std::string());
      if (m.contains("generators")) doc.metadata.generators = m["generators"].get<std::vector<std::string>>();
      if (m.contains("group_order") && !m["group_order"].is_null())
        doc.metadata.group_order = m["group_order"].get<std::uint64_t>();
      if (m.contains("radius") && !m["radius"].is_null()) doc.metadata.radius = m["radius"].get<std::uint64_t>();
    }
  } catch (const json::exception& e) {
    Fail(std::string("invalid graph JSON: ") + e.what());
  }
  CheckDense(doc);
  return doc;
}

std::string ToEdgeList(const GraphDocument& doc) {
  std::ostringstream out;
  out << "vertices: " << doc.vertex_count() << "\n";
  if (doc.partitions.size() >= 2)
    for (const auto& p : doc.partitions) {
      out << "partition:";
      for (const auto& v : p.vertices) out << ' ' << v.id;
      out << "\n";
    }
  for (const Edge& e : doc.edges) {
    out << e.u << ' ' << e.v;
    if (e.multiplicity != 1) out << ' ' << e.multiplicity;
    out << "\n";
  }
  return out.str();
}

GraphDocument ParseEdgeList(std::string_view text) {
  std::vector<Edge> edges;
  std::vector<std::vector<VertexId>> classes;
  std::optional<std::size_t> declared;
  std::size_t n = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto bad = [&](const std::string& why) { Fail("line " + std::to_string(line_no) + ": " + why); };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first == "partition:" || first == "vertices:") {
      std::vector<long long> ids;
      long long x;
      while (fields >> x) ids.push_back(x);
      if (!fields.eof()) bad("expected integers after '" + first + "'");
      if (std::any_of(ids.begin(), ids.end(), [](long long id) { return id < 0; })) bad("negative id");
      if (first == "vertices:") {
        if (ids.size() != 1) bad("'vertices:' takes one count");
        declared = static_cast<std::size_t>(ids[0]);
      } else {
        classes.emplace_back(ids.begin(), ids.end());
        for (long long id : ids) n = std::max(n, static_cast<std::size_t>(id) + 1);
      }
      continue;
    }
    std::istringstream all(line);
    std::vector<long long> nums;
    long long x;
    while (all >> x) nums.push_back(x);
    if (!all.eof() || nums.size() < 2 || nums.size() > 3) bad("expected 'u v [multiplicity]'");
    if (nums[0] < 0 || nums[1] < 0) bad("negative vertex id");
    if (nums[0] == nums[1]) bad("loops are not allowed");
    const long long m = nums.size() == 3 ? nums[2] : 1;
    if (m <= 0) bad("multiplicity must be positive");
    edges.push_back({static_cast<VertexId>(nums[0]), static_cast<VertexId>(nums[1]), static_cast<std::uint64_t>(m)});
    n = std::max(n, static_cast<std::size_t>(std::max(nums[0], nums[1])) + 1);
  }
  if (declared) {
    if (*declared < n) Fail("'vertices:' count is smaller than the largest id");
    n = *declared;
  }

  std::optional<Partition> partition;
  if (!classes.empty()) {
    Partition p(n, static_cast<std::uint32_t>(-1));
    for (std::uint32_t c = 0; c < classes.size(); ++c)
      for (VertexId v : classes[c]) {
        if (v >= n || p[v] != static_cast<std::uint32_t>(-1)) Fail("vertex " + std::to_string(v) + " is in two partitions");
        p[v] = c;
      }
    if (std::find(p.begin(), p.end(), static_cast<std::uint32_t>(-1)) != p.end())
      Fail("partition lines must cover every vertex");
    if (classes.size() >= 2) partition = std::move(p);
  }
  try {
    return DocumentFromGraph(Multigraph(n, edges), partition);
  } catch (const Error& e) {
    Fail(e.what());
  }
}

std::string ToDot(const GraphDocument& doc) {
  static const char* kColors[] = {"lightblue", "salmon", "palegreen", "gold", "plum", "lightgray", "orange", "cyan"};
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "graph G {\n  node [style=filled];\n";
  for (std::size_t c = 0; c < doc.partitions.size(); ++c)
    for (const auto& v : doc.partitions[c].vertices) {
      const std::string label = v.coset_labels.empty() ? std::to_string(v.id) : v.coset_labels.front();
      out << "  " << v.id << " [label=" << quote(label) << ", fillcolor=" << kColors[c % 8] << "];\n";
    }
  for (const Edge& e : doc.edges)
    for (std::uint64_t i = 0; i < e.multiplicity; ++i) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

GraphDocument ParseDocument(std::string_view text) {
  auto first = std::find_if(text.begin(), text.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  if (first != text.end() && *first == '{') return FromJson(text);
  return ParseEdgeList(text);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << content;
  if (!out) throw Error(ErrorCode::kIo, "write failed for '" + path + "'");
}

GraphDocument LoadDocument(const std::string& path) { return ParseDocument(ReadFile(path)); }

}  // namespace ggraph
