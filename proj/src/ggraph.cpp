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

#include "ggraph/ggraph.hpp"

#include <algorithm>
#include <unordered_map>

#include "ggraph/error.hpp"

namespace ggraph {

GGraph::GGraph(std::size_t group_order, std::vector<PartitionClass> classes,
               std::vector<Edge> edges)
    : group_order_(group_order), classes_(std::move(classes)), edges_(std::move(edges)) {
  for (std::uint32_t c = 0; c < classes_.size(); ++c)
    class_of_.insert(class_of_.end(), classes_[c].cosets.size(), c);
  graph_ = Multigraph(class_of_.size(), edges_);
  edges_ = graph_.edges();
}

std::vector<std::size_t> GGraph::gen_orders() const {
  std::vector<std::size_t> out;
  for (const auto& c : classes_) out.push_back(c.gen_order);
  return out;
}

const Coset& GGraph::coset(VertexId v) const {
  const PartitionClass& c = classes_[class_of_[v]];
  return c.cosets[v - c.first_vertex];
}

GGraph BuildGGraph(const GroupTable& g, const GenSequence& s) {
  const std::size_t n = g.order();
  std::vector<PartitionClass> classes;
  // vertex_of[i][x] = vertex of class i whose coset contains x.
  std::vector<std::vector<VertexId>> vertex_of(s.size(), std::vector<VertexId>(n));
  VertexId next = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    PartitionClass pc;
    pc.gen_position = i;
    pc.generator = s[i];
    pc.gen_order = s.orders()[i];
    pc.first_vertex = next;
    pc.cosets = RightCosets(g, s[i], i);
    for (const Coset& c : pc.cosets) {
      for (Element x : c.elements) vertex_of[i][x] = next;
      ++next;
    }
    classes.push_back(std::move(pc));
  }
  // Every element contributes one unit of multiplicity to the pair of cosets
  // containing it, for each pair of classes.
  std::vector<Edge> edges;
  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      counts.clear();
      for (Element x = 0; x < n; ++x) {
        std::uint64_t key = (std::uint64_t{vertex_of[i][x]} << 32) | vertex_of[j][x];
        ++counts[key];
      }
      for (const auto& [key, m] : counts)
        edges.push_back({static_cast<VertexId>(key >> 32), static_cast<VertexId>(key), m});
    }
  }
  return GGraph(n, std::move(classes), std::move(edges));
}

PredictedStats PredictStats(const GroupTable& g, const GenSequence& s) {
  PredictedStats p;
  const std::size_t k = s.size();
  for (std::size_t o : s.orders()) {
    if (g.order() % o != 0) throw Error(ErrorCode::kInvalidParameter, "element order does not divide |G|");
    p.class_vertex_counts.push_back(g.order() / o);
    p.class_degrees.push_back(o * (k - 1));
    p.total_vertices += g.order() / o;
  }
  p.total_edge_multiplicity = static_cast<std::uint64_t>(k) * (k - 1) / 2 * g.order();
  return p;
}

MeasuredStats MeasureStats(const GGraph& gg) {
  MeasuredStats m;
  const Multigraph& graph = gg.graph();
  for (const auto& c : gg.classes()) {
    m.class_vertex_counts.push_back(c.cosets.size());
    std::optional<std::size_t> degree;
    bool uniform = true;
    for (VertexId v = c.first_vertex; v < c.first_vertex + c.cosets.size(); ++v) {
      std::size_t d = graph.degree(v);
      if (!degree) degree = d;
      else if (*degree != d) uniform = false;
    }
    m.class_degrees.push_back(uniform ? degree : std::nullopt);
  }
  m.total_vertices = gg.vertex_count();
  m.total_edge_multiplicity = graph.total_multiplicity();
  return m;
}

bool Matches(const PredictedStats& predicted, const MeasuredStats& measured) {
  if (predicted.class_vertex_counts != measured.class_vertex_counts) return false;
  if (predicted.class_degrees.size() != measured.class_degrees.size()) return false;
  for (std::size_t i = 0; i < predicted.class_degrees.size(); ++i)
    if (measured.class_degrees[i] != predicted.class_degrees[i]) return false;
  return predicted.total_vertices == measured.total_vertices &&
         predicted.total_edge_multiplicity == measured.total_edge_multiplicity;
}

}  // namespace ggraph
