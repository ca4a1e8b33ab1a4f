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

// The loopless G-graph of a group G with generating sequence S: one
// partition class per position of S, whose vertices are the right cosets of
// that generator's cyclic subgroup; two cosets from different classes are
// joined by as many edges as they share elements.

#ifndef GGRAPH_GGRAPH_HPP_
#define GGRAPH_GGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ggraph/group.hpp"
#include "ggraph/multigraph.hpp"

namespace ggraph {

struct PartitionClass {
  std::size_t gen_position = 0;
  Element generator = 0;
  std::size_t gen_order = 0;
  VertexId first_vertex = 0;
  std::vector<Coset> cosets;  // ordered by representative
};

class GGraph {
 public:
  GGraph(std::size_t group_order, std::vector<PartitionClass> classes, std::vector<Edge> edges);

  std::size_t k() const { return classes_.size(); }
  std::size_t group_order() const { return group_order_; }
  std::size_t vertex_count() const { return class_of_.size(); }
  const std::vector<PartitionClass>& classes() const { return classes_; }
  // u < v, sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<std::size_t> gen_orders() const;

  std::uint32_t class_of(VertexId v) const { return class_of_[v]; }
  const Coset& coset(VertexId v) const;
  const Partition& partition() const { return class_of_; }
  const Multigraph& graph() const { return graph_; }

 private:
  std::size_t group_order_;
  std::vector<PartitionClass> classes_;
  std::vector<Edge> edges_;
  Partition class_of_;
  Multigraph graph_;
};

// Vertices are numbered class by class, cosets within a class by canonical
// representative.
GGraph BuildGGraph(const GroupTable& g, const GenSequence& s);

struct PredictedStats {
  std::vector<std::size_t> class_vertex_counts;  // |G| / o(s_i)
  std::vector<std::size_t> class_degrees;        // o(s_i) (k - 1)
  std::size_t total_vertices = 0;
  std::uint64_t total_edge_multiplicity = 0;     // k(k-1)/2 |G|

  friend bool operator==(const PredictedStats&, const PredictedStats&) = default;
};

PredictedStats PredictStats(const GroupTable& g, const GenSequence& s);

// The same quantities measured on a built graph. A class whose vertices
// disagree on degree reports std::nullopt for that class.
struct MeasuredStats {
  std::vector<std::size_t> class_vertex_counts;
  std::vector<std::optional<std::size_t>> class_degrees;
  std::size_t total_vertices = 0;
  std::uint64_t total_edge_multiplicity = 0;
};

MeasuredStats MeasureStats(const GGraph& gg);
bool Matches(const PredictedStats& predicted, const MeasuredStats& measured);

}  // namespace ggraph

#endif  // GGRAPH_GGRAPH_HPP_
