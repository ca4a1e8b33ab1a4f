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

#ifndef GGRAPH_MULTIGRAPH_HPP_
#define GGRAPH_MULTIGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ggraph {

using VertexId = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  std::uint64_t multiplicity = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Loopless undirected multigraph. Edges are stored once with u < v, sorted,
// and parallel edges are folded into a multiplicity.
class Multigraph {
 public:
  Multigraph() = default;
  // Duplicate pairs are summed. Throws Error(kInvalidInput) on loops,
  // zero multiplicities or out-of-range endpoints.
  Multigraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  // Neighbors of v with multiplicities, sorted by neighbor id.
  const std::vector<std::pair<VertexId, std::uint64_t>>& neighbors(VertexId v) const {
    return adjacency_[v];
  }
  std::uint64_t multiplicity(VertexId u, VertexId v) const;
  // Degree counts multiplicity.
  std::uint64_t degree(VertexId v) const { return degrees_[v]; }
  std::uint64_t total_multiplicity() const { return total_; }

  Multigraph Relabeled(std::span<const VertexId> new_id) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<VertexId, std::uint64_t>>> adjacency_;
  std::vector<std::uint64_t> degrees_;
  std::uint64_t total_ = 0;
};

bool IsConnected(const Multigraph& g);
// Side (0/1) per vertex if the graph is 2-colorable; on disconnected graphs
// each component's lowest vertex gets side 0.
std::optional<std::vector<int>> TwoColoring(const Multigraph& g);

// Class index per vertex.
using Partition = std::vector<std::uint32_t>;

// Reference graphs.
Multigraph CompleteGraph(std::size_t n);
Multigraph CycleGraph(std::size_t n);
Multigraph PathGraph(std::size_t n);
Multigraph CompleteBipartite(std::size_t m, std::size_t n, std::uint64_t multiplicity = 1);
// Complete r-partite graph with class sizes differing by at most one; the
// first n mod r classes are the larger ones.
Multigraph TuranGraph(std::size_t n, std::size_t r);
Partition TuranPartition(std::size_t n, std::size_t r);
Multigraph Hypercube(std::size_t d);
Multigraph Octahedron();
Multigraph Icosahedron();
Multigraph Dodecahedron();
// Cube corners 0..7 (degree 3) plus face centres 8..13 (degree 4).
Multigraph RhombicDodecahedron();

}  // namespace ggraph

#endif  // GGRAPH_MULTIGRAPH_HPP_
