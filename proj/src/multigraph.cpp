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

#include "ggraph/multigraph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ggraph/error.hpp"

namespace ggraph {

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : adjacency_(vertex_count), degrees_(vertex_count, 0) {
  std::map<std::pair<VertexId, VertexId>, std::uint64_t> folded;
  for (const Edge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count)
      throw Error(ErrorCode::kInvalidInput, "edge endpoint out of range");
    if (e.u == e.v)
      throw Error(ErrorCode::kInvalidInput, "loop at vertex " + std::to_string(e.u));
    if (e.multiplicity == 0) throw Error(ErrorCode::kInvalidInput, "zero edge multiplicity");
    folded[{std::min(e.u, e.v), std::max(e.u, e.v)}] += e.multiplicity;
  }
  edges_.reserve(folded.size());
  for (const auto& [key, m] : folded) {
    edges_.push_back({key.first, key.second, m});
    adjacency_[key.first].emplace_back(key.second, m);
    adjacency_[key.second].emplace_back(key.first, m);
    degrees_[key.first] += m;
    degrees_[key.second] += m;
    total_ += m;
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

std::uint64_t Multigraph::multiplicity(VertexId u, VertexId v) const {
  const auto& row = adjacency_[u];
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(v, std::uint64_t{0}));
  return (it != row.end() && it->first == v) ? it->second : 0;
}

Multigraph Multigraph::Relabeled(std::span<const VertexId> new_id) const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back({new_id[e.u], new_id[e.v], e.multiplicity});
  return Multigraph(vertex_count(), std::move(out));
}

bool IsConnected(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const auto& [w, m] : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::optional<std::vector<int>> TwoColoring(const Multigraph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::vector<VertexId> stack{start};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (const auto& [w, m] : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

Multigraph CompleteGraph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
  return Multigraph(n, std::move(edges));
}

Multigraph CycleGraph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) edges.push_back({u, static_cast<VertexId>((u + 1) % n), 1});
  return Multigraph(n, std::move(edges));
}

Multigraph PathGraph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1, 1});
  return Multigraph(n, std::move(edges));
}

Multigraph CompleteBipartite(std::size_t m, std::size_t n, std::uint64_t multiplicity) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < m; ++u)
    for (VertexId v = 0; v < n; ++v)
      edges.push_back({u, static_cast<VertexId>(m + v), multiplicity});
  return Multigraph(m + n, std::move(edges));
}

Partition TuranPartition(std::size_t n, std::size_t r) {
  Partition part;
  const std::size_t small = n / r;
  const std::size_t big_classes = n % r;
  for (std::uint32_t c = 0; c < r; ++c) {
    std::size_t size = small + (c < big_classes ? 1 : 0);
    part.insert(part.end(), size, c);
  }
  return part;
}

Multigraph TuranGraph(std::size_t n, std::size_t r) {
  if (r == 0 || r > n) throw Error(ErrorCode::kInvalidParameter, "Turan graph needs 1 <= r <= n");
  Partition part = TuranPartition(n, r);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (part[u] != part[v]) edges.push_back({u, v, 1});
  return Multigraph(n, std::move(edges));
}

Multigraph Hypercube(std::size_t d) {
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (std::size_t bit = 0; bit < d; ++bit) {
      VertexId v = u ^ (VertexId{1} << bit);
      if (u < v) edges.push_back({u, v, 1});
    }
  return Multigraph(n, std::move(edges));
}

Multigraph Octahedron() { return TuranGraph(6, 3); }

namespace {

Multigraph FromPairs(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v, 1});
  return Multigraph(n, std::move(edges));
}

}  // namespace

Multigraph Icosahedron() {
  return FromPairs(12, {{0, 1}, {0, 5}, {0, 7}, {0, 8}, {0, 11}, {1, 2}, {1, 5}, {1, 6},
                        {1, 8}, {2, 3}, {2, 6}, {2, 8}, {2, 9}, {3, 4}, {3, 6}, {3, 9},
                        {3, 10}, {4, 5}, {4, 6}, {4, 10}, {4, 11}, {5, 6}, {5, 11}, {7, 8},
                        {7, 9}, {7, 10}, {7, 11}, {8, 9}, {9, 10}, {10, 11}});
}

Multigraph Dodecahedron() {
  return FromPairs(20, {{0, 1}, {0, 10}, {0, 19}, {1, 2}, {1, 8}, {2, 3}, {2, 6}, {3, 4},
                        {3, 19}, {4, 5}, {4, 17}, {5, 6}, {5, 15}, {6, 7}, {7, 8}, {7, 14},
                        {8, 9}, {9, 10}, {9, 13}, {10, 11}, {11, 12}, {11, 18}, {12, 13},
                        {12, 16}, {13, 14}, {14, 15}, {15, 16}, {16, 17}, {17, 18}, {18, 19}});
}

Multigraph RhombicDodecahedron() {
  // Corner c has coordinates (c&1, c>>1&1, c>>2&1); face 2*axis+side holds
  // the corners whose coordinate on that axis equals side.
  std::vector<Edge> edges;
  for (VertexId axis = 0; axis < 3; ++axis)
    for (VertexId side = 0; side < 2; ++side)
      for (VertexId c = 0; c < 8; ++c)
        if (((c >> axis) & 1) == side) edges.push_back({c, 8 + 2 * axis + side, 1});
  return Multigraph(14, std::move(edges));
}

}  // namespace ggraph
