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

#include "ggraph/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ggraph/error.hpp"

namespace ggraph {

StructureReport Analyze(const Multigraph& g, const Partition& partition) {
  if (partition.size() != g.vertex_count())
    throw Error(ErrorCode::kInvalidPartition, "partition size does not match vertex count");
  StructureReport r;
  r.is_k_partite_valid = std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return partition[e.u] == partition[e.v];
  });

  std::uint32_t k = partition.empty() ? 0 : *std::max_element(partition.begin(), partition.end()) + 1;
  r.class_degrees.assign(k, std::nullopt);
  std::vector<bool> mixed(k, false);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto& d = r.class_degrees[partition[v]];
    if (!d) d = g.degree(v);
    else if (*d != g.degree(v)) mixed[partition[v]] = true;
  }
  r.per_class_degree_uniform = true;
  for (std::uint32_t c = 0; c < k; ++c)
    if (mixed[c]) {
      r.class_degrees[c].reset();
      r.per_class_degree_uniform = false;
    }

  r.connected = IsConnected(g);
  bool all_even = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v) all_even = all_even && g.degree(v) % 2 == 0;
  r.eulerian = r.connected && all_even;

  auto sides = TwoColoring(g);
  r.bipartite = sides.has_value();
  if (sides && r.connected) {
    std::optional<std::uint64_t> deg[2];
    bool uniform = true;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto& d = deg[(*sides)[v]];
      if (!d) d = g.degree(v);
      else uniform = uniform && *d == g.degree(v);
    }
    if (uniform && deg[0] && deg[1]) {
      r.biregular = true;
      r.biregular_degrees = {{*deg[0], *deg[1]}};
    }
  }
  return r;
}

StructureReport Analyze(const GGraph& gg) { return Analyze(gg.graph(), gg.partition()); }

bool CheckSubgroupSubgraph(const GroupTable& g, const GenSequence& s,
                           std::span<const std::size_t> h_positions) {
  if (h_positions.empty())
    throw Error(ErrorCode::kInvalidParameter, "subgroup generator positions must be non-empty");
  std::set<std::size_t> distinct(h_positions.begin(), h_positions.end());
  if (distinct.size() != h_positions.size() || *distinct.rbegin() >= s.size())
    throw Error(ErrorCode::kInvalidParameter, "subgroup positions must be distinct positions of S");

  std::vector<Element> h_gens;
  for (std::size_t p : h_positions) h_gens.push_back(s[p]);
  const std::vector<Element> members = GeneratedSubgroup(g, h_gens);
  std::map<Element, Element> to_h;
  for (Element i = 0; i < members.size(); ++i) to_h[members[i]] = i;

  const GroupTable h = MakeSubgroup(g, members);
  std::vector<Element> h_seq;
  for (Element x : h_gens) h_seq.push_back(to_h.at(x));
  const GGraph small = BuildGGraph(h, GenSequence(h, h_seq));
  const GGraph big = BuildGGraph(g, s);

  // Vertices of the big graph in the chosen classes lying inside H.
  std::vector<bool> in_h(g.order(), false);
  for (Element x : members) in_h[x] = true;
  std::set<VertexId> inside;
  for (std::size_t p : h_positions) {
    const PartitionClass& pc = big.classes()[p];
    for (std::size_t c = 0; c < pc.cosets.size(); ++c) {
      const auto& els = pc.cosets[c].elements;
      if (std::all_of(els.begin(), els.end(), [&](Element x) { return in_h[x]; }))
        inside.insert(pc.first_vertex + static_cast<VertexId>(c));
    }
  }

  // Identify each small-graph vertex with the big-graph coset of equal
  // element set in the matching class.
  std::vector<VertexId> image(small.vertex_count());
  for (VertexId v = 0; v < small.vertex_count(); ++v) {
    const PartitionClass& big_class = big.classes()[h_positions[small.class_of(v)]];
    std::vector<Element> els;
    for (Element x : small.coset(v).elements) els.push_back(members[x]);
    auto it = std::find_if(big_class.cosets.begin(), big_class.cosets.end(),
                           [&](const Coset& c) { return c.elements == els; });
    if (it == big_class.cosets.end()) return false;
    image[v] = big_class.first_vertex + static_cast<VertexId>(it - big_class.cosets.begin());
  }
  std::set<VertexId> image_set(image.begin(), image.end());
  if (image_set != inside) return false;

  std::size_t induced_edges = 0;
  for (const Edge& e : big.edges())
    if (inside.contains(e.u) && inside.contains(e.v)) ++induced_edges;
  if (induced_edges != small.edges().size()) return false;
  for (const Edge& e : small.edges())
    if (big.graph().multiplicity(image[e.u], image[e.v]) != e.multiplicity) return false;
  return true;
}

}  // namespace ggraph
