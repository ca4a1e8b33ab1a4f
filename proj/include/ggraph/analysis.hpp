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

#ifndef GGRAPH_ANALYSIS_HPP_
#define GGRAPH_ANALYSIS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ggraph/ggraph.hpp"
#include "ggraph/multigraph.hpp"

namespace ggraph {

struct StructureReport {
  bool is_k_partite_valid = false;        // no edge inside a class
  bool per_class_degree_uniform = false;
  std::vector<std::optional<std::uint64_t>> class_degrees;  // nullopt if mixed
  bool connected = false;
  bool eulerian = false;                  // connected and all degrees even
  bool bipartite = false;
  bool biregular = false;
  // Degree on the side holding vertex 0, then the other side.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> biregular_degrees;
};

// Degrees count multiplicity throughout.
StructureReport Analyze(const Multigraph& g, const Partition& partition);
StructureReport Analyze(const GGraph& gg);

// Builds H = <h_positions> and Gamma(H, S_H) on its own, then checks that the
// cosets of Gamma(G, S) in the classes of h_positions lying wholly inside H
// induce exactly that graph (same coset sets, same multiplicities).
bool CheckSubgroupSubgraph(const GroupTable& g, const GenSequence& s,
                           std::span<const std::size_t> h_positions);

}  // namespace ggraph

#endif  // GGRAPH_ANALYSIS_HPP_
