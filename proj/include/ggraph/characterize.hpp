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

// Deciding whether a finite graph is a G-graph.
//
// A connected graph with a proper k-partition V_1..V_k is a G-graph for some
// group of order |G| = 2|E| / (k(k-1)) with generator orders
// o_i = n_i / (k-1) when every class V_i is degree-uniform with degree n_i,
// m_i * n_i = 2|E| / k, and both quotients are integers. A further necessary
// condition is applied: if every o_i is 1 the group is trivial, so |G| = 1.

#ifndef GGRAPH_CHARACTERIZE_HPP_
#define GGRAPH_CHARACTERIZE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ggraph/group.hpp"
#include "ggraph/multigraph.hpp"

namespace ggraph {

enum class VerdictStatus { kAccept, kRefuse, kUndetermined };

const char* VerdictName(VerdictStatus status);

struct CharacterizationVerdict {
  VerdictStatus status = VerdictStatus::kUndetermined;
  std::size_t k = 0;
  std::vector<std::size_t> class_sizes;
  std::vector<std::uint64_t> class_degrees;  // 0 for a mixed class
  std::optional<std::uint64_t> group_order;
  std::vector<std::uint64_t> gen_orders;     // filled only when all integral
  std::string presentation;                  // order constraints only
  std::string refusal_reason;
  Partition partition;                       // the partition judged
  std::vector<std::string> search_log;       // one line per k tried
};

struct SearchLimits {
  std::size_t max_k = 6;
  std::size_t max_vertices = 64;
  std::uint64_t node_budget = 20'000'000;
};

// With a partition: judges that partition (throws Error(kInvalidPartition)
// if it is not a proper partition into classes 0..k-1). Without one: searches
// proper colourings for k = 2..max_k.
CharacterizationVerdict Characterize(const Multigraph& g,
                                     const std::optional<Partition>& partition = std::nullopt,
                                     const SearchLimits& limits = {});

// Connected bipartite graphs: ACCEPT iff biregular. Classes are listed by
// ascending degree. Throws Error(kInvalidInput) if g is not connected and
// bipartite.
CharacterizationVerdict CharacterizeBipartite(const Multigraph& g);

// Regular Turan graphs, T(n, 2) and the non-regular refusals, from n and r.
CharacterizationVerdict TuranVerdict(std::size_t n, std::size_t r);

// Visits proper colourings with exactly k classes whose classes are
// degree-uniform, in canonical order (colours by first appearance along a BFS
// from vertex 0). Stops when fn returns false. Returns false if the node
// budget ran out.
bool ForEachUniformColoring(const Multigraph& g, std::size_t k,
                            const std::function<bool(const Partition&)>& fn,
                            std::uint64_t node_budget = 20'000'000);

struct Witness {
  std::string group_spec;
  GroupTable group;
  std::vector<Element> generators;
};

inline constexpr std::uint64_t kMaxWitnessSequences = 1'000'000;

// Searches a catalog of groups of order verdict.group_order for generating
// sequences with the verdict's order multiset whose G-graph is isomorphic to
// target. An empty result does not refute the verdict.
std::vector<Witness> WitnessSearch(const CharacterizationVerdict& verdict,
                                   const Multigraph& target, std::size_t max_hits = 1);

// Group specs tried by WitnessSearch for a given order.
std::vector<std::string> WitnessCatalog(std::uint64_t order);

}  // namespace ggraph

#endif  // GGRAPH_CHARACTERIZE_HPP_
