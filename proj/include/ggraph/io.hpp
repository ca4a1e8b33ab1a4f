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

// Graph documents and their three text forms.
//
// JSON (schema_version "1"):
//   {"schema_version": "1", "kind": "ggraph" | "plain" | "ball",
//    "partitions": [{"label", "gen_order", "vertices": [{"id", "coset_labels"}]}],
//    "edges": [{"u", "v", "multiplicity"}],
//    "metadata": {"group_spec", "generators", "group_order"}}
// Ball vertices also carry "interior"; ball metadata carries "radius".
//
// Edge list: one "u v [multiplicity]" per line, 0-based ids, '#' comments,
// optional "vertices: N" and "partition: id id ..." header lines.
//
// A document with fewer than two partitions carries no partition.

#ifndef GGRAPH_IO_HPP_
#define GGRAPH_IO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ggraph/ggraph.hpp"
#include "ggraph/group.hpp"
#include "ggraph/infinite.hpp"
#include "ggraph/multigraph.hpp"

namespace ggraph {

struct DocVertex {
  VertexId id = 0;
  std::vector<std::string> coset_labels;
  std::optional<bool> interior;

  bool operator==(const DocVertex&) const = default;
};

struct DocPartition {
  std::string label;
  std::optional<std::uint64_t> gen_order;
  std::vector<DocVertex> vertices;

  bool operator==(const DocPartition&) const = default;
};

struct DocMetadata {
  std::string group_spec;
  std::vector<std::string> generators;
  std::optional<std::uint64_t> group_order;
  std::optional<std::uint64_t> radius;

  bool operator==(const DocMetadata&) const = default;
};

struct GraphDocument {
  std::string schema_version = "1";
  std::string kind = "plain";
  std::vector<DocPartition> partitions;
  std::vector<Edge> edges;
  DocMetadata metadata;

  std::size_t vertex_count() const;
  Multigraph graph() const;
  std::optional<Partition> partition() const;

  bool operator==(const GraphDocument&) const = default;
};

GraphDocument DocumentFromGGraph(const GroupTable& g, const GenSequence& s, const GGraph& gg,
                                 std::string group_spec);
GraphDocument DocumentFromGraph(const Multigraph& g, const std::optional<Partition>& partition = std::nullopt);
GraphDocument DocumentFromBall(const BallGraph& ball, std::string group_spec);

// Parsers throw Error(kParse) on malformed or inconsistent input.
std::string ToJson(const GraphDocument& doc);
GraphDocument FromJson(std::string_view text);
std::string ToEdgeList(const GraphDocument& doc);
GraphDocument ParseEdgeList(std::string_view text);
std::string ToDot(const GraphDocument& doc);

// JSON if the first non-blank character is '{', otherwise an edge list.
GraphDocument ParseDocument(std::string_view text);

// Throw Error(kIo) when the file cannot be read or written.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view content);
GraphDocument LoadDocument(const std::string& path);

}  // namespace ggraph

#endif  // GGRAPH_IO_HPP_
