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


#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <numeric>

#include "fixture_catalog.hpp"
#include "ggraph/infinite.hpp"
#include "ggraph/io.hpp"
#include "ggraph/iso.hpp"
#include "test_util.hpp"

namespace ggraph {
namespace {

using testing::Build;

GraphDocument CatalogDocument(const testing::GroupFixture& f) {
  auto b = Build(f);
  return DocumentFromGGraph(b.group, b.gens, b.graph, f.spec);
}

std::size_t CountLines(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

TEST(JsonTest, RoundTripOnCatalog) {
  for (const auto& f : testing::FixtureCatalog()) {
    SCOPED_TRACE(f.name);
    const GraphDocument doc = CatalogDocument(f);
    const std::string text = ToJson(doc);
    const GraphDocument back = FromJson(text);
    EXPECT_EQ(back, doc);
    EXPECT_EQ(ToJson(back), text);
  }
}

TEST(JsonTest, GGraphDocumentContents) {
  auto b = Build("dihedral:5", "r,s");
  const GraphDocument doc = DocumentFromGGraph(b.group, b.gens, b.graph, "dihedral:5");
  EXPECT_EQ(doc.kind, "ggraph");
  ASSERT_EQ(doc.partitions.size(), 2u);
  EXPECT_EQ(doc.partitions[0].label, "r");
  EXPECT_EQ(doc.partitions[0].gen_order, 5u);
  EXPECT_EQ(doc.partitions[1].label, "s");
  EXPECT_EQ(doc.partitions[0].vertices[0].coset_labels.size(), 5u);
  EXPECT_EQ(doc.metadata.generators, (std::vector<std::string>{"r", "s"}));
  EXPECT_EQ(doc.metadata.group_order, 10u);
  EXPECT_EQ(doc.vertex_count(), 7u);
  EXPECT_EQ(doc.partition(), b.graph.partition());
  EXPECT_TRUE(AreIsomorphic(doc.graph(), b.graph.graph()));
}

TEST(JsonTest, BallRoundTrip) {
  const GraphDocument doc = DocumentFromBall(Sl2zBall(2), "sl2z");
  EXPECT_EQ(doc.kind, "ball");
  EXPECT_EQ(doc.metadata.radius, 2u);
  EXPECT_EQ(doc.partitions[0].vertices[0].coset_labels.size(), 4u);
  EXPECT_TRUE(doc.partitions[0].vertices[0].interior.has_value());
  EXPECT_EQ(FromJson(ToJson(doc)), doc);
}

TEST(JsonTest, RejectsMalformedInput) {
  for (const char* text : {
           "{",
           R"({"schema_version":"2","kind":"plain","partitions":[],"edges":[]})",
           R"({"schema_version":"1","kind":"weird","partitions":[],"edges":[]})",
           R"({"schema_version":"1","kind":"plain","edges":[]})",
           R"({"schema_version":"1","kind":"plain","partitions":[{"label":"V","vertices":[{"id":1}]}],"edges":[]})",
           R"({"schema_version":"1","kind":"plain","partitions":[{"label":"V","vertices":[{"id":0},{"id":1}]}],"edges":[{"u":1,"v":1}]})",
           R"({"schema_version":"1","kind":"plain","partitions":[{"label":"V","vertices":[{"id":0},{"id":1}]}],"edges":[{"u":0,"v":1,"multiplicity":0}]})",
           R"({"schema_version":"1","kind":"plain","partitions":[{"label":"V","vertices":[{"id":0},{"id":1}]}],"edges":[{"u":0,"v":5}]})",
       }) {
    EXPECT_GG_ERROR(FromJson(text), ErrorCode::kParse);
  }
}

TEST(EdgeListTest, RoundTripOnCatalog) {
  for (const auto& f : testing::FixtureCatalog()) {
    SCOPED_TRACE(f.name);
    const GraphDocument doc = CatalogDocument(f);
    const GraphDocument back = ParseEdgeList(ToEdgeList(doc));
    EXPECT_EQ(back.graph().edges(), doc.graph().edges());
    EXPECT_EQ(back.vertex_count(), doc.vertex_count());
    EXPECT_EQ(back.partition(), doc.partition());
  }
}

TEST(EdgeListTest, ParsesCommentsMultiplicitiesAndPartitions) {
  const GraphDocument doc = ParseEdgeList(
      "# K2,2 doubled\n"
      "vertices: 5\n"
      "partition: 0 1\n"
      "partition: 2 3 4\n"
      "0 2 2   # doubled\n"
      "0 3\n"
      "\n"
      "1 4 1\n");
  EXPECT_EQ(doc.vertex_count(), 5u);
  EXPECT_EQ(doc.partition(), (Partition{0, 0, 1, 1, 1}));
  const Multigraph g = doc.graph();
  EXPECT_EQ(g.multiplicity(0, 2), 2u);
  EXPECT_EQ(g.multiplicity(1, 4), 1u);
  EXPECT_EQ(g.total_multiplicity(), 4u);
  // Isolated vertices survive through the count line.
  EXPECT_EQ(ParseEdgeList("vertices: 3\n0 1\n").vertex_count(), 3u);
}

TEST(EdgeListTest, RejectsMalformedInput) {
  for (const char* text : {"0 0\n", "0 1 0\n", "0\n", "0 1 2 3\n", "a b\n", "-1 2\n", "vertices: 1\n0 1\n",
                           "vertices: 2 3\n", "partition: 0 1\npartition: 1 2\n0 2\n",
                           "partition: 0\npartition: 1\n0 1\n1 2\n", "0 1 x\n"}) {
    SCOPED_TRACE(text);
    EXPECT_GG_ERROR(ParseEdgeList(text), ErrorCode::kParse);
  }
}

TEST(DotTest, OneLinePerUnitOfMultiplicity) {
  for (const char* name : {"Q {a,b}", "S3 all transpositions", "Klein {a,b,ab}"}) {
    const GraphDocument doc = CatalogDocument(testing::FindFixture(name));
    const std::string dot = ToDot(doc);
    EXPECT_EQ(dot.rfind("graph G {\n", 0), 0u);
    EXPECT_EQ(CountLines(dot, " -- "), doc.graph().total_multiplicity()) << name;
    EXPECT_EQ(CountLines(dot, "fillcolor="), doc.vertex_count());
  }
  GraphDocument plain = DocumentFromGraph(PathGraph(3));
  EXPECT_NE(ToDot(plain).find("0 [label=\"0\""), std::string::npos);
}

TEST(FileTest, LoadsFixturesAndReportsIoErrors) {
  for (const auto& entry : std::filesystem::directory_iterator(GGRAPH_FIXTURE_DIR)) {
    SCOPED_TRACE(entry.path().string());
    const GraphDocument doc = LoadDocument(entry.path().string());
    EXPECT_GT(doc.vertex_count(), 0u);
    EXPECT_TRUE(IsConnected(doc.graph()));
  }
  EXPECT_EQ(LoadDocument(testing::FixturePath("k2_5.edges")).partition().has_value(), true);
  EXPECT_GG_ERROR(ReadFile("/nonexistent/graph.json"), ErrorCode::kIo);
  EXPECT_GG_ERROR(WriteFile("/nonexistent/dir/graph.json", "x"), ErrorCode::kIo);

  const auto path = std::filesystem::temp_directory_path() / "ggraph_io_test.json";
  const GraphDocument doc = CatalogDocument(testing::FindFixture("D8 {r,s}"));
  WriteFile(path.string(), ToJson(doc));
  EXPECT_EQ(LoadDocument(path.string()), doc);
  std::filesystem::remove(path);
}

TEST(DocumentTest, PlainGraphs) {
  const GraphDocument single = DocumentFromGraph(CycleGraph(5));
  ASSERT_EQ(single.partitions.size(), 1u);
  EXPECT_EQ(single.partitions[0].label, "V");
  EXPECT_FALSE(single.partition().has_value());
  const GraphDocument split = DocumentFromGraph(CompleteBipartite(2, 3), Partition{0, 0, 1, 1, 1});
  EXPECT_EQ(split.partitions[1].label, "V2");
  EXPECT_EQ(split.partition(), (Partition{0, 0, 1, 1, 1}));
  EXPECT_GG_ERROR(DocumentFromGraph(CycleGraph(5), Partition{0, 1}), ErrorCode::kInvalidPartition);
}

}  // namespace
}  // namespace ggraph
