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


#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>

#include "ggraph/ggraph.h"
#include "json.hpp"
#include "test_util.hpp"

namespace {

using json = nlohmann::json;

struct GroupDeleter {
  void operator()(gg_group* g) const { gg_group_free(g); }
};
struct GraphDeleter {
  void operator()(gg_graph* g) const { gg_graph_free(g); }
};
using GroupPtr = std::unique_ptr<gg_group, GroupDeleter>;
using GraphPtr = std::unique_ptr<gg_graph, GraphDeleter>;

// Takes ownership of a library string.
std::string Take(char* s) {
  std::string out = s ? s : "";
  gg_string_free(s);
  return out;
}

GroupPtr ParseGroup(const char* spec) {
  gg_group* g = nullptr;
  EXPECT_EQ(gg_group_parse(spec, &g), GG_OK) << gg_last_error();
  return GroupPtr(g);
}

GraphPtr BuildGraph(const char* spec, const char* gens) {
  GroupPtr g = ParseGroup(spec);
  gg_graph* out = nullptr;
  EXPECT_EQ(gg_graph_build(g.get(), gens, &out), GG_OK) << gg_last_error();
  return GraphPtr(out);
}

GraphPtr LoadFixture(const char* name) {
  gg_graph* out = nullptr;
  EXPECT_EQ(gg_graph_load(ggraph::testing::FixturePath(name).c_str(), &out), GG_OK) << gg_last_error();
  return GraphPtr(out);
}

TEST(CApiTest, VersionAndStatusNames) {
  EXPECT_STRNE(gg_version(), "");
  EXPECT_STREQ(gg_status_name(GG_OK), "ok");
  EXPECT_STREQ(gg_status_name(GG_ERR_NOT_GENERATING), "not-generating");
}

TEST(CApiTest, BuildAndStats) {
  GroupPtr g = ParseGroup("sym:4");
  EXPECT_EQ(gg_group_order(g.get()), 24u);
  GraphPtr graph = BuildGraph("sym:4", "(1 2),(2 3 4)");
  EXPECT_EQ(gg_graph_vertex_count(graph.get()), 20u);
  EXPECT_EQ(gg_graph_edge_multiplicity(graph.get()), 24u);
  char* text = nullptr;
  ASSERT_EQ(gg_graph_stats_json(graph.get(), &text), GG_OK);
  json j = json::parse(Take(text));
  EXPECT_EQ(j["group_order"], 24);
  EXPECT_EQ(j["gen_orders"], json({2, 3}));
  EXPECT_EQ(j["predicted"]["class_vertex_counts"], json({12, 8}));
  EXPECT_EQ(j["matches"], true);
}

TEST(CApiTest, ErrorStatuses) {
  gg_group* g = nullptr;
  EXPECT_EQ(gg_group_parse("foo:3", &g), GG_ERR_PARSE);
  EXPECT_EQ(g, nullptr);
  EXPECT_NE(std::string(gg_last_error()).find("foo"), std::string::npos);
  EXPECT_EQ(gg_group_parse("sym:9", &g), GG_ERR_SIZE_LIMIT);
  EXPECT_EQ(gg_group_parse(nullptr, &g), GG_ERR_INVALID_PARAMETER);

  GroupPtr s3 = ParseGroup("sym:3");
  gg_graph* out = nullptr;
  EXPECT_EQ(gg_graph_build(s3.get(), "(1 2),(1 2)", &out), GG_ERR_NOT_GENERATING);
  EXPECT_EQ(gg_graph_build(s3.get(), "(1 2 3 4)", &out), GG_ERR_PARSE);
  EXPECT_EQ(gg_graph_build(nullptr, "(1 2)", &out), GG_ERR_INVALID_PARAMETER);
  EXPECT_EQ(gg_graph_parse("0 0\n", &out), GG_ERR_PARSE);
  EXPECT_EQ(gg_graph_load("/nonexistent/file.json", &out), GG_ERR_IO);
  EXPECT_EQ(gg_graph_ball("sl2z", 13, &out), GG_ERR_SIZE_LIMIT);
  EXPECT_EQ(gg_graph_ball("hyperbolic", 1, &out), GG_ERR_PARSE);
  EXPECT_EQ(out, nullptr);
}

TEST(CApiTest, SerializeRoundTrip) {
  GraphPtr graph = BuildGraph("genq:2", "a,b");
  char* text = nullptr;
  ASSERT_EQ(gg_graph_serialize(graph.get(), GG_FORMAT_JSON, &text), GG_OK);
  const std::string doc = Take(text);
  gg_graph* parsed = nullptr;
  ASSERT_EQ(gg_graph_parse(doc.c_str(), &parsed), GG_OK);
  GraphPtr back(parsed);
  ASSERT_EQ(gg_graph_serialize(back.get(), GG_FORMAT_JSON, &text), GG_OK);
  EXPECT_EQ(Take(text), doc);
  int iso = -1;
  ASSERT_EQ(gg_graph_are_isomorphic(graph.get(), back.get(), &iso), GG_OK);
  EXPECT_EQ(iso, 1);

  ASSERT_EQ(gg_graph_serialize(graph.get(), GG_FORMAT_DOT, &text), GG_OK);
  EXPECT_EQ(Take(text).rfind("graph G {", 0), 0u);
  ASSERT_EQ(gg_graph_serialize(graph.get(), GG_FORMAT_EDGES, &text), GG_OK);
  EXPECT_EQ(Take(text).rfind("vertices: 4\n", 0), 0u);

  const auto path = (std::filesystem::temp_directory_path() / "ggraph_capi_test.edges").string();
  ASSERT_EQ(gg_graph_save(graph.get(), GG_FORMAT_EDGES, path.c_str()), GG_OK);
  gg_graph* loaded = nullptr;
  ASSERT_EQ(gg_graph_load(path.c_str(), &loaded), GG_OK);
  GraphPtr l(loaded);
  EXPECT_EQ(gg_graph_edge_multiplicity(l.get()), 8u);
  std::filesystem::remove(path);
  EXPECT_EQ(gg_graph_save(graph.get(), GG_FORMAT_JSON, "/nonexistent/dir/x.json"), GG_ERR_IO);
}

TEST(CApiTest, Characterize) {
  GraphPtr ico = LoadFixture("icosahedron.edges");
  gg_verdict verdict = GG_VERDICT_ACCEPT;
  char* text = nullptr;
  ASSERT_EQ(gg_graph_characterize_json(ico.get(), "auto", 0, &verdict, &text), GG_OK);
  EXPECT_EQ(verdict, GG_VERDICT_REFUSE);
  json j = json::parse(Take(text));
  EXPECT_EQ(j["status"], "REFUSE");
  EXPECT_NE(j["reason"].get<std::string>().find("5/3"), std::string::npos);

  GraphPtr k25 = LoadFixture("k2_5.edges");
  ASSERT_EQ(gg_graph_characterize_json(k25.get(), nullptr, 1, &verdict, &text), GG_OK);
  EXPECT_EQ(verdict, GG_VERDICT_ACCEPT);
  j = json::parse(Take(text));
  EXPECT_EQ(j["group_order"], 10);
  EXPECT_EQ(j["witness"]["found"], true);

  GraphPtr cube = LoadFixture("cube.edges");
  ASSERT_EQ(gg_graph_characterize_json(cube.get(), "bipartite", 0, &verdict, &text), GG_OK);
  j = json::parse(Take(text));
  EXPECT_EQ(j["group_order"], 12);
  EXPECT_EQ(j["gen_orders"], json({3, 3}));

  GraphPtr p4 = LoadFixture("path4.edges");
  ASSERT_EQ(gg_graph_characterize_json(p4.get(), "0,1,0,1", 0, &verdict, &text), GG_OK);
  EXPECT_EQ(verdict, GG_VERDICT_REFUSE);
  gg_string_free(text);
  EXPECT_EQ(gg_graph_characterize_json(p4.get(), "0,0,1,1", 0, &verdict, &text), GG_ERR_INVALID_PARTITION);

  ASSERT_EQ(gg_turan_verdict_json(13, 4, &verdict, &text), GG_OK);
  gg_string_free(text);
  EXPECT_EQ(verdict, GG_VERDICT_REFUSE);
  EXPECT_EQ(gg_turan_verdict_json(3, 5, &verdict, &text), GG_ERR_INVALID_PARAMETER);
}

TEST(CApiTest, SpectrumAndMatrix) {
  GraphPtr oct = LoadFixture("octahedron.edges");
  char* text = nullptr;
  ASSERT_EQ(gg_graph_spectrum_json(oct.get(), &text), GG_OK);
  json j = json::parse(Take(text));
  EXPECT_EQ(j["eigenvalues"], json::parse(R"([{"value":4.0,"multiplicity":1},{"value":0.0,"multiplicity":3},
                                              {"value":-2.0,"multiplicity":2}])"));
  EXPECT_FALSE(j.contains("diagnostics"));

  GraphPtr d10 = BuildGraph("dihedral:5", "r,s");
  ASSERT_EQ(gg_graph_spectrum_json(d10.get(), &text), GG_OK);
  j = json::parse(Take(text));
  EXPECT_EQ(j["energy_class"], "HYPO");
  EXPECT_EQ(j["diagnostics"]["derived_orders"], json({5, 2}));
  ASSERT_EQ(gg_graph_matrix_csv(d10.get(), &text), GG_OK);
  EXPECT_EQ(Take(text).substr(0, 14), "0,0,1,1,1,1,1\n");
}

TEST(CApiTest, AnalyzeAndBalls) {
  gg_graph* raw = nullptr;
  ASSERT_EQ(gg_graph_ball("affine", 3, &raw), GG_OK);
  GraphPtr ball(raw);
  EXPECT_EQ(gg_graph_vertex_count(ball.get()), 8u);
  char* text = nullptr;
  ASSERT_EQ(gg_graph_analyze_json(ball.get(), &text), GG_OK);
  json j = json::parse(Take(text));
  EXPECT_EQ(j["connected"], true);
  EXPECT_EQ(j["bipartite"], true);

  ASSERT_EQ(gg_graph_ball("sl2z", 2, &raw), GG_OK);
  GraphPtr sl(raw);
  ASSERT_EQ(gg_graph_serialize(sl.get(), GG_FORMAT_JSON, &text), GG_OK);
  j = json::parse(Take(text));
  EXPECT_EQ(j["kind"], "ball");
  EXPECT_EQ(j["metadata"]["radius"], 2);
}

TEST(CApiTest, LocalFiniteness) {
  const int64_t finite[] = {4, 6};
  const int64_t infinite[] = {4, 0};
  EXPECT_EQ(gg_is_locally_finite(finite, 2), 1);
  EXPECT_EQ(gg_is_locally_finite(infinite, 2), 0);
  EXPECT_EQ(gg_is_locally_finite(nullptr, 0), 1);
}

TEST(CApiTest, NullSafety) {
  gg_graph_free(nullptr);
  gg_group_free(nullptr);
  gg_string_free(nullptr);
  char* text = nullptr;
  EXPECT_EQ(gg_graph_stats_json(nullptr, &text), GG_ERR_INVALID_PARAMETER);
  EXPECT_EQ(gg_graph_vertex_count(nullptr), 0u);
}

}  // namespace
