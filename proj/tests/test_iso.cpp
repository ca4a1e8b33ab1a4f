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
#include <numeric>
#include <random>

#include "fixture_catalog.hpp"
#include "ggraph/iso.hpp"
#include "test_util.hpp"

namespace ggraph {
namespace {

using testing::Build;

std::vector<VertexId> RandomPermutation(std::size_t n, std::mt19937& rng) {
  std::vector<VertexId> p(n);
  std::iota(p.begin(), p.end(), VertexId{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

TEST(CanonicalFormTest, InvariantUnderRelabeling) {
  std::mt19937 rng(20260915);
  auto fixtures = testing::IsoFixtures();
  ASSERT_EQ(fixtures.size(), 20u);
  for (const auto& [name, g] : fixtures) {
    SCOPED_TRACE(name);
    const CanonicalForm base = ComputeCanonicalForm(g);
    for (int trial = 0; trial < 100; ++trial) {
      Multigraph h = g.Relabeled(RandomPermutation(g.vertex_count(), rng));
      ASSERT_EQ(ComputeCanonicalForm(h), base) << "trial " << trial;
    }
  }
}

TEST(CanonicalFormTest, LabelingMapsOntoCanonicalGraph) {
  Multigraph g = RhombicDodecahedron();
  std::vector<VertexId> labeling;
  const CanonicalForm cf = ComputeCanonicalForm(g, &labeling);
  ASSERT_EQ(labeling.size(), g.vertex_count());
  Multigraph relabeled = g.Relabeled(labeling);
  EXPECT_EQ(relabeled.edges(), cf.edges);
}

TEST(AreIsomorphicTest, DistinguishesLookalikes) {
  // Both 3-regular on six vertices.
  Multigraph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  EXPECT_FALSE(AreIsomorphic(prism, CompleteBipartite(3, 3)));
  Multigraph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_FALSE(AreIsomorphic(two_triangles, CycleGraph(6)));
  // Multiplicity is part of the structure.
  EXPECT_FALSE(AreIsomorphic(CompleteBipartite(2, 2, 2), CycleGraph(4)));
  EXPECT_TRUE(AreIsomorphic(CompleteBipartite(2, 2), CycleGraph(4)));
  EXPECT_FALSE(AreIsomorphic(CompleteGraph(4), CompleteGraph(5)));
}

TEST(AreIsomorphicTest, GroupIdentifications) {
  for (std::size_t n : {3, 4, 5, 8}) {
    const std::string d = "dihedral:" + std::to_string(n);
    EXPECT_TRUE(AreIsomorphic(Build(d, "r,s").graph.graph(), CompleteBipartite(2, n))) << n;
  }
  for (std::size_t n = 2; n <= 8; ++n) {
    const std::string d = "dihedral:" + std::to_string(n);
    EXPECT_TRUE(AreIsomorphic(Build(d, "s,t").graph.graph(), CycleGraph(2 * n))) << n;
  }
  EXPECT_TRUE(AreIsomorphic(Build("genq:2", "a,b").graph.graph(), CompleteBipartite(2, 2, 2)));
  EXPECT_TRUE(AreIsomorphic(Build("genq:3", "a,b").graph.graph(), CompleteBipartite(2, 3, 2)));
  EXPECT_TRUE(AreIsomorphic(Build("semidihedral:2", "a,b").graph.graph(), CompleteBipartite(2, 8)));
  EXPECT_TRUE(AreIsomorphic(Build("klein", "a,b,ab").graph.graph(), Octahedron()));
  EXPECT_TRUE(AreIsomorphic(Build("klein", "a,b").graph.graph(), CompleteBipartite(2, 2)));
  auto z1 = Build("cyclic:3*cyclic:3", "(1,0),(0,1)").graph.graph();
  auto z2 = Build("cyclic:3*cyclic:3", "(1,1),(1,0)").graph.graph();
  auto z3 = Build("cyclic:3*cyclic:3", "(1,1),(0,1)").graph.graph();
  EXPECT_TRUE(AreIsomorphic(z1, z2));
  EXPECT_TRUE(AreIsomorphic(z2, z3));
  EXPECT_TRUE(AreIsomorphic(z1, CompleteBipartite(3, 3)));
  EXPECT_TRUE(AreIsomorphic(Build("alt:4", "(1 2 3),(1 3 4)").graph.graph(), Hypercube(3)));
}

TEST(AreIsomorphicTest, GeneratingSetChangesTheGraph) {
  // Same group, different generating sets, different graphs.
  auto a = Build("dihedral:4", "r,s").graph.graph();
  auto b = Build("dihedral:4", "s,t").graph.graph();
  EXPECT_FALSE(AreIsomorphic(a, b));
}

TEST(AreIsomorphicTest, RejectsLargeGraphs) {
  EXPECT_GG_ERROR(AreIsomorphic(CycleGraph(65), CycleGraph(65)), ErrorCode::kTooLarge);
  EXPECT_GG_ERROR(ComputeCanonicalForm(PathGraph(100)), ErrorCode::kTooLarge);
}

TEST(RecognizeFamilyTest, KnownFamilies) {
  EXPECT_EQ(RecognizeFamily(CompleteGraph(5)), (FamilyTag{Family::kComplete, 5, 0}));
  EXPECT_EQ(RecognizeFamily(CycleGraph(8)), (FamilyTag{Family::kCycle, 8, 0}));
  EXPECT_EQ(RecognizeFamily(CompleteBipartite(5, 2)), (FamilyTag{Family::kCompleteBipartite, 2, 5}));
  EXPECT_EQ(RecognizeFamily(CompleteBipartite(2, 3, 2)),
            (FamilyTag{Family::kDoubleEdgedCompleteBipartite, 2, 3}));
  EXPECT_EQ(RecognizeFamily(TuranGraph(13, 4)), (FamilyTag{Family::kTuran, 13, 4}));
  EXPECT_EQ(RecognizeFamily(Octahedron()).family, Family::kOctahedron);
  EXPECT_EQ(RecognizeFamily(Hypercube(3)), (FamilyTag{Family::kHypercube, 3, 0}));
  EXPECT_EQ(RecognizeFamily(Hypercube(4)), (FamilyTag{Family::kHypercube, 4, 0}));
  EXPECT_EQ(RecognizeFamily(Dodecahedron()).family, Family::kUnknown);
  EXPECT_EQ(RecognizeFamily(PathGraph(5)).family, Family::kUnknown);
  EXPECT_EQ(RecognizeFamily(CompleteBipartite(2, 3, 3)).family, Family::kUnknown);
}

TEST(RecognizeFamilyTest, Names) {
  EXPECT_EQ(RecognizeFamily(CompleteBipartite(2, 5)).ToString(), "K_{2,5}");
  EXPECT_EQ(RecognizeFamily(CompleteBipartite(2, 2, 2)).ToString(), "K^2_{2,2}");
  EXPECT_EQ(RecognizeFamily(TuranGraph(13, 4)).ToString(), "T(13,4)");
  EXPECT_EQ(RecognizeFamily(Icosahedron()).ToString(), "Unknown");
}

TEST(RecognizeFamilyTest, GroupGraphs) {
  EXPECT_EQ(RecognizeFamily(Build("sym:3", "(1 2),(1 3),(2 3)").graph.graph()).family, Family::kUnknown);
  EXPECT_EQ(RecognizeFamily(Build("trivial", "e,e,e,e").graph.graph()), (FamilyTag{Family::kComplete, 4, 0}));
  EXPECT_EQ(RecognizeFamily(Build("semidihedral:2", "a,b").graph.graph()),
            (FamilyTag{Family::kCompleteBipartite, 2, 8}));
}

}  // namespace
}  // namespace ggraph
