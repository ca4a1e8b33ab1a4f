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


#include <optional>

#include "ggraph/infinite.hpp"
#include "ggraph/iso.hpp"
#include "test_util.hpp"

namespace ggraph {
namespace {

std::int64_t Det(const std::vector<std::int64_t>& t) { return t[0] * t[3] - t[1] * t[2]; }

TEST(Sl2zBallTest, RadiusZero) {
  const BallGraph b = Sl2zBall(0);
  ASSERT_EQ(b.vertices.size(), 2u);
  ASSERT_EQ(b.edges.size(), 1u);
  EXPECT_EQ(b.edges[0].multiplicity, 2u);
  EXPECT_EQ(b.gen_orders, (std::vector<std::uint64_t>{4, 6}));
}

TEST(Sl2zBallTest, LocalStructure) {
  for (std::size_t r = 0; r <= 3; ++r) {
    SCOPED_TRACE(r);
    const BallGraph b = Sl2zBall(r);
    const Multigraph g = b.graph();
    EXPECT_TRUE(IsConnected(g));
    for (VertexId v = 0; v < b.vertices.size(); ++v) {
      const BallVertex& bv = b.vertices[v];
      EXPECT_EQ(bv.elements.size(), bv.class_id == 0 ? 4u : 6u);
      for (const auto& t : bv.elements) EXPECT_EQ(Det(t), 1);
      EXPECT_EQ(bv.interior, bv.distance < r);
      if (!bv.interior) continue;
      EXPECT_EQ(g.degree(v), bv.class_id == 0 ? 4u : 6u);
      EXPECT_EQ(g.neighbors(v).size(), bv.class_id == 0 ? 2u : 3u);
    }
    for (const Edge& e : b.edges) {
      EXPECT_EQ(e.multiplicity, 2u);
      EXPECT_NE(b.vertices[e.u].class_id, b.vertices[e.v].class_id);
    }
  }
}

TEST(Sl2zBallTest, MonotoneInRadius) {
  for (std::size_t r = 0; r < 4; ++r) {
    const BallGraph small = Sl2zBall(r), big = Sl2zBall(r + 1);
    std::vector<VertexId> map;
    for (const BallVertex& v : small.vertices) {
      auto w = big.find(v.class_id, v.key);
      ASSERT_TRUE(w.has_value());
      EXPECT_EQ(big.vertices[*w].elements, v.elements);
      map.push_back(*w);
    }
    for (const Edge& e : small.edges) EXPECT_EQ(big.graph().multiplicity(map[e.u], map[e.v]), e.multiplicity);
    // Induced: no extra edges between surviving vertices.
    std::size_t induced = 0;
    const Multigraph bg = big.graph();
    for (VertexId a = 0; a < map.size(); ++a)
      for (VertexId c = a + 1; c < map.size(); ++c) induced += bg.multiplicity(map[a], map[c]) ? 1 : 0;
    EXPECT_EQ(induced, small.edges.size());
  }
}

TEST(Sl2zBallTest, Limits) {
  EXPECT_NO_THROW(Sl2zBall(kMaxSl2zRadius));
  EXPECT_GG_ERROR(Sl2zBall(kMaxSl2zRadius + 1), ErrorCode::kSizeLimit);
}

TEST(AffineBallTest, IsAPath) {
  for (std::size_t r = 0; r <= 50; ++r) {
    const BallGraph b = AffineBall(r);
    const Multigraph g = b.graph();
    ASSERT_EQ(g.vertex_count(), 2 * r + 2) << r;
    ASSERT_EQ(b.edges.size(), 2 * r + 1) << r;
    for (const Edge& e : b.edges) ASSERT_EQ(e.multiplicity, 1u);
    ASSERT_TRUE(IsConnected(g));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      ASSERT_LE(g.degree(v), 2u);
      if (b.vertices[v].interior) ASSERT_EQ(g.degree(v), 2u);
      ASSERT_EQ(b.vertices[v].elements.size(), 2u);
    }
    if (r <= 20) ASSERT_TRUE(AreIsomorphic(g, PathGraph(2 * r + 2))) << r;
  }
}

TEST(AffineBallTest, RadiusZeroSharesIdentity) {
  const BallGraph b = AffineBall(0);
  ASSERT_EQ(b.vertices.size(), 2u);
  EXPECT_EQ(b.vertices[0].key, (std::vector<std::int64_t>{-1, 0}));
  EXPECT_EQ(b.vertices[0].elements, (std::vector<std::vector<std::int64_t>>{{-1, 0}, {1, 0}}));
  EXPECT_EQ(b.vertices[1].elements, (std::vector<std::vector<std::int64_t>>{{-1, -1}, {1, 0}}));
}

TEST(AffineBallTest, Limits) {
  EXPECT_EQ(AffineBall(kMaxAffineRadius).vertices.size(), 2 * kMaxAffineRadius + 2);
  EXPECT_GG_ERROR(AffineBall(kMaxAffineRadius + 1), ErrorCode::kSizeLimit);
}

TEST(ElementArithmeticTest, ProductsAndOverflow) {
  const Mat2Z s1{0, -1, 1, 0}, x{0, -1, 1, 1};
  Mat2Z p;
  for (int i = 0; i < 4; ++i) p = p * s1;
  EXPECT_EQ(p, Mat2Z{});
  p = Mat2Z{};
  for (int i = 0; i < 6; ++i) p = p * x;
  EXPECT_EQ(p, Mat2Z{});
  EXPECT_EQ((s1 * x).det(), 1);
  const AffElem f{2, 3}, g{-1, 5};
  // f(g(t)) = 2(-t + 5) + 3.
  EXPECT_EQ(f * g, (AffElem{-2, 13}));
  const Mat2Z big{INT64_MAX / 2, 0, 0, 1};
  const Mat2Z four{4, 0, 0, 1};
  EXPECT_GG_ERROR(big * four, ErrorCode::kOverflow);
}

TEST(LocallyFiniteTest, Cases) {
  const std::optional<std::uint64_t> finite[] = {4, 6};
  const std::optional<std::uint64_t> infinite[] = {4, std::nullopt};
  EXPECT_TRUE(IsLocallyFinite(finite));
  EXPECT_FALSE(IsLocallyFinite(infinite));
  EXPECT_TRUE(IsLocallyFinite({}));
}

}  // namespace
}  // namespace ggraph
