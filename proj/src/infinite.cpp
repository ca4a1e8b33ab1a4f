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

#include "ggraph/infinite.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "ggraph/error.hpp"

namespace ggraph {

namespace {

std::int64_t Mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw Error(ErrorCode::kOverflow, "integer overflow in ball entries");
  return r;
}

std::int64_t Add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw Error(ErrorCode::kOverflow, "integer overflow in ball entries");
  return r;
}

template <typename T>
std::vector<std::int64_t> Tuple(const T& x) {
  auto t = x.tuple();
  return {t.begin(), t.end()};
}

// Right coset <s> h = {s^j h}, sorted.
template <typename T>
std::vector<T> Coset(const T& s, std::uint64_t order, const T& h) {
  std::vector<T> out;
  T p = h;
  for (std::uint64_t j = 0; j < order; ++j) {
    out.push_back(p);
    p = s * p;
  }
  if (p != h) throw Error(ErrorCode::kInvalidParameter, "generator order is wrong");
  std::sort(out.begin(), out.end());
  return out;
}

template <typename T>
BallGraph Ball(std::size_t radius, const std::array<T, 2>& gens, const std::array<std::uint64_t, 2>& orders) {
  BallGraph ball;
  ball.radius = radius;
  ball.gen_orders = {orders[0], orders[1]};
  std::map<std::pair<std::uint32_t, T>, VertexId> owner;  // (class, element) -> vertex
  std::vector<std::vector<T>> members;

  auto add = [&](std::uint32_t cls, const T& h, std::size_t distance) -> std::pair<VertexId, bool> {
    if (auto it = owner.find({cls, h}); it != owner.end()) return {it->second, false};
    const VertexId id = static_cast<VertexId>(ball.vertices.size());
    std::vector<T> els = Coset(gens[cls], orders[cls], h);
    BallVertex v;
    v.class_id = cls;
    for (const T& x : els) {
      v.elements.push_back(Tuple(x));
      owner[{cls, x}] = id;
    }
    v.key = v.elements.front();
    v.distance = distance;
    v.interior = distance < radius;
    ball.vertices.push_back(std::move(v));
    members.push_back(std::move(els));
    return {id, true};
  };

  const T identity{};
  std::queue<VertexId> queue;
  for (std::uint32_t cls = 0; cls < 2; ++cls) {
    ball.centers[cls] = add(cls, identity, 0).first;
    queue.push(ball.centers[cls]);
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    const std::size_t d = ball.vertices[v].distance;
    if (d >= radius) continue;
    const std::uint32_t other = 1 - ball.vertices[v].class_id;
    for (const T& h : std::vector<T>(members[v])) {
      auto [w, fresh] = add(other, h, d + 1);
      if (fresh) queue.push(w);
    }
  }

  std::map<std::pair<VertexId, VertexId>, std::uint64_t> mult;
  for (VertexId v = 0; v < ball.vertices.size(); ++v) {
    if (ball.vertices[v].class_id != 0) continue;
    for (const T& h : members[v])
      if (auto it = owner.find({1, h}); it != owner.end()) {
        const VertexId w = it->second;
        ++mult[{std::min(v, w), std::max(v, w)}];
      }
  }
  for (const auto& [uv, m] : mult) ball.edges.push_back({uv.first, uv.second, m});
  return ball;
}

}  // namespace

Mat2Z Mat2Z::operator*(const Mat2Z& o) const {
  return {Add(Mul(a, o.a), Mul(b, o.c)), Add(Mul(a, o.b), Mul(b, o.d)),
          Add(Mul(c, o.a), Mul(d, o.c)), Add(Mul(c, o.b), Mul(d, o.d))};
}

std::int64_t Mat2Z::det() const { return Add(Mul(a, d), -Mul(b, c)); }

AffElem AffElem::operator*(const AffElem& o) const { return {Mul(a, o.a), Add(Mul(a, o.b), b)}; }

Multigraph BallGraph::graph() const { return Multigraph(vertices.size(), edges); }

std::optional<VertexId> BallGraph::find(std::uint32_t class_id, const std::vector<std::int64_t>& key) const {
  for (VertexId v = 0; v < vertices.size(); ++v)
    if (vertices[v].class_id == class_id && vertices[v].key == key) return v;
  return std::nullopt;
}

BallGraph Sl2zBall(std::size_t radius) {
  if (radius > kMaxSl2zRadius)
    throw Error(ErrorCode::kSizeLimit, "SL2(Z) ball radius must be at most " + std::to_string(kMaxSl2zRadius));
  return Ball<Mat2Z>(radius, {Mat2Z{0, -1, 1, 0}, Mat2Z{0, -1, 1, 1}}, {4, 6});
}

BallGraph AffineBall(std::size_t radius) {
  if (radius > kMaxAffineRadius)
    throw Error(ErrorCode::kSizeLimit, "affine ball radius must be at most " + std::to_string(kMaxAffineRadius));
  return Ball<AffElem>(radius, {AffElem{-1, 0}, AffElem{-1, -1}}, {2, 2});
}

bool IsLocallyFinite(std::span<const std::optional<std::uint64_t>> gen_orders) {
  return std::all_of(gen_orders.begin(), gen_orders.end(), [](const auto& o) { return o.has_value(); });
}

}  // namespace ggraph
