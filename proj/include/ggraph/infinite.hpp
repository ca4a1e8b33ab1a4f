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

// Finite balls in the G-graphs of two infinite groups:
//   SL2(Z) with s1 = (0 -1; 1 0) of order 4 and x = (0 -1; 1 1) of order 6,
//   the affine maps t -> a t + b (a = +-1) with s0 = (-1, 0), s2 = (-1, -1).
// Entries are 64-bit; arithmetic overflow raises Error(kOverflow).

#ifndef GGRAPH_INFINITE_HPP_
#define GGRAPH_INFINITE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ggraph/multigraph.hpp"

namespace ggraph {

struct Mat2Z {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  Mat2Z operator*(const Mat2Z& o) const;
  std::int64_t det() const;
  std::array<std::int64_t, 4> tuple() const { return {a, b, c, d}; }
  auto operator<=>(const Mat2Z&) const = default;
};

// The map t -> a t + b, composed as functions: (f * g)(t) = f(g(t)).
struct AffElem {
  std::int64_t a = 1, b = 0;

  AffElem operator*(const AffElem& o) const;
  std::array<std::int64_t, 2> tuple() const { return {a, b}; }
  auto operator<=>(const AffElem&) const = default;
};

inline constexpr std::size_t kMaxSl2zRadius = 12;
inline constexpr std::size_t kMaxAffineRadius = 1000;

struct BallVertex {
  std::uint32_t class_id = 0;
  std::vector<std::vector<std::int64_t>> elements;  // sorted tuples
  std::vector<std::int64_t> key;                    // least tuple
  std::size_t distance = 0;
  bool interior = false;                            // distance < radius
};

struct BallGraph {
  std::size_t radius = 0;
  std::vector<std::uint64_t> gen_orders;
  std::vector<BallVertex> vertices;
  std::vector<Edge> edges;       // induced on the discovered vertices
  std::array<VertexId, 2> centers{};

  Multigraph graph() const;
  std::optional<VertexId> find(std::uint32_t class_id, const std::vector<std::int64_t>& key) const;
};

// Throws Error(kSizeLimit) if radius is out of range.
BallGraph Sl2zBall(std::size_t radius);
BallGraph AffineBall(std::size_t radius);

// nullopt marks an element of infinite order.
bool IsLocallyFinite(std::span<const std::optional<std::uint64_t>> gen_orders);

}  // namespace ggraph

#endif  // GGRAPH_INFINITE_HPP_
