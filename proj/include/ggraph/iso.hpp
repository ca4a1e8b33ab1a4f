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

#ifndef GGRAPH_ISO_HPP_
#define GGRAPH_ISO_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "ggraph/multigraph.hpp"

namespace ggraph {

inline constexpr std::size_t kMaxIsoVertices = 64;

struct CanonicalForm {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;  // under the canonical relabeling, u < v, sorted
  std::string certificate;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.vertex_count == b.vertex_count && a.edges == b.edges;
  }
};

// Canonical labeling by equitable refinement (multiplicity-aware) and
// individualization search with automorphism pruning. The optional
// labeling receives the canonical label of each input vertex.
// Throws Error(kTooLarge) above kMaxIsoVertices vertices.
CanonicalForm ComputeCanonicalForm(const Multigraph& g,
                                   std::vector<VertexId>* labeling = nullptr);

bool AreIsomorphic(const Multigraph& a, const Multigraph& b);

enum class Family {
  kUnknown,
  kComplete,                      // K_a
  kCycle,                         // C_a
  kCompleteBipartite,             // K_{a,b}
  kDoubleEdgedCompleteBipartite,  // K^2_{a,b}
  kTuran,                         // T(a,b)
  kHypercube,                     // Q_a
  kOctahedron,
};

struct FamilyTag {
  Family family = Family::kUnknown;
  std::size_t a = 0;
  std::size_t b = 0;

  std::string ToString() const;
  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

// Complete bipartite parameters are ordered a <= b. Turan graphs with three
// classes of two are reported as kOctahedron; hypercubes are confirmed
// against a reference Q_d for 3 <= d <= 6.
FamilyTag RecognizeFamily(const Multigraph& g);

}  // namespace ggraph

#endif  // GGRAPH_ISO_HPP_
