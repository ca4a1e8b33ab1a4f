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

#ifndef GGRAPH_SPECTRAL_HPP_
#define GGRAPH_SPECTRAL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ggraph/ggraph.hpp"
#include "ggraph/multigraph.hpp"

namespace ggraph {

inline constexpr std::size_t kMaxSpectrumDimension = 700;
inline constexpr double kEigenGroupTolerance = 1e-6;
inline constexpr double kEnergyTolerance = 1e-9;

// Dense integer adjacency matrix. block_starts holds the first row of every
// partition class followed by the dimension; it is empty when the matrix
// carries no partition.
struct AdjMatrix {
  std::size_t dimension = 0;
  std::vector<std::int64_t> entries;  // row-major
  std::vector<std::size_t> block_starts;

  std::int64_t at(std::size_t i, std::size_t j) const { return entries[i * dimension + j]; }
  std::int64_t RowSum(std::size_t i) const;
};

// Rows follow the G-graph's vertex order, so classes are contiguous blocks.
AdjMatrix AdjacencyMatrix(const GGraph& gg);
AdjMatrix AdjacencyMatrix(const Multigraph& g);

std::string MatrixCsv(const AdjMatrix& m);

// Eigenvalues in descending order. Throws Error(kInvalidMatrix) if m is not
// square and symmetric, Error(kTooLarge) above kMaxSpectrumDimension.
std::vector<double> Eigenvalues(const AdjMatrix& m, double tol = 1e-10);

enum class EnergyClass { kHypo, kNormal, kHyper };
const char* EnergyClassName(EnergyClass c);

struct EigenGroup {
  double value = 0;
  std::size_t multiplicity = 0;
};

struct SpectrumReport {
  std::size_t dimension = 0;
  std::vector<EigenGroup> eigenvalues;  // descending
  std::size_t distinct_count = 0;
  double energy = 0;
  EnergyClass energy_class = EnergyClass::kNormal;  // strict: E < n, E > 2n-2
  bool energy_at_least_n = false;
  bool energy_equals_2n_minus_2 = false;
};

SpectrumReport Spectrum(const AdjMatrix& m, double tol = 1e-10);

struct MatrixDiagnostics {
  bool row_sums_match_degrees = false;
  bool blocks_uniform = false;
  std::vector<std::optional<std::int64_t>> block_row_sums;  // nullopt if mixed
  // rowsum / (k-1) per block when integral.
  std::vector<std::optional<std::int64_t>> derived_orders;
  bool derived_orders_match = false;
  std::int64_t edge_count = 0;  // half the entry sum
  bool edge_count_matches = false;
  // Two blocks whose row sums differ by exactly one, with k >= 3.
  bool off_by_one = false;
  bool not_a_ggraph = false;
};

// Throws Error(kInvalidPair) if m does not have gg's dimension and blocks.
MatrixDiagnostics DiagnoseMatrix(const AdjMatrix& m, const GGraph& gg);

}  // namespace ggraph

#endif  // GGRAPH_SPECTRAL_HPP_
