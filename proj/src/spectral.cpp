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

#include "ggraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "ggraph/error.hpp"

namespace ggraph {

std::int64_t AdjMatrix::RowSum(std::size_t i) const {
  return std::accumulate(entries.begin() + static_cast<std::ptrdiff_t>(i * dimension),
                         entries.begin() + static_cast<std::ptrdiff_t>((i + 1) * dimension),
                         std::int64_t{0});
}

AdjMatrix AdjacencyMatrix(const Multigraph& g) {
  AdjMatrix m;
  m.dimension = g.vertex_count();
  m.entries.assign(m.dimension * m.dimension, 0);
  for (const Edge& e : g.edges()) {
    m.entries[e.u * m.dimension + e.v] = static_cast<std::int64_t>(e.multiplicity);
    m.entries[e.v * m.dimension + e.u] = static_cast<std::int64_t>(e.multiplicity);
  }
  return m;
}

AdjMatrix AdjacencyMatrix(const GGraph& gg) {
  AdjMatrix m = AdjacencyMatrix(gg.graph());
  for (const PartitionClass& pc : gg.classes()) m.block_starts.push_back(pc.first_vertex);
  m.block_starts.push_back(m.dimension);
  return m;
}

std::string MatrixCsv(const AdjMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.dimension; ++i) {
    for (std::size_t j = 0; j < m.dimension; ++j) {
      if (j) out += ',';
      out += std::to_string(m.at(i, j));
    }
    out += '\n';
  }
  return out;
}

std::vector<double> Eigenvalues(const AdjMatrix& m, double tol) {
  const std::size_t n = m.dimension;
  if (m.entries.size() != n * n) throw Error(ErrorCode::kInvalidMatrix, "matrix is not square");
  if (n > kMaxSpectrumDimension)
    throw Error(ErrorCode::kTooLarge, "matrix dimension " + std::to_string(n) + " exceeds " +
                                          std::to_string(kMaxSpectrumDimension));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m.at(i, j) != m.at(j, i))
        throw Error(ErrorCode::kInvalidMatrix, "matrix is not symmetric at (" + std::to_string(i) +
                                                   "," + std::to_string(j) + ")");

  std::vector<double> a(m.entries.begin(), m.entries.end());
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  double scale = 0;
  for (double x : a) scale += x * x;
  scale = std::sqrt(scale);

  // Cyclic Jacobi in round-robin order: each round pairs every index with
  // another, and the disjoint rotations are applied as one row pass and one
  // column pass, both over contiguous memory.
  const std::size_t m_even = n + (n % 2);
  std::vector<std::size_t> ring(m_even);
  std::iota(ring.begin(), ring.end(), std::size_t{0});
  struct Rotation {
    std::size_t p, q;
    double c, s;
  };
  std::vector<Rotation> rots;
  const double skip = tol * scale / static_cast<double>(std::max<std::size_t>(n, 1)) / 2;
  for (int sweep = 0; sweep < 100 && scale > 0 && n > 1; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += 2 * at(i, j) * at(i, j);
    if (std::sqrt(off) < tol * scale) break;
    for (std::size_t round = 0; round + 1 < m_even; ++round) {
      rots.clear();
      for (std::size_t i = 0; i < m_even / 2; ++i) {
        std::size_t p = ring[i], q = ring[m_even - 1 - i];
        if (p >= n || q >= n) continue;
        if (p > q) std::swap(p, q);
        const double apq = at(p, q);
        // Entries this small cannot lift the off-diagonal norm above the
        // stopping threshold even all together.
        if (std::abs(apq) < skip) continue;
        const double theta = (at(q, q) - at(p, p)) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        rots.push_back({p, q, c, t * c});
      }
      for (const Rotation& r : rots) {
        double* rp = &a[r.p * n];
        double* rq = &a[r.q * n];
        for (std::size_t j = 0; j < n; ++j) {
          const double x = rp[j], y = rq[j];
          rp[j] = r.c * x - r.s * y;
          rq[j] = r.s * x + r.c * y;
        }
      }
      for (std::size_t row = 0; row < n; ++row) {
        double* ar = &a[row * n];
        for (const Rotation& r : rots) {
          const double x = ar[r.p], y = ar[r.q];
          ar[r.p] = r.c * x - r.s * y;
          ar[r.q] = r.s * x + r.c * y;
        }
      }
      for (const Rotation& r : rots) at(r.p, r.q) = at(r.q, r.p) = 0;
      std::rotate(ring.begin() + 1, ring.end() - 1, ring.end());
    }
  }

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = at(i, i);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

const char* EnergyClassName(EnergyClass c) {
  switch (c) {
    case EnergyClass::kHypo: return "HYPO";
    case EnergyClass::kNormal: return "NORMAL";
    case EnergyClass::kHyper: return "HYPER";
  }
  return "NORMAL";
}

SpectrumReport Spectrum(const AdjMatrix& m, double tol) {
  const std::vector<double> values = Eigenvalues(m, tol);
  SpectrumReport r;
  r.dimension = m.dimension;
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() && values[j - 1] - values[j] <= kEigenGroupTolerance) sum += values[j++];
    double mean = sum / static_cast<double>(j - i);
    if (std::abs(mean) < kEigenGroupTolerance) mean = 0;
    r.eigenvalues.push_back({mean, j - i});
    i = j;
  }
  r.distinct_count = r.eigenvalues.size();
  for (double v : values) r.energy += std::abs(v);

  const double n = static_cast<double>(m.dimension);
  if (r.energy < n - kEnergyTolerance) r.energy_class = EnergyClass::kHypo;
  else if (r.energy > 2 * n - 2 + kEnergyTolerance) r.energy_class = EnergyClass::kHyper;
  r.energy_at_least_n = r.energy >= n - kEnergyTolerance;
  r.energy_equals_2n_minus_2 = std::abs(r.energy - (2 * n - 2)) <= kEnergyTolerance * std::max(1.0, n);
  return r;
}

MatrixDiagnostics DiagnoseMatrix(const AdjMatrix& m, const GGraph& gg) {
  const std::size_t k = gg.k();
  if (m.dimension != gg.vertex_count() || m.entries.size() != m.dimension * m.dimension)
    throw Error(ErrorCode::kInvalidPair, "matrix dimension does not match the G-graph");
  std::vector<std::size_t> starts;
  for (const PartitionClass& pc : gg.classes()) starts.push_back(pc.first_vertex);
  starts.push_back(gg.vertex_count());
  if (m.block_starts != starts) throw Error(ErrorCode::kInvalidPair, "matrix blocks do not match the G-graph classes");

  MatrixDiagnostics d;
  d.row_sums_match_degrees = true;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < m.dimension; ++i) {
    const std::int64_t s = m.RowSum(i);
    total += s;
    d.row_sums_match_degrees = d.row_sums_match_degrees &&
                               s == static_cast<std::int64_t>(gg.graph().degree(static_cast<VertexId>(i)));
  }
  d.edge_count = total / 2;
  d.edge_count_matches = total % 2 == 0 &&
                         d.edge_count == static_cast<std::int64_t>(gg.graph().total_multiplicity());

  d.blocks_uniform = true;
  d.derived_orders_match = true;
  for (std::size_t c = 0; c < k; ++c) {
    std::optional<std::int64_t> sum = m.RowSum(starts[c]);
    for (std::size_t i = starts[c]; i < starts[c + 1]; ++i)
      if (m.RowSum(i) != *sum) sum.reset();
    d.block_row_sums.push_back(sum);
    d.blocks_uniform = d.blocks_uniform && sum.has_value();
    std::optional<std::int64_t> order;
    if (sum && k >= 2 && *sum % static_cast<std::int64_t>(k - 1) == 0)
      order = *sum / static_cast<std::int64_t>(k - 1);
    d.derived_orders.push_back(order);
    d.derived_orders_match = d.derived_orders_match && order &&
                             *order == static_cast<std::int64_t>(gg.classes()[c].gen_order);
  }
  if (k >= 3)
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (d.block_row_sums[a] && d.block_row_sums[b] &&
            std::abs(*d.block_row_sums[a] - *d.block_row_sums[b]) == 1)
          d.off_by_one = true;
  d.not_a_ggraph = !d.blocks_uniform || d.off_by_one;
  return d;
}

}  // namespace ggraph
