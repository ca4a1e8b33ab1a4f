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

#include "ggraph/iso.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>
#include <utility>

#include "ggraph/error.hpp"

namespace ggraph {

namespace {

using Cells = std::vector<std::vector<VertexId>>;
using Signature = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Unite(std::size_t a, std::size_t b) { parent_[Find(a)] = Find(b); }

 private:
  std::vector<std::size_t> parent_;
};

class Canonizer {
 public:
  explicit Canonizer(const Multigraph& g) : g_(g), n_(g.vertex_count()), adj_(n_ * n_, 0) {
    for (const Edge& e : g.edges()) {
      adj_[e.u * n_ + e.v] = e.multiplicity;
      adj_[e.v * n_ + e.u] = e.multiplicity;
    }
  }

  void Run() {
    if (n_ == 0) return;
    Cells root(1);
    for (VertexId v = 0; v < n_; ++v) root[0].push_back(v);
    Refine(root);
    std::vector<VertexId> prefix;
    Search(root, prefix);
  }

  const std::vector<VertexId>& best_labeling() const { return best_label_; }

 private:
  // Splits cells by the multiset of (neighbor cell, multiplicity) until the
  // partition is equitable. Cell order depends only on signatures.
  void Refine(Cells& cells) const {
    std::vector<std::uint32_t> color(n_);
    while (true) {
      for (std::uint32_t c = 0; c < cells.size(); ++c)
        for (VertexId v : cells[c]) color[v] = c;
      Cells next;
      next.reserve(n_);
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<Signature, VertexId>> keyed;
        keyed.reserve(cell.size());
        for (VertexId v : cell) {
          Signature sig;
          for (const auto& [w, m] : g_.neighbors(v)) sig.emplace_back(color[w], m);
          std::sort(sig.begin(), sig.end());
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
          next.back().push_back(keyed[i].second);
        }
      }
      bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  void Search(const Cells& cells, std::vector<VertexId>& prefix) {
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    if (target == cells.size()) {
      Leaf(cells);
      return;
    }
    std::vector<VertexId> explored;
    for (VertexId w : cells[target]) {
      if (!explored.empty() && SameOrbit(prefix, explored, w)) continue;
      explored.push_back(w);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({w});
        std::vector<VertexId> rest;
        for (VertexId x : cells[c])
          if (x != w) rest.push_back(x);
        child.push_back(std::move(rest));
      }
      Refine(child);
      prefix.push_back(w);
      Search(child, prefix);
      prefix.pop_back();
    }
  }

  // True if w is in the orbit of an explored sibling under the automorphisms
  // found so far that fix the prefix pointwise.
  bool SameOrbit(const std::vector<VertexId>& prefix, const std::vector<VertexId>& explored,
                 VertexId w) const {
    UnionFind uf(n_);
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](VertexId p) { return gamma[p] == p; });
      if (!fixes) continue;
      any = true;
      for (VertexId v = 0; v < n_; ++v) uf.Unite(v, gamma[v]);
    }
    if (!any) return false;
    for (VertexId e : explored)
      if (uf.Find(e) == uf.Find(w)) return true;
    return false;
  }

  void Leaf(const Cells& cells) {
    std::vector<VertexId> label(n_), vertex_at(n_);
    for (std::uint32_t c = 0; c < cells.size(); ++c) {
      label[cells[c][0]] = c;
      vertex_at[c] = cells[c][0];
    }
    std::vector<std::uint64_t> cert;
    cert.reserve(n_ * (n_ - 1) / 2);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) cert.push_back(adj_[vertex_at[i] * n_ + vertex_at[j]]);
    if (!best_cert_ || cert < *best_cert_) {
      best_cert_ = std::move(cert);
      best_label_ = label;
      best_vertex_at_ = vertex_at;
    } else if (cert == *best_cert_) {
      std::vector<VertexId> gamma(n_);
      for (VertexId v = 0; v < n_; ++v) gamma[v] = best_vertex_at_[label[v]];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  const Multigraph& g_;
  std::size_t n_;
  std::vector<std::uint64_t> adj_;
  std::optional<std::vector<std::uint64_t>> best_cert_;
  std::vector<VertexId> best_label_;
  std::vector<VertexId> best_vertex_at_;
  std::vector<std::vector<VertexId>> automorphisms_;
};

bool IsSimple(const Multigraph& g) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [](const Edge& e) { return e.multiplicity == 1; });
}

// Uniform multiplicity of a complete bipartite graph, if it is one.
std::optional<std::uint64_t> CompleteBipartiteMultiplicity(const Multigraph& g,
                                                           std::size_t* small,
                                                           std::size_t* large) {
  if (g.vertex_count() < 2 || !IsConnected(g)) return std::nullopt;
  auto sides = TwoColoring(g);
  if (!sides) return std::nullopt;
  std::size_t left = std::count(sides->begin(), sides->end(), 0);
  std::size_t right = g.vertex_count() - left;
  if (g.edges().size() != left * right) return std::nullopt;
  std::uint64_t m = g.edges().front().multiplicity;
  for (const Edge& e : g.edges())
    if (e.multiplicity != m) return std::nullopt;
  *small = std::min(left, right);
  *large = std::max(left, right);
  return m;
}

}  // namespace

CanonicalForm ComputeCanonicalForm(const Multigraph& g, std::vector<VertexId>* labeling) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxIsoVertices)
    throw Error(ErrorCode::kTooLarge,
                "canonical form supports at most 64 vertices, got " + std::to_string(n));
  Canonizer canon(g);
  canon.Run();
  const auto& label = canon.best_labeling();
  CanonicalForm form;
  form.vertex_count = n;
  for (const Edge& e : g.edges()) {
    VertexId a = label[e.u], b = label[e.v];
    form.edges.push_back({std::min(a, b), std::max(a, b), e.multiplicity});
  }
  std::sort(form.edges.begin(), form.edges.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.u, x.v) < std::tie(y.u, y.v);
  });
  form.certificate = std::to_string(n) + ":";
  for (const Edge& e : form.edges) {
    form.certificate += std::to_string(e.u) + "-" + std::to_string(e.v);
    if (e.multiplicity != 1) form.certificate += "x" + std::to_string(e.multiplicity);
    form.certificate += ",";
  }
  if (labeling) *labeling = label;
  return form;
}

bool AreIsomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edges().size() != b.edges().size() ||
      a.total_multiplicity() != b.total_multiplicity())
    return false;
  std::vector<std::uint64_t> da, db;
  for (VertexId v = 0; v < a.vertex_count(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return ComputeCanonicalForm(a) == ComputeCanonicalForm(b);
}

std::string FamilyTag::ToString() const {
  auto s = [](std::size_t x) { return std::to_string(x); };
  switch (family) {
    case Family::kComplete: return "K_" + s(a);
    case Family::kCycle: return "C_" + s(a);
    case Family::kCompleteBipartite: return "K_{" + s(a) + "," + s(b) + "}";
    case Family::kDoubleEdgedCompleteBipartite: return "K^2_{" + s(a) + "," + s(b) + "}";
    case Family::kTuran: return "T(" + s(a) + "," + s(b) + ")";
    case Family::kHypercube: return "Q_" + s(a);
    case Family::kOctahedron: return "Octahedron";
    case Family::kUnknown: break;
  }
  return "Unknown";
}

FamilyTag RecognizeFamily(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return {};
  const bool simple = IsSimple(g);
  if (simple && g.edges().size() == n * (n - 1) / 2) return {Family::kComplete, n, 0};

  std::size_t small = 0, large = 0;
  if (auto m = CompleteBipartiteMultiplicity(g, &small, &large)) {
    if (*m == 1) return {Family::kCompleteBipartite, small, large};
    if (*m == 2) return {Family::kDoubleEdgedCompleteBipartite, small, large};
    return {};
  }
  if (!simple || !IsConnected(g)) return {};

  bool all_two = true;
  for (VertexId v = 0; v < n; ++v) all_two = all_two && g.degree(v) == 2;
  if (all_two && n >= 3) return {Family::kCycle, n, 0};

  // Complete multipartite: non-adjacency must be an equivalence relation.
  {
    std::vector<int> cls(n, -1);
    std::vector<std::size_t> sizes;
    bool ok = true;
    for (VertexId v = 0; v < n && ok; ++v) {
      if (cls[v] != -1) continue;
      int c = static_cast<int>(sizes.size());
      sizes.push_back(0);
      for (VertexId w = v; w < n; ++w)
        if (w == v || g.multiplicity(v, w) == 0) {
          if (cls[w] != -1) ok = false;
          cls[w] = c;
          ++sizes[c];
        }
    }
    for (const Edge& e : g.edges()) ok = ok && cls[e.u] != cls[e.v];
    if (ok) {
      std::size_t edges = 0;
      for (std::size_t i = 0; i < sizes.size(); ++i)
        for (std::size_t j = i + 1; j < sizes.size(); ++j) edges += sizes[i] * sizes[j];
      auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
      if (edges == g.edges().size() && *hi - *lo <= 1 && sizes.size() >= 3) {
        if (n == 6 && sizes.size() == 3) return {Family::kOctahedron, 0, 0};
        return {Family::kTuran, n, sizes.size()};
      }
    }
  }

  std::size_t d = 0;
  while ((std::size_t{1} << d) < n) ++d;
  if ((std::size_t{1} << d) == n && d >= 3 && d <= 6) {
    bool regular = true;
    for (VertexId v = 0; v < n; ++v) regular = regular && g.degree(v) == d;
    if (regular && g.edges().size() == n * d / 2 && AreIsomorphic(g, Hypercube(d)))
      return {Family::kHypercube, d, 0};
  }
  return {};
}

}  // namespace ggraph
