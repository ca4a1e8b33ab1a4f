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

#include "ggraph/characterize.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "ggraph/error.hpp"
#include "ggraph/ggraph.hpp"
#include "ggraph/group_spec.hpp"
#include "ggraph/iso.hpp"

namespace ggraph {

const char* VerdictName(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kAccept: return "ACCEPT";
    case VerdictStatus::kRefuse: return "REFUSE";
    case VerdictStatus::kUndetermined: return "UNDETERMINED";
  }
  return "UNDETERMINED";
}

namespace {

std::string Fraction(std::uint64_t num, std::uint64_t den) {
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string Presentation(const std::vector<std::uint64_t>& orders) {
  std::string gens, rels;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const std::string s = "s" + std::to_string(i + 1);
    gens += (i ? "," : "") + s;
    rels += s + "^" + std::to_string(orders[i]) + " = ";
  }
  return "⟨" + gens + " | " + rels + "e⟩";
}

// Sizes and degrees of a partition, without judging it.
CharacterizationVerdict Describe(const Multigraph& g, const Partition& p, std::size_t k) {
  CharacterizationVerdict v;
  v.k = k;
  v.partition = p;
  v.class_sizes.assign(k, 0);
  v.class_degrees.assign(k, 0);
  std::vector<bool> seen(k, false), mixed(k, false);
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    const std::uint32_t c = p[x];
    ++v.class_sizes[c];
    if (!seen[c]) {
      seen[c] = true;
      v.class_degrees[c] = g.degree(x);
    } else if (v.class_degrees[c] != g.degree(x)) {
      mixed[c] = true;
    }
  }
  for (std::size_t c = 0; c < k; ++c)
    if (mixed[c]) v.class_degrees[c] = 0;
  return v;
}

// Judges a proper partition with k >= 2 classes of a connected graph.
CharacterizationVerdict Judge(const Multigraph& g, const Partition& p, std::size_t k) {
  CharacterizationVerdict v = Describe(g, p, k);
  const std::uint64_t two_e = 2 * g.total_multiplicity();
  auto refuse = [&v](std::string reason) {
    v.status = VerdictStatus::kRefuse;
    v.refusal_reason = std::move(reason);
    return v;
  };

  bool orders_integral = true;
  for (std::uint64_t d : v.class_degrees) orders_integral = orders_integral && d != 0 && d % (k - 1) == 0;
  if (orders_integral)
    for (std::uint64_t d : v.class_degrees) v.gen_orders.push_back(d / (k - 1));
  if (two_e % (k * (k - 1)) == 0) v.group_order = two_e / (k * (k - 1));

  for (std::size_t c = 0; c < k; ++c) {
    if (v.class_degrees[c] != 0) continue;
    std::set<std::uint64_t> degrees;
    for (VertexId x = 0; x < g.vertex_count(); ++x)
      if (p[x] == c) degrees.insert(g.degree(x));
    return refuse("degrees " + std::to_string(*degrees.begin()) + " and " +
                  std::to_string(*std::next(degrees.begin())) + " within one class (class " +
                  std::to_string(c + 1) + ")");
  }
  for (std::size_t c = 0; c < k; ++c) {
    const std::uint64_t product = v.class_sizes[c] * v.class_degrees[c];
    if (product * k != two_e)
      return refuse("class " + std::to_string(c + 1) + " has m*n = " + std::to_string(product) +
                    " but 2|E|/k = " + Fraction(two_e, k));
  }
  for (std::uint64_t d : v.class_degrees)
    if (d % (k - 1) != 0) return refuse("generator order " + Fraction(d, k - 1) + " not integral");
  if (!v.group_order)
    return refuse("group order " + Fraction(two_e, k * (k - 1)) + " not integral");
  if (std::all_of(v.gen_orders.begin(), v.gen_orders.end(), [](auto o) { return o == 1; }) &&
      *v.group_order != 1)
    return refuse("all generator orders are 1, so the group is trivial, but 2|E|/(k(k-1)) = " +
                  std::to_string(*v.group_order));

  v.status = VerdictStatus::kAccept;
  v.presentation = Presentation(v.gen_orders);
  return v;
}

// Conditions on k that hold for every k-partition: each degree is o_i(k-1),
// |G| = 2|E|/(k(k-1)), and k-1 generators of order 1 force |G| = 1.
std::optional<std::string> ArithmeticObstruction(const Multigraph& g, std::size_t k) {
  const std::uint64_t two_e = 2 * g.total_multiplicity();
  bool all_unit = true;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    const std::uint64_t d = g.degree(x);
    if (d % (k - 1) != 0) return "generator order " + Fraction(d, k - 1) + " not integral";
    all_unit = all_unit && d == k - 1;
  }
  if (two_e % (k * (k - 1)) != 0)
    return "group order " + Fraction(two_e, k * (k - 1)) + " not integral";
  if (all_unit && two_e != k * (k - 1))
    return "all generator orders are 1, so the group is trivial, but 2|E|/(k(k-1)) = " +
           std::to_string(two_e / (k * (k - 1)));
  return std::nullopt;
}

class ColoringSearch {
 public:
  ColoringSearch(const Multigraph& g, std::size_t k, bool uniform, std::uint64_t budget)
      : g_(g), k_(k), uniform_(uniform), budget_(budget), color_(g.vertex_count(), -1),
        size_(k, 0), degree_(k, 0), two_e_(2 * g.total_multiplicity()) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::queue<VertexId> queue;
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      queue.push(root);
      while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        order_.push_back(v);
        for (const auto& [w, m] : g.neighbors(v))
          if (!seen[w]) {
            seen[w] = true;
            queue.push(w);
          }
      }
    }
  }

  // False if the budget ran out before the search finished or was stopped.
  bool Run(const std::function<bool(const Partition&)>& fn) {
    fn_ = &fn;
    Assign(0, 0);
    return !exhausted_;
  }

 private:
  void Assign(std::size_t idx, std::size_t used) {
    if (stopped_ || exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    if (idx == order_.size()) {
      if (used != k_) return;
      Partition p(color_.begin(), color_.end());
      if (!(*fn_)(p)) stopped_ = true;
      return;
    }
    if (order_.size() - idx < k_ - used) return;
    const VertexId v = order_[idx];
    const std::uint64_t d = g_.degree(v);
    const std::size_t limit = std::min(used + 1, k_);
    for (std::size_t c = 0; c < limit && !stopped_ && !exhausted_; ++c) {
      bool clash = false;
      for (const auto& [w, m] : g_.neighbors(v)) clash = clash || color_[w] == static_cast<int>(c);
      if (clash) continue;
      if (uniform_) {
        const std::uint64_t cd = size_[c] ? degree_[c] : d;
        if (cd != d || two_e_ % (k_ * d) != 0 || (size_[c] + 1) * k_ * d > two_e_) continue;
      }
      color_[v] = static_cast<int>(c);
      ++size_[c];
      degree_[c] = d;
      Assign(idx + 1, c == used ? used + 1 : used);
      --size_[c];
      color_[v] = -1;
    }
  }

  const Multigraph& g_;
  std::size_t k_;
  bool uniform_;
  std::uint64_t budget_;
  std::vector<int> color_;
  std::vector<std::size_t> size_;
  std::vector<std::uint64_t> degree_;
  std::uint64_t two_e_;
  std::vector<VertexId> order_;
  const std::function<bool(const Partition&)>* fn_ = nullptr;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  bool exhausted_ = false;
};

std::size_t ValidatePartition(const Multigraph& g, const Partition& p) {
  if (p.size() != g.vertex_count())
    throw Error(ErrorCode::kInvalidPartition, "partition has " + std::to_string(p.size()) +
                                                  " labels for " + std::to_string(g.vertex_count()) +
                                                  " vertices");
  if (p.empty()) throw Error(ErrorCode::kInvalidPartition, "empty partition");
  const std::size_t k = *std::max_element(p.begin(), p.end()) + std::size_t{1};
  std::vector<bool> used(k, false);
  for (auto c : p) used[c] = true;
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw Error(ErrorCode::kInvalidPartition, "partition classes must be numbered 0..k-1 without gaps");
  for (const Edge& e : g.edges())
    if (p[e.u] == p[e.v])
      throw Error(ErrorCode::kInvalidPartition, "edge " + std::to_string(e.u) + "-" +
                                                    std::to_string(e.v) + " lies inside class " +
                                                    std::to_string(p[e.u] + 1));
  return k;
}

CharacterizationVerdict Undetermined(std::string why) {
  CharacterizationVerdict v;
  v.status = VerdictStatus::kUndetermined;
  v.refusal_reason = std::move(why);
  return v;
}

}  // namespace

bool ForEachUniformColoring(const Multigraph& g, std::size_t k,
                            const std::function<bool(const Partition&)>& fn,
                            std::uint64_t node_budget) {
  if (k == 0) return true;
  return ColoringSearch(g, k, true, node_budget).Run(fn);
}

CharacterizationVerdict Characterize(const Multigraph& g, const std::optional<Partition>& partition,
                                     const SearchLimits& limits) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw Error(ErrorCode::kInvalidInput, "graph has no vertices");
  std::size_t given_k = 0;
  if (partition) given_k = ValidatePartition(g, *partition);
  if (!IsConnected(g)) {
    CharacterizationVerdict v;
    v.status = VerdictStatus::kRefuse;
    v.refusal_reason = "disconnected";
    return v;
  }
  if (n == 1) {
    CharacterizationVerdict v = Undetermined("a single vertex is the G-graph of every cyclic group");
    v.k = 1;
    v.partition = Partition(1, 0);
    v.class_sizes = {1};
    v.class_degrees = {0};
    return v;
  }
  if (partition) return Judge(g, *partition, given_k);

  // Every vertex meets all other classes, so k - 1 is at most its number of
  // distinct neighbours.
  std::size_t k_max = n;
  for (VertexId x = 0; x < n; ++x) k_max = std::min(k_max, g.neighbors(x).size() + 1);

  std::vector<std::string> log;
  std::optional<CharacterizationVerdict> first_refusal;
  bool open = false;
  const bool searchable = n <= limits.max_vertices;
  for (std::size_t k = 2; k <= k_max; ++k) {
    const std::string tag = "k=" + std::to_string(k) + ": ";
    const auto obstruction = ArithmeticObstruction(g, k);
    if (k > limits.max_k || !searchable) {
      if (obstruction) {
        log.push_back(tag + *obstruction);
        if (!first_refusal) {
          first_refusal = CharacterizationVerdict{};
          first_refusal->k = k;
          first_refusal->refusal_reason = *obstruction;
        }
      } else {
        log.push_back(tag + "not excluded and beyond the search bounds");
        open = true;
      }
      continue;
    }

    std::optional<Partition> any;
    const bool finished = ColoringSearch(g, k, false, limits.node_budget).Run([&](const Partition& p) {
      any = p;
      return false;
    });
    if (!any) {
      if (finished) {
        log.push_back(tag + "no proper colouring");
      } else {
        log.push_back(tag + "node budget exhausted");
        open = true;
      }
      continue;
    }
    if (obstruction) {
      log.push_back(tag + *obstruction);
      if (!first_refusal) {
        first_refusal = Describe(g, *any, k);
        first_refusal->refusal_reason = *obstruction;
      }
      continue;
    }

    std::optional<CharacterizationVerdict> accepted, refused;
    const bool complete = ForEachUniformColoring(g, k, [&](const Partition& p) {
      CharacterizationVerdict v = Judge(g, p, k);
      if (v.status == VerdictStatus::kAccept) {
        accepted = std::move(v);
        return false;
      }
      if (!refused) refused = std::move(v);
      return true;
    }, limits.node_budget);
    if (accepted) {
      log.push_back(tag + "ACCEPT");
      accepted->search_log = std::move(log);
      return *accepted;
    }
    if (!complete) {
      log.push_back(tag + "node budget exhausted");
      open = true;
      continue;
    }
    // Every colouring fails the class conditions; report how the first does.
    if (!refused) refused = Judge(g, *any, k);
    log.push_back(tag + refused->refusal_reason);
    if (!first_refusal) first_refusal = std::move(refused);
  }

  CharacterizationVerdict out;
  if (open) {
    out = Undetermined("search bounds reached before every k could be decided");
  } else if (first_refusal) {
    out = std::move(*first_refusal);
    out.status = VerdictStatus::kRefuse;
  } else {
    out.status = VerdictStatus::kRefuse;
    out.refusal_reason = "no proper colouring into at most " + std::to_string(k_max) + " classes";
  }
  out.search_log = std::move(log);
  return out;
}

CharacterizationVerdict CharacterizeBipartite(const Multigraph& g) {
  if (g.vertex_count() < 2 || !IsConnected(g))
    throw Error(ErrorCode::kInvalidInput, "graph must be connected with at least two vertices");
  auto sides = TwoColoring(g);
  if (!sides) throw Error(ErrorCode::kInvalidInput, "graph is not bipartite");

  // Class 0 is the side of smaller (first-seen) degree.
  std::uint64_t d[2] = {std::numeric_limits<std::uint64_t>::max(), std::numeric_limits<std::uint64_t>::max()};
  for (VertexId x = 0; x < g.vertex_count(); ++x) d[(*sides)[x]] = std::min(d[(*sides)[x]], g.degree(x));
  const int low = d[0] <= d[1] ? 0 : 1;
  Partition p(g.vertex_count());
  for (VertexId x = 0; x < g.vertex_count(); ++x) p[x] = (*sides)[x] == low ? 0 : 1;

  return Judge(g, p, 2);
}

CharacterizationVerdict TuranVerdict(std::size_t n, std::size_t r) {
  if (r < 2 || r > n) throw Error(ErrorCode::kInvalidParameter, "Turan verdict needs 2 <= r <= n");
  const Partition p = TuranPartition(n, r);
  CharacterizationVerdict v;
  v.k = r;
  v.partition = p;
  v.class_sizes.assign(r, 0);
  for (auto c : p) ++v.class_sizes[c];
  for (std::size_t c = 0; c < r; ++c) v.class_degrees.push_back(n - v.class_sizes[c]);

  if (n % r == 0) {
    const std::uint64_t q = n / r;
    v.group_order = q * q;
    v.gen_orders.assign(r, q);
  } else if (r == 2) {
    // Larger class first, so orders read (floor, ceil).
    v.group_order = std::uint64_t{(n + 1) / 2} * (n / 2);
    v.gen_orders = {n / 2, (n + 1) / 2};
  } else {
    // Degrees n - ceil(n/r) and n - floor(n/r) differ by one, so r - 1 >= 2
    // cannot divide both.
    v.status = VerdictStatus::kRefuse;
    for (std::uint64_t d : v.class_degrees)
      if (d % (r - 1) != 0) {
        v.refusal_reason = "generator order " + Fraction(d, r - 1) + " not integral";
        break;
      }
    return v;
  }
  v.status = VerdictStatus::kAccept;
  v.presentation = Presentation(v.gen_orders);
  return v;
}

std::vector<std::string> WitnessCatalog(std::uint64_t order) {
  std::vector<std::string> out;
  if (order == 0) return out;
  if (order == 1) return {"trivial"};
  const std::string c = "cyclic:";
  out.push_back(c + std::to_string(order));
  for (std::uint64_t a = 2; a * a <= order; ++a) {
    if (order % a) continue;
    const std::uint64_t b = order / a;
    // Z2 x Z2 is listed under its own name below.
    if (b % a == 0 && order != 4) out.push_back(c + std::to_string(a) + "*" + c + std::to_string(b));
  }
  for (std::uint64_t a = 2; a * a * a <= order; ++a)
    for (std::uint64_t b = a; a * b * b <= order; b += a) {
      if (order % (a * b)) continue;
      const std::uint64_t rest = order / (a * b);
      if (rest % b == 0)
        out.push_back(c + std::to_string(a) + "*" + c + std::to_string(b) + "*" + c + std::to_string(rest));
    }
  if (order == 4) out.push_back("klein");
  if (order % 2 == 0 && order / 2 >= 3) out.push_back("dihedral:" + std::to_string(order / 2));
  if (order % 4 == 0 && order / 4 >= 2) out.push_back("genq:" + std::to_string(order / 4));
  if (order % 8 == 0 && order / 8 >= 2) out.push_back("semidihedral:" + std::to_string(order / 8));
  std::uint64_t fact = 2;
  for (std::uint64_t n = 3; n <= 8; ++n) {
    fact *= n;
    if (fact == order) out.push_back("sym:" + std::to_string(n));
    if (n >= 4 && fact / 2 == order) out.push_back("alt:" + std::to_string(n));
  }
  return out;
}

std::vector<Witness> WitnessSearch(const CharacterizationVerdict& verdict, const Multigraph& target,
                                   std::size_t max_hits) {
  std::vector<Witness> hits;
  if (verdict.status != VerdictStatus::kAccept || !verdict.group_order || max_hits == 0) return hits;
  if (target.vertex_count() > kMaxIsoVertices) return hits;
  const std::vector<std::uint64_t>& orders = verdict.gen_orders;
  std::uint64_t budget = kMaxWitnessSequences;

  for (const std::string& spec : WitnessCatalog(*verdict.group_order)) {
    GroupTable g = ParseGroupSpec(spec);
    const Element n = static_cast<Element>(g.order());
    std::map<std::uint64_t, std::vector<Element>> by_order;
    for (Element x = 0; x < n; ++x) by_order[ElementOrder(g, x)].push_back(x);

    // One representative per conjugacy class for the first position.
    std::vector<Element> first;
    {
      std::vector<bool> covered(n, false);
      for (Element x : by_order[orders[0]]) {
        if (covered[x]) continue;
        first.push_back(x);
        for (Element y = 0; y < n; ++y) covered[g.mul(g.mul(y, x), g.inv(y))] = true;
      }
    }

    std::vector<Element> seq(orders.size());
    bool done = false;
    std::function<void(std::size_t)> extend = [&](std::size_t i) {
      if (done) return;
      if (i == orders.size()) {
        if (budget == 0) {
          done = true;
          return;
        }
        --budget;
        if (GeneratedSubgroup(g, seq).size() != n) return;
        const GGraph gg = BuildGGraph(g, GenSequence(g, seq));
        if (!AreIsomorphic(gg.graph(), target)) return;
        hits.push_back(Witness{spec, g, seq});
        done = hits.size() >= max_hits;
        return;
      }
      const std::vector<Element>& pool = i == 0 ? first : by_order[orders[i]];
      for (Element x : pool) {
        seq[i] = x;
        extend(i + 1);
        if (done) return;
      }
    };
    extend(0);
    if (hits.size() >= max_hits || budget == 0) break;
  }
  return hits;
}

}  // namespace ggraph
