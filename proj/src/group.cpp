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

#include "ggraph/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <utility>

#include "ggraph/error.hpp"

namespace ggraph {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParameter: return "invalid-parameter";
    case ErrorCode::kSizeLimit: return "size-limit";
    case ErrorCode::kClosureOverflow: return "closure-overflow";
    case ErrorCode::kNotGenerating: return "not-a-generating-set";
    case ErrorCode::kInvalidPartition: return "invalid-partition";
    case ErrorCode::kInvalidInput: return "invalid-input";
    case ErrorCode::kInvalidMatrix: return "invalid-matrix";
    case ErrorCode::kInvalidPair: return "invalid-pair";
    case ErrorCode::kTooLarge: return "too-large";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kIo: return "io-error";
    case ErrorCode::kOverflow: return "overflow";
  }
  return "unknown";
}

namespace {

std::string PermKey(const Permutation& p) { return std::string(p.begin(), p.end()); }

Permutation IdentityPermutation(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  return p;
}

Permutation Extend(const Permutation& p, std::size_t degree) {
  Permutation out = IdentityPermutation(degree);
  std::copy(p.begin(), p.end(), out.begin());
  return out;
}

bool IsEven(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

// Builds a group on an explicit permutation list; element 0 must be the
// identity.
GroupTable MakePermutationGroup(std::vector<Permutation> perms, std::string tag) {
  auto shared = std::make_shared<std::vector<Permutation>>(perms);
  auto index = std::make_shared<std::unordered_map<std::string, Element>>();
  index->reserve(perms.size());
  for (Element i = 0; i < perms.size(); ++i) index->emplace(PermKey(perms[i]), i);
  auto rule = [shared, index](Element a, Element b) -> Element {
    return index->at(PermKey(Compose((*shared)[a], (*shared)[b])));
  };
  std::vector<std::string> labels;
  labels.reserve(perms.size());
  for (const auto& p : perms) labels.push_back(CycleNotation(p));
  GroupTable g(perms.size(), 0, rule, std::move(labels), std::move(tag));
  g.set_permutations(std::move(perms));
  return g;
}

std::string PowerLabel(const char* base, std::size_t i) {
  if (i == 0) return "";
  if (i == 1) return base;
  return std::string(base) + "^" + std::to_string(i);
}

// Labels for normal-form elements x^i y^j.
std::string NormalFormLabel(const char* x, std::size_t i, const char* y, std::size_t j) {
  std::string s = PowerLabel(x, i) + PowerLabel(y, j);
  return s.empty() ? "e" : s;
}

}  // namespace

Permutation Compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Permutation Invert(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint8_t>(i);
  return r;
}

bool IsIdentity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

std::string CycleNotation(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation ParseCycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t max_point = 0;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::kParse, "bad cycle notation '" + std::string(text) + "': " + why);
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != '(') fail("expected '('");
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) fail("missing ')'");
    std::string_view body = text.substr(i + 1, close - i - 1);
    bool separated = body.find_first_of(" ,") != std::string_view::npos;
    std::vector<std::size_t> cycle;
    std::size_t j = 0;
    while (j < body.size()) {
      char d = body[j];
      if (d == ' ' || d == ',') {
        ++j;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(d))) fail("unexpected character");
      std::size_t end = j + 1;
      if (separated)
        while (end < body.size() && std::isdigit(static_cast<unsigned char>(body[end]))) ++end;
      std::size_t point = std::stoul(std::string(body.substr(j, end - j)));
      if (point == 0 || point > 255) fail("points must be in 1..255");
      cycle.push_back(point - 1);
      max_point = std::max(max_point, point);
      j = end;
    }
    std::set<std::size_t> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != cycle.size()) fail("repeated point in a cycle");
    cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  Permutation p = IdentityPermutation(std::max(degree, max_point));
  // Cycles compose right-to-left, matching Compose.
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    Permutation c = IdentityPermutation(p.size());
    for (std::size_t k = 0; k < it->size(); ++k)
      c[(*it)[k]] = static_cast<std::uint8_t>((*it)[(k + 1) % it->size()]);
    p = Compose(c, p);
  }
  return p;
}

GroupTable::GroupTable(std::size_t order, Element identity, MulRule rule,
                       std::vector<std::string> labels, std::string family_tag)
    : order_(order),
      identity_(identity),
      rule_(std::make_shared<const MulRule>(std::move(rule))),
      labels_(std::move(labels)),
      family_tag_(std::move(family_tag)) {
  if (order_ == 0) throw Error(ErrorCode::kInvalidParameter, "group order must be positive");
  if (identity_ >= order_) throw Error(ErrorCode::kInvalidParameter, "identity out of range");
  if (labels_.size() != order_)
    throw Error(ErrorCode::kInvalidParameter, "one label per element required");
  for (Element x = 0; x < order_; ++x) {
    if (!label_index_.emplace(labels_[x], x).second)
      throw Error(ErrorCode::kInvalidParameter, "duplicate element label '" + labels_[x] + "'");
  }
  if (order_ <= kMaxTableOrder) {
    table_.resize(order_ * order_);
    for (Element a = 0; a < order_; ++a)
      for (Element b = 0; b < order_; ++b) {
        Element c = (*rule_)(a, b);
        if (c >= order_) throw Error(ErrorCode::kInvalidParameter, "product out of range");
        table_[a * order_ + b] = c;
      }
  }
  inv_.assign(order_, identity_);
  std::vector<bool> done(order_, false);
  for (Element x = 0; x < order_; ++x) {
    if (done[x]) continue;
    // Walk the powers of x; x^j and x^(o-j) are mutual inverses.
    std::vector<Element> powers{identity_};
    Element p = x;
    while (p != identity_) {
      powers.push_back(p);
      p = mul(p, x);
      if (powers.size() > order_)
        throw Error(ErrorCode::kInvalidParameter, "element of infinite order");
    }
    std::size_t o = powers.size();
    for (std::size_t j = 0; j < o; ++j) {
      inv_[powers[j]] = powers[(o - j) % o];
      done[powers[j]] = true;
    }
  }
  std::string violation = CheckGroupLaws(*this);
  if (!violation.empty()) throw Error(ErrorCode::kInvalidParameter, violation);
}

std::optional<Element> GroupTable::find_label(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Element> GroupTable::designated(std::string_view name) const {
  auto it = designated_.find(std::string(name));
  if (it == designated_.end()) return std::nullopt;
  return it->second;
}

std::size_t GroupTable::permutation_degree() const {
  return perms_.empty() ? 0 : perms_.front().size();
}

void GroupTable::set_permutations(std::vector<Permutation> perms) {
  perms_ = std::move(perms);
  perm_index_ = std::make_shared<std::unordered_map<std::string, Element>>();
  for (Element i = 0; i < perms_.size(); ++i) perm_index_->emplace(PermKey(perms_[i]), i);
}

std::optional<Element> GroupTable::find_permutation(const Permutation& p) const {
  if (!perm_index_) return std::nullopt;
  Permutation q = p;
  std::size_t degree = permutation_degree();
  if (q.size() > degree) {
    for (std::size_t i = degree; i < q.size(); ++i)
      if (q[i] != i) return std::nullopt;
    q.resize(degree);
  } else if (q.size() < degree) {
    q = Extend(q, degree);
  }
  auto it = perm_index_->find(PermKey(q));
  if (it == perm_index_->end()) return std::nullopt;
  return it->second;
}

std::string CheckGroupLaws(const GroupTable& g) {
  const std::size_t n = g.order();
  const Element e = g.identity();
  for (Element x = 0; x < n; ++x) {
    if (g.mul(e, x) != x || g.mul(x, e) != x)
      return "identity law fails at " + g.label(x);
    if (g.mul(x, g.inv(x)) != e || g.mul(g.inv(x), x) != e)
      return "inverse law fails at " + g.label(x);
  }
  auto assoc = [&](Element a, Element b, Element c) {
    return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
  };
  if (n <= 64) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (!assoc(a, b, c)) return "associativity fails";
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    for (int t = 0; t < 10000; ++t)
      if (!assoc(pick(rng), pick(rng), pick(rng))) return "associativity fails";
  }
  return {};
}

GroupTable MakeTrivial() {
  return GroupTable(1, 0, [](Element, Element) { return Element{0}; }, {"e"}, "trivial");
}

GroupTable MakeCyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidParameter, "cyclic group order must be >= 1");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return GroupTable(
      n, 0, [n](Element a, Element b) { return static_cast<Element>((a + b) % n); },
      std::move(labels), "Z" + std::to_string(n));
}

GroupTable MakeKlein() {
  // e=0, a=1, b=2, ab=3 with XOR as multiplication.
  GroupTable g(4, 0, [](Element a, Element b) { return a ^ b; }, {"e", "a", "b", "ab"},
               "Klein");
  g.set_designated({{"a", 1}, {"b", 2}, {"ab", 3}});
  return g;
}

GroupTable MakeDirectProduct(const GroupTable& g, const GroupTable& h) {
  const std::size_t m = h.order();
  const std::size_t n = g.order() * m;
  if (n > kMaxClosureOrder)
    throw Error(ErrorCode::kSizeLimit, "direct product exceeds 10000 elements");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < m; ++b) labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
  auto rule = [g, h, m](Element x, Element y) {
    return static_cast<Element>(g.mul(x / m, y / m) * m + h.mul(x % m, y % m));
  };
  return GroupTable(n, static_cast<Element>(g.identity() * m + h.identity()), rule,
                    std::move(labels), g.family_tag() + "x" + h.family_tag());
}

GroupTable MakeSymmetric(std::size_t n) {
  if (n < 1 || n > 8) throw Error(ErrorCode::kSizeLimit, "symmetric group degree must be in 1..8");
  std::vector<Permutation> perms;
  Permutation p = IdentityPermutation(n);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return MakePermutationGroup(std::move(perms), "S" + std::to_string(n));
}

GroupTable MakeAlternating(std::size_t n) {
  if (n < 1 || n > 8)
    throw Error(ErrorCode::kSizeLimit, "alternating group degree must be in 1..8");
  std::vector<Permutation> perms;
  Permutation p = IdentityPermutation(n);
  do {
    if (IsEven(p)) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return MakePermutationGroup(std::move(perms), "A" + std::to_string(n));
}

GroupTable MakeDihedral(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::kInvalidParameter, "dihedral group needs n >= 2");
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < n; ++i) labels.push_back(NormalFormLabel("r", i, "s", j));
  // (r^i s^a)(r^k s^b) = r^(i + (-1)^a k) s^(a+b)
  auto rule = [n](Element x, Element y) {
    std::size_t i = x % n, a = x / n, k = y % n, b = y / n;
    std::size_t rot = a == 0 ? (i + k) % n : (i + n - k) % n;
    return static_cast<Element>(((a + b) % 2) * n + rot);
  };
  GroupTable g(2 * n, 0, rule, std::move(labels), "D" + std::to_string(2 * n));
  g.set_designated({{"r", 1}, {"s", static_cast<Element>(n)}, {"t", static_cast<Element>(n + 1)}});
  return g;
}

GroupTable MakeGeneralizedQuaternion(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::kInvalidParameter, "generalized quaternion group needs n >= 2");
  const std::size_t m = 2 * n;  // order of a
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < m; ++i) labels.push_back(NormalFormLabel("a", i, "b", j));
  // b a^k = a^-k b and b^2 = a^n.
  auto rule = [n, m](Element x, Element y) {
    std::size_t i = x % m, j = x / m, k = y % m, l = y / m;
    if (j == 0) return static_cast<Element>(l * m + (i + k) % m);
    std::size_t rot = (i + m - k) % m;
    if (l == 0) return static_cast<Element>(m + rot);
    return static_cast<Element>((rot + n) % m);
  };
  GroupTable g(4 * n, 0, rule, std::move(labels), n == 2 ? "Q" : "Q" + std::to_string(n));
  g.set_designated({{"a", 1}, {"b", static_cast<Element>(m)}});
  return g;
}

GroupTable MakeSemidihedral(std::size_t k) {
  if (k < 1) throw Error(ErrorCode::kInvalidParameter, "semidihedral group needs k >= 1");
  const std::size_t m = 4 * k;  // order of a
  const std::size_t twist = 2 * k - 1;
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < m; ++i) labels.push_back(NormalFormLabel("a", i, "b", j));
  // b a^t = a^(t(2k-1)) b and b^2 = e.
  auto rule = [m, twist](Element x, Element y) {
    std::size_t i = x % m, j = x / m, t = y % m, l = y / m;
    std::size_t rot = j == 0 ? (i + t) % m : (i + t * twist) % m;
    return static_cast<Element>(((j + l) % 2) * m + rot);
  };
  GroupTable g(8 * k, 0, rule, std::move(labels), "SD" + std::to_string(8 * k));
  g.set_designated({{"a", 1}, {"b", static_cast<Element>(m)}});
  return g;
}

GroupTable ClosureFromPermutations(std::span<const Permutation> gens) {
  std::size_t degree = 0;
  for (const auto& p : gens) degree = std::max(degree, p.size());
  std::vector<Permutation> normalized;
  for (const auto& p : gens) {
    std::vector<bool> hit(p.size(), false);
    for (auto v : p) {
      if (v >= p.size() || hit[v])
        throw Error(ErrorCode::kInvalidParameter, "generator is not a permutation");
      hit[v] = true;
    }
    normalized.push_back(Extend(p, degree));
  }
  std::vector<Permutation> elements{IdentityPermutation(degree)};
  std::unordered_map<std::string, Element> seen{{PermKey(elements[0]), 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : normalized) {
      Permutation next = Compose(elements[head], s);
      if (seen.emplace(PermKey(next), static_cast<Element>(elements.size())).second) {
        if (elements.size() >= kMaxClosureOrder)
          throw Error(ErrorCode::kClosureOverflow, "permutation closure exceeds 10000 elements");
        elements.push_back(std::move(next));
      }
    }
  }
  return MakePermutationGroup(std::move(elements), "perm");
}

GroupTable MakeSubgroup(const GroupTable& g, std::span<const Element> elements) {
  std::vector<Element> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto index = std::make_shared<std::unordered_map<Element, Element>>();
  for (Element i = 0; i < sorted.size(); ++i) index->emplace(sorted[i], i);
  if (!index->contains(g.identity()))
    throw Error(ErrorCode::kInvalidParameter, "subgroup must contain the identity");
  auto members = std::make_shared<std::vector<Element>>(sorted);
  auto rule = [g, members, index](Element a, Element b) -> Element {
    auto it = index->find(g.mul((*members)[a], (*members)[b]));
    if (it == index->end()) throw Error(ErrorCode::kInvalidParameter, "element set is not closed");
    return it->second;
  };
  std::vector<std::string> labels;
  for (Element x : sorted) labels.push_back(g.label(x));
  GroupTable h(sorted.size(), index->at(g.identity()), rule, std::move(labels),
               "subgroup of " + g.family_tag());
  if (g.is_permutation_group()) {
    std::vector<Permutation> perms;
    for (Element x : sorted) perms.push_back(g.permutation(x));
    h.set_permutations(std::move(perms));
  }
  return h;
}

std::size_t ElementOrder(const GroupTable& g, Element x) {
  std::size_t t = 1;
  for (Element p = x; p != g.identity(); p = g.mul(p, x)) ++t;
  return t;
}

std::vector<Element> CyclicSubgroup(const GroupTable& g, Element s) {
  std::vector<Element> powers{g.identity()};
  for (Element p = s; p != g.identity(); p = g.mul(p, s)) powers.push_back(p);
  return powers;
}

std::vector<Element> GeneratedSubgroup(const GroupTable& g, std::span<const Element> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Element> out{g.identity()};
  in[g.identity()] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Element s : gens) {
      Element next = g.mul(out[head], s);
      if (!in[next]) {
        in[next] = true;
        out.push_back(next);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Coset> RightCosets(const GroupTable& g, Element s, std::size_t gen_position) {
  const std::vector<Element> powers = CyclicSubgroup(g, s);
  std::vector<bool> assigned(g.order(), false);
  std::vector<Coset> cosets;
  cosets.reserve(g.order() / powers.size());
  for (Element x = 0; x < g.order(); ++x) {
    if (assigned[x]) continue;
    Coset c;
    c.gen_position = gen_position;
    for (Element p : powers) {
      Element y = g.mul(p, x);
      assigned[y] = true;
      c.elements.push_back(y);
    }
    std::sort(c.elements.begin(), c.elements.end());
    c.rep = c.elements.front();
    cosets.push_back(std::move(c));
  }
  return cosets;
}

GenSequence::GenSequence(const GroupTable& g, std::vector<Element> positions)
    : positions_(std::move(positions)) {
  if (positions_.empty())
    throw Error(ErrorCode::kInvalidParameter, "generating sequence must be non-empty");
  for (Element x : positions_)
    if (x >= g.order()) throw Error(ErrorCode::kInvalidParameter, "generator index out of range");
  if (GeneratedSubgroup(g, positions_).size() != g.order())
    throw Error(ErrorCode::kNotGenerating, "sequence does not generate the group");
  for (Element x : positions_) orders_.push_back(ElementOrder(g, x));
}

}  // namespace ggraph
