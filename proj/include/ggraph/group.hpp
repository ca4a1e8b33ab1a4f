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

// Concrete finite groups: elements are dense indices 0..n-1 with a total
// multiplication. Small groups (n <= 1024) carry a full multiplication table;
// larger ones multiply through their family rule.

#ifndef GGRAPH_GROUP_HPP_
#define GGRAPH_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ggraph {

using Element = std::uint32_t;

// Images of 0..d-1. Composition applies the right factor first:
// (p * q)(i) = p(q(i)).
using Permutation = std::vector<std::uint8_t>;

inline constexpr std::size_t kMaxTableOrder = 1024;
inline constexpr std::size_t kMaxClosureOrder = 10000;

Permutation Compose(const Permutation& p, const Permutation& q);
Permutation Invert(const Permutation& p);
bool IsIdentity(const Permutation& p);
// Cycle notation with 1-based points, "()" for the identity.
std::string CycleNotation(const Permutation& p);
// Accepts "(1 2 3)(4 5)", "(123)(45)", "(1,2,3)" and "()"; points are
// 1-based. The result acts on max(degree, largest point) points.
Permutation ParseCycles(std::string_view text, std::size_t degree);

class GroupTable {
 public:
  using MulRule = std::function<Element(Element, Element)>;

  // Builds the table (when small), inverses and label index, then checks the
  // group laws. Throws Error(kInvalidParameter) if any law fails.
  GroupTable(std::size_t order, Element identity, MulRule rule,
             std::vector<std::string> labels, std::string family_tag);

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const {
    return table_.empty() ? (*rule_)(a, b) : table_[a * order_ + b];
  }
  Element inv(Element x) const { return inv_[x]; }
  const std::string& label(Element x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& family_tag() const { return family_tag_; }
  bool has_table() const { return !table_.empty(); }

  std::optional<Element> find_label(std::string_view label) const;

  // Named elements of the normal-form families ("r", "s", "t", "a", "b").
  std::optional<Element> designated(std::string_view name) const;
  const std::map<std::string, Element>& designated_elements() const {
    return designated_;
  }

  // Permutation representation, present for symmetric, alternating and
  // closure-built groups.
  bool is_permutation_group() const { return !perms_.empty(); }
  std::size_t permutation_degree() const;
  const Permutation& permutation(Element x) const { return perms_[x]; }
  std::optional<Element> find_permutation(const Permutation& p) const;

  // Used by the factory functions.
  void set_designated(std::map<std::string, Element> named) {
    designated_ = std::move(named);
  }
  void set_permutations(std::vector<Permutation> perms);

 private:
  std::size_t order_;
  Element identity_;
  std::shared_ptr<const MulRule> rule_;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Element> label_index_;
  std::string family_tag_;
  std::map<std::string, Element> designated_;
  std::vector<Permutation> perms_;
  std::shared_ptr<std::unordered_map<std::string, Element>> perm_index_;
};

// Returns an empty string when identity, inverse and associativity laws hold,
// else a description of the first violation. Associativity is exhaustive for
// n <= 64 and sampled on 10,000 random triples otherwise.
std::string CheckGroupLaws(const GroupTable& g);

GroupTable MakeTrivial();
GroupTable MakeCyclic(std::size_t n);
GroupTable MakeKlein();
GroupTable MakeDirectProduct(const GroupTable& g, const GroupTable& h);
GroupTable MakeSymmetric(std::size_t n);
GroupTable MakeAlternating(std::size_t n);
// D_2n = <r, s | r^n = s^2 = e, srs = r^-1>, elements r^i s^j at index
// j*n + i. Designates r, s and t = rs.
GroupTable MakeDihedral(std::size_t n);
// Q_n = <a, b | a^2n = e, b^2 = a^n, ab = ba^(2n-1)>, order 4n.
GroupTable MakeGeneralizedQuaternion(std::size_t n);
// SD_8k = <a, b | a^4k = b^2 = e, ba = a^(2k-1) b>, order 8k.
GroupTable MakeSemidihedral(std::size_t k);
GroupTable ClosureFromPermutations(std::span<const Permutation> gens);
// Restriction of g to a subgroup given by its (closed) element set. Labels
// and permutations carry over; elements are reindexed in ascending order of
// their index in g.
GroupTable MakeSubgroup(const GroupTable& g, std::span<const Element> elements);

std::size_t ElementOrder(const GroupTable& g, Element x);
// s^0, s^1, ..., s^(o-1).
std::vector<Element> CyclicSubgroup(const GroupTable& g, Element s);
// Sorted element set of the subgroup generated by gens.
std::vector<Element> GeneratedSubgroup(const GroupTable& g,
                                       std::span<const Element> gens);

// Right coset <s>x = { s^j x : 0 <= j < o(s) }.
struct Coset {
  std::size_t gen_position = 0;
  std::vector<Element> elements;  // sorted
  Element rep = 0;                // minimum element
};

// Cosets of <s>, ordered by representative.
std::vector<Coset> RightCosets(const GroupTable& g, Element s,
                               std::size_t gen_position = 0);

// Ordered generating sequence; repeats allowed. A position, not an element
// value, names a partition class of the G-graph.
class GenSequence {
 public:
  // Throws Error(kNotGenerating) unless the elements generate g.
  GenSequence(const GroupTable& g, std::vector<Element> positions);

  std::size_t size() const { return positions_.size(); }
  Element operator[](std::size_t i) const { return positions_[i]; }
  const std::vector<Element>& positions() const { return positions_; }
  const std::vector<std::size_t>& orders() const { return orders_; }

 private:
  std::vector<Element> positions_;
  std::vector<std::size_t> orders_;
};

}  // namespace ggraph

#endif  // GGRAPH_GROUP_HPP_
