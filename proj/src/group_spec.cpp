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

#include "ggraph/group_spec.hpp"

#include <cctype>
#include <charconv>

#include "ggraph/error.hpp"

namespace ggraph {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t ParseCount(std::string_view text, std::string_view spec) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw Error(ErrorCode::kParse, "bad integer in group spec '" + std::string(spec) + "'");
  return value;
}

}  // namespace

GroupTable ParseGroupSpec(std::string_view spec) {
  spec = Trim(spec);
  if (spec.empty()) throw Error(ErrorCode::kParse, "empty group spec");
  if (spec.substr(0, 5) != "perm:") {
    if (auto star = spec.find('*'); star != std::string_view::npos)
      return MakeDirectProduct(ParseGroupSpec(spec.substr(0, star)),
                               ParseGroupSpec(spec.substr(star + 1)));
  }
  if (spec == "klein") return MakeKlein();
  if (spec == "trivial") return MakeTrivial();
  auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorCode::kParse, "unknown group spec '" + std::string(spec) + "'");
  std::string_view family = spec.substr(0, colon);
  std::string_view arg = Trim(spec.substr(colon + 1));
  if (family == "perm") {
    std::vector<Permutation> gens;
    std::size_t start = 0;
    while (start <= arg.size()) {
      std::size_t semi = arg.find(';', start);
      std::string_view piece = Trim(arg.substr(start, semi == std::string_view::npos ? arg.npos : semi - start));
      if (!piece.empty()) gens.push_back(ParseCycles(piece, 0));
      if (semi == std::string_view::npos) break;
      start = semi + 1;
    }
    return ClosureFromPermutations(gens);
  }
  const std::size_t n = ParseCount(arg, spec);
  if (family == "cyclic") return MakeCyclic(n);
  if (family == "sym") return MakeSymmetric(n);
  if (family == "alt") return MakeAlternating(n);
  if (family == "dihedral") return MakeDihedral(n);
  if (family == "genq") return MakeGeneralizedQuaternion(n);
  if (family == "semidihedral") return MakeSemidihedral(n);
  throw Error(ErrorCode::kParse, "unknown group family '" + std::string(family) + "'");
}

std::vector<std::string> SplitGeneratorList(std::string_view list) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : list) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.emplace_back(Trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!Trim(current).empty() || !out.empty()) out.emplace_back(Trim(current));
  for (const auto& t : out)
    if (t.empty()) throw Error(ErrorCode::kParse, "empty generator in list '" + std::string(list) + "'");
  return out;
}

Element ResolveElement(const GroupTable& g, std::string_view token) {
  token = Trim(token);
  if (auto x = g.find_label(token)) return *x;
  if (auto x = g.designated(token)) return *x;
  if (token == "e" || token == "()") return g.identity();
  if (!token.empty() && token.front() == '#') {
    std::size_t idx = ParseCount(token.substr(1), token);
    if (idx >= g.order()) throw Error(ErrorCode::kParse, "element index out of range: " + std::string(token));
    return static_cast<Element>(idx);
  }
  if (g.is_permutation_group() && !token.empty() && token.front() == '(') {
    if (auto x = g.find_permutation(ParseCycles(token, g.permutation_degree()))) return *x;
    throw Error(ErrorCode::kParse, "permutation " + std::string(token) + " is not in the group");
  }
  throw Error(ErrorCode::kParse, "unknown element '" + std::string(token) + "'");
}

std::vector<Element> ResolveGenerators(const GroupTable& g, std::string_view list) {
  std::vector<Element> out;
  for (const auto& t : SplitGeneratorList(list)) out.push_back(ResolveElement(g, t));
  return out;
}

}  // namespace ggraph
