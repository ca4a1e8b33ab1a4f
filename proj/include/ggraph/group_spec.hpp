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

// Group spec mini-language:
//
//   cyclic:n  sym:n  alt:n  dihedral:n  genq:n  semidihedral:k  klein  trivial
//   perm:<cycles;cycles;...>     e.g. perm:(1 2);(1 2 3)
//   A*B                          direct product, e.g. cyclic:3*cyclic:3
//
// Generator lists are comma separated (commas inside parentheses do not
// split). Each entry is an element label, a designated name (r, s, t, a, b),
// "e", a permutation in cycle notation, or "#<index>".

#ifndef GGRAPH_GROUP_SPEC_HPP_
#define GGRAPH_GROUP_SPEC_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "ggraph/group.hpp"

namespace ggraph {

// Throws Error(kParse) for malformed specs; constructor errors propagate.
GroupTable ParseGroupSpec(std::string_view spec);

std::vector<std::string> SplitGeneratorList(std::string_view list);
Element ResolveElement(const GroupTable& g, std::string_view token);
std::vector<Element> ResolveGenerators(const GroupTable& g, std::string_view list);

}  // namespace ggraph

#endif  // GGRAPH_GROUP_SPEC_HPP_
