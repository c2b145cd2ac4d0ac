/*
 * Copyright 2026 The BTL Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BTL_MATCH_HPP
#define BTL_MATCH_HPP

#include <vector>

#include "btl/syntax.hpp"

namespace btl {

// d |= s with weakening: the atoms of s are included in d. Throws
// Error(NonGroundAtom) for a non-ground s.
bool affine_entails(const WorldState& d, const PosFormula& s);

struct Match {
  Substitution theta;
  WorldState next;

  friend bool operator==(const Match&, const Match&) = default;
};

// All total substitutions extending `partial` under which the antecedent of
// `decl` is included in d, with the successor states. Sorted by theta, no
// duplicates. When `sig` is given, bindings outside a parameter's sort are
// skipped. Throws
// Error(UnboundVariable) if a consequent variable is left unbound.
std::vector<Match> match_rule(const WorldState& d, const OpDecl& decl,
                              const Substitution& partial = {},
                              const Signature* sig = nullptr);

}  // namespace btl

#endif  // BTL_MATCH_HPP
