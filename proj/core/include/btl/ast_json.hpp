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

#ifndef BTL_AST_JSON_HPP
#define BTL_AST_JSON_HPP

#include <string>

#include "btl/eval.hpp"
#include "btl/syntax.hpp"

namespace btl {

// Interface as nested objects keyed by "kind":
//   {"kind": "pos", "atoms": [...]}
//   {"kind": "lolli", "antecedent": [...], "body": {...}}
//   {"kind": "tensor", "released": [...], "body": {...}}
//   {"kind": "with", "lhs": {...}, "rhs": {...}}
//   {"kind": "top"}
// Atom lists are sorted, in compact form. Pretty-printed with two-space indent.
std::string interface_to_json(const Interface& n);

// {"successes": [[...], ...], "can_fail": bool, "exhausted": bool, "steps": n}
std::string outcomes_to_json(const AllOutcomes& all);

}  // namespace btl

#endif  // BTL_AST_JSON_HPP
