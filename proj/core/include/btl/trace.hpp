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

#ifndef BTL_TRACE_HPP
#define BTL_TRACE_HPP

#include <string>

#include "btl/eval.hpp"

namespace btl {

// Compact atom form used in JSON and DOT output: pred(a,b).
std::string compact(const Atom& a);

// {"initial": [...], "events": [...], "outcome": "success"|"failure"|"budget", "final": [...]}
// with "final" present only on success. Pretty-printed with two-space indent.
std::string trace_to_json(const EvalOutcome& outcome);

// One node per operator firing plus the initial state; an edge per atom
// copy flowing from its producer to its consumer (first produced, first
// consumed).
std::string trace_to_dot(const Trace& trace);

}  // namespace btl

#endif  // BTL_TRACE_HPP
