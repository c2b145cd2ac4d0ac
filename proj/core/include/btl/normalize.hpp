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

#ifndef BTL_NORMALIZE_HPP
#define BTL_NORMALIZE_HPP

#include <cstddef>

#include "btl/syntax.hpp"

namespace btl {

inline constexpr std::size_t kDefaultNormalizeCap = 10'000;

struct NormalizeOptions {
  // Rewrite Seq{Sel{a + b}; c} to Sel{Seq{a; c} + Seq{b; c}}. When off, a
  // multi-branch prefix of a sequence is kept as a single selector leaf and
  // only Seq{a; Sel{b + c}} is distributed.
  bool distribute_left = true;
};

// Normal form: Sel{Seq{leaf; ...} + ...} where leaves are operators,
// conditions and repeaters (bodies normalized separately) and Abort for an
// empty selector inside a longer sequence. Throws Error(SizeCapExceeded) when
// the result would exceed `cap` nodes.
Tree normalize(const Tree& tree, std::size_t cap = kDefaultNormalizeCap,
               NormalizeOptions options = {});

bool congruent(const Tree& a, const Tree& b, std::size_t cap = kDefaultNormalizeCap);

}  // namespace btl

#endif  // BTL_NORMALIZE_HPP
