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

#ifndef BTL_TESTKIT_SHRINK_HPP
#define BTL_TESTKIT_SHRINK_HPP

#include <functional>
#include <vector>

#include "btl/syntax.hpp"

namespace btl::testkit {

// One-step simplifications of a tree, smallest first: the tree's own
// children, then copies with a single child removed or a single subtree
// simplified.
std::vector<Tree> shrink_candidates(const Tree& tree);

// States with one atom copy removed.
std::vector<WorldState> shrink_candidates(const WorldState& d);

// Greedy descent: repeatedly takes the first candidate that still fails.
Tree shrink_tree(Tree tree, const std::function<bool(const Tree&)>& fails);
WorldState shrink_state(WorldState d, const std::function<bool(const WorldState&)>& fails);

// The signature restricted to operators the tree mentions.
Signature restrict_signature(const Signature& sig, const Tree& tree);

}  // namespace btl::testkit

#endif  // BTL_TESTKIT_SHRINK_HPP
