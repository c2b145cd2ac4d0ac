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

#ifndef BTL_PROVER_HPP
#define BTL_PROVER_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "btl/formula.hpp"

namespace btl {

// Strict is the plain linear fragment. Affine adds weakening: unused
// resources may be discarded.
enum class Mode { Strict, Affine };

// A node of a sequent proof: conclusion `context |- goal` derived by `rule`
// from `premises`. Contexts are kept sorted.
//
// Rule names: init, 1R, 1L, topR, *R, *L, -oR, -oL, &R, &L1, &L2, W.
struct ProofNode {
  std::string rule;
  std::vector<Formula> context;
  Formula goal = Formula::one();
  std::optional<Formula> principal;
  std::vector<ProofNode> premises;

  std::size_t size() const;
};

struct ProofResult {
  enum class Status { Proved, Unproved, BudgetExhausted };

  Status status = Status::Unproved;
  std::optional<ProofNode> proof;  // set iff Proved
  std::size_t steps = 0;           // rule applications attempted

  bool proved() const { return status == Status::Proved; }
};

const char* to_string(ProofResult::Status s);
const char* to_string(Mode m);

inline constexpr std::size_t kDefaultProverBudget = 1'000'000;

// Focused backward search with input/output resource passing. The budget
// counts rule applications attempted; Unproved means the whole space was
// explored. Throws Error(InvalidArgument) for a zero budget.
ProofResult prove(const Sequent& seq, Mode mode, std::size_t budget = kDefaultProverBudget);

// Naive search that enumerates every context split; memoized per call.
// Only accepts sequents whose total formula size is at most kOracleSizeCap.
inline constexpr std::size_t kOracleSizeCap = 24;
std::size_t sequent_size(const Sequent& seq);
ProofResult oracle_prove(const Sequent& seq, Mode mode);

// Mechanical replay of a proof against the rule schemas. Returns an empty
// string when every node checks, otherwise a description of the first bad node.
std::string check_proof(const ProofNode& proof, Mode mode);
// As above, and also checks that the root concludes `seq`.
std::string check_proof(const Sequent& seq, const ProofNode& proof, Mode mode);

// Indented rendering, one conclusion per line with the rule name.
std::string to_string(const ProofNode& proof);

}  // namespace btl

#endif  // BTL_PROVER_HPP
