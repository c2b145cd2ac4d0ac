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

#ifndef BTL_EVAL_HPP
#define BTL_EVAL_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "btl/syntax.hpp"

namespace btl {

// Event kinds: op, cond, seq-enter, seq-exit, sel-enter, sel-exit, rep-enter,
// rep-iter, rep-exit, rollback.
//
// A rollback undoes the effects of a failed selector branch or a failed
// repeater iteration; its deltas are the inverse changes, so replaying every
// event's deltas from the initial state gives the state the run ended in.
struct TraceEvent {
  std::vector<std::size_t> path;
  std::string kind;
  std::optional<std::string> op;
  std::vector<Term> args;
  WorldState consumed;
  WorldState produced;
  bool ok = true;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct Trace {
  WorldState initial;
  std::vector<TraceEvent> events;
};

struct EvalOutcome {
  enum class Status { Success, Failure, BudgetExhausted };

  Status status = Status::Failure;
  std::optional<WorldState> final;  // set iff Success
  Trace trace;
  std::size_t steps = 0;  // node visits

  bool success() const { return status == Status::Success; }
};

const char* to_string(EvalOutcome::Status s);

inline constexpr std::size_t kDefaultEvalBudget = 100'000;

// Deterministic big-step evaluation. Each node visit costs one unit of budget.
// Throws Error(UnknownOp) for operators missing from sig and
// Error(InvalidArgument) for a zero budget. With record_trace off only
// trace.initial is filled in.
EvalOutcome eval(const Signature& sig, const Tree& tree, const WorldState& d,
                 std::size_t budget = kDefaultEvalBudget, bool record_trace = true);

// Applies every event delta to trace.initial.
WorldState replay(const Trace& trace);

// Outcomes when selector branches and operator matches are chosen
// nondeterministically.
struct AllOutcomes {
  std::set<WorldState> successes;
  bool can_fail = false;
  bool exhausted = false;  // budget ran out; the sets are incomplete
  std::size_t steps = 0;

  bool contains(const EvalOutcome& o) const;
  friend bool operator==(const AllOutcomes& a, const AllOutcomes& b) {
    return a.successes == b.successes && a.can_fail == b.can_fail && a.exhausted == b.exhausted;
  }
};

// Throws Error(RepUnsupported) if the tree contains a repeater.
AllOutcomes eval_all(const Signature& sig, const Tree& tree, const WorldState& d,
                     std::size_t budget = kDefaultEvalBudget);

}  // namespace btl

#endif  // BTL_EVAL_HPP
