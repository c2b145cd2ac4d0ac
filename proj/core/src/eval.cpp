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

#include "btl/eval.hpp"

#include "btl/error.hpp"
#include "btl/match.hpp"

namespace btl {

const char* to_string(EvalOutcome::Status s) {
  switch (s) {
    case EvalOutcome::Status::Success: return "success";
    case EvalOutcome::Status::Failure: return "failure";
    case EvalOutcome::Status::BudgetExhausted: return "budget";
  }
  return "failure";
}

namespace {

struct BudgetOut {};

using Path = std::vector<std::size_t>;

const OpDecl& resolve(const Signature& sig, const Tree& t) {
  const OpDecl* decl = sig.find(t.name());
  if (!decl) throw Error(ErrorKind::UnknownOp, "unknown operator '" + t.name() + "'");
  if (decl->params.size() != t.args().size())
    throw Error(ErrorKind::ArityMismatch, "operator '" + t.name() + "' takes " +
                                              std::to_string(decl->params.size()) + " argument(s)");
  return *decl;
}

class Evaluator {
 public:
  Evaluator(const Signature& sig, const WorldState& d, std::size_t budget, bool record)
      : sig_(sig), budget_(budget), record_(record), current_(d) {
    trace_.initial = d;
  }

  std::optional<WorldState> run(const Tree& t, const WorldState& d, Path& path) {
    visit();
    switch (t.kind()) {
      case Tree::Kind::Op: {
        const OpDecl& decl = resolve(sig_, t);
        auto matches = match_rule(d, decl, decl.bind(t.args()), &sig_);
        if (!record_) return matches.empty() ? std::nullopt : std::optional<WorldState>(matches.front().next);
        TraceEvent e{path, "op", t.name(), t.args(), {}, {}, !matches.empty()};
        if (matches.empty()) {
          emit(std::move(e));
          return std::nullopt;
        }
        const Substitution& theta = matches.front().theta;
        e.consumed = state_of_pos(substitute(theta, decl.antecedent));
        e.produced = state_of_pos(substitute(theta, decl.consequent));
        emit(std::move(e));
        return matches.front().next;
      }
      case Tree::Kind::Cond: {
        bool holds = d.includes(state_of_pos(t.condition()));
        emit(TraceEvent{path, "cond", std::nullopt, {}, {}, {}, holds});
        if (!holds) return std::nullopt;
        return child(t.body(), d, path, 0);
      }
      case Tree::Kind::Seq: {
        emit(TraceEvent{path, "seq-enter", std::nullopt, {}, {}, {}, true});
        WorldState cur = d;
        for (std::size_t i = 0; i < t.children().size(); ++i) {
          auto r = child(t.children()[i], cur, path, i);
          if (!r) {
            emit(TraceEvent{path, "seq-exit", std::nullopt, {}, {}, {}, false});
            return std::nullopt;
          }
          cur = std::move(*r);
        }
        emit(TraceEvent{path, "seq-exit", std::nullopt, {}, {}, {}, true});
        return cur;
      }
      case Tree::Kind::Sel: {
        emit(TraceEvent{path, "sel-enter", std::nullopt, {}, {}, {}, true});
        for (std::size_t i = 0; i < t.children().size(); ++i) {
          auto r = child(t.children()[i], d, path, i);
          if (r) {
            emit(TraceEvent{path, "sel-exit", std::nullopt, {}, {}, {}, true});
            return r;
          }
          rollback(d, path);
        }
        emit(TraceEvent{path, "sel-exit", std::nullopt, {}, {}, {}, false});
        return std::nullopt;
      }
      case Tree::Kind::Rep: {
        emit(TraceEvent{path, "rep-enter", std::nullopt, {}, {}, {}, true});
        WorldState cur = d;
        for (;;) {
          emit(TraceEvent{path, "rep-iter", std::nullopt, {}, {}, {}, true});
          auto r = child(t.body(), cur, path, 0);
          if (!r) break;
          cur = std::move(*r);
        }
        rollback(cur, path);
        emit(TraceEvent{path, "rep-exit", std::nullopt, {}, {}, {}, true});
        return cur;
      }
    }
    return std::nullopt;
  }

  Trace& trace() { return trace_; }
  std::size_t steps() const { return steps_; }

 private:
  std::optional<WorldState> child(const Tree& t, const WorldState& d, Path& path, std::size_t i) {
    path.push_back(i);
    auto r = run(t, d, path);
    path.pop_back();
    return r;
  }

  void visit() {
    if (steps_ >= budget_) throw BudgetOut{};
    ++steps_;
  }

  void emit(TraceEvent e) {
    if (!record_) return;
    current_.remove(e.consumed);
    current_.add(e.produced);
    trace_.events.push_back(std::move(e));
  }

  // Restores `to` after a failed branch or iteration, if anything changed.
  void rollback(const WorldState& to, const Path& path) {
    if (!record_) return;
    WorldState undo = current_.minus(to);
    WorldState redo = to.minus(current_);
    if (undo.empty() && redo.empty()) return;
    emit(TraceEvent{path, "rollback", std::nullopt, {}, std::move(undo), std::move(redo), true});
  }

  const Signature& sig_;
  std::size_t budget_;
  bool record_;
  std::size_t steps_ = 0;
  WorldState current_;
  Trace trace_;
};

}  // namespace

EvalOutcome eval(const Signature& sig, const Tree& tree, const WorldState& d, std::size_t budget,
                 bool record_trace) {
  if (budget == 0) throw Error(ErrorKind::InvalidArgument, "eval budget must be positive");
  Evaluator ev(sig, d, budget, record_trace);
  EvalOutcome out;
  Path path;
  try {
    auto r = ev.run(tree, d, path);
    out.status = r ? EvalOutcome::Status::Success : EvalOutcome::Status::Failure;
    out.final = std::move(r);
  } catch (const BudgetOut&) {
    out.status = EvalOutcome::Status::BudgetExhausted;
  }
  out.steps = ev.steps();
  out.trace = std::move(ev.trace());
  return out;
}

WorldState replay(const Trace& trace) {
  WorldState d = trace.initial;
  for (const auto& e : trace.events) {
    d.remove(e.consumed);
    d.add(e.produced);
  }
  return d;
}

//--------------------------------------------------------------------------------------------------
// Nondeterministic evaluation

bool AllOutcomes::contains(const EvalOutcome& o) const {
  switch (o.status) {
    case EvalOutcome::Status::Success: return successes.count(*o.final) > 0;
    case EvalOutcome::Status::Failure: return can_fail;
    case EvalOutcome::Status::BudgetExhausted: return false;
  }
  return false;
}

namespace {

struct Outs {
  std::set<WorldState> ok;
  bool fail = false;
};

class Explorer {
 public:
  Explorer(const Signature& sig, std::size_t budget) : sig_(sig), budget_(budget) {}

  Outs run(const Tree& t, const WorldState& d) {
    if (steps_ >= budget_) throw BudgetOut{};
    ++steps_;
    Outs out;
    switch (t.kind()) {
      case Tree::Kind::Op: {
        const OpDecl& decl = resolve(sig_, t);
        for (auto& m : match_rule(d, decl, decl.bind(t.args()), &sig_)) out.ok.insert(std::move(m.next));
        out.fail = out.ok.empty();
        return out;
      }
      case Tree::Kind::Cond:
        if (d.includes(state_of_pos(t.condition()))) return run(t.body(), d);
        out.fail = true;
        return out;
      case Tree::Kind::Seq: {
        std::set<WorldState> states{d};
        for (const auto& c : t.children()) {
          std::set<WorldState> next;
          for (const auto& s : states) {
            Outs o = run(c, s);
            out.fail = out.fail || o.fail;
            next.merge(o.ok);
          }
          states = std::move(next);
          if (states.empty()) break;
        }
        out.ok = std::move(states);
        return out;
      }
      case Tree::Kind::Sel: {
        out.fail = true;
        for (const auto& c : t.children()) {
          Outs o = run(c, d);
          out.fail = out.fail && o.fail;
          out.ok.merge(o.ok);
        }
        return out;
      }
      case Tree::Kind::Rep:
        throw Error(ErrorKind::RepUnsupported, "eval_all does not support repeaters");
    }
    return out;
  }

  std::size_t steps() const { return steps_; }

 private:
  const Signature& sig_;
  std::size_t budget_;
  std::size_t steps_ = 0;
};

}  // namespace

AllOutcomes eval_all(const Signature& sig, const Tree& tree, const WorldState& d,
                     std::size_t budget) {
  if (tree.contains_rep()) throw Error(ErrorKind::RepUnsupported, "eval_all does not support repeaters");
  if (budget == 0) throw Error(ErrorKind::InvalidArgument, "eval budget must be positive");
  Explorer ex(sig, budget);
  AllOutcomes out;
  try {
    Outs o = ex.run(tree, d);
    out.successes = std::move(o.ok);
    out.can_fail = o.fail;
  } catch (const BudgetOut&) {
    out.exhausted = true;
  }
  out.steps = ex.steps();
  return out;
}

}  // namespace btl
