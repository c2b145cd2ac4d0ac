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

#include <algorithm>

#include "btl/printer.hpp"
#include "btl/prover.hpp"

namespace btl {
namespace {

using Ctx = std::vector<Formula>;

Ctx sorted(Ctx c) {
  std::sort(c.begin(), c.end());
  return c;
}

bool take(Ctx& ctx, const Formula& f) {
  auto it = std::find(ctx.begin(), ctx.end(), f);
  if (it == ctx.end()) return false;
  ctx.erase(it);
  return true;
}

Ctx plus(Ctx a, const Ctx& b) {
  a.insert(a.end(), b.begin(), b.end());
  return sorted(std::move(a));
}

std::string check(const ProofNode& n, Mode mode) {
  using K = Formula::Kind;
  const Ctx ctx = sorted(n.context);
  const auto& ps = n.premises;
  auto bad = [&](const std::string& why) {
    return "bad " + n.rule + " at " + to_string(Sequent{n.context, n.goal}) + ": " + why;
  };
  auto arity = [&](std::size_t k) { return ps.size() == k; };
  auto same_goal = [&](const ProofNode& p) { return p.goal == n.goal; };

  // Context after removing the principal, if any.
  Ctx rest = ctx;
  if (n.principal && !take(rest, *n.principal)) return bad("principal not in context");

  const std::string& r = n.rule;
  if (r == "init") {
    if (!arity(0) || ctx.size() != 1 || !(ctx[0] == n.goal) || n.goal.kind() != K::Atom)
      return bad("expected p |- p");
  } else if (r == "1R") {
    if (!arity(0) || !ctx.empty() || n.goal.kind() != K::One) return bad("expected |- 1");
  } else if (r == "topR") {
    if (!arity(0) || n.goal.kind() != K::Top) return bad("expected goal top");
  } else if (r == "1L") {
    if (!arity(1) || !n.principal || n.principal->kind() != K::One) return bad("principal");
    if (sorted(ps[0].context) != rest || !same_goal(ps[0])) return bad("premise");
  } else if (r == "*L") {
    if (!arity(1) || !n.principal || n.principal->kind() != K::Tensor) return bad("principal");
    Ctx want = plus(rest, {n.principal->lhs(), n.principal->rhs()});
    if (sorted(ps[0].context) != want || !same_goal(ps[0])) return bad("premise");
  } else if (r == "&L1" || r == "&L2") {
    if (!arity(1) || !n.principal || n.principal->kind() != K::With) return bad("principal");
    const Formula& pick = r == "&L1" ? n.principal->lhs() : n.principal->rhs();
    if (sorted(ps[0].context) != plus(rest, {pick}) || !same_goal(ps[0])) return bad("premise");
  } else if (r == "-oL") {
    if (!arity(2) || !n.principal || n.principal->kind() != K::Lolli) return bad("principal");
    Ctx c2 = sorted(ps[1].context);
    if (!take(c2, n.principal->rhs())) return bad("second premise lacks the consequent");
    if (plus(ps[0].context, c2) != rest) return bad("contexts do not split");
    if (!(ps[0].goal == n.principal->lhs()) || !same_goal(ps[1])) return bad("premise goals");
  } else if (r == "*R") {
    if (!arity(2) || n.goal.kind() != K::Tensor) return bad("goal");
    if (plus(ps[0].context, ps[1].context) != ctx) return bad("contexts do not split");
    if (!(ps[0].goal == n.goal.lhs()) || !(ps[1].goal == n.goal.rhs())) return bad("premise goals");
  } else if (r == "-oR") {
    if (!arity(1) || n.goal.kind() != K::Lolli) return bad("goal");
    if (sorted(ps[0].context) != plus(ctx, {n.goal.lhs()}) || !(ps[0].goal == n.goal.rhs()))
      return bad("premise");
  } else if (r == "&R") {
    if (!arity(2) || n.goal.kind() != K::With) return bad("goal");
    if (sorted(ps[0].context) != ctx || sorted(ps[1].context) != ctx) return bad("contexts differ");
    if (!(ps[0].goal == n.goal.lhs()) || !(ps[1].goal == n.goal.rhs())) return bad("premise goals");
  } else if (r == "W") {
    if (mode != Mode::Affine) return bad("weakening is not a strict rule");
    if (!arity(1) || !n.principal) return bad("principal");
    if (sorted(ps[0].context) != rest || !same_goal(ps[0])) return bad("premise");
  } else {
    return bad("unknown rule");
  }
  if (n.principal && r != "1L" && r != "*L" && r != "&L1" && r != "&L2" && r != "-oL" && r != "W")
    return bad("unexpected principal");
  for (const auto& p : ps) {
    std::string e = check(p, mode);
    if (!e.empty()) return e;
  }
  return {};
}

}  // namespace

std::string check_proof(const ProofNode& proof, Mode mode) { return check(proof, mode); }

std::string check_proof(const Sequent& seq, const ProofNode& proof, Mode mode) {
  if (sorted(seq.context) != sorted(proof.context) || !(seq.goal == proof.goal))
    return "root does not conclude " + to_string(seq);
  return check(proof, mode);
}

}  // namespace btl
