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
#include <map>

#include "btl/error.hpp"
#include "btl/prover.hpp"

namespace btl {
namespace {

using Ctx = std::vector<Formula>;

Ctx with_added(Ctx ctx, std::initializer_list<Formula> extra) {
  ctx.insert(ctx.end(), extra.begin(), extra.end());
  std::sort(ctx.begin(), ctx.end());
  return ctx;
}

Ctx erase_one(const Ctx& ctx, std::size_t index) {
  Ctx out = ctx;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

// Every way to split a sorted multiset in two, each distinct split once.
std::vector<std::pair<Ctx, Ctx>> splits(const Ctx& ctx) {
  std::vector<std::pair<Formula, std::size_t>> groups;
  for (const auto& f : ctx) {
    if (!groups.empty() && groups.back().first == f)
      ++groups.back().second;
    else
      groups.emplace_back(f, 1);
  }
  std::vector<std::pair<Ctx, Ctx>> out;
  std::vector<std::size_t> take(groups.size(), 0);
  for (;;) {
    Ctx left, right;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (std::size_t j = 0; j < take[i]; ++j) left.push_back(groups[i].first);
      for (std::size_t j = take[i]; j < groups[i].second; ++j) right.push_back(groups[i].first);
    }
    out.emplace_back(std::move(left), std::move(right));
    std::size_t i = 0;
    while (i < take.size() && take[i] == groups[i].second) {
      take[i] = 0;
      ++i;
    }
    if (i == take.size()) break;
    ++take[i];
  }
  return out;
}

class Naive {
 public:
  explicit Naive(Mode mode) : mode_(mode) {}

  std::size_t calls() const { return calls_; }

  const std::optional<ProofNode>& search(const Ctx& ctx, const Formula& goal) {
    auto key = std::make_pair(ctx, goal);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    ++calls_;
    std::optional<ProofNode> found = attempt(ctx, goal);
    return memo_.emplace(std::move(key), std::move(found)).first->second;
  }

 private:
  static ProofNode make(const char* rule, const Ctx& ctx, const Formula& goal,
                        std::optional<Formula> principal, std::vector<ProofNode> premises) {
    return ProofNode{rule, ctx, goal, std::move(principal), std::move(premises)};
  }

  std::optional<ProofNode> attempt(const Ctx& ctx, const Formula& goal) {
    using K = Formula::Kind;
    switch (goal.kind()) {
      case K::Atom:
        if (ctx.size() == 1 && ctx[0] == goal) return make("init", ctx, goal, std::nullopt, {});
        break;
      case K::One:
        if (ctx.empty()) return make("1R", ctx, goal, std::nullopt, {});
        break;
      case K::Top:
        return make("topR", ctx, goal, std::nullopt, {});
      case K::Tensor:
        for (const auto& [l, r] : splits(ctx)) {
          const auto& p1 = search(l, goal.lhs());
          if (!p1) continue;
          const auto& p2 = search(r, goal.rhs());
          if (p2) return make("*R", ctx, goal, std::nullopt, {*p1, *p2});
        }
        break;
      case K::Lolli: {
        const auto& p = search(with_added(ctx, {goal.lhs()}), goal.rhs());
        if (p) return make("-oR", ctx, goal, std::nullopt, {*p});
        break;
      }
      case K::With: {
        const auto& p1 = search(ctx, goal.lhs());
        if (p1) {
          const auto& p2 = search(ctx, goal.rhs());
          if (p2) return make("&R", ctx, goal, std::nullopt, {*p1, *p2});
        }
        break;
      }
    }

    for (std::size_t i = 0; i < ctx.size(); ++i) {
      if (i > 0 && ctx[i] == ctx[i - 1]) continue;
      const Formula& f = ctx[i];
      Ctx rest = erase_one(ctx, i);
      switch (f.kind()) {
        case K::One:
          if (const auto& p = search(rest, goal)) return make("1L", ctx, goal, f, {*p});
          break;
        case K::Tensor:
          if (const auto& p = search(with_added(rest, {f.lhs(), f.rhs()}), goal))
            return make("*L", ctx, goal, f, {*p});
          break;
        case K::With:
          if (const auto& p = search(with_added(rest, {f.lhs()}), goal))
            return make("&L1", ctx, goal, f, {*p});
          if (const auto& p = search(with_added(rest, {f.rhs()}), goal))
            return make("&L2", ctx, goal, f, {*p});
          break;
        case K::Lolli:
          for (const auto& [l, r] : splits(rest)) {
            const auto& p1 = search(l, f.lhs());
            if (!p1) continue;
            const auto& p2 = search(with_added(r, {f.rhs()}), goal);
            if (p2) return make("-oL", ctx, goal, f, {*p1, *p2});
          }
          break;
        default:
          break;
      }
      if (mode_ == Mode::Affine) {
        if (const auto& p = search(rest, goal)) return make("W", ctx, goal, f, {*p});
      }
    }
    return std::nullopt;
  }

  Mode mode_;
  std::size_t calls_ = 0;
  std::map<std::pair<Ctx, Formula>, std::optional<ProofNode>> memo_;
};

}  // namespace

ProofResult oracle_prove(const Sequent& seq, Mode mode) {
  std::size_t size = sequent_size(seq);
  if (size > kOracleSizeCap)
    throw Error(ErrorKind::InvalidArgument,
                "sequent of size " + std::to_string(size) + " exceeds the oracle cap of " +
                    std::to_string(kOracleSizeCap));
  Ctx ctx = seq.context;
  std::sort(ctx.begin(), ctx.end());
  Naive naive(mode);
  ProofResult result;
  const auto& p = naive.search(ctx, seq.goal);
  result.steps = naive.calls();
  if (p) {
    result.status = ProofResult::Status::Proved;
    result.proof = *p;
  }
  return result;
}

}  // namespace btl
