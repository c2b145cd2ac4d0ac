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

#include "btl/prover.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "btl/error.hpp"
#include "btl/printer.hpp"

namespace btl {

std::size_t ProofNode::size() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.size();
  return n;
}

const char* to_string(ProofResult::Status s) {
  switch (s) {
    case ProofResult::Status::Proved: return "Proved";
    case ProofResult::Status::Unproved: return "Unproved";
    case ProofResult::Status::BudgetExhausted: return "BudgetExhausted";
  }
  return "Unproved";
}

const char* to_string(Mode m) { return m == Mode::Strict ? "strict" : "affine"; }

std::size_t sequent_size(const Sequent& seq) {
  std::size_t n = seq.goal.size();
  for (const auto& f : seq.context) n += f.size();
  return n;
}

namespace {

struct BudgetOut {};

// Context entries refer to formulas by id. The mark is the scope the entry was
// introduced in; an entry may not outlive its scope.
struct Item {
  int id;
  int mark;
};
using Ctx = std::vector<Item>;

struct Skel;
using SkelPtr = std::shared_ptr<const Skel>;

// Proof skeleton over ids. Conclusion contexts are recovered afterwards from
// what each subtree consumed.
struct Skel {
  const char* rule;
  Formula goal;
  int principal = -1;
  std::vector<int> intro;
  std::vector<int> consumed;
  std::vector<SkelPtr> premises;
};

using Cont = std::function<bool(const Ctx&, SkelPtr)>;
using Body = std::function<bool(const Ctx&, const Cont&)>;

SkelPtr node(const char* rule, const Formula& goal, int principal = -1,
             std::vector<int> intro = {}, std::vector<SkelPtr> premises = {},
             std::vector<int> consumed = {}) {
  return std::make_shared<const Skel>(
      Skel{rule, goal, principal, std::move(intro), std::move(consumed), std::move(premises)});
}

bool is_negative(const Formula& f) {
  auto k = f.kind();
  return k == Formula::Kind::Lolli || k == Formula::Kind::With || k == Formula::Kind::Top;
}

Ctx without(const Ctx& ctx, int id) {
  Ctx out;
  out.reserve(ctx.size());
  for (const auto& it : ctx)
    if (it.id != id) out.push_back(it);
  return out;
}

void insert(Ctx& ctx, Item item) {
  auto pos = std::lower_bound(ctx.begin(), ctx.end(), item.id,
                              [](const Item& a, int id) { return a.id < id; });
  ctx.insert(pos, item);
}

class Focused {
 public:
  Focused(Mode mode, std::size_t budget) : mode_(mode), budget_(budget) {}

  std::size_t steps() const { return steps_; }
  const Formula& formula(int id) const { return table_[static_cast<std::size_t>(id)]; }

  int fresh(const Formula& f) {
    table_.push_back(f);
    return static_cast<int>(table_.size()) - 1;
  }

  // Moves the entries `todo` into the context, splitting tensors and dropping
  // units on the way in.
  bool decompose(const Ctx& ctx, std::vector<int> todo, int mark, const Formula& goal,
                 const Body& body, const Cont& k) {
    if (todo.empty()) return body(ctx, k);
    int id = todo.back();
    todo.pop_back();
    const Formula f = formula(id);
    switch (f.kind()) {
      case Formula::Kind::Tensor: {
        tick();
        int a = fresh(f.lhs());
        int b = fresh(f.rhs());
        todo.push_back(b);
        todo.push_back(a);
        return decompose(ctx, std::move(todo), mark, goal, body, [&](const Ctx& out, SkelPtr p) {
          return k(out, node("*L", goal, id, {a, b}, {std::move(p)}));
        });
      }
      case Formula::Kind::One: {
        tick();
        return decompose(ctx, std::move(todo), mark, goal, body, [&](const Ctx& out, SkelPtr p) {
          return k(out, node("1L", goal, id, {}, {std::move(p)}));
        });
      }
      default: {
        Ctx next = ctx;
        insert(next, Item{id, mark});
        return decompose(next, std::move(todo), mark, goal, body, k);
      }
    }
  }

  bool invert_right(const Ctx& ctx, const Formula& goal, int scope, const Cont& k) {
    switch (goal.kind()) {
      case Formula::Kind::Lolli: {
        tick();
        int h = fresh(goal.lhs());
        const Formula& body_goal = goal.rhs();
        return decompose(
            ctx, {h}, scope, body_goal,
            [&](const Ctx& c, const Cont& k2) { return invert_right(c, body_goal, scope, k2); },
            [&](const Ctx& out, SkelPtr p) {
              return k(out, node("-oR", goal, -1, {h}, {std::move(p)}));
            });
      }
      case Formula::Kind::With: {
        tick();
        int s1 = next_scope_++;
        return invert_right(ctx, goal.lhs(), s1, [&](const Ctx& o1, SkelPtr p1) {
          Ctx left;
          if (!exit_scope(o1, s1, left)) return false;
          int s2 = next_scope_++;
          return invert_right(ctx, goal.rhs(), s2, [&](const Ctx& o2, SkelPtr p2) {
            Ctx right;
            if (!exit_scope(o2, s2, right)) return false;
            Ctx out;
            if (mode_ == Mode::Strict) {
              if (!same_ids(left, right)) return false;
              out = left;
            } else {
              for (const auto& it : left)
                if (std::any_of(right.begin(), right.end(),
                                [&](const Item& r) { return r.id == it.id; }))
                  out.push_back(it);
            }
            return k(out, node("&R", goal, -1, {}, {p1, std::move(p2)}));
          });
        });
      }
      case Formula::Kind::Top: {
        tick();
        if (mode_ == Mode::Affine) return k(ctx, node("topR", goal));
        return consume_some(ctx, goal, k);
      }
      default:
        return stable(ctx, goal, scope, k);
    }
  }

  // The goal is positive; either focus on it or on a negative context entry.
  bool stable(const Ctx& ctx, const Formula& goal, int scope, const Cont& k) {
    if (focus_right(ctx, goal, scope, k)) return true;
    std::vector<const Item*> seen;
    for (const auto& it : ctx) {
      const Formula& f = formula(it.id);
      if (!is_negative(f)) continue;
      if (std::any_of(seen.begin(), seen.end(),
                      [&](const Item* s) { return formula(s->id) == f; }))
        continue;
      const Item* best = pick(ctx, f);
      seen.push_back(best);
      if (focus_left(without(ctx, best->id), best->id, goal, scope, k)) return true;
    }
    return false;
  }

  bool focus_right(const Ctx& ctx, const Formula& f, int scope, const Cont& k) {
    switch (f.kind()) {
      case Formula::Kind::Atom: {
        tick();
        const Item* it = pick(ctx, f);
        if (!it) return false;
        int id = it->id;
        return k(without(ctx, id), node("init", f, -1, {}, {}, {id}));
      }
      case Formula::Kind::One:
        tick();
        return k(ctx, node("1R", f));
      case Formula::Kind::Tensor:
        tick();
        return focus_right(ctx, f.lhs(), scope, [&](const Ctx& o1, SkelPtr p1) {
          return focus_right(o1, f.rhs(), scope, [&](const Ctx& o2, SkelPtr p2) {
            return k(o2, node("*R", f, -1, {}, {p1, std::move(p2)}));
          });
        });
      default: {
        int s = next_scope_++;
        return invert_right(ctx, f, s, [&](const Ctx& o, SkelPtr p) {
          Ctx out;
          if (!exit_scope(o, s, out)) return false;
          return k(out, std::move(p));
        });
      }
    }
  }

  // `id` has been taken out of ctx.
  bool focus_left(const Ctx& ctx, int id, const Formula& goal, int scope, const Cont& k) {
    const Formula f = formula(id);
    switch (f.kind()) {
      case Formula::Kind::Lolli: {
        tick();
        return focus_right(ctx, f.lhs(), scope, [&](const Ctx& o1, SkelPtr pa) {
          int b = fresh(f.rhs());
          return focus_left(o1, b, goal, scope, [&](const Ctx& o2, SkelPtr pb) {
            return k(o2, node("-oL", goal, id, {b}, {pa, std::move(pb)}));
          });
        });
      }
      case Formula::Kind::With: {
        for (int side = 0; side < 2; ++side) {
          tick();
          int c = fresh(side == 0 ? f.lhs() : f.rhs());
          const char* rule = side == 0 ? "&L1" : "&L2";
          bool ok = focus_left(ctx, c, goal, scope, [&](const Ctx& o, SkelPtr p) {
            return k(o, node(rule, goal, id, {c}, {std::move(p)}));
          });
          if (ok) return true;
        }
        return false;
      }
      case Formula::Kind::Top:
        tick();
        return false;
      default:
        return decompose(
            ctx, {id}, scope, goal,
            [&](const Ctx& c, const Cont& k2) { return stable(c, goal, scope, k2); }, k);
    }
  }

  bool exit_scope(const Ctx& ctx, int scope, Ctx& out) const {
    out.clear();
    for (const auto& it : ctx) {
      if (it.mark != scope) {
        out.push_back(it);
      } else if (mode_ == Mode::Strict) {
        return false;
      }
    }
    return true;
  }

  void tick() {
    if (++steps_ > budget_) throw BudgetOut{};
  }

 private:
  // Among entries carrying formula f, the innermost one (then the oldest).
  // Consuming it dominates consuming any other copy.
  const Item* pick(const Ctx& ctx, const Formula& f) const {
    const Item* best = nullptr;
    for (const auto& it : ctx) {
      if (!(formula(it.id) == f)) continue;
      if (!best || it.mark > best->mark) best = &it;
    }
    return best;
  }

  static bool same_ids(const Ctx& a, const Ctx& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].id != b[i].id) return false;
    return true;
  }

  // topR in strict mode: try every sub-multiset, largest first.
  bool consume_some(const Ctx& ctx, const Formula& goal, const Cont& k) {
    // Group interchangeable entries (same formula and mark), oldest first.
    std::vector<std::vector<int>> groups;
    std::vector<std::pair<Formula, int>> keys;
    for (const auto& it : ctx) {
      std::pair<Formula, int> key{formula(it.id), it.mark};
      auto pos = std::find(keys.begin(), keys.end(), key);
      if (pos == keys.end()) {
        keys.push_back(key);
        groups.push_back({it.id});
      } else {
        groups[static_cast<std::size_t>(pos - keys.begin())].push_back(it.id);
      }
    }
    std::vector<std::size_t> take(groups.size());
    for (std::size_t i = 0; i < groups.size(); ++i) take[i] = groups[i].size();
    for (;;) {
      std::vector<int> used;
      for (std::size_t i = 0; i < groups.size(); ++i)
        for (std::size_t j = 0; j < take[i]; ++j) used.push_back(groups[i][j]);
      std::sort(used.begin(), used.end());
      Ctx rest;
      for (const auto& it : ctx)
        if (!std::binary_search(used.begin(), used.end(), it.id)) rest.push_back(it);
      if (k(rest, node("topR", goal, -1, {}, {}, used))) return true;
      std::size_t i = 0;
      while (i < take.size() && take[i] == 0) {
        take[i] = groups[i].size();
        ++i;
      }
      if (i == take.size()) return false;
      --take[i];
      tick();
    }
  }

  Mode mode_;
  std::size_t budget_;
  std::size_t steps_ = 0;
  int next_scope_ = 1;
  std::vector<Formula> table_;
};

//--------------------------------------------------------------------------------------------------
// Skeleton to sequent proof

class Rebuild {
 public:
  explicit Rebuild(const Focused& f) : f_(f) {}

  std::vector<Formula> context_of(const std::vector<int>& ids) const {
    std::vector<Formula> ctx;
    ctx.reserve(ids.size());
    for (int id : ids) ctx.push_back(f_.formula(id));
    std::sort(ctx.begin(), ctx.end());
    return ctx;
  }

  // Adds weakening steps below `n` until its context covers `want`.
  void weaken_to(ProofNode& n, std::vector<int>& have, const std::vector<int>& want) const {
    for (int id : want) {
      if (std::binary_search(have.begin(), have.end(), id)) continue;
      have.insert(std::lower_bound(have.begin(), have.end(), id), id);
      ProofNode w;
      w.rule = "W";
      w.goal = n.goal;
      w.principal = f_.formula(id);
      w.context = context_of(have);
      w.premises.push_back(std::move(n));
      n = std::move(w);
    }
  }

  static std::vector<int> merge(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
  }

  static std::vector<int> remove(std::vector<int> a, const std::vector<int>& gone) {
    a.erase(std::remove_if(a.begin(), a.end(),
                           [&](int x) { return std::find(gone.begin(), gone.end(), x) != gone.end(); }),
            a.end());
    return a;
  }

  ProofNode build(const Skel& s, std::vector<int>& ids) const {
    ProofNode n;
    n.rule = s.rule;
    n.goal = s.goal;
    if (s.principal >= 0) n.principal = f_.formula(s.principal);
    std::string rule = s.rule;
    if (rule == "init" || rule == "topR" || rule == "1R") {
      ids = s.consumed;
      std::sort(ids.begin(), ids.end());
    } else if (rule == "*R" || rule == "&R") {
      std::vector<int> i1, i2;
      ProofNode p1 = build(*s.premises[0], i1);
      ProofNode p2 = build(*s.premises[1], i2);
      if (rule == "*R") {
        ids = merge(i1, i2);
      } else {
        ids = i1;
        for (int x : i2)
          if (!std::binary_search(ids.begin(), ids.end(), x))
            ids.insert(std::lower_bound(ids.begin(), ids.end(), x), x);
        weaken_to(p1, i1, ids);
        weaken_to(p2, i2, ids);
      }
      n.premises.push_back(std::move(p1));
      n.premises.push_back(std::move(p2));
    } else if (rule == "-oL") {
      std::vector<int> i1, i2;
      ProofNode p1 = build(*s.premises[0], i1);
      ProofNode p2 = build(*s.premises[1], i2);
      weaken_to(p2, i2, s.intro);
      ids = merge(i1, remove(i2, s.intro));
      ids = merge(ids, {s.principal});
      n.premises.push_back(std::move(p1));
      n.premises.push_back(std::move(p2));
    } else {
      // One premise: 1L, *L, -oR, &L1, &L2.
      std::vector<int> i1;
      ProofNode p1 = build(*s.premises[0], i1);
      weaken_to(p1, i1, s.intro);
      ids = remove(i1, s.intro);
      if (s.principal >= 0) ids = merge(ids, {s.principal});
      n.premises.push_back(std::move(p1));
    }
    n.context = context_of(ids);
    return n;
  }

 private:
  const Focused& f_;
};

bool flat(const std::vector<Formula>& ctx) {
  return std::all_of(ctx.begin(), ctx.end(), [](const Formula& f) { return f.is_positive(); });
}

std::vector<Atom> atoms_of_all(const std::vector<Formula>& fs) {
  std::vector<Atom> out;
  for (const auto& f : fs) {
    auto a = positive_atoms(f);
    out.insert(out.end(), a.begin(), a.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ProofResult prove(const Sequent& seq, Mode mode, std::size_t budget) {
  if (budget == 0) throw Error(ErrorKind::InvalidArgument, "prover budget must be positive");
  ProofResult result;

  // Flat context and positive goal: provability is a multiset comparison.
  if (flat(seq.context) && seq.goal.is_positive()) {
    std::vector<Atom> have = atoms_of_all(seq.context);
    std::vector<Atom> want = positive_atoms(seq.goal);
    bool ok = mode == Mode::Strict
                  ? have == want
                  : std::includes(have.begin(), have.end(), want.begin(), want.end());
    if (!ok) {
      result.steps = 1;
      result.status = ProofResult::Status::Unproved;
      return result;
    }
  }

  Focused search(mode, budget);
  std::vector<int> roots;
  for (const auto& f : seq.context) roots.push_back(search.fresh(f));
  SkelPtr found;
  try {
    bool ok = search.decompose(
        {}, std::vector<int>(roots.rbegin(), roots.rend()), 0, seq.goal,
        [&](const Ctx& c, const Cont& k) { return search.invert_right(c, seq.goal, 0, k); },
        [&](const Ctx& out, SkelPtr p) {
          if (mode == Mode::Strict && !out.empty()) return false;
          found = std::move(p);
          return true;
        });
    result.status = ok ? ProofResult::Status::Proved : ProofResult::Status::Unproved;
  } catch (const BudgetOut&) {
    result.status = ProofResult::Status::BudgetExhausted;
  }
  result.steps = std::min(search.steps(), budget);
  if (result.status == ProofResult::Status::Proved) {
    Rebuild rebuild(search);
    std::vector<int> ids;
    ProofNode root = rebuild.build(*found, ids);
    std::vector<int> all = roots;
    std::sort(all.begin(), all.end());
    rebuild.weaken_to(root, ids, all);
    result.proof = std::move(root);
  }
  return result;
}

namespace {

void render(const ProofNode& n, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  Sequent s{n.context, n.goal};
  out += to_string(s);
  out += "   [" + n.rule + "]\n";
  for (const auto& p : n.premises) render(p, depth + 1, out);
}

}  // namespace

std::string to_string(const ProofNode& proof) {
  std::string out;
  render(proof, 0, out);
  return out;
}

}  // namespace btl
