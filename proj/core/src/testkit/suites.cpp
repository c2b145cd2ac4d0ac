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

#include "btl/testkit/suites.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "btl/error.hpp"
#include "btl/eval.hpp"
#include "btl/normalize.hpp"
#include "btl/parser.hpp"
#include "btl/printer.hpp"
#include "btl/prover.hpp"
#include "btl/testkit/fixtures.hpp"
#include "btl/testkit/shrink.hpp"
#include "btl/typesys.hpp"

namespace btl::testkit {

const char* to_string(Classification c) {
  return c == Classification::PaperConjectureViolation ? "paper-conjecture-violation"
                                                       : "implementation-bug-candidate";
}

//--------------------------------------------------------------------------------------------------
// Serialization

using json = nlohmann::ordered_json;

namespace {

json finding_json(const Finding& f) {
  json j;
  j["suite"] = f.suite;
  j["classification"] = to_string(f.classification);
  j["signature"] = f.signature;
  j["tree"] = f.tree;
  j["state"] = f.state;
  j["goal"] = f.goal;
  j["extra"] = json::object();
  for (const auto& [k, v] : f.extra) j["extra"][k] = v;
  j["observed"] = f.observed;
  j["expected"] = f.expected;
  j["note"] = f.note;
  return j;
}

}  // namespace

std::string to_json(const Finding& f) { return finding_json(f).dump(2); }

Finding finding_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw Error(ErrorKind::InvalidArgument, "finding is not a JSON object");
  auto str = [&](const char* key) -> std::string {
    if (!j.contains(key)) return {};
    if (!j[key].is_string()) throw Error(ErrorKind::InvalidArgument, std::string("field '") + key + "' must be a string");
    return j[key].get<std::string>();
  };
  Finding f;
  f.suite = str("suite");
  if (f.suite.empty()) throw Error(ErrorKind::InvalidArgument, "finding has no suite");
  std::string cls = str("classification");
  if (cls == "paper-conjecture-violation")
    f.classification = Classification::PaperConjectureViolation;
  else if (cls == "implementation-bug-candidate" || cls.empty())
    f.classification = Classification::ImplementationBugCandidate;
  else
    throw Error(ErrorKind::InvalidArgument, "unknown classification '" + cls + "'");
  f.signature = str("signature");
  f.tree = str("tree");
  f.state = str("state");
  f.goal = str("goal");
  if (j.contains("extra")) {
    if (!j["extra"].is_object()) throw Error(ErrorKind::InvalidArgument, "field 'extra' must be an object");
    for (const auto& [k, v] : j["extra"].items()) {
      if (!v.is_string()) throw Error(ErrorKind::InvalidArgument, "extra values must be strings");
      f.extra[k] = v.get<std::string>();
    }
  }
  f.observed = str("observed");
  f.expected = str("expected");
  f.note = str("note");
  return f;
}

std::size_t Report::count(const std::string& key) const {
  auto it = counters.find(key);
  return it == counters.end() ? 0 : it->second;
}

std::string to_json(const Report& r) {
  json j;
  j["suite"] = r.suite;
  j["config"] = {{"seed", r.cfg.seed},
                 {"cases", r.cfg.cases},
                 {"max_predicates", r.cfg.max_predicates},
                 {"max_ops", r.cfg.max_ops},
                 {"max_depth", r.cfg.max_depth},
                 {"max_state", r.cfg.max_state},
                 {"max_interface_depth", r.cfg.max_interface_depth}};
  j["cases"] = r.cases;
  j["checked"] = r.checked;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["inconclusive"] = r.inconclusive;
  j["ok"] = r.ok();
  j["counters"] = json::object();
  for (const auto& [k, v] : r.counters) j["counters"][k] = v;
  j["analysis"] = r.analysis;
  j["findings"] = json::array();
  for (const auto& f : r.findings) j["findings"].push_back(finding_json(f));
  return j.dump(2);
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " (seed " << r.cfg.seed << ")\n";
  os << "  cases " << r.cases << ", checked " << r.checked << ", passed " << r.passed << ", failed "
     << r.failed << ", inconclusive " << r.inconclusive << "\n";
  if (!r.counters.empty()) {
    os << "  counters:\n";
    for (const auto& [k, v] : r.counters) os << "    " << k << ": " << v << "\n";
  }
  if (!r.analysis.empty()) {
    os << "  analysis:\n";
    for (const auto& a : r.analysis) os << "    " << a << "\n";
  }
  os << "  findings: " << r.findings.size() << "\n";
  std::size_t i = 0;
  for (const auto& f : r.findings) {
    os << "    [" << ++i << "] " << to_string(f.classification) << "\n";
    if (!f.tree.empty()) os << "        tree: " << f.tree << "\n";
    if (!f.state.empty()) os << "        state: " << f.state << "\n";
    if (!f.goal.empty()) os << "        goal: " << f.goal << "\n";
    for (const auto& [k, v] : f.extra) os << "        " << k << ": " << v << "\n";
    os << "        observed: " << f.observed << "\n";
    os << "        expected: " << f.expected << "\n";
    if (!f.note.empty()) os << "        note: " << f.note << "\n";
  }
  os << "  result: " << (r.ok() ? "ok" : "implementation bug candidates found") << "\n";
  return os.str();
}

//--------------------------------------------------------------------------------------------------
// Shared machinery

namespace {

constexpr std::size_t kEvalBudget = 20'000;
constexpr std::size_t kProveBudget = 200'000;
constexpr std::size_t kFindingsPerKind = 3;

enum class Verdict { Pass, Fail, Vacuous, Inconclusive };

struct Check {
  Verdict verdict = Verdict::Pass;
  Classification cls = Classification::ImplementationBugCandidate;
  std::string observed;
  std::string expected;
  std::string note;
};

Check verdict(Verdict v) { return Check{v, Classification::ImplementationBugCandidate, {}, {}, {}}; }

Check failure(Classification cls, std::string observed, std::string expected, std::string note = {}) {
  return Check{Verdict::Fail, cls, std::move(observed), std::move(expected), std::move(note)};
}

bool fails(const Check& c) { return c.verdict == Verdict::Fail; }

// Tallies checks under a property name and keeps a few shrunk findings.
class Recorder {
 public:
  explicit Recorder(Report& r) : r_(r) {}

  void record(const std::string& property, const Check& c, const std::function<Finding()>& finding) {
    switch (c.verdict) {
      case Verdict::Pass:
        ++r_.checked;
        ++r_.passed;
        ++r_.counters[property + ".pass"];
        return;
      case Verdict::Vacuous:
        ++r_.counters[property + ".vacuous"];
        return;
      case Verdict::Inconclusive:
        ++r_.inconclusive;
        ++r_.counters[property + ".inconclusive"];
        return;
      case Verdict::Fail:
        break;
    }
    ++r_.checked;
    ++r_.failed;
    ++r_.counters[property + ".fail"];
    ++r_.counters[to_string(c.cls)];
    std::size_t& kept = kept_[property + "/" + to_string(c.cls)];
    if (kept >= kFindingsPerKind) {
      ++r_.counters["unrecorded-findings"];
      return;
    }
    ++kept;
    Finding f = finding();
    f.suite = r_.suite;
    r_.findings.push_back(std::move(f));
  }

 private:
  Report& r_;
  std::map<std::string, std::size_t> kept_;
};

std::string show(const EvalOutcome& o) {
  if (o.success()) return "success " + to_string(*o.final);
  return to_string(o.status);
}

bool same(const EvalOutcome& a, const EvalOutcome& b) {
  return a.status == b.status && a.final == b.final;
}

std::vector<Formula> context_of(const WorldState& d) {
  std::vector<Formula> ctx;
  for (const auto& a : d.atoms()) ctx.push_back(Formula::atom(a));
  return ctx;
}

Sequent typed_sequent(const WorldState& d, const Interface& n, const PosFormula& goal) {
  Sequent s{context_of(d), to_formula(goal)};
  s.context.push_back(to_formula(n));
  return s;
}

std::string show(const ProofResult& r) { return to_string(r.status); }

// Confirms a prover verdict with the oracle when the sequent is small enough.
std::optional<bool> oracle_verdict(const Sequent& s, Mode mode) {
  if (sequent_size(s) > kOracleSizeCap) return std::nullopt;
  return oracle_prove(s, mode).proved();
}

std::string join_path(const std::vector<std::size_t>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) out += (i ? "." : "") + std::to_string(path[i]);
  return out;
}

std::vector<std::vector<std::size_t>> all_paths(const Tree& t) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path;
  std::function<void(const Tree&)> walk = [&](const Tree& n) {
    out.push_back(path);
    for (std::size_t i = 0; i < n.children().size(); ++i) {
      path.push_back(i);
      walk(n.children()[i]);
      path.pop_back();
    }
  };
  walk(t);
  return out;
}

Tree replace_at(const Tree& t, const std::vector<std::size_t>& path, std::size_t depth,
                const Tree& repl) {
  if (depth == path.size()) return repl;
  std::size_t i = path[depth];
  switch (t.kind()) {
    case Tree::Kind::Cond: return Tree::cond(t.condition(), replace_at(t.body(), path, depth + 1, repl));
    case Tree::Kind::Rep: return Tree::rep(replace_at(t.body(), path, depth + 1, repl));
    case Tree::Kind::Seq:
    case Tree::Kind::Sel: {
      std::vector<Tree> kids = t.children();
      kids[i] = replace_at(kids[i], path, depth + 1, repl);
      return t.kind() == Tree::Kind::Seq ? Tree::seq(std::move(kids)) : Tree::sel(std::move(kids));
    }
    case Tree::Kind::Op: break;
  }
  return t;
}

Finding base_finding(const Check& c) {
  Finding f;
  f.classification = c.cls;
  f.observed = c.observed;
  f.expected = c.expected;
  f.note = c.note;
  return f;
}

void atoms_of(const Interface& n, std::vector<Atom>& out) {
  switch (n.kind()) {
    case Interface::Kind::Top: return;
    case Interface::Kind::Pos: {
      auto a = n.formula().atoms();
      out.insert(out.end(), a.begin(), a.end());
      return;
    }
    case Interface::Kind::Lolli:
    case Interface::Kind::Tensor: {
      auto a = n.formula().atoms();
      out.insert(out.end(), a.begin(), a.end());
      atoms_of(n.body(), out);
      return;
    }
    case Interface::Kind::With:
      atoms_of(n.lhs(), out);
      atoms_of(n.rhs(), out);
      return;
  }
}

// Distinct sub-multisets of `atoms` with at most `max_size` elements, in a
// fixed order, stopping after `limit` results.
std::vector<WorldState> sub_multisets(const std::vector<Atom>& atoms, std::size_t max_size,
                                      std::size_t limit) {
  WorldState all(atoms);
  std::vector<std::pair<Atom, std::size_t>> groups(all.entries().begin(), all.entries().end());
  std::vector<WorldState> out;
  WorldState cur;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (out.size() >= limit) return;
    if (i == groups.size()) {
      out.push_back(cur);
      return;
    }
    const Atom& a = groups[i].first;
    std::size_t base = cur.size();
    for (std::size_t k = 0; k <= groups[i].second && base + k <= max_size; ++k) {
      if (k) cur.add(a);
      go(i + 1);
    }
    if (std::size_t n = cur.count(a)) cur.remove(a, n);
  };
  go(0);
  return out;
}

//--------------------------------------------------------------------------------------------------
// congruence

Check check_normalize(const Signature& sig, const Tree& a, const WorldState& d) {
  EvalOutcome o1 = eval(sig, a, d, kEvalBudget, false);
  if (o1.status == EvalOutcome::Status::BudgetExhausted) return verdict(Verdict::Inconclusive);
  std::optional<Tree> nf, sound;
  try {
    nf = normalize(a);
    sound = normalize(a, kDefaultNormalizeCap, NormalizeOptions{false});
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SizeCapExceeded) return verdict(Verdict::Inconclusive);
    throw;
  }
  EvalOutcome o2 = eval(sig, *nf, d, kEvalBudget, false);
  if (o2.status == EvalOutcome::Status::BudgetExhausted) return verdict(Verdict::Inconclusive);
  if (same(o1, o2)) return verdict(Verdict::Pass);
  EvalOutcome o3 = eval(sig, *sound, d, kEvalBudget, false);
  if (same(o1, o3))
    return failure(Classification::PaperConjectureViolation, "normal form: " + show(o2), show(o1),
                   "the outcome survives the unit, associativity and right distribution laws and "
                   "changes once a sequence is distributed over a leading selector");
  return failure(Classification::ImplementationBugCandidate, "normal form: " + show(o2), show(o1),
                 "the outcome changes under laws that preserve evaluation");
}

struct Law {
  const char* name;
  std::function<std::optional<Tree>(const Tree&)> rewrite;
};

std::vector<Tree> slice(const std::vector<Tree>& v, std::size_t from, std::size_t to) {
  return std::vector<Tree>(v.begin() + static_cast<std::ptrdiff_t>(from),
                           v.begin() + static_cast<std::ptrdiff_t>(to));
}

const std::vector<Law>& laws() {
  using K = Tree::Kind;
  static const std::vector<Law> all = {
      {"seq-unit-left", [](const Tree& t) -> std::optional<Tree> { return Tree::seq({Tree::skip(), t}); }},
      {"seq-unit-right", [](const Tree& t) -> std::optional<Tree> { return Tree::seq({t, Tree::skip()}); }},
      {"sel-unit-left", [](const Tree& t) -> std::optional<Tree> { return Tree::sel({Tree::abort(), t}); }},
      {"sel-unit-right", [](const Tree& t) -> std::optional<Tree> { return Tree::sel({t, Tree::abort()}); }},
      {"seq-assoc",
       [](const Tree& t) -> std::optional<Tree> {
         const auto& c = t.children();
         if (t.kind() != K::Seq || c.size() < 3) return std::nullopt;
         std::vector<Tree> kids{Tree::seq(slice(c, 0, 2))};
         auto rest = slice(c, 2, c.size());
         kids.insert(kids.end(), rest.begin(), rest.end());
         return Tree::seq(std::move(kids));
       }},
      {"sel-assoc",
       [](const Tree& t) -> std::optional<Tree> {
         const auto& c = t.children();
         if (t.kind() != K::Sel || c.size() < 3) return std::nullopt;
         std::vector<Tree> kids{Tree::sel(slice(c, 0, 2))};
         auto rest = slice(c, 2, c.size());
         kids.insert(kids.end(), rest.begin(), rest.end());
         return Tree::sel(std::move(kids));
       }},
      {"distribute-right",
       [](const Tree& t) -> std::optional<Tree> {
         const auto& c = t.children();
         if (t.kind() != K::Seq || c.size() < 2 || c.back().kind() != K::Sel || c.back().is_abort())
           return std::nullopt;
         std::vector<Tree> branches;
         for (const auto& b : c.back().children()) {
           auto kids = slice(c, 0, c.size() - 1);
           kids.push_back(b);
           branches.push_back(Tree::seq(std::move(kids)));
         }
         return Tree::sel(std::move(branches));
       }},
      {"distribute-left",
       [](const Tree& t) -> std::optional<Tree> {
         const auto& c = t.children();
         if (t.kind() != K::Seq || c.size() < 2 || c.front().kind() != K::Sel || c.front().is_abort())
           return std::nullopt;
         std::vector<Tree> branches;
         for (const auto& b : c.front().children()) {
           std::vector<Tree> kids{b};
           auto rest = slice(c, 1, c.size());
           kids.insert(kids.end(), rest.begin(), rest.end());
           branches.push_back(Tree::seq(std::move(kids)));
         }
         return Tree::sel(std::move(branches));
       }},
  };
  return all;
}

const Law& law_named(const std::string& name) {
  for (const auto& l : laws())
    if (name == l.name) return l;
  throw Error(ErrorKind::InvalidArgument, "unknown law '" + name + "'");
}

Check compare_rewrite(const Signature& sig, const Tree& lhs, const Tree& rhs, const WorldState& d,
                      const std::string& law) {
  EvalOutcome o1 = eval(sig, lhs, d, kEvalBudget, false);
  EvalOutcome o2 = eval(sig, rhs, d, kEvalBudget, false);
  if (o1.status == EvalOutcome::Status::BudgetExhausted ||
      o2.status == EvalOutcome::Status::BudgetExhausted)
    return verdict(Verdict::Inconclusive);
  if (same(o1, o2)) return verdict(Verdict::Pass);
  if (law == "distribute-left")
    return failure(Classification::PaperConjectureViolation, "rewritten: " + show(o2), show(o1),
                   "a failure after the first succeeding branch no longer falls through to later branches");
  return failure(Classification::ImplementationBugCandidate, "rewritten: " + show(o2), show(o1),
                 "law " + law + " changes the outcome");
}

// First position where the law applies and changes the outcome.
std::optional<std::pair<std::vector<std::size_t>, Tree>> law_counterexample(
    const Signature& sig, const Tree& t, const WorldState& d, const Law& law) {
  for (const auto& p : all_paths(t)) {
    auto r = law.rewrite(subtree(t, p));
    if (!r) continue;
    Tree rhs = replace_at(t, p, 0, *r);
    if (fails(compare_rewrite(sig, t, rhs, d, law.name))) return std::make_pair(p, rhs);
  }
  return std::nullopt;
}

Finding tree_finding(const Check& c, const Signature& sig, const Tree& t, const WorldState& d) {
  Finding f = base_finding(c);
  f.signature = to_string(restrict_signature(sig, t));
  f.tree = to_string(t);
  f.state = to_string(d);
  return f;
}

void run_congruence(Report& r) {
  Recorder rec(r);
  Generator g(r.cfg, 1);
  for (std::size_t i = 0; i < r.cfg.cases; ++i) {
    Signature sig = g.signature();
    Tree a = g.tree(sig);
    WorldState d = g.state(sig);
    ++r.cases;

    Check c = check_normalize(sig, a, d);
    rec.record("normalize", c, [&] {
      auto still = [&](const Tree& t, const WorldState& s) {
        Check k = check_normalize(sig, t, s);
        return fails(k) && k.cls == c.cls;
      };
      Tree t = shrink_tree(a, [&](const Tree& x) { return still(x, d); });
      WorldState s = shrink_state(d, [&](const WorldState& x) { return still(t, x); });
      Finding f = tree_finding(check_normalize(sig, t, s), sig, t, s);
      f.extra["check"] = "normalize";
      return f;
    });

    const Law& law = laws()[g.below(laws().size())];
    std::vector<std::vector<std::size_t>> sites;
    for (const auto& p : all_paths(a))
      if (law.rewrite(subtree(a, p))) sites.push_back(p);
    std::string prop = std::string("law.") + law.name;
    if (sites.empty()) {
      ++r.counters[prop + ".vacuous"];
      continue;
    }
    const auto& site = sites[g.below(sites.size())];
    Tree rhs = replace_at(a, site, 0, *law.rewrite(subtree(a, site)));
    Check lc = compare_rewrite(sig, a, rhs, d, law.name);
    rec.record(prop, lc, [&] {
      auto still = [&](const Tree& t, const WorldState& s) {
        return law_counterexample(sig, t, s, law).has_value();
      };
      Tree t = shrink_tree(a, [&](const Tree& x) { return still(x, d); });
      WorldState s = shrink_state(d, [&](const WorldState& x) { return still(t, x); });
      auto [path, rewritten] = *law_counterexample(sig, t, s, law);
      Finding f = tree_finding(compare_rewrite(sig, t, rewritten, s, law.name), sig, t, s);
      f.extra["check"] = "law";
      f.extra["law"] = law.name;
      f.extra["path"] = join_path(path);
      f.extra["rewritten"] = to_string(rewritten);
      return f;
    });
  }
  std::size_t differ = r.count("normalize.fail");
  r.analysis.push_back("normal form changed the outcome in " + std::to_string(differ) + " of " +
                       std::to_string(r.count("normalize.pass") + differ) + " conclusive cases");
  r.analysis.push_back("laws other than left distribution never changed an outcome: " +
                       std::string(r.bug_candidates() == 0 ? "yes" : "no"));
}

Check replay_congruence(const Finding& f) {
  Signature sig = parse_spec(f.signature);
  Tree t = parse_tree(f.tree, sig);
  WorldState d = parse_state(f.state);
  auto it = f.extra.find("check");
  if (it != f.extra.end() && it->second == "law") {
    const std::string& law = f.extra.at("law");
    law_named(law);
    Tree rhs = parse_tree(f.extra.at("rewritten"), sig);
    return compare_rewrite(sig, t, rhs, d, law);
  }
  return check_normalize(sig, t, d);
}

//--------------------------------------------------------------------------------------------------
// lemma-seq

Check check_lemma(const Interface& n1, const Interface& n2, const WorldState& delta,
                  const PosFormula& s) {
  Sequent premise = typed_sequent(delta, seq_op(n1, n2), s);
  ProofResult p = prove(premise, Mode::Strict, kProveBudget);
  if (p.status == ProofResult::Status::BudgetExhausted) return verdict(Verdict::Inconclusive);
  if (!p.proved()) return verdict(Verdict::Vacuous);

  std::vector<Atom> pool = delta.atoms();
  atoms_of(n1, pool);
  bool budget = false;
  for (const auto& mid : sub_multisets(pool, pool.size(), 4096)) {
    ProofResult first = prove(typed_sequent(delta, n1, pos_of_state(mid)), Mode::Strict, kProveBudget);
    budget = budget || first.status == ProofResult::Status::BudgetExhausted;
    if (!first.proved()) continue;
    ProofResult second = prove(typed_sequent(mid, n2, s), Mode::Strict, kProveBudget);
    budget = budget || second.status == ProofResult::Status::BudgetExhausted;
    if (second.proved()) return verdict(Verdict::Pass);
  }
  if (budget) return verdict(Verdict::Inconclusive);
  auto confirmed = oracle_verdict(premise, Mode::Strict);
  if (confirmed && !*confirmed)
    return failure(Classification::ImplementationBugCandidate, "prover proves the premise",
                   "oracle rejects the premise");
  return failure(Classification::PaperConjectureViolation, "no intermediate S' found",
                 "some S' with the first half proving S' and S', N2 proving S",
                 confirmed ? "premise confirmed by the oracle" : "premise too large for the oracle");
}

void run_lemma(Report& r) {
  Recorder rec(r);
  Generator g(r.cfg, 2);
  std::size_t depth = std::min<std::size_t>(r.cfg.max_interface_depth, 2);
  for (std::size_t i = 0; i < r.cfg.cases; ++i) {
    Interface n1 = g.interface(depth);
    Interface n2 = g.interface(depth);
    WorldState delta(g.positive(3).atoms());
    ++r.cases;

    std::vector<Atom> pool = delta.atoms();
    atoms_of(n1, pool);
    atoms_of(n2, pool);
    std::size_t applied = 0;
    for (const auto& goal : sub_multisets(pool, 3, 64)) {
      if (applied == 4) break;
      PosFormula s = pos_of_state(goal);
      Check c = check_lemma(n1, n2, delta, s);
      if (c.verdict != Verdict::Vacuous) ++applied;
      rec.record("lemma", c, [&] {
        WorldState d = shrink_state(delta, [&](const WorldState& x) { return fails(check_lemma(n1, n2, x, s)); });
        Finding f = base_finding(check_lemma(n1, n2, d, s));
        f.state = to_string(d);
        f.goal = to_string(s);
        f.extra["n1"] = to_string(n1);
        f.extra["n2"] = to_string(n2);
        return f;
      });
    }
    if (applied == 0) ++r.counters["lemma.no-provable-goal"];
  }
  r.analysis.push_back("checked the form: from Delta, seq(N1, N2) |- S find S' with Delta, N1 |- S' and S', N2 |- S");
}

Check replay_lemma(const Finding& f) {
  return check_lemma(parse_interface(f.extra.at("n1")), parse_interface(f.extra.at("n2")),
                     parse_state(f.state), parse_formula(f.goal));
}

//--------------------------------------------------------------------------------------------------
// theorem-complete

Check check_complete(const Signature& sig, const Tree& t, const WorldState& d) {
  EvalOutcome o = eval(sig, t, d, kEvalBudget, false);
  if (o.status == EvalOutcome::Status::BudgetExhausted) return verdict(Verdict::Inconclusive);
  if (!o.success()) return verdict(Verdict::Vacuous);
  Sequent s = typed_sequent(d, synth(sig, t), pos_of_state(*o.final));
  ProofResult p = prove(s, Mode::Strict, kProveBudget);
  std::string want = "proved " + to_string(s);
  if (p.status == ProofResult::Status::BudgetExhausted)
    return failure(Classification::ImplementationBugCandidate, "prover budget exhausted", want);
  if (p.proved()) {
    std::string bad = check_proof(s, *p.proof, Mode::Strict);
    if (!bad.empty()) return failure(Classification::ImplementationBugCandidate, "invalid proof: " + bad, want);
    return verdict(Verdict::Pass);
  }
  auto confirmed = oracle_verdict(s, Mode::Strict);
  if (confirmed && !*confirmed)
    return failure(Classification::PaperConjectureViolation, "unproved (oracle agrees)", want);
  return failure(Classification::ImplementationBugCandidate,
                 confirmed ? "unproved (oracle finds a proof)" : "unproved", want);
}

void run_complete(Report& r) {
  Recorder rec(r);
  auto record = [&](const Signature& sig, const Tree& t, const WorldState& d, const std::string& prop) {
    Check c = check_complete(sig, t, d);
    rec.record(prop, c, [&] {
      auto still = [&](const Tree& x, const WorldState& s) { return fails(check_complete(sig, x, s)); };
      Tree small = shrink_tree(t, [&](const Tree& x) { return !x.contains_rep() && still(x, d); });
      WorldState s = shrink_state(d, [&](const WorldState& x) { return still(small, x); });
      return tree_finding(check_complete(sig, small, s), sig, small, s);
    });
    return c;
  };

  Signature inv = parse_spec(fixtures::kInvestigationSpec);
  Tree tree = parse_tree(fixtures::kInvestigationTree, inv);
  for (const char* start : {"{has_target}", "{has_target, heard_noise}"}) {
    Check c = record(inv, tree, parse_state(start), "walkthrough");
    r.analysis.push_back(std::string("investigation tree on ") + start + ": " +
                         (c.verdict == Verdict::Pass ? "proved" : "not proved"));
  }

  Generator g(r.cfg, 3);
  std::size_t attempts = 0;
  const std::size_t limit = 50 * r.cfg.cases;
  while (r.count("theorem.pass") + r.count("theorem.fail") < r.cfg.cases && attempts < limit) {
    ++attempts;
    Signature sig = g.signature();
    Tree t = g.tree(sig, false);
    WorldState d = g.state(sig);
    ++r.cases;
    record(sig, t, d, "theorem");
  }
  r.analysis.push_back("generated " + std::to_string(attempts) + " pairs to reach " +
                       std::to_string(r.count("theorem.pass") + r.count("theorem.fail")) +
                       " successful evaluations");
}

Check replay_tree_check(const Finding& f, Check (*check)(const Signature&, const Tree&, const WorldState&)) {
  Signature sig = parse_spec(f.signature);
  return check(sig, parse_tree(f.tree, sig), parse_state(f.state));
}

//--------------------------------------------------------------------------------------------------
// theorem-sound

// Angelic reading: some resolution of the selectors reaches S exactly.
Check check_sound_angelic(const Signature& sig, const Tree& t, const WorldState& d, const PosFormula& goal) {
  Sequent s = typed_sequent(d, synth(sig, t), goal);
  ProofResult p = prove(s, Mode::Strict, kProveBudget);
  if (p.status == ProofResult::Status::BudgetExhausted) return verdict(Verdict::Inconclusive);
  if (!p.proved()) return verdict(Verdict::Vacuous);
  AllOutcomes all = eval_all(sig, t, d, kEvalBudget);
  if (all.exhausted) return verdict(Verdict::Inconclusive);
  WorldState want = state_of_pos(goal);
  if (all.successes.count(want)) return verdict(Verdict::Pass);
  auto confirmed = oracle_verdict(s, Mode::Strict);
  std::string observed = "no resolution ends in " + to_string(want);
  if (confirmed && *confirmed)
    return failure(Classification::PaperConjectureViolation, observed, "some resolution ends in the goal");
  return failure(Classification::ImplementationBugCandidate, observed, "some resolution ends in the goal",
                 confirmed ? "the oracle rejects the sequent" : "sequent too large for the oracle");
}

// Deterministic reading: the left-biased evaluator reaches S exactly.
Check check_sound_det(const Signature& sig, const Tree& t, const WorldState& d, const PosFormula& goal) {
  Sequent s = typed_sequent(d, synth(sig, t), goal);
  ProofResult p = prove(s, Mode::Strict, kProveBudget);
  if (p.status == ProofResult::Status::BudgetExhausted) return verdict(Verdict::Inconclusive);
  if (!p.proved()) return verdict(Verdict::Vacuous);
  EvalOutcome o = eval(sig, t, d, kEvalBudget, false);
  if (o.status == EvalOutcome::Status::BudgetExhausted) return verdict(Verdict::Inconclusive);
  WorldState want = state_of_pos(goal);
  if (o.success() && *o.final == want) return verdict(Verdict::Pass);
  return failure(Classification::PaperConjectureViolation, show(o), "success " + to_string(want),
                 "the typing proves the goal through a selector branch that deterministic "
                 "evaluation does not take");
}

void run_sound(Report& r) {
  Recorder rec(r);
  auto record = [&](const Signature& sig, const Tree& t, const WorldState& d, const PosFormula& goal) {
    auto finding = [&](Check (*check)(const Signature&, const Tree&, const WorldState&, const PosFormula&),
                       const char* reading) {
      return [&, check, reading] {
        auto still = [&](const Tree& x, const WorldState& s) { return fails(check(sig, x, s, goal)); };
        Tree small = shrink_tree(t, [&](const Tree& x) { return still(x, d); });
        WorldState s = shrink_state(d, [&](const WorldState& x) { return still(small, x); });
        Finding f = tree_finding(check(sig, small, s, goal), sig, small, s);
        f.goal = to_string(goal);
        f.extra["reading"] = reading;
        return f;
      };
    };
    rec.record("angelic", check_sound_angelic(sig, t, d, goal), finding(check_sound_angelic, "angelic"));
    Check det = check_sound_det(sig, t, d, goal);
    rec.record("deterministic", det, finding(check_sound_det, "deterministic"));
    return det;
  };

  // The probe that separates the two readings.
  {
    Signature sig = parse_spec(fixtures::kSmokingSpec);
    Tree t = parse_tree("Sel{smoke() + pace()}", sig);
    WorldState d = parse_state("{has_cigarette}");
    PosFormula goal = parse_formula("has_cigarette");
    ProofResult p = prove(typed_sequent(d, synth(sig, t), goal), Mode::Strict);
    AllOutcomes all = eval_all(sig, t, d);
    EvalOutcome o = eval(sig, t, d);
    Check det = record(sig, t, d, goal);
    r.analysis.push_back("probe Sel{smoke() + pace()} on {has_cigarette}, goal has_cigarette: prover " +
                         std::string(to_string(p.status)) + ", eval_all reaches {has_cigarette}: " +
                         (all.successes.count(d) ? "yes" : "no") + ", eval gives " + show(o));
    r.analysis.push_back(
        std::string("probe classification: ") +
        (fails(det) ? "paper-conjecture-violation under the deterministic reading; the angelic reading holds"
                    : "no violation under either reading"));
  }

  Generator g(r.cfg, 4);
  for (std::size_t i = 0; i < r.cfg.cases; ++i) {
    Signature sig = g.signature();
    Tree t = g.tree(sig, false);
    WorldState d = g.state(sig);
    ++r.cases;
    AllOutcomes all = eval_all(sig, t, d, kEvalBudget);
    if (all.exhausted) {
      ++r.inconclusive;
      continue;
    }
    std::vector<WorldState> goals;
    std::vector<Atom> reach = d.atoms();
    std::size_t k = 0;
    for (const auto& s : all.successes) {
      if (k++ < 3) goals.push_back(s);
      for (const auto& a : s.atoms())
        if (std::find(reach.begin(), reach.end(), a) == reach.end()) reach.push_back(a);
    }
    for (int j = 0; j < 2; ++j) {
      WorldState s;
      for (const auto& a : reach)
        if (g.chance(0.5)) s.add(a);
      goals.push_back(s);
    }
    std::sort(goals.begin(), goals.end());
    goals.erase(std::unique(goals.begin(), goals.end()), goals.end());
    for (const auto& goal : goals) record(sig, t, d, pos_of_state(goal));
  }
  r.analysis.push_back("angelic violations: " + std::to_string(r.count("angelic.fail")) +
                       ", deterministic violations: " + std::to_string(r.count("deterministic.fail")));
}

Check replay_sound(const Finding& f) {
  Signature sig = parse_spec(f.signature);
  Tree t = parse_tree(f.tree, sig);
  WorldState d = parse_state(f.state);
  PosFormula goal = parse_formula(f.goal);
  auto it = f.extra.find("reading");
  if (it != f.extra.end() && it->second == "angelic") return check_sound_angelic(sig, t, d, goal);
  return check_sound_det(sig, t, d, goal);
}

//--------------------------------------------------------------------------------------------------
// prover-oracle

Check check_prover(const Sequent& s) {
  bool proved[2] = {false, false};
  for (Mode mode : {Mode::Strict, Mode::Affine}) {
    ProofResult p = prove(s, mode, kProveBudget);
    if (p.status == ProofResult::Status::BudgetExhausted) return verdict(Verdict::Inconclusive);
    ProofResult o = oracle_prove(s, mode);
    std::string m = to_string(mode);
    if (p.proved() != o.proved())
      return failure(Classification::ImplementationBugCandidate, m + " prover: " + show(p),
                     m + " oracle: " + show(o));
    for (const ProofResult* r : {&p, &o}) {
      if (!r->proved()) continue;
      std::string bad = check_proof(s, *r->proof, mode);
      if (!bad.empty())
        return failure(Classification::ImplementationBugCandidate, m + " proof rejected: " + bad, "valid proof");
    }
    proved[mode == Mode::Affine] = p.proved();
  }
  if (proved[0] && !proved[1])
    return failure(Classification::ImplementationBugCandidate, "strict proved, affine unproved",
                   "affine proves every strict theorem");
  return verdict(Verdict::Pass);
}

void run_prover(Report& r) {
  Recorder rec(r);
  Generator g(r.cfg, 5);
  for (std::size_t i = 0; i < r.cfg.cases; ++i) {
    Sequent s = g.sequent();
    ++r.cases;
    Check c = check_prover(s);
    if (c.verdict == Verdict::Pass) {
      bool strict = prove(s, Mode::Strict, kProveBudget).proved();
      bool affine = prove(s, Mode::Affine, kProveBudget).proved();
      ++r.counters[std::string("verdict.strict-") + (strict ? "proved" : "unproved")];
      ++r.counters[std::string("verdict.affine-") + (affine ? "proved" : "unproved")];
    }
    rec.record("agreement", c, [&] {
      Sequent small = s;
      for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t k = 0; k < small.context.size(); ++k) {
          Sequent cand = small;
          cand.context.erase(cand.context.begin() + static_cast<std::ptrdiff_t>(k));
          if (fails(check_prover(cand))) {
            small = std::move(cand);
            progress = true;
            break;
          }
        }
      }
      Finding f = base_finding(check_prover(small));
      f.goal = to_string(small);
      return f;
    });
  }
}

Check replay_prover(const Finding& f) { return check_prover(parse_sequent(f.goal)); }

//--------------------------------------------------------------------------------------------------
// roundtrip

template <typename F>
Check roundtrip(const std::string& text, F&& same_after_parse) {
  try {
    if (same_after_parse()) return verdict(Verdict::Pass);
    return failure(Classification::ImplementationBugCandidate, "parsed value differs", text);
  } catch (const Error& e) {
    return failure(Classification::ImplementationBugCandidate, std::string("parse error: ") + e.what(), text);
  }
}

Check roundtrip_signature(const Signature& sig) {
  std::string text = to_string(sig);
  return roundtrip(text, [&] {
    Signature back = parse_spec(text);
    return equivalent(back, sig) && to_string(back) == text;
  });
}

Check roundtrip_tree(const Signature& sig, const Tree& t) {
  std::string text = to_string(t);
  return roundtrip(text, [&] { return parse_tree(text, sig) == t; });
}

Check roundtrip_state(const WorldState& d) {
  std::string text = to_string(d);
  return roundtrip(text, [&] { return parse_state(text) == d; });
}

Check roundtrip_interface(const Interface& n) {
  std::string text = to_string(n);
  return roundtrip(text, [&] { return parse_interface(text) == n; });
}

Check roundtrip_sequent(const Sequent& s) {
  std::string text = to_string(s);
  return roundtrip(text, [&] {
    Sequent back = parse_sequent(text);
    return back.context == s.context && back.goal == s.goal;
  });
}

void run_roundtrip(Report& r) {
  Recorder rec(r);
  Generator g(r.cfg, 6);
  for (std::size_t i = 0; i < r.cfg.cases; ++i) {
    Signature sig = g.signature();
    Tree t = g.tree(sig);
    WorldState d = g.state(sig);
    Interface n = g.interface();
    Sequent s = g.sequent();
    ++r.cases;
    auto finding = [](const Check& c, const char* artifact, std::function<void(Finding&)> fill) {
      return [c, artifact, fill] {
        Finding f = base_finding(c);
        f.extra["artifact"] = artifact;
        fill(f);
        return f;
      };
    };
    rec.record("signature", roundtrip_signature(sig),
               finding(roundtrip_signature(sig), "signature", [&](Finding& f) { f.signature = to_string(sig); }));
    Check ct = roundtrip_tree(sig, t);
    rec.record("tree", ct, finding(ct, "tree", [&](Finding& f) {
                 f.signature = to_string(sig);
                 f.tree = to_string(t);
               }));
    Check cd = roundtrip_state(d);
    rec.record("state", cd, finding(cd, "state", [&](Finding& f) { f.state = to_string(d); }));
    Check cn = roundtrip_interface(n);
    rec.record("interface", cn, finding(cn, "interface", [&](Finding& f) { f.goal = to_string(n); }));
    Check cs = roundtrip_sequent(s);
    rec.record("sequent", cs, finding(cs, "sequent", [&](Finding& f) { f.goal = to_string(s); }));
  }
}

Check replay_roundtrip(const Finding& f) {
  const std::string& kind = f.extra.at("artifact");
  try {
    if (kind == "signature") {
      // The stored text is the printed form; re-printing must be stable.
      Signature sig = parse_spec(f.signature);
      return roundtrip_signature(sig);
    }
    if (kind == "tree") {
      Signature sig = parse_spec(f.signature);
      return roundtrip_tree(sig, parse_tree(f.tree, sig));
    }
    if (kind == "state") return roundtrip_state(parse_state(f.state));
    if (kind == "interface") return roundtrip_interface(parse_interface(f.goal));
    if (kind == "sequent") return roundtrip_sequent(parse_sequent(f.goal));
  } catch (const Error& e) {
    return failure(Classification::ImplementationBugCandidate, std::string("parse error: ") + e.what(), "");
  }
  throw Error(ErrorKind::InvalidArgument, "unknown artifact '" + kind + "'");
}

//--------------------------------------------------------------------------------------------------
// bad-rule-demo

// Goals the interface proves in `mode` that no evaluation of the tree
// justifies. Candidates are the small multisets over the domain's atoms.
std::vector<std::string> mismatches(const Formula& type, const WorldState& delta, const EvalOutcome& run,
                                    const std::vector<Atom>& domain, Mode mode) {
  std::vector<Atom> pool;
  for (const auto& a : domain) pool.insert(pool.end(), 2, a);
  std::vector<std::string> out;
  for (const auto& goal : sub_multisets(pool, 2, 1000)) {
    Sequent s{context_of(delta), to_formula(pos_of_state(goal))};
    s.context.push_back(type);
    if (!prove(s, mode).proved()) continue;
    bool justified = run.success() &&
                     (mode == Mode::Strict ? *run.final == goal : run.final->includes(goal));
    if (!justified) out.push_back(to_string(goal));
  }
  return out;
}

std::string list(const std::vector<std::string>& v) {
  if (v.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i];
  return out;
}

void run_bad_rule(Report& r) {
  Recorder rec(r);
  Signature sig = parse_spec(fixtures::kDoorsSpec);
  Tree t = parse_tree(fixtures::kBadOrder, sig);
  WorldState delta = parse_state("{at_elsewhere, door_unlocked}");
  Formula bad = parse_logic_formula("(at_door * door_unlocked -o door_open) * (at_elsewhere -o at_door)");
  Formula good = to_formula(synth(sig, t));
  PosFormula c = parse_formula("door_unlocked");
  ++r.cases;

  auto claim = [&](const std::string& name, bool holds, const std::string& observed, const std::string& expected) {
    Check k = holds ? verdict(Verdict::Pass)
                    : failure(Classification::ImplementationBugCandidate, observed, expected, name);
    rec.record(name, k, [&] {
      Finding f = base_finding(k);
      f.signature = fixtures::kDoorsSpec;
      f.tree = to_string(t);
      f.state = to_string(delta);
      f.goal = to_string(c);
      f.extra["claim"] = name;
      return f;
    });
  };

  Sequent with_bad{context_of(delta), to_formula(c)};
  with_bad.context.push_back(bad);
  ProofResult affine = prove(with_bad, Mode::Affine);
  ProofResult strict = prove(with_bad, Mode::Strict);
  EvalOutcome run = eval(sig, t, delta);

  std::vector<Atom> domain;
  for (const char* p : {"at_elsewhere", "at_door", "door_unlocked", "door_open", "through_door"})
    domain.push_back(make_atom(p));
  auto bad_strict = mismatches(bad, delta, run, domain, Mode::Strict);
  auto good_strict = mismatches(good, delta, run, domain, Mode::Strict);
  auto bad_affine = mismatches(bad, delta, run, domain, Mode::Affine);
  auto good_affine = mismatches(good, delta, run, domain, Mode::Affine);

  claim("affine-proves-goal", affine.proved(), to_string(affine.status), "proved");
  claim("eval-fails", run.status == EvalOutcome::Status::Failure, show(run), "failure");
  claim("mismatch-with-bad-type", !bad_strict.empty(), "none", "a goal proved but never reached");
  claim("no-mismatch-with-synth-type", good_strict.empty(), list(good_strict), "none");

  r.analysis.push_back("A_bad = " + to_string(bad));
  r.analysis.push_back("synth type = " + to_string(good));
  r.analysis.push_back("affine: Delta, A_bad |- door_unlocked " + std::string(to_string(affine.status)));
  r.analysis.push_back("strict: Delta, A_bad |- door_unlocked " + std::string(to_string(strict.status)) +
                       " (leftover resources cannot be discarded)");
  r.analysis.push_back("eval " + to_string(t) + " on " + to_string(delta) + ": " + show(run));
  r.analysis.push_back("strict goals proved but unreached, A_bad: " + list(bad_strict));
  r.analysis.push_back("strict goals proved but unreached, synth: " + list(good_strict));
  r.analysis.push_back("affine goals proved but unreached, A_bad: " + list(bad_affine));
  r.analysis.push_back("affine goals proved but unreached, synth: " + list(good_affine) +
                       " (weakening discards the unused type, so goals already in Delta qualify)");
}

Check replay_bad_rule(const Finding& f) {
  GenConfig cfg;
  Report r;
  r.suite = f.suite;
  r.cfg = cfg;
  run_bad_rule(r);
  auto it = f.extra.find("claim");
  if (it == f.extra.end()) return verdict(r.failed ? Verdict::Fail : Verdict::Pass);
  return verdict(r.count(it->second + ".fail") ? Verdict::Fail : Verdict::Pass);
}

}  // namespace

//--------------------------------------------------------------------------------------------------
// Entry points

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"congruence",   "lemma-seq",     "theorem-complete",
                                                 "theorem-sound", "prover-oracle", "bad-rule-demo",
                                                 "roundtrip"};
  return names;
}

Report run_suite(const std::string& name, const GenConfig& cfg) {
  cfg.validate();
  Report r;
  r.suite = name;
  r.cfg = cfg;
  if (name == "congruence")
    run_congruence(r);
  else if (name == "lemma-seq")
    run_lemma(r);
  else if (name == "theorem-complete")
    run_complete(r);
  else if (name == "theorem-sound")
    run_sound(r);
  else if (name == "prover-oracle")
    run_prover(r);
  else if (name == "bad-rule-demo")
    run_bad_rule(r);
  else if (name == "roundtrip")
    run_roundtrip(r);
  else
    throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
  return r;
}

bool replay_finding(const Finding& f) {
  const std::string& s = f.suite;
  Check c;
  if (s == "congruence")
    c = replay_congruence(f);
  else if (s == "lemma-seq")
    c = replay_lemma(f);
  else if (s == "theorem-complete")
    c = replay_tree_check(f, check_complete);
  else if (s == "theorem-sound")
    c = replay_sound(f);
  else if (s == "prover-oracle")
    c = replay_prover(f);
  else if (s == "bad-rule-demo")
    c = replay_bad_rule(f);
  else if (s == "roundtrip")
    c = replay_roundtrip(f);
  else
    throw Error(ErrorKind::InvalidArgument, "unknown suite '" + s + "'");
  return fails(c);
}

}  // namespace btl::testkit
