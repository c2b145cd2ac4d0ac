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

#include "btl/testkit/generators.hpp"

#include <algorithm>

#include "btl/error.hpp"
#include "btl/prover.hpp"

namespace btl::testkit {

void GenConfig::validate() const {
  if (max_predicates == 0 || max_ops == 0 || max_depth == 0 || max_state == 0 ||
      max_interface_depth == 0 || cases == 0)
    throw Error(ErrorKind::InvalidArgument, "generator bounds must be positive");
}

const std::vector<Atom>& atom_pool() {
  static const std::vector<Atom> pool = {make_atom("a"), make_atom("b"), make_atom("c"),
                                         make_atom("d")};
  return pool;
}

namespace {

const char* const kPredNames[] = {"p", "q", "r", "s", "t", "u", "v", "w"};
const char* const kConstants[] = {"k1", "k2", "k3"};

std::vector<std::string> universe(const Signature& sig) {
  std::vector<std::string> out;
  for (const auto& name : sig.sort_order())
    for (const auto& c : sig.sorts().at(name)) out.push_back(c);
  if (out.empty()) out = {"k1", "k2"};
  return out;
}

}  // namespace

Generator::Generator(const GenConfig& cfg, std::uint64_t stream) : cfg_(cfg) {
  cfg_.validate();
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  rng_.seed(seq);
}

std::size_t Generator::below(std::size_t n) {
  if (n <= 1) return 0;
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

bool Generator::chance(double p) { return std::bernoulli_distribution(p)(rng_); }

Signature Generator::signature() {
  Signature sig;
  bool sorted = chance(0.5);
  if (sorted) {
    std::vector<std::string> cs(kConstants, kConstants + 2 + below(2));
    sig.add_sort("obj", cs);
  }
  std::size_t npred = 1 + below(std::min<std::size_t>(cfg_.max_predicates, 8));
  bool declare = chance(0.5);
  std::vector<std::pair<std::string, std::size_t>> preds;
  for (std::size_t i = 0; i < npred; ++i) {
    std::size_t arity = sorted && chance(0.3) ? 1 : 0;
    preds.emplace_back(kPredNames[i], arity);
    if (declare) sig.add_predicate(kPredNames[i], std::vector<std::string>(arity, "obj"));
  }

  std::size_t nops = 1 + below(cfg_.max_ops);
  for (std::size_t i = 0; i < nops; ++i) {
    OpDecl d;
    d.name = "o" + std::to_string(i);
    bool param = sorted && chance(0.4);
    if (param) d.params.push_back(Param{"X", chance(0.7) ? std::optional<std::string>("obj") : std::nullopt});
    auto side = [&](std::size_t max_atoms) {
      std::vector<Atom> atoms;
      std::size_t k = below(max_atoms + 1);
      for (std::size_t j = 0; j < k; ++j) {
        const auto& [name, arity] = preds[below(preds.size())];
        Atom a{name, {}};
        if (arity == 1) {
          if (param && chance(0.6))
            a.args.push_back(Term{"X"});
          else
            a.args.push_back(Term{sig.sorts().at("obj")[below(sig.sorts().at("obj").size())]});
        }
        atoms.push_back(std::move(a));
      }
      // Random association, to exercise canonicalization.
      PosFormula f = atoms.empty() ? PosFormula::one() : PosFormula::atom(atoms[0]);
      for (std::size_t j = 1; j < atoms.size(); ++j)
        f = chance(0.5) ? PosFormula::tensor(f, PosFormula::atom(atoms[j]))
                        : PosFormula::tensor(PosFormula::atom(atoms[j]), f);
      return f;
    };
    d.antecedent = side(2);
    d.consequent = side(2);
    sig.add_op(std::move(d));
  }
  return sig;
}

Atom Generator::ground_atom(const Signature& sig, const std::string& pred) {
  Atom a{pred, {}};
  auto it = sig.predicates().find(pred);
  std::size_t arity = 0;
  if (it != sig.predicates().end()) {
    arity = it->second.size();
  } else {
    // Undeclared: take the arity from any use in the operators.
    for (const auto& d : sig.ops())
      for (const auto* side : {&d.antecedent, &d.consequent})
        for (const auto& x : side->atoms())
          if (x.predicate == pred) arity = x.args.size();
  }
  auto cs = universe(sig);
  for (std::size_t i = 0; i < arity; ++i) a.args.push_back(Term{cs[below(cs.size())]});
  return a;
}

std::vector<Term> Generator::ground_args(const Signature& sig, const OpDecl& decl) {
  std::vector<Term> args;
  for (const auto& p : decl.params) {
    std::vector<std::string> cs = p.sort ? sig.sorts().at(*p.sort) : universe(sig);
    args.push_back(Term{cs[below(cs.size())]});
  }
  return args;
}

namespace {

std::vector<std::string> predicates_of(const Signature& sig) {
  std::vector<std::string> out = sig.predicate_order();
  if (!out.empty()) return out;
  for (const auto& d : sig.ops())
    for (const auto* side : {&d.antecedent, &d.consequent})
      for (const auto& a : side->atoms())
        if (std::find(out.begin(), out.end(), a.predicate) == out.end()) out.push_back(a.predicate);
  std::sort(out.begin(), out.end());
  if (out.empty()) out.push_back("p");
  return out;
}

}  // namespace

WorldState Generator::state(const Signature& sig) {
  auto preds = predicates_of(sig);
  WorldState d;
  std::size_t n = below(cfg_.max_state + 1);
  for (std::size_t i = 0; i < n; ++i) d.add(ground_atom(sig, preds[below(preds.size())]));
  return d;
}

// A leaf has depth 1, so the root gets max_depth - 1 levels below it.
Tree Generator::tree(const Signature& sig, bool allow_rep) {
  return tree(sig, cfg_.max_depth - 1, allow_rep);
}

Tree Generator::tree(const Signature& sig, std::size_t depth, bool allow_rep) {
  if (depth == 0 || chance(0.3)) {
    double r = std::uniform_real_distribution<double>(0, 1)(rng_);
    if (r < 0.08 || sig.ops().empty()) return Tree::skip();
    if (r < 0.14) return Tree::abort();
    const OpDecl& d = sig.ops()[below(sig.ops().size())];
    return Tree::op(d.name, ground_args(sig, d));
  }
  double r = std::uniform_real_distribution<double>(0, 1)(rng_);
  auto kids = [&]() {
    std::vector<Tree> out;
    std::size_t n = 1 + below(3);
    for (std::size_t i = 0; i < n; ++i) out.push_back(tree(sig, depth - 1, allow_rep));
    return out;
  };
  if (r < 0.36) return Tree::seq(kids());
  if (r < 0.72) return Tree::sel(kids());
  if (r < 0.92 || !allow_rep) {
    auto preds = predicates_of(sig);
    std::vector<Atom> atoms;
    std::size_t n = 1 + below(2);
    for (std::size_t i = 0; i < n; ++i) atoms.push_back(ground_atom(sig, preds[below(preds.size())]));
    return Tree::cond(PosFormula::of_atoms(atoms), tree(sig, depth - 1, allow_rep));
  }
  return Tree::rep(tree(sig, depth - 1, allow_rep));
}

PosFormula Generator::positive(std::size_t max_atoms) {
  std::vector<Atom> atoms;
  std::size_t n = below(max_atoms + 1);
  for (std::size_t i = 0; i < n; ++i) atoms.push_back(atom_pool()[below(atom_pool().size())]);
  return PosFormula::of_atoms(atoms);
}

Interface Generator::interface() { return interface(cfg_.max_interface_depth); }

Interface Generator::interface(std::size_t depth) {
  double r = std::uniform_real_distribution<double>(0, 1)(rng_);
  if (r < 0.05) return Interface::top();
  if (depth == 0 || r < 0.25) return Interface::pos(positive(2));
  if (r < 0.55) return Interface::lolli(positive(2), interface(depth - 1));
  if (r < 0.75) return Interface::tensor(positive(2), interface(depth - 1));
  return Interface::with(interface(depth - 1), interface(depth - 1));
}

Formula Generator::formula(std::size_t depth) {
  double r = std::uniform_real_distribution<double>(0, 1)(rng_);
  if (depth == 0 || r < 0.35) {
    if (r < 0.04) return Formula::top();
    if (r < 0.08) return Formula::one();
    return Formula::atom(atom_pool()[below(3)]);
  }
  if (r < 0.57) return Formula::tensor(formula(depth - 1), formula(depth - 1));
  if (r < 0.79) return Formula::lolli(formula(depth - 1), formula(depth - 1));
  return Formula::with(formula(depth - 1), formula(depth - 1));
}

Sequent Generator::sequent() {
  for (;;) {
    Sequent s;
    if (chance(0.5)) {
      std::size_t n = below(4);
      for (std::size_t i = 0; i < n; ++i) s.context.push_back(formula(2));
      s.goal = formula(2);
    } else {
      std::size_t n = below(4);
      for (std::size_t i = 0; i < n; ++i) s.context.push_back(Formula::atom(atom_pool()[below(3)]));
      s.context.push_back(to_formula(interface(2)));
      s.goal = to_formula(positive(3));
    }
    if (sequent_size(s) <= kOracleSizeCap) return s;
  }
}

Signature gen_signature(const GenConfig& cfg) { return Generator(cfg).signature(); }

WorldState gen_state(const GenConfig& cfg, const Signature& sig) { return Generator(cfg).state(sig); }

Tree gen_tree(const GenConfig& cfg, const Signature& sig) { return Generator(cfg).tree(sig); }

Interface gen_interface(const GenConfig& cfg) { return Generator(cfg).interface(); }

}  // namespace btl::testkit
