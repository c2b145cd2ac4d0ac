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

#include "btl/syntax.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <set>

#include "btl/error.hpp"

namespace btl {

//==================================================================================================
// Terms and atoms

bool Term::is_variable() const {
  return !name.empty() && std::isupper(static_cast<unsigned char>(name.front()));
}

bool Atom::is_ground() const {
  return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_ground(); });
}

Atom make_atom(std::string predicate, std::initializer_list<std::string_view> args) {
  Atom a{std::move(predicate), {}};
  for (auto arg : args) a.args.push_back(Term{std::string(arg)});
  return a;
}

Term substitute(const Substitution& theta, const Term& t) {
  if (!t.is_variable()) return t;
  auto it = theta.find(t.name);
  return it == theta.end() ? t : it->second;
}

Atom substitute(const Substitution& theta, const Atom& a) {
  Atom out{a.predicate, {}};
  out.args.reserve(a.args.size());
  for (const auto& t : a.args) out.args.push_back(substitute(theta, t));
  return out;
}

//==================================================================================================
// WorldState

WorldState::WorldState(std::initializer_list<Atom> atoms) {
  for (const auto& a : atoms) add(a);
}

WorldState::WorldState(const std::vector<Atom>& atoms) {
  for (const auto& a : atoms) add(a);
}

void WorldState::add(const Atom& a, std::size_t n) {
  if (!a.is_ground()) throw Error(ErrorKind::NonGroundAtom, "world states hold ground atoms only");
  if (n == 0) return;
  counts_[a] += n;
  size_ += n;
}

void WorldState::add(const WorldState& other) {
  for (const auto& [a, n] : other.counts_) {
    counts_[a] += n;
    size_ += n;
  }
}

bool WorldState::remove(const Atom& a, std::size_t n) {
  if (n == 0) return true;
  auto it = counts_.find(a);
  if (it == counts_.end() || it->second < n) return false;
  it->second -= n;
  size_ -= n;
  if (it->second == 0) counts_.erase(it);
  return true;
}

bool WorldState::remove(const WorldState& other) {
  if (!includes(other)) return false;
  for (const auto& [a, n] : other.counts_) remove(a, n);
  return true;
}

std::size_t WorldState::count(const Atom& a) const {
  auto it = counts_.find(a);
  return it == counts_.end() ? 0 : it->second;
}

bool WorldState::includes(const WorldState& other) const {
  for (const auto& [a, n] : other.counts_)
    if (count(a) < n) return false;
  return true;
}

std::vector<Atom> WorldState::atoms() const {
  std::vector<Atom> out;
  out.reserve(size_);
  for (const auto& [a, n] : counts_)
    for (std::size_t i = 0; i < n; ++i) out.push_back(a);
  return out;
}

WorldState WorldState::minus(const WorldState& other) const {
  WorldState out;
  for (const auto& [a, n] : counts_) {
    std::size_t m = other.count(a);
    if (n > m) out.add(a, n - m);
  }
  return out;
}

//==================================================================================================
// PosFormula

struct PosFormula::Node {
  Kind kind = Kind::One;
  Atom atom;
  PosFormula lhs_{nullptr};
  PosFormula rhs_{nullptr};
};

PosFormula::PosFormula() : node_(nullptr) {}

PosFormula PosFormula::atom(Atom a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->atom = std::move(a);
  return PosFormula(std::move(n));
}

PosFormula PosFormula::tensor(PosFormula lhs, PosFormula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tensor;
  n->lhs_ = std::move(lhs);
  n->rhs_ = std::move(rhs);
  return PosFormula(std::move(n));
}

PosFormula PosFormula::of_atoms(std::vector<Atom> atoms) {
  if (atoms.empty()) return one();
  std::sort(atoms.begin(), atoms.end());
  PosFormula acc = atom(atoms.back());
  for (std::size_t i = atoms.size() - 1; i-- > 0;) acc = tensor(atom(atoms[i]), acc);
  return acc;
}

PosFormula::Kind PosFormula::kind() const { return node_ ? node_->kind : Kind::One; }

const Atom& PosFormula::atom() const {
  assert(kind() == Kind::Atom);
  return node_->atom;
}

const PosFormula& PosFormula::lhs() const {
  assert(kind() == Kind::Tensor);
  return node_->lhs_;
}

const PosFormula& PosFormula::rhs() const {
  assert(kind() == Kind::Tensor);
  return node_->rhs_;
}

namespace {

void collect_atoms(const PosFormula& s, std::vector<Atom>& out) {
  switch (s.kind()) {
    case PosFormula::Kind::One: return;
    case PosFormula::Kind::Atom: out.push_back(s.atom()); return;
    case PosFormula::Kind::Tensor:
      collect_atoms(s.lhs(), out);
      collect_atoms(s.rhs(), out);
      return;
  }
}

}  // namespace

std::vector<Atom> PosFormula::atoms() const {
  std::vector<Atom> out;
  collect_atoms(*this, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool PosFormula::is_unit() const {
  switch (kind()) {
    case Kind::One: return true;
    case Kind::Atom: return false;
    case Kind::Tensor: return lhs().is_unit() && rhs().is_unit();
  }
  return true;
}

bool PosFormula::is_ground() const {
  switch (kind()) {
    case Kind::One: return true;
    case Kind::Atom: return atom().is_ground();
    case Kind::Tensor: return lhs().is_ground() && rhs().is_ground();
  }
  return true;
}

std::size_t PosFormula::size() const {
  switch (kind()) {
    case Kind::One:
    case Kind::Atom: return 1;
    case Kind::Tensor: return 1 + lhs().size() + rhs().size();
  }
  return 1;
}

bool operator==(const PosFormula& a, const PosFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case PosFormula::Kind::One: return true;
    case PosFormula::Kind::Atom: return a.atom() == b.atom();
    case PosFormula::Kind::Tensor: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

PosFormula canonical_pos(const PosFormula& s) { return PosFormula::of_atoms(s.atoms()); }

bool equivalent(const PosFormula& a, const PosFormula& b) { return a.atoms() == b.atoms(); }

PosFormula substitute(const Substitution& theta, const PosFormula& s) {
  switch (s.kind()) {
    case PosFormula::Kind::One: return s;
    case PosFormula::Kind::Atom: return PosFormula::atom(substitute(theta, s.atom()));
    case PosFormula::Kind::Tensor:
      return PosFormula::tensor(substitute(theta, s.lhs()), substitute(theta, s.rhs()));
  }
  return s;
}

PosFormula pos_of_state(const WorldState& d) { return PosFormula::of_atoms(d.atoms()); }

WorldState state_of_pos(const PosFormula& s) {
  if (!s.is_ground()) throw Error(ErrorKind::NonGroundAtom, "formula is not ground");
  return WorldState(s.atoms());
}

std::vector<std::string> variables_of(const PosFormula& s) {
  std::set<std::string> vars;
  for (const auto& a : s.atoms())
    for (const auto& t : a.args)
      if (t.is_variable()) vars.insert(t.name);
  return {vars.begin(), vars.end()};
}

//==================================================================================================
// Interface

struct Interface::Node {
  Kind kind = Kind::Top;
  PosFormula formula;
  std::vector<Interface> kids;
  std::size_t size = 1;
};

Interface Interface::pos(const PosFormula& s) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pos;
  n->formula = canonical_pos(s);
  n->size = n->formula.size();
  return Interface(std::move(n));
}

Interface Interface::lolli(const PosFormula& antecedent, const Interface& body) {
  if (antecedent.is_unit()) return body;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Lolli;
  n->formula = canonical_pos(antecedent);
  n->kids.push_back(body);
  n->size = 1 + n->formula.size() + body.size();
  return Interface(std::move(n));
}

Interface Interface::tensor(const PosFormula& released, const Interface& body) {
  if (released.is_unit()) return body;
  if (body.kind() == Kind::Pos) return pos(PosFormula::tensor(released, body.formula()));
  if (body.kind() == Kind::Tensor)
    return tensor(PosFormula::tensor(released, body.formula()), body.body());
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tensor;
  n->formula = canonical_pos(released);
  n->kids.push_back(body);
  n->size = 1 + n->formula.size() + body.size();
  return Interface(std::move(n));
}

Interface Interface::with(const Interface& lhs, const Interface& rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::With;
  n->kids = {lhs, rhs};
  n->size = 1 + lhs.size() + rhs.size();
  return Interface(std::move(n));
}

Interface Interface::top() {
  static const auto node = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Top;
    return std::shared_ptr<const Node>(std::move(n));
  }();
  return Interface(node);
}

Interface::Kind Interface::kind() const { return node_->kind; }

const PosFormula& Interface::formula() const {
  assert(kind() == Kind::Pos || kind() == Kind::Lolli || kind() == Kind::Tensor);
  return node_->formula;
}

const Interface& Interface::body() const {
  assert(kind() == Kind::Lolli || kind() == Kind::Tensor);
  return node_->kids[0];
}

const Interface& Interface::lhs() const {
  assert(kind() == Kind::With);
  return node_->kids[0];
}

const Interface& Interface::rhs() const {
  assert(kind() == Kind::With);
  return node_->kids[1];
}

std::size_t Interface::size() const { return node_->size; }

bool operator==(const Interface& a, const Interface& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Interface::Kind::Top: return true;
    case Interface::Kind::Pos: return a.formula() == b.formula();
    case Interface::Kind::Lolli:
    case Interface::Kind::Tensor: return a.formula() == b.formula() && a.body() == b.body();
    case Interface::Kind::With: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

bool equal_interface(const Interface& a, const Interface& b) { return a == b; }

//==================================================================================================
// Tree

Tree Tree::op(std::string name, std::vector<Term> args) {
  Tree t;
  t.kind_ = Kind::Op;
  t.name_ = std::move(name);
  t.args_ = std::move(args);
  return t;
}

Tree Tree::cond(PosFormula condition, Tree body) {
  Tree t;
  t.kind_ = Kind::Cond;
  t.condition_ = std::move(condition);
  t.children_.push_back(std::move(body));
  return t;
}

Tree Tree::seq(std::vector<Tree> children) {
  Tree t;
  t.kind_ = Kind::Seq;
  t.children_ = std::move(children);
  return t;
}

Tree Tree::sel(std::vector<Tree> children) {
  Tree t;
  t.kind_ = Kind::Sel;
  t.children_ = std::move(children);
  return t;
}

Tree Tree::rep(Tree body) {
  Tree t;
  t.kind_ = Kind::Rep;
  t.children_.push_back(std::move(body));
  return t;
}

bool Tree::contains_rep() const {
  if (kind_ == Kind::Rep) return true;
  return std::any_of(children_.begin(), children_.end(),
                     [](const Tree& c) { return c.contains_rep(); });
}

std::size_t Tree::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children_) n += c.node_count();
  return n;
}

std::size_t Tree::depth() const {
  std::size_t d = 0;
  for (const auto& c : children_) d = std::max(d, c.depth());
  return d + 1;
}

bool operator==(const Tree& a, const Tree& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Tree::Kind::Op: return a.name_ == b.name_ && a.args_ == b.args_;
    case Tree::Kind::Cond:
      return equivalent(a.condition_, b.condition_) && a.children_ == b.children_;
    default: return a.children_ == b.children_;
  }
}

const Tree& subtree(const Tree& root, const std::vector<std::size_t>& path) {
  const Tree* t = &root;
  for (auto i : path) {
    if (i >= t->children().size()) throw Error(ErrorKind::InvalidArgument, "path out of range");
    t = &t->children()[i];
  }
  return *t;
}

//==================================================================================================
// Signatures

Substitution OpDecl::bind(const std::vector<Term>& args) const {
  Substitution theta;
  for (std::size_t i = 0; i < params.size() && i < args.size(); ++i)
    theta[params[i].name] = args[i];
  return theta;
}

bool equivalent(const OpDecl& a, const OpDecl& b) {
  return a.name == b.name && a.params == b.params && equivalent(a.antecedent, b.antecedent) &&
         equivalent(a.consequent, b.consequent);
}

void Signature::add_sort(const std::string& name, std::vector<std::string> constants) {
  if (sorts_.count(name)) throw Error(ErrorKind::DuplicateName, "sort '" + name + "' declared twice");
  if (constants.empty())
    throw Error(ErrorKind::InvalidArgument, "sort '" + name + "' has no constants");
  sorts_[name] = std::move(constants);
  sort_order_.push_back(name);
}

void Signature::add_predicate(const std::string& name, std::vector<std::string> arg_sorts) {
  if (predicates_.count(name))
    throw Error(ErrorKind::DuplicateName, "predicate '" + name + "' declared twice");
  predicates_[name] = std::move(arg_sorts);
  predicate_order_.push_back(name);
}

void Signature::add_op(OpDecl decl) {
  if (index_.count(decl.name))
    throw Error(ErrorKind::DuplicateName, "operator '" + decl.name + "' declared twice");
  index_.emplace(decl.name, ops_.size());
  ops_.push_back(std::move(decl));
}

const OpDecl* Signature::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &ops_[it->second];
}

bool Signature::sort_contains(const std::string& sort, const std::string& constant) const {
  auto it = sorts_.find(sort);
  if (it == sorts_.end()) return true;  // the universal sort
  return std::find(it->second.begin(), it->second.end(), constant) != it->second.end();
}

bool equivalent(const Signature& a, const Signature& b) {
  if (a.ops_.size() != b.ops_.size()) return false;
  for (std::size_t i = 0; i < a.ops_.size(); ++i)
    if (!equivalent(a.ops_[i], b.ops_[i])) return false;
  return a.sorts_ == b.sorts_ && a.predicates_ == b.predicates_;
}

}  // namespace btl
