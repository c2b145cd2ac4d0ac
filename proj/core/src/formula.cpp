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

#include "btl/formula.hpp"

#include <algorithm>
#include <cassert>

#include "btl/error.hpp"

namespace btl {

struct Formula::Node {
  Kind kind = Kind::One;
  Atom atom;
  std::vector<Formula> kids;
  std::size_t size = 1;
  bool positive = true;
};

namespace {

template <class Node, class Kind>
std::shared_ptr<Node> leaf(Kind kind) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  return n;
}

}  // namespace

Formula Formula::atom(Atom a) {
  auto n = leaf<Node>(Kind::Atom);
  n->atom = std::move(a);
  return Formula(std::move(n));
}

Formula Formula::one() {
  static const std::shared_ptr<const Node> node = leaf<Node>(Kind::One);
  return Formula(node);
}

Formula Formula::top() {
  static const std::shared_ptr<const Node> node = [] {
    auto n = leaf<Node>(Kind::Top);
    n->positive = false;
    return n;
  }();
  return Formula(node);
}

namespace {

template <class Node, class Kind, class F>
std::shared_ptr<Node> binary(Kind kind, const F& lhs, const F& rhs, bool positive) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->kids = {lhs, rhs};
  n->size = 1 + lhs.size() + rhs.size();
  n->positive = positive;
  return n;
}

}  // namespace

Formula Formula::tensor(const Formula& lhs, const Formula& rhs) {
  return Formula(
      binary<Node>(Kind::Tensor, lhs, rhs, lhs.is_positive() && rhs.is_positive()));
}

Formula Formula::with(const Formula& lhs, const Formula& rhs) {
  return Formula(binary<Node>(Kind::With, lhs, rhs, false));
}

Formula Formula::lolli(const Formula& lhs, const Formula& rhs) {
  return Formula(binary<Node>(Kind::Lolli, lhs, rhs, false));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const Atom& Formula::atom() const {
  assert(kind() == Kind::Atom);
  return node_->atom;
}

const Formula& Formula::lhs() const { return node_->kids[0]; }
const Formula& Formula::rhs() const { return node_->kids[1]; }
std::size_t Formula::size() const { return node_->size; }
bool Formula::is_positive() const { return node_->positive; }

bool operator==(const Formula& a, const Formula& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Formula::Kind::One:
    case Formula::Kind::Top: return std::strong_ordering::equal;
    case Formula::Kind::Atom: return a.atom() <=> b.atom();
    default:
      if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
      return a.rhs() <=> b.rhs();
  }
}

Formula to_formula(const PosFormula& s) {
  switch (s.kind()) {
    case PosFormula::Kind::One: return Formula::one();
    case PosFormula::Kind::Atom: return Formula::atom(s.atom());
    case PosFormula::Kind::Tensor: return Formula::tensor(to_formula(s.lhs()), to_formula(s.rhs()));
  }
  return Formula::one();
}

Formula to_formula(const Interface& n) {
  switch (n.kind()) {
    case Interface::Kind::Pos: return to_formula(n.formula());
    case Interface::Kind::Lolli: return Formula::lolli(to_formula(n.formula()), to_formula(n.body()));
    case Interface::Kind::Tensor:
      return Formula::tensor(to_formula(n.formula()), to_formula(n.body()));
    case Interface::Kind::With: return Formula::with(to_formula(n.lhs()), to_formula(n.rhs()));
    case Interface::Kind::Top: return Formula::top();
  }
  return Formula::top();
}

Formula to_formula(const WorldState& d) { return to_formula(pos_of_state(d)); }

namespace {

void collect(const Formula& f, std::vector<Atom>& out) {
  switch (f.kind()) {
    case Formula::Kind::One: return;
    case Formula::Kind::Atom: out.push_back(f.atom()); return;
    case Formula::Kind::Tensor:
      collect(f.lhs(), out);
      collect(f.rhs(), out);
      return;
    default: throw Error(ErrorKind::InvalidArgument, "formula is not positive");
  }
}

PosFormula to_pos(const Formula& f) { return PosFormula::of_atoms(positive_atoms(f)); }

}  // namespace

std::vector<Atom> positive_atoms(const Formula& f) {
  std::vector<Atom> out;
  collect(f, out);
  std::sort(out.begin(), out.end());
  return out;
}

Interface to_interface(const Formula& f) {
  if (f.is_positive()) return Interface::pos(to_pos(f));
  switch (f.kind()) {
    case Formula::Kind::Top: return Interface::top();
    case Formula::Kind::With: return Interface::with(to_interface(f.lhs()), to_interface(f.rhs()));
    case Formula::Kind::Lolli:
      if (!f.lhs().is_positive())
        throw Error(ErrorKind::ShapeError, "the antecedent of -o must be a positive formula");
      return Interface::lolli(to_pos(f.lhs()), to_interface(f.rhs()));
    case Formula::Kind::Tensor:
      if (!f.lhs().is_positive())
        throw Error(ErrorKind::ShapeError, "the left operand of * must be a positive formula");
      return Interface::tensor(to_pos(f.lhs()), to_interface(f.rhs()));
    default: break;
  }
  throw Error(ErrorKind::ShapeError, "formula is outside the interface grammar");
}

}  // namespace btl
