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

#ifndef BTL_SYNTAX_HPP
#define BTL_SYNTAX_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace btl {

//==================================================================================================
// Terms and atoms

// Variables start with an uppercase letter; everything else is a constant.
struct Term {
  std::string name;

  bool is_variable() const;
  bool is_ground() const { return !is_variable(); }

  friend auto operator<=>(const Term&, const Term&) = default;
};

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  bool is_ground() const;

  // Ordered by predicate name, then lexicographically by arguments.
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

Atom make_atom(std::string predicate, std::initializer_list<std::string_view> args = {});

using Substitution = std::map<std::string, Term>;

Term substitute(const Substitution& theta, const Term& t);
Atom substitute(const Substitution& theta, const Atom& a);

//==================================================================================================
// World states: finite multisets of ground atoms

class WorldState {
 public:
  WorldState() = default;
  WorldState(std::initializer_list<Atom> atoms);
  explicit WorldState(const std::vector<Atom>& atoms);

  // Throws Error(NonGroundAtom) for atoms containing variables.
  void add(const Atom& a, std::size_t n = 1);
  void add(const WorldState& other);
  // Removes n copies; returns false and leaves the state untouched if fewer are present.
  bool remove(const Atom& a, std::size_t n = 1);
  bool remove(const WorldState& other);

  std::size_t count(const Atom& a) const;
  bool includes(const WorldState& other) const;
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  const std::map<Atom, std::size_t>& entries() const { return counts_; }
  std::vector<Atom> atoms() const;

  // Multiset difference, saturating at zero.
  WorldState minus(const WorldState& other) const;

  friend bool operator==(const WorldState&, const WorldState&) = default;
  friend auto operator<=>(const WorldState& a, const WorldState& b) { return a.counts_ <=> b.counts_; }

 private:
  std::map<Atom, std::size_t> counts_;
  std::size_t size_ = 0;
};

//==================================================================================================
// Positive formulas: S ::= p(args) | 1 | S * S

class PosFormula {
 public:
  enum class Kind { One, Atom, Tensor };

  PosFormula();  // One
  static PosFormula one() { return PosFormula(); }
  static PosFormula atom(Atom a);
  static PosFormula tensor(PosFormula lhs, PosFormula rhs);
  // Canonical formula for a list of atoms (any order).
  static PosFormula of_atoms(std::vector<Atom> atoms);

  Kind kind() const;
  const Atom& atom() const;
  const PosFormula& lhs() const;
  const PosFormula& rhs() const;

  // Atoms with multiplicity, sorted.
  std::vector<Atom> atoms() const;
  bool is_unit() const;  // true iff the atom multiset is empty
  bool is_ground() const;
  std::size_t size() const;  // number of connectives and leaves

  // Structural equality; use `equivalent` to compare modulo canonical form.
  friend bool operator==(const PosFormula& a, const PosFormula& b);

 private:
  struct Node;
  explicit PosFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

PosFormula canonical_pos(const PosFormula& s);
bool equivalent(const PosFormula& a, const PosFormula& b);
PosFormula substitute(const Substitution& theta, const PosFormula& s);

PosFormula pos_of_state(const WorldState& d);
// Throws Error(NonGroundAtom) when `s` mentions a variable.
WorldState state_of_pos(const PosFormula& s);

//==================================================================================================
// Interfaces: N ::= S | S -o N | S * N | N & N | top
//
// The constructors keep values canonical: positive payloads are sorted and
// flattened, `1 -o N` and `1 * N` collapse to N, `S * S'` (with S' positive)
// collapses to a positive formula, and `S * (S' * N)` becomes `(S * S') * N`.
// With is never reordered or reassociated.

class Interface {
 public:
  enum class Kind { Pos, Lolli, Tensor, With, Top };

  static Interface pos(const PosFormula& s);
  static Interface lolli(const PosFormula& antecedent, const Interface& body);
  static Interface tensor(const PosFormula& released, const Interface& body);
  static Interface with(const Interface& lhs, const Interface& rhs);
  static Interface top();

  Kind kind() const;
  // Payload of Pos, antecedent of Lolli, released formula of Tensor.
  const PosFormula& formula() const;
  // Continuation of Lolli and Tensor.
  const Interface& body() const;
  const Interface& lhs() const;
  const Interface& rhs() const;

  bool is_positive() const { return kind() == Kind::Pos; }
  std::size_t size() const;

  friend bool operator==(const Interface& a, const Interface& b);

 private:
  struct Node;
  explicit Interface(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

bool equal_interface(const Interface& a, const Interface& b);

//==================================================================================================
// Behavior tree expressions

class Tree {
 public:
  enum class Kind { Op, Cond, Seq, Sel, Rep };

  static Tree op(std::string name, std::vector<Term> args = {});
  static Tree cond(PosFormula condition, Tree body);
  static Tree seq(std::vector<Tree> children);
  static Tree sel(std::vector<Tree> children);
  static Tree rep(Tree body);
  static Tree skip() { return seq({}); }
  static Tree abort() { return sel({}); }

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<Term>& args() const { return args_; }
  const PosFormula& condition() const { return condition_; }
  // Single child of Cond and Rep.
  const Tree& body() const { return children_.front(); }
  const std::vector<Tree>& children() const { return children_; }

  bool is_skip() const { return kind_ == Kind::Seq && children_.empty(); }
  bool is_abort() const { return kind_ == Kind::Sel && children_.empty(); }
  bool contains_rep() const;
  std::size_t node_count() const;
  std::size_t depth() const;

  // Conditions are compared modulo canonical form.
  friend bool operator==(const Tree& a, const Tree& b);

 private:
  Tree() = default;
  Kind kind_ = Kind::Seq;
  std::string name_;
  std::vector<Term> args_;
  PosFormula condition_;
  std::vector<Tree> children_;
};

// Subtree addressed by child indices from the root.
const Tree& subtree(const Tree& root, const std::vector<std::size_t>& path);

//==================================================================================================
// Operator declarations and signatures

struct Param {
  std::string name;
  std::optional<std::string> sort;

  friend bool operator==(const Param&, const Param&) = default;
};

struct OpDecl {
  std::string name;
  std::vector<Param> params;
  PosFormula antecedent;
  PosFormula consequent;

  // [args/params] applied to both sides.
  Substitution bind(const std::vector<Term>& args) const;
};

bool equivalent(const OpDecl& a, const OpDecl& b);

class Signature {
 public:
  // Throws Error(DuplicateName) / Error(InvalidArgument) for empty sorts.
  void add_sort(const std::string& name, std::vector<std::string> constants);
  void add_predicate(const std::string& name, std::vector<std::string> arg_sorts);
  void add_op(OpDecl decl);

  const OpDecl* find(std::string_view name) const;
  const std::vector<OpDecl>& ops() const { return ops_; }
  const std::map<std::string, std::vector<std::string>>& sorts() const { return sorts_; }
  const std::map<std::string, std::vector<std::string>>& predicates() const { return predicates_; }
  // Declaration order of sorts and predicates, for printing.
  const std::vector<std::string>& sort_order() const { return sort_order_; }
  const std::vector<std::string>& predicate_order() const { return predicate_order_; }

  bool sort_contains(const std::string& sort, const std::string& constant) const;

  friend bool equivalent(const Signature& a, const Signature& b);

 private:
  std::vector<OpDecl> ops_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::map<std::string, std::vector<std::string>> sorts_;
  std::map<std::string, std::vector<std::string>> predicates_;
  std::vector<std::string> sort_order_;
  std::vector<std::string> predicate_order_;
};

std::vector<std::string> variables_of(const PosFormula& s);

}  // namespace btl

#endif  // BTL_SYNTAX_HPP
