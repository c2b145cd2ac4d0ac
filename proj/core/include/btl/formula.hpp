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

#ifndef BTL_FORMULA_HPP
#define BTL_FORMULA_HPP

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "btl/syntax.hpp"

namespace btl {

// Propositional formulas of the sequent fragment:
//   A ::= p | 1 | top | A * A | A & A | A -o A
// Interfaces and positive formulas embed into this type; the prover works on it
// directly so that contexts such as (a -o b) * (c -o d) can be stated.
class Formula {
 public:
  enum class Kind { Atom, One, Top, Tensor, With, Lolli };

  static Formula atom(Atom a);
  static Formula one();
  static Formula top();
  static Formula tensor(const Formula& lhs, const Formula& rhs);
  static Formula with(const Formula& lhs, const Formula& rhs);
  static Formula lolli(const Formula& lhs, const Formula& rhs);

  Kind kind() const;
  const Atom& atom() const;
  const Formula& lhs() const;
  const Formula& rhs() const;

  std::size_t size() const;
  // Built from atoms, 1 and * only.
  bool is_positive() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Formula to_formula(const PosFormula& s);
Formula to_formula(const Interface& n);
Formula to_formula(const WorldState& d);

// Atoms of a positive formula (throws Error(InvalidArgument) otherwise).
std::vector<Atom> positive_atoms(const Formula& f);

// Reads a formula back into the interface grammar. Throws Error(ShapeError)
// when -o appears left of -o, or * joins two non-positive operands, or the
// left operand of * is not positive.
Interface to_interface(const Formula& f);

// Gamma, the unrestricted context, is not represented: synthesized interfaces
// are ground and quantifier-free, so every sequent here has an empty Gamma.
struct Sequent {
  std::vector<Formula> context;
  Formula goal = Formula::one();
};

}  // namespace btl

#endif  // BTL_FORMULA_HPP
