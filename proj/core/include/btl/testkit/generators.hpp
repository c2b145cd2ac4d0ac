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

#ifndef BTL_TESTKIT_GENERATORS_HPP
#define BTL_TESTKIT_GENERATORS_HPP

#include <cstdint>
#include <random>

#include "btl/formula.hpp"
#include "btl/syntax.hpp"

namespace btl::testkit {

struct GenConfig {
  std::uint64_t seed = 42;
  std::size_t max_predicates = 5;
  std::size_t max_ops = 5;
  std::size_t max_depth = 4;
  std::size_t max_state = 5;
  std::size_t max_interface_depth = 3;
  std::size_t cases = 200;

  // Throws Error(InvalidArgument) if a bound is zero.
  void validate() const;
};

// Every value is a function of the seed and the sequence of calls.
class Generator {
 public:
  explicit Generator(const GenConfig& cfg, std::uint64_t stream = 0);

  Signature signature();
  WorldState state(const Signature& sig);
  // Ground trees over the operators of sig, depth at most cfg.max_depth.
  Tree tree(const Signature& sig, bool allow_rep = true);
  Tree tree(const Signature& sig, std::size_t depth, bool allow_rep);
  // Interfaces over a small pool of nullary atoms.
  Interface interface();
  Interface interface(std::size_t depth);
  PosFormula positive(std::size_t max_atoms);
  // Formulas of the full sequent fragment over the same pool.
  Formula formula(std::size_t depth);
  Sequent sequent();

  std::mt19937_64& rng() { return rng_; }
  std::size_t below(std::size_t n);  // uniform in [0, n)
  bool chance(double p);

 private:
  Atom ground_atom(const Signature& sig, const std::string& pred);
  std::vector<Term> ground_args(const Signature& sig, const OpDecl& decl);

  GenConfig cfg_;
  std::mt19937_64 rng_;
};

// Atom pool used by interface(), positive() and formula().
const std::vector<Atom>& atom_pool();

Signature gen_signature(const GenConfig& cfg);
WorldState gen_state(const GenConfig& cfg, const Signature& sig);
Tree gen_tree(const GenConfig& cfg, const Signature& sig);
Interface gen_interface(const GenConfig& cfg);

}  // namespace btl::testkit

#endif  // BTL_TESTKIT_GENERATORS_HPP
