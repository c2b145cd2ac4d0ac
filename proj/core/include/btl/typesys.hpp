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

#ifndef BTL_TYPESYS_HPP
#define BTL_TYPESYS_HPP

#include "btl/syntax.hpp"

namespace btl {

// Which defining equation of seq applies to a pair of interfaces. The top
// cases are checked first; the rest are tried in the order listed.
enum class SeqCase {
  TopRight,     // seq(N, top) = top
  TopLeft,      // seq(top, N) = top
  UnitLeft,     // seq(1, N) = N
  PosPos,       // seq(S1, S2) = S1 * S2
  PosTensor,    // seq(S, S' * N) = (S * S') * N
  PosWith,      // seq(S, N1 & N2) = seq(S, N1) & seq(S, N2)
  PosLolli,     // seq(S1, S2 -o N) = S1 * (S2 -o N)
  TensorLeft,   // seq(S * N1, N2) = S * seq(N1, N2)
  LolliLeft,    // seq(S1 -o N1, N2) = S1 -o seq(N1, N2)
  WithLeft,     // seq(N1 & N2, N) = seq(N1, N) & seq(N2, N)
};

const char* to_string(SeqCase c);
SeqCase seq_case(const Interface& n1, const Interface& n2);

// Sequential composition of interfaces. Total.
Interface seq_op(const Interface& n1, const Interface& n2);

// Type of a repeater-free tree. Throws TypeError (UnknownOp, ArityMismatch,
// RepUnsupported) carrying the path of the offending node.
Interface synth(const Signature& sig, const Tree& tree);

}  // namespace btl

#endif  // BTL_TYPESYS_HPP
