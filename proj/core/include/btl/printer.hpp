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

#ifndef BTL_PRINTER_HPP
#define BTL_PRINTER_HPP

#include <string>

#include "btl/formula.hpp"
#include "btl/syntax.hpp"

namespace btl {

// Pretty-printers emitting the concrete syntax accepted by the parser, so that
// parse(print(x)) reproduces x up to canonical form.

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const WorldState& d);  // {a, b, b}
std::string to_string(const PosFormula& s);
std::string to_string(const Interface& n);
std::string to_string(const Formula& f);
std::string to_string(const Sequent& s);
std::string to_string(const Tree& t);
std::string to_string(const OpDecl& d);
std::string to_string(const Signature& sig);  // a complete spec file
std::string to_string(const Substitution& theta);

}  // namespace btl

#endif  // BTL_PRINTER_HPP
