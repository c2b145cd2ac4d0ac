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

#ifndef BTL_PARSER_HPP
#define BTL_PARSER_HPP

#include <string_view>

#include "btl/formula.hpp"
#include "btl/syntax.hpp"

namespace btl {

// Concrete syntax. Every function throws SourceError with a 1-based position.
//
//   spec     ::= { sort | pred | decl }
//   sort     ::= "sort" name "=" "{" const { "," const } "}" "."
//   pred     ::= "pred" name [ "(" sortname { "," sortname } ")" ] "."
//   decl     ::= name ":" [ Var[":" sortname] { Var[":" sortname] } "." ] pos "-o" pos "."
//   pos      ::= pos "*" pos | "1" | atom | "(" pos ")"
//   atom     ::= name [ "(" [ term { "," term } ] ")" ]
//   tree     ::= name [ "(" args ")" ] | "?" pos "." tree | "Skip" | "Abort"
//              | "Seq" "{" [ tree { ";" tree } ] "}" | "Sel" "{" [ tree { "+" tree } ] "}"
//              | "Rep" "{" tree "}" | "(" tree ")"
//   formula  ::= formula "-o" formula | formula "&" formula | formula "*" formula
//              | "1" | "top" | atom | "(" formula ")"       (-o loosest, then &, then *)
//   sequent  ::= [ formula { "," formula } ] "|-" formula
//   state    ::= "{" [ atom { "," atom } ] "}"
//
// Variables start with an uppercase letter. `//` starts a line comment.

Signature parse_spec(std::string_view text);
Tree parse_tree(std::string_view text, const Signature& sig);
WorldState parse_state(std::string_view text);
PosFormula parse_formula(std::string_view text);
// Rejects formulas outside N ::= S | S -o N | S * N | N & N | top with ErrorKind::ShapeError.
Interface parse_interface(std::string_view text);
Formula parse_logic_formula(std::string_view text);
Sequent parse_sequent(std::string_view text);

}  // namespace btl

#endif  // BTL_PARSER_HPP
