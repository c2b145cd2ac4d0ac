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

#ifndef BTL_TESTS_SUPPORT_HPP
#define BTL_TESTS_SUPPORT_HPP

#include <functional>
#include <string>

#include <gtest/gtest.h>

#include "btl/error.hpp"
#include "btl/formula.hpp"
#include "btl/parser.hpp"
#include "btl/printer.hpp"
#include "btl/testkit/fixtures.hpp"

namespace btl {

// Readable gtest failure messages.
inline void PrintTo(const Tree& t, std::ostream* os) { *os << to_string(t); }
inline void PrintTo(const Interface& n, std::ostream* os) { *os << to_string(n); }
inline void PrintTo(const WorldState& d, std::ostream* os) { *os << to_string(d); }
inline void PrintTo(const Formula& f, std::ostream* os) { *os << to_string(f); }

}  // namespace btl

namespace btl::test {

inline Signature investigation() { return parse_spec(testkit::fixtures::kInvestigationSpec); }
inline Signature doors() { return parse_spec(testkit::fixtures::kDoorsSpec); }
inline Signature smoking() { return parse_spec(testkit::fixtures::kSmokingSpec); }

// Signature with nullary ops a..e that each consume and produce nothing
// distinctive; used where only tree structure matters.
inline Signature letters() {
  return parse_spec(
      "a : 1 -o pa.\n"
      "b : 1 -o pb.\n"
      "c : 1 -o pc.\n"
      "d : 1 -o pd.\n"
      "e : 1 -o pe.\n");
}

inline WorldState st(const std::string& text) { return parse_state(text); }
inline PosFormula pf(const std::string& text) { return parse_formula(text); }
inline Interface itf(const std::string& text) { return parse_interface(text); }
inline Formula fm(const std::string& text) { return parse_logic_formula(text); }

inline ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::InvalidArgument;
}

}  // namespace btl::test

#endif  // BTL_TESTS_SUPPORT_HPP
