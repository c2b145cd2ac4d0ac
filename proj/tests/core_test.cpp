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
#include "btl/match.hpp"
#include "btl/printer.hpp"
#include "btl/syntax.hpp"
#include "support.hpp"

namespace btl::test {
namespace {

TEST(WorldState, CountsMultiplicity) {
  WorldState d{make_atom("p"), make_atom("p"), make_atom("q")};
  EXPECT_EQ(d.size(), 3u);
  EXPECT_EQ(d.count(make_atom("p")), 2u);
  EXPECT_TRUE(d.remove(make_atom("p")));
  EXPECT_EQ(d.count(make_atom("p")), 1u);
  EXPECT_FALSE(d.remove(make_atom("q"), 2));
  EXPECT_EQ(d.count(make_atom("q")), 1u);
}

TEST(WorldState, EqualityIsMultisetEquality) {
  EXPECT_EQ(st("{a, b, a}"), st("{b, a, a}"));
  EXPECT_NE(st("{a, b}"), st("{a, b, b}"));
}

TEST(WorldState, RejectsVariables) {
  WorldState d;
  EXPECT_EQ(kind_of([&] { d.add(Atom{"at", {Term{"X"}}}); }), ErrorKind::NonGroundAtom);
}

TEST(WorldState, MinusSaturates) {
  EXPECT_EQ(st("{a, a, b}").minus(st("{a, b, b, c}")), st("{a}"));
}

TEST(Term, UppercaseIsVariable) {
  EXPECT_TRUE(Term{"X"}.is_variable());
  EXPECT_TRUE(Term{"Shape"}.is_variable());
  EXPECT_FALSE(Term{"a"}.is_variable());
  EXPECT_FALSE((Atom{"p", {Term{"Y"}}}).is_ground());
}

TEST(PosFormula, CanonicalDeletesUnitsAndSorts) {
  EXPECT_TRUE(equivalent(pf("(1 * a) * b"), pf("a * b")));
  EXPECT_EQ(to_string(canonical_pos(pf("(1 * a) * b"))), "a * b");
  EXPECT_EQ(to_string(canonical_pos(pf("b * a"))), "a * b");
  EXPECT_EQ(to_string(canonical_pos(pf("at_door * (door_unlocked * 1)"))), "at_door * door_unlocked");
  EXPECT_EQ(to_string(canonical_pos(pf("1 * 1"))), "1");
}

TEST(PosFormula, StateConversions) {
  EXPECT_EQ(to_string(pos_of_state(st("{p, p, q}"))), "p * p * q");
  EXPECT_EQ(to_string(pos_of_state(st("{}"))), "1");
  WorldState d = st("{has_target, heard_noise}");
  EXPECT_EQ(state_of_pos(pos_of_state(d)), d);
}

TEST(PosFormula, StateOfNonGroundThrows) {
  PosFormula s = PosFormula::atom(Atom{"at", {Term{"X"}}});
  EXPECT_EQ(kind_of([&] { state_of_pos(s); }), ErrorKind::NonGroundAtom);
}

TEST(Interface, EqualityModuloTensorOrder) {
  EXPECT_TRUE(equal_interface(itf("a * b -o c"), itf("b * a -o c")));
  EXPECT_TRUE(equal_interface(itf("a -o b * (c -o d)"), itf("a -o b * (c -o d)")));
}

TEST(Interface, WithIsNotCommutative) {
  EXPECT_FALSE(equal_interface(itf("(a -o b) & c"), itf("c & (a -o b)")));
}

TEST(Interface, SmartConstructorsCanonicalize) {
  Interface n = itf("c -o d");
  EXPECT_TRUE(Interface::lolli(PosFormula::one(), n) == n);
  EXPECT_TRUE(Interface::tensor(PosFormula::one(), n) == n);
  EXPECT_TRUE(Interface::tensor(pf("a"), Interface::pos(pf("b"))) == Interface::pos(pf("a * b")));
  Interface nested = Interface::tensor(pf("a"), Interface::tensor(pf("b"), n));
  EXPECT_TRUE(nested == Interface::tensor(pf("a * b"), n));
}

TEST(Tree, SkipAndAbortAreEmptyComposites) {
  EXPECT_TRUE(Tree::skip().is_skip());
  EXPECT_TRUE(Tree::abort().is_abort());
  EXPECT_EQ(Tree::seq({}).kind(), Tree::Kind::Seq);
  EXPECT_EQ(Tree::sel({}).kind(), Tree::Kind::Sel);
}

TEST(Tree, ConditionsCompareCanonically) {
  Signature sig = letters();
  EXPECT_EQ(parse_tree("?pa * pb. a()", sig), parse_tree("?pb * pa. a()", sig));
}

TEST(Signature, RejectsDuplicates) {
  Signature sig;
  OpDecl d;
  d.name = "x";
  sig.add_op(d);
  EXPECT_EQ(kind_of([&] { sig.add_op(d); }), ErrorKind::DuplicateName);
  EXPECT_EQ(kind_of([&] { sig.add_sort("s", {}); }), ErrorKind::InvalidArgument);
}

TEST(Substitution, GroundsBoundFormula) {
  Signature sig = parse_spec(testkit::fixtures::kShapesSpec);
  const OpDecl& r = *sig.find("r");
  Substitution theta{{"X", Term{"a"}}};
  EXPECT_TRUE(substitute(theta, r.antecedent).is_ground());
  EXPECT_EQ(to_string(substitute(theta, r.antecedent)), "circle(a) * diamond(a)");
}

TEST(Formula, InterfaceEmbeddingRoundTrips) {
  for (const char* text : {"a", "1", "top", "a -o b * (c -o d)", "(a -o b) & (c * d)"}) {
    Interface n = itf(text);
    EXPECT_TRUE(to_interface(to_formula(n)) == n) << text;
  }
}

}  // namespace
}  // namespace btl::test
