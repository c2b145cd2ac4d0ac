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

#include "btl/parser.hpp"
#include "btl/printer.hpp"
#include "btl/testkit/generators.hpp"
#include "support.hpp"

namespace btl::test {
namespace {

TEST(ParseSpec, SmokeDeclaration) {
  Signature sig = parse_spec("smoke : has_cigarette -o 1.");
  ASSERT_EQ(sig.ops().size(), 1u);
  const OpDecl& d = sig.ops()[0];
  EXPECT_EQ(d.name, "smoke");
  EXPECT_EQ(d.antecedent, PosFormula::atom(make_atom("has_cigarette")));
  EXPECT_EQ(d.consequent.kind(), PosFormula::Kind::One);
}

TEST(ParseSpec, PaceDeclaration) {
  Signature sig = parse_spec("pace : 1 -o 1.");
  ASSERT_EQ(sig.ops().size(), 1u);
  EXPECT_TRUE(sig.ops()[0].antecedent.is_unit());
  EXPECT_TRUE(sig.ops()[0].consequent.is_unit());
}

TEST(ParseSpec, UnboundConsequentVariable) {
  try {
    parse_spec("bad : 1 -o at(X).");
    FAIL() << "expected an error";
  } catch (const SourceError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnboundVariable);
    EXPECT_NE(std::string(e.what()).find("X"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("bad"), std::string::npos);
  }
}

TEST(ParseSpec, FullExampleFiles) {
  EXPECT_EQ(investigation().ops().size(), 5u);
  EXPECT_EQ(doors().ops().size(), 5u);
  Signature shapes = parse_spec(testkit::fixtures::kShapesSpec);
  EXPECT_EQ(shapes.sorts().at("shape_id").size(), 4u);
  EXPECT_EQ(shapes.find("r")->params.size(), 1u);
}

TEST(ParseSpec, Errors) {
  EXPECT_EQ(kind_of([] { parse_spec("a : 1 -o p.\na : 1 -o q."); }), ErrorKind::DuplicateName);
  EXPECT_EQ(kind_of([] { parse_spec("a : p -o p(k)."); }), ErrorKind::ArityMismatch);
  EXPECT_EQ(kind_of([] { parse_spec("a : p -o q"); }), ErrorKind::Syntax);
  EXPECT_EQ(kind_of([] { parse_spec("pred p(s).\n"); }), ErrorKind::UnknownSort);
  EXPECT_EQ(kind_of([] { parse_spec("pred p.\na : q -o p."); }), ErrorKind::UnknownPredicate);
  EXPECT_EQ(kind_of([] { parse_spec("sort s = {k}.\npred p(s).\na : p(z) -o 1."); }), ErrorKind::SortMismatch);
}

TEST(ParseSpec, EmptyText) { EXPECT_TRUE(parse_spec("// nothing\n").ops().empty()); }

TEST(SourceErrors, CarryPositionsInsideInput) {
  const std::string text = "set : a -o b.\nbroken : a -o .\n";
  try {
    parse_spec(text);
    FAIL() << "expected an error";
  } catch (const SourceError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_GE(e.column(), 1);
    EXPECT_FALSE(e.message().empty());
  }
}

TEST(ParseTree, Forms) {
  Signature sig = investigation();
  Tree t = parse_tree("Seq{move_to_target(); investigate_target()}", sig);
  ASSERT_EQ(t.kind(), Tree::Kind::Seq);
  ASSERT_EQ(t.children().size(), 2u);
  EXPECT_EQ(t.children()[0], Tree::op("move_to_target"));
  EXPECT_EQ(t.children()[1], Tree::op("investigate_target"));

  EXPECT_EQ(parse_tree("Skip", sig), Tree::seq({}));
  EXPECT_EQ(parse_tree("Abort", sig), Tree::sel({}));

  Tree c = parse_tree("?heard_noise. set_target()", sig);
  ASSERT_EQ(c.kind(), Tree::Kind::Cond);
  EXPECT_EQ(c.condition(), PosFormula::atom(make_atom("heard_noise")));
  EXPECT_EQ(c.body(), Tree::op("set_target"));

  EXPECT_EQ(parse_tree("Rep{idle_pace()}", sig), Tree::rep(Tree::op("idle_pace")));
  EXPECT_EQ(parse_tree("idle_pace", sig), Tree::op("idle_pace"));
}

TEST(ParseTree, Errors) {
  Signature sig = investigation();
  EXPECT_EQ(kind_of([&] { parse_tree("fly()", sig); }), ErrorKind::UnknownOp);
  EXPECT_EQ(kind_of([&] { parse_tree("set_target(k)", sig); }), ErrorKind::ArityMismatch);
  EXPECT_EQ(kind_of([&] { parse_tree("Seq{set_target(); }", sig); }), ErrorKind::Syntax);
  Signature shapes = parse_spec(testkit::fixtures::kShapesSpec);
  EXPECT_EQ(kind_of([&] { parse_tree("r(X)", shapes); }), ErrorKind::NonGroundArg);
  EXPECT_EQ(kind_of([&] { parse_tree("r(zz)", shapes); }), ErrorKind::SortMismatch);
  EXPECT_EQ(kind_of([&] { parse_tree("?at(X). Skip", sig); }), ErrorKind::NonGroundAtom);
}

TEST(ParseState, Multiplicity) {
  WorldState d = parse_state("{no_target, heard_noise, has_cigarette, has_cigarette}");
  EXPECT_EQ(d.count(make_atom("has_cigarette")), 2u);
  EXPECT_EQ(d.size(), 4u);
  EXPECT_TRUE(parse_state("{}").empty());
  EXPECT_EQ(kind_of([] { parse_state("{at(X)}"); }), ErrorKind::NonGroundAtom);
}

TEST(ParseInterface, Precedence) {
  Interface n = parse_interface("a * b -o c");
  ASSERT_EQ(n.kind(), Interface::Kind::Lolli);
  EXPECT_TRUE(equivalent(n.formula(), pf("a * b")));
  EXPECT_TRUE(n.body() == Interface::pos(pf("c")));

  Interface w = parse_interface("a -o b & c");
  ASSERT_EQ(w.kind(), Interface::Kind::Lolli);
  EXPECT_EQ(w.body().kind(), Interface::Kind::With);

  Interface s = parse_interface("has_cigarette -o 1");
  ASSERT_EQ(s.kind(), Interface::Kind::Lolli);
  EXPECT_TRUE(s.body() == Interface::pos(PosFormula::one()));

  EXPECT_EQ(parse_interface("top").kind(), Interface::Kind::Top);
}

TEST(ParseInterface, RejectsLolliOnTheLeft) {
  EXPECT_EQ(kind_of([] { parse_interface("(a -o b) -o c"); }), ErrorKind::ShapeError);
}

TEST(ParseSequent, CommaSeparatedContext) {
  Sequent s = parse_sequent(
      "at_elsewhere, door_unlocked, (at_door*door_unlocked -o door_open)*(at_elsewhere -o at_door) "
      "|- door_unlocked");
  ASSERT_EQ(s.context.size(), 3u);
  EXPECT_EQ(s.context[2].kind(), Formula::Kind::Tensor);
  EXPECT_EQ(s.goal, Formula::atom(make_atom("door_unlocked")));
  EXPECT_TRUE(parse_sequent("|- 1").context.empty());
}

// Print then parse is the identity on generated values.
TEST(RoundTrip, GeneratedArtifacts) {
  testkit::GenConfig cfg;
  cfg.seed = 7;
  testkit::Generator g(cfg);
  for (int i = 0; i < 300; ++i) {
    Signature sig = g.signature();
    std::string text = to_string(sig);
    Signature back = parse_spec(text);
    ASSERT_TRUE(equivalent(back, sig)) << text;
    Tree t = g.tree(sig);
    ASSERT_EQ(parse_tree(to_string(t), sig), t) << to_string(t);
    WorldState d = g.state(sig);
    ASSERT_EQ(parse_state(to_string(d)), d);
    Interface n = g.interface();
    ASSERT_TRUE(parse_interface(to_string(n)) == n) << to_string(n);
    Formula f = g.formula(3);
    ASSERT_EQ(parse_logic_formula(to_string(f)), f) << to_string(f);
  }
}

}  // namespace
}  // namespace btl::test
