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

#include "btl/eval.hpp"
#include "btl/normalize.hpp"
#include "btl/testkit/generators.hpp"
#include "support.hpp"

namespace btl::test {
namespace {

class Normalize : public ::testing::Test {
 protected:
  Tree t(const std::string& text) const { return parse_tree(text, sig_); }
  Signature sig_ = letters();
};

TEST_F(Normalize, UnitsDisappear) {
  EXPECT_EQ(normalize(t("Seq{Skip; a; Skip}")), t("Sel{Seq{a}}"));
  EXPECT_EQ(normalize(t("Sel{Abort + a}")), t("Sel{Seq{a}}"));
  EXPECT_EQ(normalize(t("a")), normalize(t("Seq{Skip; a; Skip}")));
}

TEST_F(Normalize, DistributesOnTheRight) {
  EXPECT_EQ(normalize(t("Seq{a; Sel{b + c}}")), t("Sel{Seq{a; b} + Seq{a; c}}"));
}

TEST_F(Normalize, DistributesOnTheLeft) {
  EXPECT_EQ(normalize(t("Seq{Sel{a + b}; c}")), t("Sel{Seq{a; c} + Seq{b; c}}"));
}

TEST_F(Normalize, SoundModeKeepsLeadingSelector) {
  Tree nf = normalize(t("Seq{Sel{a + b}; c}"), kDefaultNormalizeCap, NormalizeOptions{false});
  EXPECT_EQ(nf, t("Sel{Seq{Sel{Seq{a} + Seq{b}}; c}}"));
}

TEST_F(Normalize, AbortInsideSequenceStays) {
  EXPECT_EQ(normalize(t("Seq{a; Abort}")), t("Sel{Seq{a; Abort}}"));
  EXPECT_EQ(normalize(t("Abort")), t("Abort"));
}

TEST_F(Normalize, BodiesAreBoundaries) {
  EXPECT_EQ(normalize(t("?pa. Seq{Skip; b}")), t("Sel{Seq{?pa. Sel{Seq{b}}}}"));
  EXPECT_EQ(normalize(t("Rep{Sel{Abort + a}}")), t("Sel{Seq{Rep{Sel{Seq{a}}}}}"));
}

TEST_F(Normalize, Congruence) {
  EXPECT_TRUE(congruent(t("Seq{a; Seq{b; c}}"), t("Seq{Seq{a; b}; c}")));
  EXPECT_TRUE(congruent(t("Sel{a + Sel{b + c}}"), t("Sel{Sel{a + b} + c}")));
  EXPECT_FALSE(congruent(t("Sel{a + b}"), t("Sel{b + a}")));
  EXPECT_FALSE(congruent(t("Seq{a; Abort}"), t("Abort")));
}

TEST_F(Normalize, SizeCap) {
  std::string text = "Seq{";
  for (int i = 0; i < 12; ++i) text += std::string(i ? "; " : "") + "Sel{a + b + c}";
  text += "}";
  EXPECT_EQ(kind_of([&] { normalize(t(text), 1000); }), ErrorKind::SizeCapExceeded);
}

TEST_F(Normalize, IdempotentOnGeneratedTrees) {
  testkit::Generator g(testkit::GenConfig{});
  for (int i = 0; i < 300; ++i) {
    Signature sig = g.signature();
    Tree a = g.tree(sig);
    try {
      Tree once = normalize(a);
      EXPECT_EQ(normalize(once), once) << to_string(a);
      Tree sound = normalize(a, kDefaultNormalizeCap, NormalizeOptions{false});
      EXPECT_EQ(normalize(sound, kDefaultNormalizeCap, NormalizeOptions{false}), sound) << to_string(a);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::SizeCapExceeded);
    }
  }
}

// Without distribution over a leading selector, the normal form evaluates
// exactly like the original.
TEST_F(Normalize, SoundModePreservesEvaluation) {
  testkit::GenConfig cfg;
  cfg.seed = 3;
  testkit::Generator g(cfg);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    Signature sig = g.signature();
    Tree a = g.tree(sig);
    WorldState d = g.state(sig);
    EvalOutcome o1 = eval(sig, a, d, 5000);
    EvalOutcome o2 = eval(sig, normalize(a, kDefaultNormalizeCap, NormalizeOptions{false}), d, 20000);
    if (o1.status == EvalOutcome::Status::BudgetExhausted || o2.status == EvalOutcome::Status::BudgetExhausted)
      continue;
    ++checked;
    EXPECT_EQ(o1.status, o2.status) << to_string(a);
    EXPECT_EQ(o1.final, o2.final) << to_string(a);
  }
  EXPECT_GT(checked, 400);
}

// Distributing a sequence over a leading selector changes evaluation: the
// first branch succeeds, the tail fails, and the original does not retry the
// second branch.
TEST(NormalizeSemantics, LeftDistributionCounterexample) {
  Signature sig = parse_spec("a : x -o y.\nb : x -o z.\nc : z -o w.\n");
  Tree orig = parse_tree("Seq{Sel{a + b}; c}", sig);
  WorldState d = st("{x}");
  EvalOutcome o1 = eval(sig, orig, d);
  EvalOutcome o2 = eval(sig, normalize(orig), d);
  EXPECT_EQ(o1.status, EvalOutcome::Status::Failure);
  ASSERT_EQ(o2.status, EvalOutcome::Status::Success);
  EXPECT_EQ(*o2.final, st("{w}"));
}

}  // namespace
}  // namespace btl::test
