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

#include "btl/match.hpp"
#include "btl/prover.hpp"
#include "btl/testkit/generators.hpp"
#include "btl/typesys.hpp"
#include "support.hpp"

namespace btl::test {
namespace {

TEST(AffineEntails, Examples) {
  EXPECT_TRUE(affine_entails(st("{has_target, heard_noise}"), pf("heard_noise")));
  EXPECT_TRUE(affine_entails(st("{}"), PosFormula::one()));
  EXPECT_TRUE(affine_entails(st("{a, b}"), PosFormula::one()));
  EXPECT_FALSE(affine_entails(st("{at_door}"), pf("at_door * at_door")));
  EXPECT_EQ(kind_of([] { affine_entails(WorldState{}, PosFormula::atom(Atom{"p", {Term{"X"}}})); }),
            ErrorKind::NonGroundAtom);
}

TEST(AffineEntails, StateEntailsItself) {
  testkit::Generator g(testkit::GenConfig{});
  for (int i = 0; i < 100; ++i) {
    Signature sig = g.signature();
    WorldState d = g.state(sig);
    EXPECT_TRUE(affine_entails(d, pos_of_state(d)));
  }
}

TEST(MatchRule, ShapesExample) {
  Signature sig = parse_spec(testkit::fixtures::kShapesSpec);
  WorldState d = st("{diamond(a), circle(a), circle(b), diamond(c)}");
  auto ms = match_rule(d, *sig.find("r"), {}, &sig);
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].theta, (Substitution{{"X", Term{"a"}}}));
  EXPECT_EQ(ms[0].next, st("{diamond(c), diamond(d), circle(b), diamond(c)}"));
}

TEST(MatchRule, MoveToTarget) {
  Signature sig = investigation();
  auto ms = match_rule(st("{has_target}"), *sig.find("move_to_target"));
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_TRUE(ms[0].theta.empty());
  EXPECT_EQ(ms[0].next, st("{has_target, at_target}"));
}

TEST(MatchRule, MissingResource) {
  Signature sig = smoking();
  EXPECT_TRUE(match_rule(st("{}"), *sig.find("smoke")).empty());
}

TEST(MatchRule, PartialBindingRestricts) {
  Signature sig = parse_spec("sort s = {a, b}.\npred p(s).\npred q(s).\nt : X:s. p(X) -o q(X).");
  WorldState d = st("{p(a), p(b)}");
  EXPECT_EQ(match_rule(d, *sig.find("t"), {}, &sig).size(), 2u);
  auto ms = match_rule(d, *sig.find("t"), {{"X", Term{"b"}}}, &sig);
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].next, st("{p(a), q(b)}"));
}

// |d'| = |d| - |antecedent| + |consequent| for every match.
TEST(MatchRule, ConservesResources) {
  testkit::Generator g(testkit::GenConfig{});
  int matches = 0;
  for (int i = 0; i < 300; ++i) {
    Signature sig = g.signature();
    WorldState d = g.state(sig);
    for (const auto& decl : sig.ops()) {
      std::vector<std::string> free;
      for (const auto& p : decl.params) free.push_back(p.name);
      try {
        for (const auto& m : match_rule(d, decl, {}, &sig)) {
          ++matches;
          std::size_t in = substitute(m.theta, decl.antecedent).atoms().size();
          std::size_t out = substitute(m.theta, decl.consequent).atoms().size();
          EXPECT_EQ(m.next.size() + in, d.size() + out);
        }
      } catch (const Error& e) {
        // A parameter used only in the consequent and absent from the args.
        EXPECT_EQ(e.kind(), ErrorKind::UnboundVariable);
      }
    }
  }
  EXPECT_GT(matches, 50);
}

Sequent seq(const std::string& text) { return parse_sequent(text); }

const char* const kDoorSequent =
    "at_elsewhere, door_unlocked, (at_door * door_unlocked -o door_open) * (at_elsewhere -o at_door) "
    "|- door_unlocked";

TEST(Prove, Init) {
  ProofResult r = prove(seq("p |- p"), Mode::Strict);
  ASSERT_TRUE(r.proved());
  EXPECT_EQ(r.proof->rule, "init");
}

TEST(Prove, DoorSequentDependsOnWeakening) {
  EXPECT_EQ(prove(seq(kDoorSequent), Mode::Affine).status, ProofResult::Status::Proved);
  EXPECT_EQ(prove(seq(kDoorSequent), Mode::Strict).status, ProofResult::Status::Unproved);
}

TEST(Prove, InvestigationTypeProvesNoTarget) {
  Signature sig = investigation();
  Interface n = synth(sig, parse_tree(testkit::fixtures::kInvestigationTree, sig));
  Sequent s{{fm("has_target"), fm("heard_noise"), to_formula(n)}, fm("no_target")};
  ProofResult r = prove(s, Mode::Strict);
  ASSERT_TRUE(r.proved());
  EXPECT_EQ(check_proof(s, *r.proof, Mode::Strict), "");
}

TEST(Prove, WeakeningIsTheOnlyDifference) {
  EXPECT_FALSE(prove(seq("p |- 1"), Mode::Strict).proved());
  EXPECT_TRUE(prove(seq("p |- 1"), Mode::Affine).proved());
}

TEST(Prove, Connectives) {
  EXPECT_TRUE(prove(seq("a, b |- a * b"), Mode::Strict).proved());
  EXPECT_TRUE(prove(seq("a * b |- b * a"), Mode::Strict).proved());
  EXPECT_TRUE(prove(seq("a, a -o b |- b"), Mode::Strict).proved());
  EXPECT_TRUE(prove(seq("a & b |- b"), Mode::Strict).proved());
  EXPECT_TRUE(prove(seq("c |- (c -o a) -o a"), Mode::Strict).proved());
  EXPECT_TRUE(prove(seq("a |- a & a"), Mode::Strict).proved());
  EXPECT_TRUE(prove(seq("a, b |- top"), Mode::Strict).proved());
  EXPECT_TRUE(prove(seq("1, a |- a"), Mode::Strict).proved());
  EXPECT_FALSE(prove(seq("a |- a * a"), Mode::Strict).proved());
  EXPECT_FALSE(prove(seq("a -o b |- b"), Mode::Strict).proved());
  EXPECT_FALSE(prove(seq("top |- a"), Mode::Strict).proved());
  EXPECT_FALSE(prove(seq("a & b |- a * b"), Mode::Affine).proved());
}

TEST(Prove, BudgetIsReported) {
  ProofResult r = prove(seq("a, b, c, a -o b, b -o c, c -o a |- a * b * c"), Mode::Strict, 3);
  EXPECT_EQ(r.status, ProofResult::Status::BudgetExhausted);
}

TEST(Prove, ProofsReplay) {
  for (const char* text : {"a, b |- a * b", "a, a -o b |- b", "c |- (c -o a) -o a", "a |- a & a",
                           "a & (b -o c), b |- c", "a, b |- top"}) {
    Sequent s = seq(text);
    ProofResult r = prove(s, Mode::Strict);
    ASSERT_TRUE(r.proved()) << text;
    EXPECT_EQ(check_proof(s, *r.proof, Mode::Strict), "") << text << "\n" << to_string(*r.proof);
  }
}

TEST(CheckProof, RejectsForgeries) {
  Sequent s = seq("a, b |- a * b");
  ProofResult r = prove(s, Mode::Strict);
  ASSERT_TRUE(r.proved());
  ProofNode bad = *r.proof;
  bad.rule = "&R";
  EXPECT_NE(check_proof(s, bad, Mode::Strict), "");

  ProofNode w{"W", {fm("p")}, fm("1"), fm("p"), {ProofNode{"1R", {}, fm("1"), std::nullopt, {}}}};
  EXPECT_EQ(check_proof(w, Mode::Affine), "");
  EXPECT_NE(check_proof(w, Mode::Strict), "");
  EXPECT_NE(check_proof(seq("q |- 1"), w, Mode::Affine), "");
}

TEST(Oracle, AgreesOnExamples) {
  for (Mode mode : {Mode::Strict, Mode::Affine}) {
    EXPECT_TRUE(oracle_prove(seq("p |- p"), mode).proved());
    EXPECT_EQ(oracle_prove(seq(kDoorSequent), mode).proved(), prove(seq(kDoorSequent), mode).proved());
  }
  EXPECT_FALSE(oracle_prove(seq("p |- 1"), Mode::Strict).proved());
  EXPECT_TRUE(oracle_prove(seq("p |- 1"), Mode::Affine).proved());
}

TEST(Oracle, RefusesLargeSequents) {
  std::string big;
  for (int i = 0; i < 30; ++i) big += "a, ";
  EXPECT_EQ(kind_of([&] { oracle_prove(seq(big + "a |- a"), Mode::Strict); }), ErrorKind::InvalidArgument);
}

// Prover and oracle agree, proofs replay, and affine proves every strict theorem.
TEST(Prove, AgreesWithOracleOnGeneratedSequents) {
  testkit::GenConfig cfg;
  cfg.seed = 99;
  testkit::Generator g(cfg);
  for (int i = 0; i < 300; ++i) {
    Sequent s = g.sequent();
    bool strict = false;
    for (Mode mode : {Mode::Strict, Mode::Affine}) {
      ProofResult p = prove(s, mode);
      ProofResult o = oracle_prove(s, mode);
      ASSERT_NE(p.status, ProofResult::Status::BudgetExhausted);
      ASSERT_EQ(p.proved(), o.proved()) << to_string(s) << " " << to_string(mode);
      if (p.proved()) {
        EXPECT_EQ(check_proof(s, *p.proof, mode), "");
        EXPECT_EQ(check_proof(s, *o.proof, mode), "");
      }
      if (mode == Mode::Strict) strict = p.proved();
      if (mode == Mode::Affine && strict) {
        EXPECT_TRUE(p.proved());
      }
    }
  }
}

}  // namespace
}  // namespace btl::test
