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

// Acceptance checks: one PASS/FAIL line per criterion. The exit status is
// zero iff the failing criteria are exactly those passed as --known-failure,
// so a documented shortfall stays visible without hiding new regressions.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "btl/eval.hpp"
#include "btl/match.hpp"
#include "btl/parser.hpp"
#include "btl/printer.hpp"
#include "btl/testkit/fixtures.hpp"
#include "btl/testkit/suites.hpp"
#include "btl/typesys.hpp"

namespace {

using namespace btl;
namespace fx = btl::testkit::fixtures;

struct Result {
  bool ok;
  std::string detail;
};

std::set<int> failed;

void criterion(int id, const char* what, double limit_s, const std::function<Result()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Result r{false, {}};
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) {
    r.ok = false;
    r.detail += " (over the " + std::to_string(static_cast<int>(limit_s)) + " s limit)";
  }
  if (!r.ok) failed.insert(id);
  std::printf("%s %2d  %s: %s [%.2f s]\n", r.ok ? "PASS" : "FAIL", id, what, r.detail.c_str(), secs);
  std::fflush(stdout);
}

Result investigation_with_noise() {
  Signature sig = parse_spec(fx::kInvestigationSpec);
  EvalOutcome o = eval(sig, parse_tree(fx::kInvestigationTree, sig), parse_state("{has_target, heard_noise}"));
  bool ok = o.success() && *o.final == parse_state("{no_target}");
  return {ok, "outcome " + std::string(to_string(o.status)) + (o.final ? " " + to_string(*o.final) : "")};
}

Result branch_two_fails() {
  Signature sig = parse_spec(fx::kInvestigationSpec);
  EvalOutcome o = eval(sig, parse_tree(fx::kInvestigationBranch2, sig), parse_state("{has_target}"));
  std::vector<const TraceEvent*> ops;
  for (const auto& e : o.trace.events)
    if (e.kind == "op") ops.push_back(&e);
  bool moved = ops.size() == 2 && *ops[0]->op == "move_to_target" && ops[0]->ok &&
               ops[0]->produced.count(make_atom("at_target")) == 1;
  bool stopped = ops.size() == 2 && *ops[1]->op == "investigate_target" && !ops[1]->ok;
  bool ok = o.status == EvalOutcome::Status::Failure && moved && stopped;
  return {ok, std::string("outcome ") + to_string(o.status) + ", move fired " + (moved ? "yes" : "no") +
                  ", investigate failed " + (stopped ? "yes" : "no")};
}

Result door_type() {
  Signature sig = parse_spec(fx::kDoorsSpec);
  std::string printed = to_string(synth(sig, parse_tree(fx::kDoorSequence, sig)));
  Interface want = parse_interface(
      "at_elsewhere -o at_door * (at_door * door_unlocked -o at_door * door_open * "
      "(at_door * door_open -o through_door * door_open * "
      "(door_open * through_door -o through_door * door_unlocked)))");
  return {equal_interface(parse_interface(printed), want), printed};
}

Result investigation_type() {
  Signature sig = parse_spec(fx::kInvestigationSpec);
  Interface n = synth(sig, parse_tree(fx::kInvestigationTree, sig));
  Interface want = parse_interface(
      "(heard_noise -o heard_noise * (no_target -o has_target)) & "
      "(has_target -o (has_target * at_target) * (has_target * at_target * heard_noise -o no_target)) & "
      "(has_cigarette -o 1) & 1");
  bool ok = equal_interface(n, want);
  return {ok, to_string(n)};
}

Result shapes_match() {
  Signature sig = parse_spec(fx::kShapesSpec);
  WorldState d = parse_state("{diamond(a), circle(a), circle(b), diamond(c)}");
  auto ms = match_rule(d, *sig.find("r"), {}, &sig);
  bool ok = ms.size() == 1 && ms[0].theta == Substitution{{"X", Term{"a"}}} &&
            ms[0].next == parse_state("{diamond(c), diamond(d), circle(b), diamond(c)}");
  std::string detail = std::to_string(ms.size()) + " match(es)";
  if (!ms.empty()) detail += ", " + to_string(ms[0].theta) + " -> " + to_string(ms[0].next);
  return {ok, detail};
}

Result bad_rule_demo() {
  testkit::Report r = testkit::run_suite("bad-rule-demo", testkit::GenConfig{});
  bool ok = r.failed == 0 && r.passed == 4;
  return {ok, std::to_string(r.passed) + "/4 claims hold (affine proof of the goal, failing run, " +
                  "strict-mode mismatch with the bad type and none with the synthesized type)"};
}

Result seq_equations() {
  struct Row {
    const char* n1;
    const char* n2;
    SeqCase which;
    const char* expected;
  };
  const Row rows[] = {
      {"1", "a -o b", SeqCase::UnitLeft, "a -o b"},
      {"a", "b", SeqCase::PosPos, "a * b"},
      {"a", "b * (c -o d)", SeqCase::PosTensor, "(a * b) * (c -o d)"},
      {"a", "(b -o c) & (d -o e)", SeqCase::PosWith, "(a * (b -o c)) & (a * (d -o e))"},
      {"a", "b -o c", SeqCase::PosLolli, "a * (b -o c)"},
      {"a * (b -o c)", "d", SeqCase::TensorLeft, "a * (b -o c * d)"},
      {"a -o b", "c -o d", SeqCase::LolliLeft, "a -o b * (c -o d)"},
      {"(a -o b) & (c -o d)", "e", SeqCase::WithLeft, "(a -o b * e) & (c -o d * e)"},
      {"a -o b", "top", SeqCase::TopRight, "top"},
      {"top", "a", SeqCase::TopLeft, "top"},
  };
  std::set<SeqCase> covered;
  int holding = 0;
  for (const auto& row : rows) {
    Interface n1 = parse_interface(row.n1), n2 = parse_interface(row.n2);
    SeqCase c = seq_case(n1, n2);
    covered.insert(c);
    if (c == row.which && equal_interface(seq_op(n1, n2), parse_interface(row.expected))) ++holding;
  }
  bool ok = holding == 10 && covered.size() == 10;
  return {ok, std::to_string(holding) + "/10 equations hold, " + std::to_string(covered.size()) +
                  "/10 seq_op branches taken"};
}

Result congruence() {
  testkit::GenConfig cfg;
  cfg.cases = 1200;
  cfg.max_depth = 4;
  testkit::Report r = testkit::run_suite("congruence", cfg);
  std::size_t conclusive = r.count("normalize.pass") + r.count("normalize.fail");
  std::size_t changed = r.count("normalize.fail");
  std::size_t bugs = r.bug_candidates();
  bool ok = conclusive >= 1000 && changed == 0 && bugs == 0;
  return {ok, std::to_string(conclusive) + " conclusive pairs, outcome changed by normalize in " +
                  std::to_string(changed) + " (each from distributing over a leading selector, classified " +
                  "paper-conjecture-violation), " + std::to_string(bugs) + " implementation-bug findings"};
}

Result prover_oracle() {
  testkit::GenConfig cfg;
  cfg.cases = 500;
  testkit::Report r = testkit::run_suite("prover-oracle", cfg);
  bool ok = r.count("agreement.pass") >= 500 && r.failed == 0 && r.inconclusive == 0;
  return {ok, std::to_string(r.count("agreement.pass")) + " sequents agree in both modes, " +
                  std::to_string(r.failed) + " disagreements"};
}

Result theorem_complete() {
  testkit::GenConfig cfg;
  cfg.cases = 500;
  testkit::Report r = testkit::run_suite("theorem-complete", cfg);
  std::size_t proved = r.count("theorem.pass");
  bool ok = proved >= 500 && r.failed == 0;
  return {ok, std::to_string(proved) + " successful runs proved, " + std::to_string(r.failed) + " not proved"};
}

Result theorem_sound() {
  testkit::GenConfig cfg;
  cfg.cases = 200;
  testkit::Report r = testkit::run_suite("theorem-sound", cfg);
  bool probe = false;
  for (const auto& a : r.analysis)
    if (a.find("probe classification: paper-conjecture-violation") != std::string::npos) probe = true;
  std::size_t det = r.count("deterministic.fail");
  bool shrunk = det == 0 || !r.findings.empty();
  for (const auto& f : r.findings) shrunk = shrunk && testkit::replay_finding(f);
  bool ok = probe && shrunk && r.ok();
  return {ok, std::to_string(r.count("angelic.fail")) + " angelic and " + std::to_string(det) +
                  " deterministic violations, " + std::to_string(r.findings.size()) +
                  " shrunk findings, probe " + (probe ? "classified" : "missing")};
}

Result roundtrip() {
  testkit::GenConfig cfg;
  cfg.cases = 200;
  testkit::Report r = testkit::run_suite("roundtrip", cfg);
  bool ok = r.checked >= 1000 && r.failed == 0;
  return {ok, std::to_string(r.checked) + " artifacts, " + std::to_string(r.failed) + " failures"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> known;
  app.add_option("--known-failure", known, "Criterion expected to fail (repeatable)");
  CLI11_PARSE(app, argc, argv);

  criterion(1, "investigation run with noise ends in {no_target}", 1, investigation_with_noise);
  criterion(2, "move-then-investigate branch fails after moving", 0, branch_two_fails);
  criterion(3, "door sequence type", 0, door_type);
  criterion(4, "investigation tree type", 0, investigation_type);
  criterion(5, "shapes rule matches once", 0, shapes_match);
  criterion(6, "bad sequencing rule demo", 0, bad_rule_demo);
  criterion(7, "seq equations and top cases", 0, seq_equations);
  criterion(8, "congruence suite", 30, congruence);
  criterion(9, "prover and oracle agree", 60, prover_oracle);
  criterion(10, "completeness of typing for successful runs", 60, theorem_complete);
  criterion(11, "soundness suite report", 0, theorem_sound);
  criterion(12, "print and parse round trip", 0, roundtrip);
  std::set<int> expected(known.begin(), known.end());
  std::printf("%zu of 12 criteria failed", failed.size());
  if (!expected.empty()) {
    std::printf(" (known:");
    for (int id : expected) std::printf(" %d", id);
    std::printf(")");
  }
  std::printf("\n");
  return failed == expected ? 0 : 1;
}
