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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "btl/ast_json.hpp"
#include "btl/error.hpp"
#include "btl/eval.hpp"
#include "btl/normalize.hpp"
#include "btl/parser.hpp"
#include "btl/printer.hpp"
#include "btl/prover.hpp"
#include "btl/testkit/suites.hpp"
#include "btl/trace.hpp"
#include "btl/typesys.hpp"

namespace {

enum Exit : int { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

bool use_color() {
  const char* env = std::getenv("BTL_COLOR");
  if (env && std::string(env) == "0") return false;
  return isatty(STDOUT_FILENO) != 0;
}

std::string paint(const std::string& text, bool good) {
  if (!use_color()) return text;
  return std::string(good ? "\x1b[32m" : "\x1b[31m") + text + "\x1b[0m";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw btl::Error(btl::ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw btl::Error(btl::ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

// Arguments naming an existing file are read from it; anything else is
// taken as literal text.
std::string text_or_file(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

struct Options {
  std::string spec;
  std::string tree;
  std::string state = "{}";
  std::string with;
  std::string sequent;
  std::string trace_out;
  std::string dot_out;
  std::string suite;
  std::string findings_dir;
  std::string finding;
  std::size_t budget = 0;
  std::size_t cap = btl::kDefaultNormalizeCap;
  std::size_t cases = btl::testkit::GenConfig{}.cases;
  std::size_t depth = btl::testkit::GenConfig{}.max_depth;
  std::uint64_t seed = btl::testkit::GenConfig{}.seed;
  bool all = false;
  bool json = false;
  bool affine = false;
  bool sound = false;
};

btl::Signature load_spec(const Options& o) { return btl::parse_spec(read_file(o.spec)); }

int cmd_check(const Options& o) {
  btl::Signature sig = load_spec(o);
  std::cout << btl::to_string(sig);
  std::cout << "// " << sig.ops().size() << " declaration" << (sig.ops().size() == 1 ? "" : "s") << "\n";
  return kOk;
}

int cmd_eval(const Options& o) {
  btl::Signature sig = load_spec(o);
  btl::Tree tree = btl::parse_tree(text_or_file(o.tree), sig);
  btl::WorldState d = btl::parse_state(text_or_file(o.state));
  std::size_t budget = o.budget ? o.budget : btl::kDefaultEvalBudget;

  if (o.all) {
    btl::AllOutcomes all = btl::eval_all(sig, tree, d, budget);
    if (o.json) {
      std::cout << btl::outcomes_to_json(all) << "\n";
    } else {
      for (const auto& s : all.successes) std::cout << btl::to_string(s) << "\n";
      std::cout << "may fail: " << (all.can_fail ? "yes" : "no") << "\n";
      if (all.exhausted) std::cout << paint("budget exhausted", false) << " after " << all.steps << " steps\n";
    }
    if (all.exhausted) return kBudget;
    return all.successes.empty() ? kNegative : kOk;
  }

  btl::EvalOutcome out = btl::eval(sig, tree, d, budget);
  if (!o.trace_out.empty()) write_file(o.trace_out, btl::trace_to_json(out) + "\n");
  if (!o.dot_out.empty()) write_file(o.dot_out, btl::trace_to_dot(out.trace));
  if (o.json) {
    std::cout << btl::trace_to_json(out) << "\n";
  } else if (out.success()) {
    std::cout << btl::to_string(*out.final) << "\n";
  } else if (out.status == btl::EvalOutcome::Status::Failure) {
    std::cout << paint("failure", false) << "\n";
  } else {
    std::cout << paint("budget exhausted", false) << " after " << out.steps << " steps\n";
  }
  switch (out.status) {
    case btl::EvalOutcome::Status::Success: return kOk;
    case btl::EvalOutcome::Status::Failure: return kNegative;
    case btl::EvalOutcome::Status::BudgetExhausted: return kBudget;
  }
  return kNegative;
}

int cmd_type(const Options& o) {
  btl::Signature sig = load_spec(o);
  btl::Tree tree = btl::parse_tree(text_or_file(o.tree), sig);
  btl::Interface n = btl::synth(sig, tree);
  std::cout << (o.json ? btl::interface_to_json(n) : btl::to_string(n)) << "\n";
  return kOk;
}

int cmd_prove(const Options& o) {
  if (!o.spec.empty()) load_spec(o);
  btl::Sequent s = btl::parse_sequent(text_or_file(o.sequent));
  btl::Mode mode = o.affine ? btl::Mode::Affine : btl::Mode::Strict;
  btl::ProofResult r = btl::prove(s, mode, o.budget ? o.budget : btl::kDefaultProverBudget);
  std::cout << paint(btl::to_string(r.status), r.proved()) << " (" << btl::to_string(mode) << ", "
            << r.steps << " steps)\n";
  if (r.proof) std::cout << btl::to_string(*r.proof);
  switch (r.status) {
    case btl::ProofResult::Status::Proved: return kOk;
    case btl::ProofResult::Status::Unproved: return kNegative;
    case btl::ProofResult::Status::BudgetExhausted: return kBudget;
  }
  return kNegative;
}

int cmd_normalize(const Options& o) {
  btl::Signature sig = load_spec(o);
  btl::Tree tree = btl::parse_tree(text_or_file(o.tree), sig);
  if (!o.with.empty()) {
    btl::Tree other = btl::parse_tree(text_or_file(o.with), sig);
    bool same = btl::congruent(tree, other, o.cap);
    std::cout << paint(same ? "congruent" : "not congruent", same) << "\n";
    return same ? kOk : kNegative;
  }
  btl::NormalizeOptions opts;
  opts.distribute_left = !o.sound;
  std::cout << btl::to_string(btl::normalize(tree, o.cap, opts)) << "\n";
  return kOk;
}

int cmd_quickcheck(const Options& o) {
  btl::testkit::GenConfig cfg;
  cfg.seed = o.seed;
  cfg.cases = o.cases;
  cfg.max_depth = o.depth;
  std::vector<std::string> suites;
  if (o.suite.empty() || o.suite == "all")
    suites = btl::testkit::suite_names();
  else
    suites = {o.suite};

  bool ok = true;
  std::size_t written = 0;
  for (const auto& name : suites) {
    btl::testkit::Report r = btl::testkit::run_suite(name, cfg);
    ok = ok && r.ok();
    std::cout << (o.json ? btl::testkit::to_json(r) + "\n" : btl::testkit::to_text(r));
    if (!o.findings_dir.empty()) {
      std::filesystem::create_directories(o.findings_dir);
      std::size_t i = 0;
      for (const auto& f : r.findings) {
        auto path = std::filesystem::path(o.findings_dir) / (name + "-" + std::to_string(++i) + ".json");
        write_file(path.string(), btl::testkit::to_json(f) + "\n");
        ++written;
      }
    }
  }
  if (!o.findings_dir.empty() && !o.json)
    std::cout << written << " finding file" << (written == 1 ? "" : "s") << " written to " << o.findings_dir << "\n";
  return ok ? kOk : kNegative;
}

int cmd_replay(const Options& o) {
  btl::testkit::Finding f = btl::testkit::finding_from_json(read_file(o.finding));
  bool still = btl::testkit::replay_finding(f);
  std::cout << f.suite << ": " << btl::testkit::to_string(f.classification) << "\n";
  std::cout << (still ? paint("reproduced", false) : paint("no longer fails", true)) << "\n";
  return still ? kNegative : kOk;
}

std::string describe(const btl::Error& e) {
  return std::string("error [") + btl::to_string(e.kind()) + "]: " + e.what();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Behavior tree specifications: evaluation, typing, proof search and property suites"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Parse and validate a spec file, echoing its declarations");
  check->add_option("spec", o.spec, "Spec file")->required();

  auto* ev = app.add_subcommand("eval", "Evaluate a tree on a world state");
  ev->add_option("--spec", o.spec, "Spec file")->required();
  ev->add_option("--tree", o.tree, "Tree text or file")->required();
  ev->add_option("--state", o.state, "State text or file, e.g. {a, b}");
  ev->add_option("--budget", o.budget, "Node visit budget (default 100000)");
  ev->add_option("--trace", o.trace_out, "Write the JSON trace to this file");
  ev->add_option("--dot", o.dot_out, "Write the resource flow graph in DOT to this file");
  ev->add_flag("--all", o.all, "Explore every selector resolution");
  ev->add_flag("--json", o.json, "Print JSON");

  auto* ty = app.add_subcommand("type", "Synthesize the interface type of a tree");
  ty->add_option("--spec", o.spec, "Spec file")->required();
  ty->add_option("--tree", o.tree, "Tree text or file")->required();
  ty->add_flag("--json", o.json, "Print the type as a JSON AST");

  auto* pr = app.add_subcommand("prove", "Search for a proof of a sequent");
  pr->add_option("sequent", o.sequent, "Sequent text or file, e.g. 'a, a -o b |- b'")->required();
  pr->add_option("--spec", o.spec, "Spec file to validate alongside");
  pr->add_flag("--affine", o.affine, "Allow weakening");
  pr->add_option("--budget", o.budget, "Rule attempt budget (default 1000000)");

  auto* nf = app.add_subcommand("normalize", "Normalize a tree, or decide congruence with --with");
  nf->add_option("--spec", o.spec, "Spec file")->required();
  nf->add_option("--tree", o.tree, "Tree text or file")->required();
  nf->add_option("--with", o.with, "Second tree: report whether the two are congruent");
  nf->add_option("--cap", o.cap, "Normal form size cap in nodes (default 10000)");
  nf->add_flag("--sound", o.sound, "Skip distribution over a leading selector");

  auto* qc = app.add_subcommand("quickcheck", "Run property suites");
  qc->add_option("--suite", o.suite, "Suite name or 'all'");
  qc->add_option("--seed", o.seed, "Generator seed (default 42)");
  qc->add_option("--cases", o.cases, "Cases per suite (default 200)");
  qc->add_option("--depth", o.depth, "Maximum tree depth (default 4)");
  qc->add_option("--findings", o.findings_dir, "Write each finding as JSON into this directory");
  qc->add_flag("--json", o.json, "Print JSON reports");

  auto* rp = app.add_subcommand("replay", "Re-run a finding; exit 1 if it still fails");
  rp->add_option("finding", o.finding, "Finding JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return cmd_check(o);
    if (*ev) return cmd_eval(o);
    if (*ty) return cmd_type(o);
    if (*pr) return cmd_prove(o);
    if (*nf) return cmd_normalize(o);
    if (*qc) return cmd_quickcheck(o);
    if (*rp) return cmd_replay(o);
  } catch (const btl::Error& e) {
    std::cerr << "btl: " << describe(e) << "\n";
    if (e.kind() == btl::ErrorKind::SizeCapExceeded) return kBudget;
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "btl: error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
