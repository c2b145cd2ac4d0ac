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

#ifndef BTL_TESTKIT_SUITES_HPP
#define BTL_TESTKIT_SUITES_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "btl/testkit/generators.hpp"

namespace btl::testkit {

enum class Classification { PaperConjectureViolation, ImplementationBugCandidate };

const char* to_string(Classification c);

// A minimized counterexample. Inputs are stored in concrete syntax so that a
// finding can be replayed from its JSON form. Unused inputs are empty.
struct Finding {
  std::string suite;
  Classification classification = Classification::ImplementationBugCandidate;
  std::string signature;
  std::string tree;
  std::string state;
  std::string goal;
  std::map<std::string, std::string> extra;
  std::string observed;
  std::string expected;
  std::string note;
};

std::string to_json(const Finding& f);
// Throws Error(InvalidArgument) on malformed input.
Finding finding_from_json(const std::string& text);

struct Report {
  std::string suite;
  GenConfig cfg;
  std::size_t cases = 0;         // generated inputs
  std::size_t checked = 0;       // property instances that applied
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t inconclusive = 0;  // budget or size cap hit
  std::map<std::string, std::size_t> counters;
  std::vector<Finding> findings;  // shrunk; at most a few per kind
  std::vector<std::string> analysis;

  std::size_t count(const std::string& key) const;
  std::size_t bug_candidates() const { return count("implementation-bug-candidate"); }
  bool ok() const { return bug_candidates() == 0; }
};

std::string to_json(const Report& r);
std::string to_text(const Report& r);

const std::vector<std::string>& suite_names();

// Throws Error(InvalidArgument) for an unknown suite name.
Report run_suite(const std::string& name, const GenConfig& cfg);

// Re-runs the property a finding came from. True if it still fails.
bool replay_finding(const Finding& f);

}  // namespace btl::testkit

#endif  // BTL_TESTKIT_SUITES_HPP
