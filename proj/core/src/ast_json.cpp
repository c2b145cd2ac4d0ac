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

#include "btl/ast_json.hpp"

#include <json.hpp>

#include "btl/trace.hpp"

namespace btl {
namespace {

using json = nlohmann::ordered_json;

json atoms(const std::vector<Atom>& as) {
  json out = json::array();
  for (const auto& a : as) out.push_back(compact(a));
  return out;
}

json node(const Interface& n) {
  json j;
  switch (n.kind()) {
    case Interface::Kind::Pos:
      j["kind"] = "pos";
      j["atoms"] = atoms(n.formula().atoms());
      break;
    case Interface::Kind::Lolli:
      j["kind"] = "lolli";
      j["antecedent"] = atoms(n.formula().atoms());
      j["body"] = node(n.body());
      break;
    case Interface::Kind::Tensor:
      j["kind"] = "tensor";
      j["released"] = atoms(n.formula().atoms());
      j["body"] = node(n.body());
      break;
    case Interface::Kind::With:
      j["kind"] = "with";
      j["lhs"] = node(n.lhs());
      j["rhs"] = node(n.rhs());
      break;
    case Interface::Kind::Top:
      j["kind"] = "top";
      break;
  }
  return j;
}

}  // namespace

std::string interface_to_json(const Interface& n) { return node(n).dump(2); }

std::string outcomes_to_json(const AllOutcomes& all) {
  json j;
  j["successes"] = json::array();
  for (const auto& s : all.successes) j["successes"].push_back(atoms(s.atoms()));
  j["can_fail"] = all.can_fail;
  j["exhausted"] = all.exhausted;
  j["steps"] = all.steps;
  return j.dump(2);
}

}  // namespace btl
