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

#include <map>
#include <set>

#include "btl/error.hpp"

namespace btl {

bool affine_entails(const WorldState& d, const PosFormula& s) {
  return d.includes(state_of_pos(s));
}

namespace {

// Extends theta so that pattern matches the ground atom, or returns false.
bool unify(const Atom& pattern, const Atom& ground, Substitution& theta) {
  if (pattern.predicate != ground.predicate || pattern.args.size() != ground.args.size())
    return false;
  for (std::size_t i = 0; i < pattern.args.size(); ++i) {
    const Term& p = pattern.args[i];
    const Term& g = ground.args[i];
    if (!p.is_variable()) {
      if (p != g) return false;
      continue;
    }
    auto [it, fresh] = theta.emplace(p.name, g);
    if (!fresh && it->second != g) return false;
  }
  return true;
}

struct Search {
  const std::vector<Atom>& pattern;
  std::map<Atom, std::size_t> available;
  std::set<Substitution> found;

  void run(std::size_t i, const Substitution& theta) {
    if (i == pattern.size()) {
      found.insert(theta);
      return;
    }
    for (auto& [atom, n] : available) {
      if (n == 0) continue;
      Substitution next = theta;
      if (!unify(pattern[i], atom, next)) continue;
      --n;
      run(i + 1, next);
      ++n;
    }
  }
};

}  // namespace

std::vector<Match> match_rule(const WorldState& d, const OpDecl& decl,
                              const Substitution& partial, const Signature* sig) {
  std::vector<Atom> pattern;
  for (const auto& a : decl.antecedent.atoms()) pattern.push_back(substitute(partial, a));
  Search search{pattern, d.entries(), {}};
  search.run(0, partial);

  std::vector<Match> out;
  for (const auto& theta : search.found) {
    if (sig) {
      bool sorted_ok = true;
      for (const auto& p : decl.params) {
        auto it = theta.find(p.name);
        if (p.sort && it != theta.end() && !sig->sort_contains(*p.sort, it->second.name))
          sorted_ok = false;
      }
      if (!sorted_ok) continue;
    }
    PosFormula consequent = substitute(theta, decl.consequent);
    if (!consequent.is_ground()) {
      for (const auto& v : variables_of(consequent))
        throw Error(ErrorKind::UnboundVariable,
                    "variable " + v + " of '" + decl.name + "' is not bound by the match");
    }
    WorldState next = d;
    next.remove(state_of_pos(substitute(theta, decl.antecedent)));
    next.add(state_of_pos(consequent));
    out.push_back(Match{theta, std::move(next)});
  }
  return out;
}

}  // namespace btl
