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

#include "btl/testkit/shrink.hpp"

#include <functional>
#include <set>

namespace btl::testkit {

namespace {

Tree rebuild(const Tree& t, std::vector<Tree> kids) {
  switch (t.kind()) {
    case Tree::Kind::Seq: return Tree::seq(std::move(kids));
    case Tree::Kind::Sel: return Tree::sel(std::move(kids));
    case Tree::Kind::Cond: return Tree::cond(t.condition(), std::move(kids.front()));
    case Tree::Kind::Rep: return Tree::rep(std::move(kids.front()));
    case Tree::Kind::Op: break;
  }
  return t;
}

void collect_ops(const Tree& t, std::set<std::string>& out) {
  if (t.kind() == Tree::Kind::Op) out.insert(t.name());
  for (const auto& c : t.children()) collect_ops(c, out);
}

// Strictly decreases along every accepted step, so descent terminates.
std::pair<std::size_t, std::size_t> weight(const Tree& t) {
  std::size_t n = 0;
  std::function<void(const Tree&)> walk = [&](const Tree& x) {
    if (x.kind() == Tree::Kind::Op) ++n;
    for (const auto& c : x.children()) walk(c);
  };
  walk(t);
  return {t.node_count(), n};
}

}  // namespace

std::vector<Tree> shrink_candidates(const Tree& t) {
  std::vector<Tree> out;
  if (t.kind() == Tree::Kind::Op) {
    out.push_back(Tree::skip());
    out.push_back(Tree::abort());
    return out;
  }
  const auto& kids = t.children();
  for (const auto& c : kids) out.push_back(c);
  if (t.kind() == Tree::Kind::Seq || t.kind() == Tree::Kind::Sel) {
    for (std::size_t i = 0; i < kids.size(); ++i) {
      std::vector<Tree> fewer;
      for (std::size_t j = 0; j < kids.size(); ++j)
        if (j != i) fewer.push_back(kids[j]);
      out.push_back(rebuild(t, std::move(fewer)));
    }
  }
  for (std::size_t i = 0; i < kids.size(); ++i) {
    for (auto& smaller : shrink_candidates(kids[i])) {
      std::vector<Tree> copy = kids;
      copy[i] = std::move(smaller);
      out.push_back(rebuild(t, std::move(copy)));
    }
  }
  return out;
}

std::vector<WorldState> shrink_candidates(const WorldState& d) {
  std::vector<WorldState> out;
  for (const auto& [a, n] : d.entries()) {
    WorldState smaller = d;
    smaller.remove(a);
    out.push_back(std::move(smaller));
  }
  return out;
}

Tree shrink_tree(Tree tree, const std::function<bool(const Tree&)>& fails) {
  for (bool progress = true; progress;) {
    progress = false;
    for (auto& c : shrink_candidates(tree)) {
      if (weight(c) >= weight(tree)) continue;
      if (fails(c)) {
        tree = std::move(c);
        progress = true;
        break;
      }
    }
  }
  return tree;
}

WorldState shrink_state(WorldState d, const std::function<bool(const WorldState&)>& fails) {
  for (bool progress = true; progress;) {
    progress = false;
    for (auto& c : shrink_candidates(d)) {
      if (fails(c)) {
        d = std::move(c);
        progress = true;
        break;
      }
    }
  }
  return d;
}

Signature restrict_signature(const Signature& sig, const Tree& tree) {
  std::set<std::string> used;
  collect_ops(tree, used);
  Signature out;
  for (const auto& name : sig.sort_order()) out.add_sort(name, sig.sorts().at(name));
  for (const auto& name : sig.predicate_order()) out.add_predicate(name, sig.predicates().at(name));
  for (const auto& d : sig.ops())
    if (used.count(d.name)) out.add_op(d);
  return out;
}

}  // namespace btl::testkit
