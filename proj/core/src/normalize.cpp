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

#include "btl/normalize.hpp"

#include "btl/error.hpp"

namespace btl {
namespace {

struct Leaf {
  Tree tree;
  std::size_t nodes;
};
using Branch = std::vector<Leaf>;
using Form = std::vector<Branch>;

class Normalizer {
 public:
  Normalizer(std::size_t cap, NormalizeOptions options) : cap_(cap), options_(options) {}

  Tree run(const Tree& t) { return build(form(t)); }

 private:
  static bool unit(const Form& f) { return f.size() == 1 && f[0].empty(); }

  static std::size_t nodes(const Form& f) {
    std::size_t n = 1;
    for (const auto& b : f) {
      n += 1;
      for (const auto& l : b) n += l.nodes;
    }
    return n;
  }

  void check(std::size_t n) const {
    if (n > cap_)
      throw Error(ErrorKind::SizeCapExceeded,
                  "normal form exceeds " + std::to_string(cap_) + " nodes");
  }

  Leaf leaf(Tree t) {
    std::size_t n = t.node_count();
    check(n);
    return Leaf{std::move(t), n};
  }

  Tree build(const Form& f) const {
    std::vector<Tree> branches;
    branches.reserve(f.size());
    for (const auto& b : f) {
      std::vector<Tree> leaves;
      leaves.reserve(b.size());
      for (const auto& l : b) leaves.push_back(l.tree);
      branches.push_back(Tree::seq(std::move(leaves)));
    }
    return Tree::sel(std::move(branches));
  }

  // The factors of a sequence after associativity and unit laws: nested
  // sequences are spliced in and a selector with one live child is that child.
  void parts(const Tree& t, std::vector<Form>& out) {
    switch (t.kind()) {
      case Tree::Kind::Seq:
        for (const auto& c : t.children()) parts(c, out);
        return;
      case Tree::Kind::Sel: {
        const Tree* live = nullptr;
        std::size_t n = 0;
        std::vector<Form> forms;
        for (const auto& c : t.children()) {
          forms.push_back(form(c));
          if (!forms.back().empty()) {
            live = &c;
            ++n;
          }
        }
        if (n == 1) return parts(*live, out);
        Form joined;
        for (auto& f : forms) {
          joined.insert(joined.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
          check(nodes(joined));
        }
        out.push_back(std::move(joined));
        return;
      }
      default: {
        Form f = form(t);
        if (!unit(f)) out.push_back(std::move(f));
      }
    }
  }

  Form form(const Tree& t) {
    switch (t.kind()) {
      case Tree::Kind::Op:
        return {{leaf(t)}};
      case Tree::Kind::Cond:
        return {{leaf(Tree::cond(t.condition(), run(t.body())))}};
      case Tree::Kind::Rep:
        return {{leaf(Tree::rep(run(t.body())))}};
      case Tree::Kind::Sel: {
        Form out;
        for (const auto& c : t.children()) {
          Form f = form(c);
          out.insert(out.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
          check(nodes(out));
        }
        return out;
      }
      case Tree::Kind::Seq: {
        std::vector<Form> ps;
        parts(t, ps);
        if (ps.empty()) return {{}};
        if (ps.size() == 1) return std::move(ps.front());
        for (auto& p : ps)
          if (p.empty()) p = {{leaf(Tree::abort())}};
        return fold(std::move(ps));
      }
    }
    return {};
  }

  static bool collapsed(const Leaf& l) {
    return l.tree.kind() == Tree::Kind::Sel && !l.tree.children().empty();
  }

  static Form branches_of(const Tree& sel) {
    Form out;
    for (const auto& seq : sel.children()) {
      Branch b;
      for (const auto& c : seq.children()) b.push_back(Leaf{c, c.node_count()});
      out.push_back(std::move(b));
    }
    return out;
  }

  // Left-to-right product of the factors of a sequence. Without left
  // distribution a multi-branch prefix is collapsed into one selector leaf
  // before the next factor is distributed over it.
  Form fold(std::vector<Form> ps) {
    Form acc = std::move(ps.front());
    for (std::size_t i = 1; i < ps.size(); ++i) {
      if (!options_.distribute_left && acc.size() > 1) {
        acc = reopen(std::move(acc));
        if (acc.size() > 1) acc = {{leaf(build(acc))}};
      }
      Form next;
      for (const auto& a : acc) {
        for (const auto& b : ps[i]) {
          if (options_.distribute_left || a.empty() || b.empty() || !collapsed(b.front())) {
            Branch joined = a;
            joined.insert(joined.end(), b.begin(), b.end());
            next.push_back(std::move(joined));
            continue;
          }
          // A selector heading b would sit mid-branch: refold a and b leaf by
          // leaf so the prefix distributes into it.
          std::vector<Form> items;
          for (const auto* side : {&a, &b})
            for (const auto& l : *side) items.push_back(collapsed(l) ? branches_of(l.tree) : Form{{l}});
          Form f = fold(std::move(items));
          next.insert(next.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
        }
        check(nodes(next));
      }
      acc = std::move(next);
    }
    return reopen(std::move(acc));
  }

  // A branch that is only a collapsed selector joins the enclosing selector;
  // a lone Abort branch drops out.
  Form reopen(Form f) {
    Form out;
    for (auto& b : f) {
      if (b.size() == 1 && b[0].tree.kind() == Tree::Kind::Sel) {
        Form inner = branches_of(b[0].tree);
        out.insert(out.end(), std::make_move_iterator(inner.begin()), std::make_move_iterator(inner.end()));
      } else {
        out.push_back(std::move(b));
      }
    }
    return out;
  }

  std::size_t cap_;
  NormalizeOptions options_;
};

}  // namespace

Tree normalize(const Tree& tree, std::size_t cap, NormalizeOptions options) {
  Normalizer n(cap, options);
  Tree out = n.run(tree);
  if (out.node_count() > cap)
    throw Error(ErrorKind::SizeCapExceeded, "normal form exceeds " + std::to_string(cap) + " nodes");
  return out;
}

bool congruent(const Tree& a, const Tree& b, std::size_t cap) {
  return normalize(a, cap) == normalize(b, cap);
}

}  // namespace btl
