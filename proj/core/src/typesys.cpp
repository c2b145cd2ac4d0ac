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

#include "btl/typesys.hpp"

#include "btl/error.hpp"

namespace btl {

const char* to_string(SeqCase c) {
  switch (c) {
    case SeqCase::TopRight: return "seq(N, top)";
    case SeqCase::TopLeft: return "seq(top, N)";
    case SeqCase::UnitLeft: return "seq(1, N)";
    case SeqCase::PosPos: return "seq(S1, S2)";
    case SeqCase::PosTensor: return "seq(S, S' * N)";
    case SeqCase::PosWith: return "seq(S, N1 & N2)";
    case SeqCase::PosLolli: return "seq(S1, S2 -o N)";
    case SeqCase::TensorLeft: return "seq(S * N1, N2)";
    case SeqCase::LolliLeft: return "seq(S1 -o N1, N2)";
    case SeqCase::WithLeft: return "seq(N1 & N2, N)";
  }
  return "seq";
}

SeqCase seq_case(const Interface& n1, const Interface& n2) {
  using K = Interface::Kind;
  if (n2.kind() == K::Top) return SeqCase::TopRight;
  if (n1.kind() == K::Top) return SeqCase::TopLeft;
  if (n1.kind() == K::Pos && n1.formula().is_unit()) return SeqCase::UnitLeft;
  if (n1.kind() == K::Pos) {
    switch (n2.kind()) {
      case K::Pos: return SeqCase::PosPos;
      case K::Tensor: return SeqCase::PosTensor;
      case K::With: return SeqCase::PosWith;
      default: return SeqCase::PosLolli;
    }
  }
  if (n1.kind() == K::Tensor) return SeqCase::TensorLeft;
  if (n1.kind() == K::Lolli) return SeqCase::LolliLeft;
  return SeqCase::WithLeft;
}

Interface seq_op(const Interface& n1, const Interface& n2) {
  switch (seq_case(n1, n2)) {
    case SeqCase::TopRight:
    case SeqCase::TopLeft:
      return Interface::top();
    case SeqCase::UnitLeft:
      return n2;
    case SeqCase::PosPos:
      return Interface::pos(PosFormula::tensor(n1.formula(), n2.formula()));
    case SeqCase::PosTensor:
      return Interface::tensor(PosFormula::tensor(n1.formula(), n2.formula()), n2.body());
    case SeqCase::PosWith:
      return Interface::with(seq_op(n1, n2.lhs()), seq_op(n1, n2.rhs()));
    case SeqCase::PosLolli:
      return Interface::tensor(n1.formula(), n2);
    case SeqCase::TensorLeft:
      return Interface::tensor(n1.formula(), seq_op(n1.body(), n2));
    case SeqCase::LolliLeft:
      return Interface::lolli(n1.formula(), seq_op(n1.body(), n2));
    case SeqCase::WithLeft:
      return Interface::with(seq_op(n1.lhs(), n2), seq_op(n1.rhs(), n2));
  }
  return Interface::top();
}

namespace {

Interface synth_at(const Signature& sig, const Tree& t, std::vector<std::size_t>& path) {
  auto child = [&](const Tree& c, std::size_t i) {
    path.push_back(i);
    Interface n = synth_at(sig, c, path);
    path.pop_back();
    return n;
  };
  switch (t.kind()) {
    case Tree::Kind::Op: {
      const OpDecl* decl = sig.find(t.name());
      if (!decl) throw TypeError(ErrorKind::UnknownOp, path, "unknown operator '" + t.name() + "'");
      if (decl->params.size() != t.args().size())
        throw TypeError(ErrorKind::ArityMismatch, path,
                        "operator '" + t.name() + "' takes " +
                            std::to_string(decl->params.size()) + " argument(s)");
      Substitution theta = decl->bind(t.args());
      return Interface::lolli(substitute(theta, decl->antecedent),
                              Interface::pos(substitute(theta, decl->consequent)));
    }
    case Tree::Kind::Cond:
      return Interface::lolli(t.condition(), Interface::tensor(t.condition(), child(t.body(), 0)));
    case Tree::Kind::Sel: {
      const auto& kids = t.children();
      if (kids.empty()) return Interface::top();
      Interface acc = child(kids.back(), kids.size() - 1);
      for (std::size_t i = kids.size() - 1; i-- > 0;) acc = Interface::with(child(kids[i], i), acc);
      return acc;
    }
    case Tree::Kind::Seq: {
      Interface acc = Interface::pos(PosFormula::one());
      for (std::size_t i = 0; i < t.children().size(); ++i)
        acc = seq_op(acc, child(t.children()[i], i));
      return acc;
    }
    case Tree::Kind::Rep:
      throw TypeError(ErrorKind::RepUnsupported, path, "repeaters have no interface type");
  }
  return Interface::top();
}

}  // namespace

Interface synth(const Signature& sig, const Tree& tree) {
  std::vector<std::size_t> path;
  return synth_at(sig, tree, path);
}

}  // namespace btl
