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

#include "btl/printer.hpp"

#include <sstream>

namespace btl {

std::string to_string(const Term& t) { return t.name; }

std::string to_string(const Atom& a) {
  if (a.args.empty()) return a.predicate;
  std::string s = a.predicate + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) s += ", ";
    s += a.args[i].name;
  }
  return s + ")";
}

std::string to_string(const WorldState& d) {
  std::string s = "{";
  bool first = true;
  for (const auto& a : d.atoms()) {
    if (!first) s += ", ";
    first = false;
    s += to_string(a);
  }
  return s + "}";
}

std::string to_string(const PosFormula& s) {
  switch (s.kind()) {
    case PosFormula::Kind::One: return "1";
    case PosFormula::Kind::Atom: return to_string(s.atom());
    case PosFormula::Kind::Tensor: {
      std::string l = to_string(s.lhs());
      if (s.lhs().kind() == PosFormula::Kind::Tensor) l = "(" + l + ")";
      return l + " * " + to_string(s.rhs());
    }
  }
  return "1";
}

namespace {

std::string paren(const std::string& s) { return "(" + s + ")"; }

}  // namespace

// Precedence, loosest first: -o (right), & (right), * (right).
std::string to_string(const Interface& n) {
  using K = Interface::Kind;
  switch (n.kind()) {
    case K::Top: return "top";
    case K::Pos: return to_string(n.formula());
    case K::Lolli: return to_string(n.formula()) + " -o " + to_string(n.body());
    case K::Tensor: {
      std::string body = to_string(n.body());
      if (n.body().kind() == K::Lolli || n.body().kind() == K::With) body = paren(body);
      return to_string(n.formula()) + " * " + body;
    }
    case K::With: {
      std::string l = to_string(n.lhs());
      std::string r = to_string(n.rhs());
      if (n.lhs().kind() == K::Lolli || n.lhs().kind() == K::With) l = paren(l);
      if (n.rhs().kind() == K::Lolli) r = paren(r);
      return l + " & " + r;
    }
  }
  return "top";
}

std::string to_string(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom: return to_string(f.atom());
    case K::One: return "1";
    case K::Top: return "top";
    case K::Lolli: {
      std::string l = to_string(f.lhs());
      if (f.lhs().kind() == K::Lolli) l = paren(l);
      return l + " -o " + to_string(f.rhs());
    }
    case K::With: {
      std::string l = to_string(f.lhs());
      std::string r = to_string(f.rhs());
      if (f.lhs().kind() == K::Lolli || f.lhs().kind() == K::With) l = paren(l);
      if (f.rhs().kind() == K::Lolli) r = paren(r);
      return l + " & " + r;
    }
    case K::Tensor: {
      std::string l = to_string(f.lhs());
      std::string r = to_string(f.rhs());
      auto k = f.lhs().kind();
      if (k == K::Lolli || k == K::With || k == K::Tensor) l = paren(l);
      k = f.rhs().kind();
      if (k == K::Lolli || k == K::With) r = paren(r);
      return l + " * " + r;
    }
  }
  return "1";
}

std::string to_string(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.context.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.context[i]);
  }
  if (!out.empty()) out += " ";
  return out + "|- " + to_string(s.goal);
}

std::string to_string(const Tree& t) {
  switch (t.kind()) {
    case Tree::Kind::Op: {
      std::string s = t.name() + "(";
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) s += ", ";
        s += t.args()[i].name;
      }
      return s + ")";
    }
    case Tree::Kind::Cond: return "?" + to_string(t.condition()) + ". " + to_string(t.body());
    case Tree::Kind::Rep: return "Rep{" + to_string(t.body()) + "}";
    case Tree::Kind::Seq:
    case Tree::Kind::Sel: {
      bool seq = t.kind() == Tree::Kind::Seq;
      if (t.children().empty()) return seq ? "Skip" : "Abort";
      std::string s = seq ? "Seq{" : "Sel{";
      for (std::size_t i = 0; i < t.children().size(); ++i) {
        if (i) s += seq ? "; " : " + ";
        s += to_string(t.children()[i]);
      }
      return s + "}";
    }
  }
  return "Skip";
}

std::string to_string(const OpDecl& d) {
  std::string s = d.name + " : ";
  if (!d.params.empty()) {
    for (std::size_t i = 0; i < d.params.size(); ++i) {
      if (i) s += " ";
      s += d.params[i].name;
      if (d.params[i].sort) s += ":" + *d.params[i].sort;
    }
    s += ". ";
  }
  return s + to_string(d.antecedent) + " -o " + to_string(d.consequent) + ".";
}

std::string to_string(const Signature& sig) {
  std::ostringstream out;
  for (const auto& name : sig.sort_order()) {
    out << "sort " << name << " = {";
    const auto& cs = sig.sorts().at(name);
    for (std::size_t i = 0; i < cs.size(); ++i) out << (i ? ", " : "") << cs[i];
    out << "}.\n";
  }
  for (const auto& name : sig.predicate_order()) {
    out << "pred " << name;
    const auto& args = sig.predicates().at(name);
    if (!args.empty()) {
      out << "(";
      for (std::size_t i = 0; i < args.size(); ++i) out << (i ? ", " : "") << args[i];
      out << ")";
    }
    out << ".\n";
  }
  for (const auto& d : sig.ops()) out << to_string(d) << "\n";
  return out.str();
}

std::string to_string(const Substitution& theta) {
  std::string s = "{";
  bool first = true;
  for (const auto& [v, t] : theta) {
    if (!first) s += ", ";
    first = false;
    s += v + " -> " + t.name;
  }
  return s + "}";
}

}  // namespace btl
