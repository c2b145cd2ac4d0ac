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

#include "btl/parser.hpp"

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "btl/error.hpp"

namespace btl {
namespace {

//==================================================================================================
// Lexer

enum class Tok {
  Ident,
  Number,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Dot,
  Semi,
  Plus,
  Star,
  Amp,
  Question,
  Colon,
  Equals,
  Lolli,
  Turnstile,
  End,
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Semi: return "';'";
    case Tok::Plus: return "'+'";
    case Tok::Star: return "'*'";
    case Tok::Amp: return "'&'";
    case Tok::Question: return "'?'";
    case Tok::Colon: return "':'";
    case Tok::Equals: return "'='";
    case Tok::Lolli: return "'-o'";
    case Tok::Turnstile: return "'|-'";
    case Tok::End: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++col;
      }
      ++i;
    }
  };
  auto ident_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      t.kind = Tok::Ident;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::Number;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    std::size_t len = 1;
    switch (c) {
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case '{': t.kind = Tok::LBrace; break;
      case '}': t.kind = Tok::RBrace; break;
      case ',': t.kind = Tok::Comma; break;
      case '.': t.kind = Tok::Dot; break;
      case ';': t.kind = Tok::Semi; break;
      case '+': t.kind = Tok::Plus; break;
      case '*': t.kind = Tok::Star; break;
      case '&': t.kind = Tok::Amp; break;
      case '?': t.kind = Tok::Question; break;
      case ':': t.kind = Tok::Colon; break;
      case '=': t.kind = Tok::Equals; break;
      case '-':
        if (i + 1 < src.size() && src[i + 1] == 'o' &&
            (i + 2 >= src.size() || !ident_char(src[i + 2]))) {
          t.kind = Tok::Lolli;
          len = 2;
          break;
        }
        throw SourceError(ErrorKind::Syntax, line, col, "unexpected '-'", "'-o'");
      case '|':
        if (i + 1 < src.size() && src[i + 1] == '-') {
          t.kind = Tok::Turnstile;
          len = 2;
          break;
        }
        throw SourceError(ErrorKind::Syntax, line, col, "unexpected '|'", "'|-'");
      default:
        throw SourceError(ErrorKind::Syntax, line, col,
                          std::string("unexpected character '") + c + "'");
    }
    t.text = std::string(src.substr(i, len));
    advance(len);
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::End;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

bool is_upper(const std::string& s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s.front()));
}

//==================================================================================================
// Parser

struct Located {
  Atom atom;
  int line;
  int column;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at(Tok t) const { return peek().kind == t; }
  bool at_word(std::string_view w) const { return at(Tok::Ident) && peek().text == w; }

  Token take() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }

  Token expect(Tok t) {
    if (!at(t)) fail(std::string("unexpected ") + found(), describe(t));
    return take();
  }

  [[noreturn]] void fail(const std::string& message, std::string expected = {}) const {
    throw SourceError(ErrorKind::Syntax, peek().line, peek().column, message, std::move(expected));
  }

  [[noreturn]] static void fail_at(ErrorKind kind, const Token& t, const std::string& message) {
    throw SourceError(kind, t.line, t.column, message);
  }

  std::string found() const {
    if (at(Tok::End)) return "end of input";
    return "'" + peek().text + "'";
  }

  void expect_end() {
    if (!at(Tok::End)) fail("unexpected " + found() + " after complete input", "end of input");
  }

  //------------------------------------------------------------------------------------------------
  // Atoms and positive formulas

  Term parse_term() {
    if (at(Tok::Ident) || at(Tok::Number)) return Term{take().text};
    fail("unexpected " + found(), "a term");
  }

  std::vector<Term> parse_args() {
    std::vector<Term> args;
    expect(Tok::LParen);
    if (!at(Tok::RParen)) {
      args.push_back(parse_term());
      while (at(Tok::Comma)) {
        take();
        args.push_back(parse_term());
      }
    }
    expect(Tok::RParen);
    return args;
  }

  Atom parse_atom() {
    if (!at(Tok::Ident)) fail("unexpected " + found(), "an atom");
    if (is_upper(peek().text)) fail("predicate names must start with a lowercase letter", "an atom");
    Token head = take();
    Atom a{head.text, {}};
    if (at(Tok::LParen)) a.args = parse_args();
    atoms_.push_back(Located{a, head.line, head.column});
    return a;
  }

  PosFormula parse_pos_primary() {
    if (at(Tok::Number) && peek().text == "1") {
      take();
      return PosFormula::one();
    }
    if (at(Tok::LParen)) {
      take();
      PosFormula s = parse_pos();
      expect(Tok::RParen);
      return s;
    }
    if (at_word("top")) fail("'top' is not a positive formula", "an atom or '1'");
    return PosFormula::atom(parse_atom());
  }

  PosFormula parse_pos() {
    PosFormula lhs = parse_pos_primary();
    if (at(Tok::Star)) {
      take();
      return PosFormula::tensor(lhs, parse_pos());
    }
    return lhs;
  }

  //------------------------------------------------------------------------------------------------
  // General formulas; `interface_shape` enforces the interface grammar as it parses.

  Formula parse_formula(bool interface_shape) {
    Token start = peek();
    Formula lhs = parse_with(interface_shape);
    if (at(Tok::Lolli)) {
      take();
      if (interface_shape && !lhs.is_positive())
        fail_at(ErrorKind::ShapeError, start, "-o may not appear to the left of -o");
      return Formula::lolli(lhs, parse_formula(interface_shape));
    }
    return lhs;
  }

  Formula parse_with(bool interface_shape) {
    Formula lhs = parse_tensor(interface_shape);
    if (at(Tok::Amp)) {
      take();
      return Formula::with(lhs, parse_with(interface_shape));
    }
    return lhs;
  }

  Formula parse_tensor(bool interface_shape) {
    Token start = peek();
    Formula lhs = parse_primary(interface_shape);
    if (at(Tok::Star)) {
      take();
      if (interface_shape && !lhs.is_positive())
        fail_at(ErrorKind::ShapeError, start,
                "the left operand of * must be a positive formula in an interface");
      return Formula::tensor(lhs, parse_tensor(interface_shape));
    }
    return lhs;
  }

  Formula parse_primary(bool interface_shape) {
    if (at(Tok::Number) && peek().text == "1") {
      take();
      return Formula::one();
    }
    if (at_word("top")) {
      take();
      return Formula::top();
    }
    if (at(Tok::LParen)) {
      take();
      Formula f = parse_formula(interface_shape);
      expect(Tok::RParen);
      return f;
    }
    return Formula::atom(parse_atom());
  }

  //------------------------------------------------------------------------------------------------
  // Trees

  Tree parse_tree(const Signature& sig) {
    if (at(Tok::LParen)) {
      take();
      Tree t = parse_tree(sig);
      expect(Tok::RParen);
      return t;
    }
    if (at(Tok::Question)) {
      take();
      std::size_t first_atom = atoms_.size();
      PosFormula c = parse_pos();
      for (std::size_t i = first_atom; i < atoms_.size(); ++i)
        if (!atoms_[i].atom.is_ground())
          throw SourceError(ErrorKind::NonGroundAtom, atoms_[i].line, atoms_[i].column,
                            "condition atoms must be ground");
      expect(Tok::Dot);
      return Tree::cond(c, parse_tree(sig));
    }
    if (!at(Tok::Ident)) fail("unexpected " + found(), "a tree expression");
    if (at_word("Skip")) {
      take();
      return Tree::skip();
    }
    if (at_word("Abort")) {
      take();
      return Tree::abort();
    }
    if ((at_word("Seq") || at_word("Sel")) && peek(1).kind == Tok::LBrace) {
      bool seq = take().text == "Seq";
      Tok sep = seq ? Tok::Semi : Tok::Plus;
      expect(Tok::LBrace);
      std::vector<Tree> kids;
      if (!at(Tok::RBrace)) {
        kids.push_back(parse_tree(sig));
        while (at(sep)) {
          take();
          kids.push_back(parse_tree(sig));
        }
      }
      if (!at(Tok::RBrace)) fail("unexpected " + found(), std::string(describe(sep)) + " or '}'");
      take();
      return seq ? Tree::seq(std::move(kids)) : Tree::sel(std::move(kids));
    }
    if (at_word("Rep") && peek(1).kind == Tok::LBrace) {
      take();
      take();
      Tree body = parse_tree(sig);
      expect(Tok::RBrace);
      return Tree::rep(std::move(body));
    }
    if (is_upper(peek().text)) fail("unexpected " + found(), "an operator name");
    Token name = take();
    std::vector<Term> args;
    std::vector<Token> arg_toks;
    if (at(Tok::LParen)) {
      take();
      if (!at(Tok::RParen)) {
        arg_toks.push_back(peek());
        args.push_back(parse_term());
        while (at(Tok::Comma)) {
          take();
          arg_toks.push_back(peek());
          args.push_back(parse_term());
        }
      }
      expect(Tok::RParen);
    }
    const OpDecl* decl = sig.find(name.text);
    if (!decl) fail_at(ErrorKind::UnknownOp, name, "unknown operator '" + name.text + "'");
    if (decl->params.size() != args.size())
      fail_at(ErrorKind::ArityMismatch, name,
              "operator '" + name.text + "' takes " + std::to_string(decl->params.size()) +
                  " argument(s), got " + std::to_string(args.size()));
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i].is_variable())
        fail_at(ErrorKind::NonGroundArg, arg_toks[i], "operator arguments must be ground");
      const auto& sort = decl->params[i].sort;
      if (sort && !sig.sort_contains(*sort, args[i].name))
        fail_at(ErrorKind::SortMismatch, arg_toks[i],
                "'" + args[i].name + "' is not in sort '" + *sort + "'");
    }
    return Tree::op(name.text, std::move(args));
  }

  //------------------------------------------------------------------------------------------------
  // Spec files

  Signature parse_spec() {
    Signature sig;
    std::map<std::string, std::size_t> arity;
    std::map<std::string, std::vector<std::string>> pred_sorts;
    bool preds_declared = false;

    auto check_atoms = [&](std::size_t from) {
      for (std::size_t i = from; i < atoms_.size(); ++i) {
        const auto& la = atoms_[i];
        auto it = arity.find(la.atom.predicate);
        if (it == arity.end()) {
          if (preds_declared)
            throw SourceError(ErrorKind::UnknownPredicate, la.line, la.column,
                              "predicate '" + la.atom.predicate + "' is not declared");
          arity.emplace(la.atom.predicate, la.atom.args.size());
        } else if (it->second != la.atom.args.size()) {
          throw SourceError(ErrorKind::ArityMismatch, la.line, la.column,
                            "predicate '" + la.atom.predicate + "' used with " +
                                std::to_string(la.atom.args.size()) + " argument(s), expected " +
                                std::to_string(it->second));
        }
        auto ps = pred_sorts.find(la.atom.predicate);
        if (ps == pred_sorts.end()) continue;
        for (std::size_t k = 0; k < la.atom.args.size(); ++k) {
          const auto& t = la.atom.args[k];
          if (!t.is_variable() && !sig.sort_contains(ps->second[k], t.name))
            throw SourceError(ErrorKind::SortMismatch, la.line, la.column,
                              "'" + t.name + "' is not in sort '" + ps->second[k] + "'");
        }
      }
    };

    while (!at(Tok::End)) {
      if (!at(Tok::Ident)) fail("unexpected " + found(), "a declaration");
      if (at_word("sort") && peek(1).kind == Tok::Ident) {
        take();
        Token name = take();
        expect(Tok::Equals);
        expect(Tok::LBrace);
        std::vector<std::string> cs;
        if (!at(Tok::RBrace)) {
          for (;;) {
            Token c = peek();
            Term t = parse_term();
            if (t.is_variable()) fail_at(ErrorKind::Syntax, c, "sort members must be constants");
            cs.push_back(t.name);
            if (!at(Tok::Comma)) break;
            take();
          }
        }
        expect(Tok::RBrace);
        expect(Tok::Dot);
        if (cs.empty()) fail_at(ErrorKind::Syntax, name, "sort '" + name.text + "' is empty");
        if (sig.sorts().count(name.text))
          fail_at(ErrorKind::DuplicateName, name, "sort '" + name.text + "' declared twice");
        sig.add_sort(name.text, std::move(cs));
        continue;
      }
      if (at_word("pred") && peek(1).kind == Tok::Ident) {
        take();
        Token name = take();
        std::vector<std::string> sorts;
        if (at(Tok::LParen)) {
          take();
          for (;;) {
            Token s = expect(Tok::Ident);
            if (s.text != "term" && !sig.sorts().count(s.text))
              fail_at(ErrorKind::UnknownSort, s, "unknown sort '" + s.text + "'");
            sorts.push_back(s.text);
            if (!at(Tok::Comma)) break;
            take();
          }
          expect(Tok::RParen);
        }
        expect(Tok::Dot);
        if (sig.predicates().count(name.text))
          fail_at(ErrorKind::DuplicateName, name, "predicate '" + name.text + "' declared twice");
        if (auto it = arity.find(name.text); it != arity.end() && it->second != sorts.size())
          fail_at(ErrorKind::ArityMismatch, name, "predicate '" + name.text + "' used earlier with " +
                                                      std::to_string(it->second) + " argument(s)");
        arity[name.text] = sorts.size();
        pred_sorts[name.text] = sorts;
        preds_declared = true;
        sig.add_predicate(name.text, std::move(sorts));
        continue;
      }
      parse_decl(sig, check_atoms);
    }
    return sig;
  }

  template <class Check>
  void parse_decl(Signature& sig, Check& check_atoms) {
    if (is_upper(peek().text)) fail("operator names must start with a lowercase letter");
    Token name = take();
    expect(Tok::Colon);
    OpDecl d;
    d.name = name.text;
    std::map<std::string, Token> param_toks;
    if (at(Tok::Ident) && is_upper(peek().text)) {
      while (at(Tok::Ident) && is_upper(peek().text)) {
        Token v = take();
        Param p{v.text, std::nullopt};
        if (at(Tok::Colon)) {
          take();
          Token s = expect(Tok::Ident);
          if (s.text != "term" && !sig.sorts().count(s.text))
            fail_at(ErrorKind::UnknownSort, s, "unknown sort '" + s.text + "'");
          p.sort = s.text;
        }
        if (param_toks.count(v.text))
          fail_at(ErrorKind::DuplicateName, v, "parameter '" + v.text + "' bound twice");
        param_toks.emplace(v.text, v);
        d.params.push_back(std::move(p));
      }
      expect(Tok::Dot);
    }
    std::size_t first_atom = atoms_.size();
    d.antecedent = parse_pos();
    std::size_t first_consequent = atoms_.size();
    expect(Tok::Lolli);
    d.consequent = parse_pos();
    expect(Tok::Dot);
    check_atoms(first_atom);
    for (std::size_t i = first_atom; i < atoms_.size(); ++i) {
      for (const auto& t : atoms_[i].atom.args) {
        if (!t.is_variable() || param_toks.count(t.name)) continue;
        std::string where = i < first_consequent ? "antecedent" : "consequent";
        throw SourceError(ErrorKind::UnboundVariable, atoms_[i].line, atoms_[i].column,
                          "variable " + t.name + " in the " + where + " of '" + d.name +
                              "' is not bound by its parameters");
      }
    }
    if (sig.find(d.name))
      fail_at(ErrorKind::DuplicateName, name, "operator '" + d.name + "' declared twice");
    sig.add_op(std::move(d));
  }

  std::vector<Located> atoms_;

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Signature parse_spec(std::string_view text) {
  Parser p(text);
  return p.parse_spec();
}

Tree parse_tree(std::string_view text, const Signature& sig) {
  Parser p(text);
  Tree t = p.parse_tree(sig);
  p.expect_end();
  return t;
}

WorldState parse_state(std::string_view text) {
  Parser p(text);
  WorldState d;
  p.expect(Tok::LBrace);
  if (!p.at(Tok::RBrace)) {
    for (;;) {
      Atom a = p.parse_atom();
      const auto& la = p.atoms_.back();
      if (!a.is_ground())
        throw SourceError(ErrorKind::NonGroundAtom, la.line, la.column,
                          "state atoms must be ground");
      d.add(a);
      if (!p.at(Tok::Comma)) break;
      p.take();
    }
  }
  p.expect(Tok::RBrace);
  p.expect_end();
  return d;
}

PosFormula parse_formula(std::string_view text) {
  Parser p(text);
  PosFormula s = p.parse_pos();
  p.expect_end();
  return s;
}

Interface parse_interface(std::string_view text) {
  Parser p(text);
  Formula f = p.parse_formula(true);
  p.expect_end();
  return to_interface(f);
}

Formula parse_logic_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.parse_formula(false);
  p.expect_end();
  return f;
}

Sequent parse_sequent(std::string_view text) {
  Parser p(text);
  Sequent s;
  if (!p.at(Tok::Turnstile)) {
    s.context.push_back(p.parse_formula(false));
    while (p.at(Tok::Comma)) {
      p.take();
      s.context.push_back(p.parse_formula(false));
    }
  }
  p.expect(Tok::Turnstile);
  s.goal = p.parse_formula(false);
  p.expect_end();
  return s;
}

}  // namespace btl
