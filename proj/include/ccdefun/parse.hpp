/* Copyright 2026 The ccdefun Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Surface syntax for `.cc` and `.dcc` files.
//
//   term  := "fun" ("(" id ":" term ")")+ "=>" term
//          | "(" id ":" term ")" "->" term
//          | app ["->" term]
//   app   := atom+                      -- "add a b" is the Nat primitive
//   atom  := id | "Type" nat | "Nat" | nat | "(" term ")"
//          | lN "{" [term ("," term)*] "}"          -- .dcc only
//
//   decl  := "axiom" id ":" term ";"
//          | "def" id ":" term ":=" term ";"
//          | "main" term ";"
//          | "label" lN "{" [id ":" term ("," id ":" term)*] "}"
//            "(" id ":" term ")" "->" term ":=" term ";"  -- .dcc only
//
// Line comments start with "--".

#ifndef CCDEFUN_PARSE_HPP
#define CCDEFUN_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccdefun/context.hpp"
#include "ccdefun/error.hpp"
#include "ccdefun/term.hpp"

namespace ccdefun {

template <Calculus C>
struct Declaration {
  enum class Form { Axiom, Def };
  Form form;
  std::string name;
  Term<C> type;
  std::optional<Term<C>> body;  // Def only
  std::size_t line = 0;
};

/// A `label` block of a `.dcc` file.
struct LabelDeclaration {
  LabelEntry entry;
  std::size_t line = 0;
};

template <Calculus C>
struct SourceFile {
  std::vector<Declaration<C>> declarations;
  std::vector<LabelDeclaration> labels;  // .dcc only
  std::optional<Term<C>> main;
};

namespace detail {

enum class Tok {
  Ident,
  Number,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Colon,
  Comma,
  Semi,
  Arrow,
  FatArrow,
  Define,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const std::size_t l = line, cl = col;
    auto sym = [&](Tok k, std::size_t n) {
      out.push_back(Token{k, std::string(src.substr(i, n)), l, cl});
      advance(n);
    };
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      sym(Tok::Ident, j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      sym(Tok::Number, j - i);
    } else if (src.substr(i, 2) == "->") {
      sym(Tok::Arrow, 2);
    } else if (src.substr(i, 2) == "=>") {
      sym(Tok::FatArrow, 2);
    } else if (src.substr(i, 2) == ":=") {
      sym(Tok::Define, 2);
    } else {
      switch (c) {
        case '(': sym(Tok::LParen, 1); break;
        case ')': sym(Tok::RParen, 1); break;
        case '{': sym(Tok::LBrace, 1); break;
        case '}': sym(Tok::RBrace, 1); break;
        case ':': sym(Tok::Colon, 1); break;
        case ',': sym(Tok::Comma, 1); break;
        case ';': sym(Tok::Semi, 1); break;
        default:
          throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
      }
    }
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

inline bool is_keyword(std::string_view s) {
  return s == "fun" || s == "Type" || s == "Nat" || s == "add" || s == "axiom" ||
         s == "def" || s == "main" || s == "label";
}

inline std::optional<std::uint32_t> label_index(std::string_view s) {
  if (s.size() < 2 || s[0] != 'l') return std::nullopt;
  std::uint64_t v = 0;
  for (char c : s.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
    if (v > UINT32_MAX) return std::nullopt;
  }
  return static_cast<std::uint32_t>(v);
}

template <Calculus C>
class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Term<C> parse_term_only() {
    Term<C> t = term();
    expect(Tok::End, "end of input");
    return t;
  }

  SourceFile<C> parse_file() {
    SourceFile<C> file;
    while (!at(Tok::End)) {
      const Token& kw = peek();
      if (kw.kind != Tok::Ident) fail(kw, "expected a declaration");
      if (kw.text == "axiom" || kw.text == "def") {
        next();
        const Token& name = ident("declaration name");
        expect(Tok::Colon, "':'");
        Term<C> type = term();
        std::optional<Term<C>> body;
        auto form = Declaration<C>::Form::Axiom;
        if (kw.text == "def") {
          expect(Tok::Define, "':='");
          body = term();
          form = Declaration<C>::Form::Def;
        }
        expect(Tok::Semi, "';'");
        for (const auto& d : file.declarations)
          if (d.name == name.text) fail(name, "duplicate declaration '" + name.text + "'");
        file.declarations.push_back(
            Declaration<C>{form, name.text, type, body, name.line});
      } else if (kw.text == "main") {
        next();
        if (file.main) fail(kw, "more than one main term");
        file.main = term();
        expect(Tok::Semi, "';'");
      } else if (kw.text == "label") {
        if constexpr (std::same_as<C, DCC>) {
          next();
          file.labels.push_back(label_block(kw.line));
        } else {
          fail(kw, "label blocks are only allowed in .dcc files");
        }
      } else {
        fail(kw, "expected 'axiom', 'def', 'main' or 'label'");
      }
    }
    return file;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_word(std::string_view w) const {
    return peek().kind == Tok::Ident && peek().text == w;
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.column,
                     msg + (t.kind == Tok::End ? " at end of input" : ", found '" + t.text + "'"));
  }

  const Token& expect(Tok k, const char* what) {
    if (!at(k)) fail(peek(), std::string("expected ") + what);
    return next();
  }

  const Token& ident(const char* what) {
    if (!at(Tok::Ident) || is_keyword(peek().text))
      fail(peek(), std::string("expected ") + what);
    return next();
  }

  bool binder_ahead() const {
    return at(Tok::LParen) && peek(1).kind == Tok::Ident && peek(2).kind == Tok::Colon;
  }

  Term<C> term() {
    if (at_word("fun")) {
      if constexpr (std::same_as<C, DCC>) {
        fail(peek(), "lambda abstractions are not part of DCC");
      } else {
        next();
        std::vector<std::tuple<std::string, Term<C>, std::uint32_t>> binders;
        do {
          expect(Tok::LParen, "'('");
          const Token& x = ident("binder name");
          expect(Tok::Colon, "':'");
          const std::uint32_t tag = next_tag_++;
          Term<C> dom = term();
          expect(Tok::RParen, "')'");
          binders.emplace_back(x.text, dom, tag);
        } while (at(Tok::LParen));
        expect(Tok::FatArrow, "'=>'");
        Term<C> body = term();
        for (auto it = binders.rbegin(); it != binders.rend(); ++it)
          body = Term<C>::lam(std::get<0>(*it), std::get<1>(*it), body, std::get<2>(*it));
        return body;
      }
    }
    if (binder_ahead()) {
      next();
      const Token& x = ident("binder name");
      expect(Tok::Colon, "':'");
      Term<C> dom = term();
      expect(Tok::RParen, "')'");
      expect(Tok::Arrow, "'->'");
      return Term<C>::pi(x.text, dom, term());
    }
    Term<C> lhs = app();
    if (at(Tok::Arrow)) {
      next();
      return Term<C>::arrow(lhs, term());
    }
    return lhs;
  }

  bool atom_ahead() const {
    switch (peek().kind) {
      case Tok::Number:
        return true;
      case Tok::LParen:
        return !binder_ahead();
      case Tok::Ident:
        return peek().text == "Type" || peek().text == "Nat" || peek().text == "add" ||
               !is_keyword(peek().text);
      default:
        return false;
    }
  }

  Term<C> app() {
    if (!atom_ahead()) fail(peek(), "expected a term");
    if (at_word("add")) {
      const Token& kw = next();
      if (!atom_ahead()) fail(peek(), "'add' takes two arguments");
      Term<C> l = atom();
      if (!atom_ahead()) fail(peek(), "'add' takes two arguments");
      Term<C> r = atom();
      (void)kw;
      Term<C> out = Term<C>::add(l, r);
      while (atom_ahead()) out = Term<C>::app(out, atom());
      return out;
    }
    Term<C> out = atom();
    while (atom_ahead()) {
      if (at_word("add")) {
        // `f add a b` applies f to the primitive.
        next();
        Term<C> l = atom();
        Term<C> r = atom();
        out = Term<C>::app(out, Term<C>::add(l, r));
        continue;
      }
      out = Term<C>::app(out, atom());
    }
    return out;
  }

  Term<C> atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        next();
        return Term<C>::nat_lit(std::stoull(t.text));
      case Tok::LParen: {
        next();
        Term<C> inner = term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Ident:
        break;
      default:
        fail(t, "expected a term");
    }
    if (t.text == "Type") {
      next();
      const Token& n = expect(Tok::Number, "universe level");
      return Term<C>::universe(std::stoull(n.text));
    }
    if (t.text == "Nat") {
      next();
      return Term<C>::nat();
    }
    if (t.text == "add") fail(t, "'add' must be applied to two arguments");
    next();
    if (at(Tok::LBrace)) {
      if constexpr (std::same_as<C, DCC>) {
        const auto idx = label_index(t.text);
        if (!idx) fail(t, "label names have the form l<number>");
        next();
        std::vector<Term<C>> closure;
        if (!at(Tok::RBrace)) {
          closure.push_back(term());
          while (at(Tok::Comma)) {
            next();
            closure.push_back(term());
          }
        }
        expect(Tok::RBrace, "'}'");
        return Term<C>::label(LabelId{*idx}, closure);
      } else {
        fail(peek(), "labels are only allowed in .dcc files");
      }
    }
    return Term<C>::var(t.text);
  }

  LabelDeclaration label_block(std::size_t line) {
    const Token& name = expect(Tok::Ident, "label name");
    const auto idx = label_index(name.text);
    if (!idx) fail(name, "label names have the form l<number>");
    expect(Tok::LBrace, "'{'");
    std::vector<ContextEntry<DCC>> fvs;
    if (!at(Tok::RBrace)) {
      for (;;) {
        const Token& x = ident("free variable name");
        expect(Tok::Colon, "':'");
        fvs.push_back(ContextEntry<DCC>{x.text, term()});
        if (!at(Tok::Comma)) break;
        next();
      }
    }
    expect(Tok::RBrace, "'}'");
    expect(Tok::LParen, "'('");
    const Token& arg = ident("argument name");
    expect(Tok::Colon, "':'");
    Term<C> arg_type = term();
    expect(Tok::RParen, "')'");
    expect(Tok::Arrow, "'->'");
    Term<C> ret = term();
    expect(Tok::Define, "':='");
    Term<C> body = term();
    expect(Tok::Semi, "';'");
    return LabelDeclaration{
        LabelEntry{LabelId{*idx}, TypeContext<DCC>(std::move(fvs)), arg.text, arg_type,
                   body, ret},
        line};
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::uint32_t next_tag_ = 0;
};

}  // namespace detail

/// Parses a single CC term.
inline CCTerm parse_cc_term(std::string_view src) {
  return detail::Parser<CC>(src).parse_term_only();
}

/// Parses a single DCC term.
inline DCCTerm parse_dcc_term(std::string_view src) {
  return detail::Parser<DCC>(src).parse_term_only();
}

inline SourceFile<CC> parse_cc_file(std::string_view src) {
  return detail::Parser<CC>(src).parse_file();
}

inline SourceFile<DCC> parse_dcc_file(std::string_view src) {
  return detail::Parser<DCC>(src).parse_file();
}

}  // namespace ccdefun

#endif  // CCDEFUN_PARSE_HPP
