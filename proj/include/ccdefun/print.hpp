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

// Pretty-printers for all three calculi. Output re-parses to an
// alpha-equivalent term (explicit substitutions print for diagnostics
// only; they are not part of the surface syntax).

#ifndef CCDEFUN_PRINT_HPP
#define CCDEFUN_PRINT_HPP

#include <string>

#include "ccdefun/context.hpp"
#include "ccdefun/term.hpp"

namespace ccdefun {

namespace detail {

enum Prec { kTerm = 0, kApp = 1, kAtom = 2 };

template <Calculus C>
void print_into(std::string& out, const Term<C>& t, int prec) {
  auto open = [&](int own) {
    if (prec > own) out += '(';
  };
  auto close = [&](int own) {
    if (prec > own) out += ')';
  };
  switch (t.kind()) {
    case Kind::Var:
      out += t.name();
      return;
    case Kind::Universe:
      out += "Type " + std::to_string(t.level());
      return;
    case Kind::NatType:
      out += "Nat";
      return;
    case Kind::NatLit:
      out += std::to_string(t.value());
      return;
    case Kind::Label: {
      out += t.label_id().str();
      out += '{';
      for (std::size_t i = 0; i < t.arity(); ++i) {
        if (i) out += ", ";
        print_into(out, t.child(i), kTerm);
      }
      out += '}';
      return;
    }
    case Kind::ESubst:
      print_into(out, t.subject(), kAtom);
      out += '{' + t.binder();
      if (const auto a = t.annotation()) {
        out += " : ";
        print_into(out, *a, kTerm);
      }
      out += " := ";
      print_into(out, t.replacement(), kTerm);
      out += '}';
      return;
    case Kind::Lam:
      open(kTerm);
      out += "fun (" + t.binder() + " : ";
      print_into(out, t.dom(), kTerm);
      out += ") => ";
      print_into(out, t.body(), kTerm);
      close(kTerm);
      return;
    case Kind::Pi:
      open(kTerm);
      if (t.cod().has_free(t.binder())) {
        out += "(" + t.binder() + " : ";
        print_into(out, t.dom(), kTerm);
        out += ") -> ";
      } else {
        print_into(out, t.dom(), kApp);
        out += " -> ";
      }
      print_into(out, t.cod(), kTerm);
      close(kTerm);
      return;
    case Kind::App:
      open(kApp);
      print_into(out, t.fn(), kApp);
      out += ' ';
      print_into(out, t.arg(), kAtom);
      close(kApp);
      return;
    case Kind::Add:
      open(kApp);
      out += "add ";
      print_into(out, t.lhs(), kAtom);
      out += ' ';
      print_into(out, t.rhs(), kAtom);
      close(kApp);
      return;
  }
}

}  // namespace detail

template <Calculus C>
std::string print(const Term<C>& t) {
  std::string out;
  detail::print_into(out, t, detail::kTerm);
  return out;
}

inline std::string print_cc(const CCTerm& t) { return print(t); }
inline std::string print_dcc(const DCCTerm& t) { return print(t); }

template <Calculus C>
std::string print(const TypeContext<C>& ctx) {
  std::string out;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (i) out += ", ";
    out += ctx[i].name + " : " + print(ctx[i].type);
  }
  return out;
}

}  // namespace ccdefun

#endif  // CCDEFUN_PRINT_HPP
