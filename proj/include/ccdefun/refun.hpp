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

// The backward transformation: a label becomes the abstraction it was
// extracted from, with its closure values substituted in.

#ifndef CCDEFUN_REFUN_HPP
#define CCDEFUN_REFUN_HPP

#include <map>
#include <string>
#include <vector>

#include "ccdefun/context.hpp"
#include "ccdefun/error.hpp"
#include "ccdefun/term.hpp"

namespace ccdefun {

class Refunctionalizer {
 public:
  explicit Refunctionalizer(const LabelContext& defs) : defs_(defs) {}

  CCTerm expr(const DCCTerm& t) {
    switch (t.kind()) {
      case Kind::Var:
        return CCTerm::var(t.name());
      case Kind::Universe:
        return CCTerm::universe(t.level());
      case Kind::NatType:
        return CCTerm::nat();
      case Kind::NatLit:
        return CCTerm::nat_lit(t.value());
      case Kind::Add:
        return CCTerm::add(expr(t.lhs()), expr(t.rhs()));
      case Kind::Pi:
        return CCTerm::pi(t.binder(), expr(t.dom()), expr(t.cod()));
      case Kind::App:
        return CCTerm::app(expr(t.fn()), expr(t.arg()));
      case Kind::Label: {
        const LabelEntry* e = defs_.find(t.label_id());
        if (!e) throw KernelError(ErrorCode::UnknownLabel, t.label_id().str() + " is not defined");
        const auto closure = t.closure();
        if (closure.size() != e->fvs.size())
          throw KernelError(ErrorCode::ClosureArity,
                            e->id.str() + " expects " + std::to_string(e->fvs.size()) +
                                " closure values, got " + std::to_string(closure.size()));
        Substitution<CC> s;
        for (std::size_t i = 0; i < closure.size(); ++i)
          s.emplace_back(e->fvs[i].name, expr(closure[i]));
        return subst_many(function(*e), s);
      }
      default:
        break;
    }
    throw std::logic_error("unexpected node in a DCC term");
  }

  TypeContext<CC> context(const TypeContext<DCC>& ctx) {
    std::vector<ContextEntry<CC>> out;
    for (const auto& entry : ctx) out.push_back(ContextEntry<CC>{entry.name, expr(entry.type)});
    return TypeContext<CC>(std::move(out));
  }

 private:
  // `fun (x : A) => M` for an entry, closure variables still free.
  CCTerm function(const LabelEntry& e) {
    if (auto it = functions_.find(e.id.index); it != functions_.end()) return it->second;
    CCTerm out = CCTerm::lam(e.arg, expr(e.arg_type), expr(e.body), e.id.index);
    functions_.emplace(e.id.index, out);
    return out;
  }

  const LabelContext& defs_;
  std::map<std::uint32_t, CCTerm> functions_;
};

inline CCTerm refun_expr(const LabelContext& defs, const DCCTerm& t) {
  return Refunctionalizer(defs).expr(t);
}

inline TypeContext<CC> refun_context(const LabelContext& defs, const TypeContext<DCC>& ctx) {
  return Refunctionalizer(defs).context(ctx);
}

}  // namespace ccdefun

#endif  // CCDEFUN_REFUN_HPP
