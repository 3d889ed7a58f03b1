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

// Reduction and equivalence for CC^sigma: CC extended with explicit
// substitutions `M{x := N}` that never enter a lambda. A substitution
// sequence over a lambda is a closure; it only fires once applied.

#ifndef CCDEFUN_CCS_REDUCE_HPP
#define CCDEFUN_CCS_REDUCE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccdefun/cc_reduce.hpp"
#include "ccdefun/term.hpp"

namespace ccdefun {

/// The identity injection of CC into CC^sigma.
inline CCTerm sigma_embed(const CCTerm& t) { return t; }

/// `(...((core{y1 := N1}){y2 := N2})...){yn := Nn}` unpacked, innermost
/// substitution first.
struct SubstLayer {
  std::string name;
  CCTerm replacement;
  std::optional<CCTerm> annotation;
};

struct SubstChain {
  CCTerm core;
  std::vector<SubstLayer> subs;
};

inline SubstLayer layer_of(const CCTerm& t) {
  return SubstLayer{t.binder(), t.replacement(), t.annotation()};
}

inline CCTerm wrap(const CCTerm& subject, const SubstLayer& l) {
  return CCTerm::esubst(subject, l.name, l.replacement, l.annotation);
}

inline SubstChain unpack_chain(const CCTerm& t) {
  std::vector<SubstLayer> rev;
  CCTerm cur = t;
  while (cur.is(Kind::ESubst)) {
    rev.push_back(layer_of(cur));
    cur = cur.subject();
  }
  return SubstChain{cur, {rev.rbegin(), rev.rend()}};
}

inline CCTerm pack_chain(CCTerm core, const std::vector<SubstLayer>& subs) {
  for (const auto& l : subs) core = wrap(core, l);
  return core;
}

/// A lambda under zero or more explicit substitutions.
inline bool is_closure(const CCTerm& t) {
  return unpack_chain(t).core.is(Kind::Lam);
}

namespace detail {

// Renames the binder of the chain's core (a Pi or Lam) so it clashes with
// nothing in the chain and nothing in `also`.
inline SubstChain freshen_chain_binder(const SubstChain& chain, const CCTerm& also) {
  const CCTerm& core = chain.core;
  const std::string fresh = fresh_name(core.binder(), [&](const std::string& n) {
    if (n != core.binder() && core.has_free(n)) return true;
    if (also.has_free(n)) return true;
    for (const auto& l : chain.subs)
      if (l.name == n || l.replacement.has_free(n) ||
          (l.annotation && l.annotation->has_free(n)))
        return true;
    return false;
  });
  return SubstChain{rename_binder(core, fresh), chain.subs};
}

// `((fun (x : A) => B){sigma}) N` to `B{x : A := N}{sigma}`, renaming
// substitution binders free in `N`.
inline CCTerm apply_closure(const SubstChain& chain, const CCTerm& arg) {
  const std::string& x = chain.core.binder();
  CCTerm dom = chain.core.dom();
  CCTerm packed = chain.core.body();
  for (const auto& l : chain.subs) {
    SubstLayer layer = l;
    if (arg.has_free(l.name)) {
      layer.name = fresh_name(l.name, [&](const std::string& n) {
        if (n == x || arg.has_free(n) || packed.has_free(n) || dom.has_free(n)) return true;
        for (const auto& o : chain.subs)
          if (o.name == n || o.replacement.has_free(n) ||
              (o.annotation && o.annotation->has_free(n)))
            return true;
        return false;
      });
      packed = rename_var(packed, l.name, layer.name);
      dom = rename_var(dom, l.name, layer.name);
    }
    packed = wrap(packed, layer);
  }
  std::vector<SubstLayer> rev;
  for (std::size_t i = 0; i < chain.subs.size(); ++i) {
    rev.push_back(layer_of(packed));
    packed = packed.subject();
  }
  return pack_chain(CCTerm::esubst(packed, x, arg, dom), {rev.rbegin(), rev.rend()});
}

// Rules that fire at the root.
inline std::optional<CCTerm> ccs_contract(const CCTerm& t) {
  switch (t.kind()) {
    case Kind::App: {
      const CCTerm fn = t.fn();
      if (fn.is(Kind::Lam))  // s-red-Beta
        return CCTerm::esubst(fn.body(), fn.binder(), t.arg());
      if (fn.is(Kind::ESubst)) {
        SubstChain chain = unpack_chain(fn);
        if (!chain.core.is(Kind::Lam)) return std::nullopt;
        chain = freshen_chain_binder(chain, t.arg());  // s-red-Closure
        return apply_closure(chain, t.arg());
      }
      return std::nullopt;
    }
    case Kind::Add:
      if (t.lhs().is(Kind::NatLit) && t.rhs().is(Kind::NatLit))
        return CCTerm::nat_lit(t.lhs().value() + t.rhs().value());
      return std::nullopt;
    case Kind::ESubst: {
      const CCTerm m = t.subject();
      const std::string& x = t.binder();
      const CCTerm n = t.replacement();
      const SubstLayer layer = layer_of(t);
      switch (m.kind()) {
        case Kind::Var:  // s-red-Var1 / s-red-Var2
          return m.name() == x ? n : m;
        case Kind::Universe:  // s-red-Universe
        case Kind::NatType:
        case Kind::NatLit:
          return m;
        case Kind::App:  // s-red-Apply
          return CCTerm::app(wrap(m.fn(), layer), wrap(m.arg(), layer));
        case Kind::Add:
          return CCTerm::add(wrap(m.lhs(), layer), wrap(m.rhs(), layer));
        case Kind::Pi: {
          if (m.binder() == x) return CCTerm::pi(m.binder(), wrap(m.dom(), layer), m.cod());
          SubstChain fresh = freshen_chain_binder(SubstChain{m, {layer}}, CCTerm::nat());
          const CCTerm& p = fresh.core;
          return CCTerm::pi(p.binder(), wrap(p.dom(), layer), wrap(p.cod(), layer));
        }
        default:
          return std::nullopt;
      }
    }
    default:
      return std::nullopt;
  }
}

inline std::optional<CCTerm> ccs_step_impl(const CCTerm& t) {
  if (auto r = ccs_contract(t)) return r;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (auto r = ccs_step_impl(t.child(i))) {
      std::vector<CCTerm> kids;
      for (std::size_t j = 0; j < t.arity(); ++j) kids.push_back(j == i ? *r : t.child(j));
      return t.with_children(std::move(kids));
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// One leftmost-outermost CC^sigma step.
inline std::optional<CCTerm> ccs_reduce_step(const CCTerm& t) {
  return detail::ccs_step_impl(t);
}

inline CCTerm ccs_normalize(const CCTerm& t, StepBudget& budget) {
  CCTerm cur = t;
  while (auto next = ccs_reduce_step(cur)) {
    budget.tick();
    cur = *next;
  }
  return cur;
}

inline CCTerm ccs_normalize(const CCTerm& t,
                            std::size_t budget_limit = kDefaultStepBudget) {
  StepBudget budget(budget_limit);
  return ccs_normalize(t, budget);
}

inline std::vector<CCTerm> ccs_trace(const CCTerm& t,
                                     std::size_t budget_limit = kDefaultStepBudget) {
  StepBudget budget(budget_limit);
  std::vector<CCTerm> out{t};
  while (auto next = ccs_reduce_step(out.back())) {
    budget.tick();
    out.push_back(*next);
  }
  return out;
}

/// Head reduction used by the CC^sigma type checker. A substitution
/// sequence over a Pi is left in place (see `ccs_pi_view`).
inline CCTerm ccs_whnf(CCTerm t, StepBudget& budget) {
  for (;;) {
    switch (t.kind()) {
      case Kind::App: {
        const CCTerm fn = ccs_whnf(t.fn(), budget);
        const CCTerm head = t.with_children({fn, t.arg()});
        if (auto r = detail::ccs_contract(head)) {
          budget.tick();
          t = *r;
          continue;
        }
        return head;
      }
      case Kind::Add: {
        const CCTerm l = ccs_whnf(t.lhs(), budget);
        const CCTerm r = ccs_whnf(t.rhs(), budget);
        if (l.is(Kind::NatLit) && r.is(Kind::NatLit)) {
          budget.tick();
          return CCTerm::nat_lit(l.value() + r.value());
        }
        return t.with_children({l, r});
      }
      case Kind::ESubst: {
        const CCTerm m = ccs_whnf(t.subject(), budget);
        const CCTerm head = wrap(m, layer_of(t));
        if (m.is(Kind::Pi) || m.is(Kind::Lam) || m.is(Kind::ESubst)) return head;
        if (auto r = detail::ccs_contract(head)) {
          budget.tick();
          t = *r;
          continue;
        }
        return head;
      }
      default:
        return t;
    }
  }
}

struct PiView {
  std::string binder;
  CCTerm dom;
  CCTerm cod;
};

/// Reads a weak-head normal type as a Pi, looking through a substitution
/// sequence over a Pi: `(Pi y:A.B){x := N}` is `Pi y:A{x := N}.B{x := N}`.
inline std::optional<PiView> ccs_pi_view(const CCTerm& whnf_type) {
  SubstChain chain = unpack_chain(whnf_type);
  if (!chain.core.is(Kind::Pi)) return std::nullopt;
  if (chain.subs.empty())
    return PiView{chain.core.binder(), chain.core.dom(), chain.core.cod()};
  chain = detail::freshen_chain_binder(chain, CCTerm::nat());
  return PiView{chain.core.binder(), pack_chain(chain.core.dom(), chain.subs),
                pack_chain(chain.core.cod(), chain.subs)};
}

/// Performs every explicit substitution as a meta-level substitution.
inline CCTerm erase_substitutions(const CCTerm& t) {
  if (!has_esubst(t)) return t;
  if (t.is(Kind::ESubst))
    return subst(erase_substitutions(t.subject()), t.binder(),
                 erase_substitutions(t.replacement()));
  std::vector<CCTerm> kids;
  for (std::size_t i = 0; i < t.arity(); ++i) kids.push_back(erase_substitutions(t.child(i)));
  return t.with_children(std::move(kids));
}

namespace detail {

inline bool ccs_conv_nf(const CCTerm& a, const CCTerm& b, StepBudget& budget) {
  if (alpha_eq(a, b)) return true;
  const bool fa = is_closure(a);
  const bool fb = is_closure(b);
  if (fa || fb) {
    // eta and the closure rules: compare both sides applied to a fresh name.
    const std::string z = fresh_between(a, b, "x");
    const CCTerm var = CCTerm::var(z);
    return ccs_conv_nf(ccs_normalize(CCTerm::app(a, var), budget),
                       ccs_normalize(CCTerm::app(b, var), budget), budget);
  }
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Pi: {
      if (!ccs_conv_nf(a.dom(), b.dom(), budget)) return false;
      const std::string z = fresh_between(a, b, a.binder());
      return ccs_conv_nf(ccs_normalize(rename_var(a.cod(), a.binder(), z), budget),
                         ccs_normalize(rename_var(b.cod(), b.binder(), z), budget),
                         budget);
    }
    case Kind::App:
    case Kind::Add:
      return ccs_conv_nf(a.child(0), b.child(0), budget) &&
             ccs_conv_nf(a.child(1), b.child(1), budget);
    default:
      return false;
  }
}

}  // namespace detail

/// CC^sigma equivalence: joinability by normalization, with eta and the
/// closure rules bridging abstractions and closures.
inline bool ccs_equiv(const CCTerm& a, const CCTerm& b,
                      std::size_t budget_limit = kDefaultStepBudget) {
  StepBudget budget(budget_limit);
  return detail::ccs_conv_nf(ccs_normalize(a, budget), ccs_normalize(b, budget), budget);
}

}  // namespace ccdefun

#endif  // CCDEFUN_CCS_REDUCE_HPP
