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

// Type checking for CC and for its explicit-substitution extension
// CC^sigma. Both produce full derivation trees; the defunctionalization
// translation is defined over those trees, not over bare terms.

#ifndef CCDEFUN_CC_CHECK_HPP
#define CCDEFUN_CC_CHECK_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccdefun/cc_reduce.hpp"
#include "ccdefun/ccs_reduce.hpp"
#include "ccdefun/context.hpp"
#include "ccdefun/error.hpp"
#include "ccdefun/print.hpp"
#include "ccdefun/term.hpp"

namespace ccdefun {

enum class Rule {
  Var,
  Universe,
  Pi,
  Apply,
  Lambda,
  Equiv,
  Nat,
  NatLit,
  Add,
  Subst,  // CC^sigma only
};

inline std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::Var: return "ty-Var";
    case Rule::Universe: return "ty-Universe";
    case Rule::Pi: return "ty-Pi";
    case Rule::Apply: return "ty-Apply";
    case Rule::Lambda: return "ty-Lambda";
    case Rule::Equiv: return "ty-Equiv";
    case Rule::Nat: return "ty-Nat";
    case Rule::NatLit: return "ty-NatLit";
    case Rule::Add: return "ty-Add";
    case Rule::Subst: return "s-ty-Subst";
  }
  return "?";
}

struct Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

/// What a checker knows about its context beyond the entries themselves.
struct ContextInfo {
  std::vector<DerivationPtr> types;            // `Gamma_<i |- A_i : U`
  std::vector<std::optional<CCTerm>> values;   // CC^sigma: `x := N` in scope
  bool has_values = false;
};
using ContextDerivations = std::shared_ptr<const ContextInfo>;

/// One node of a typing derivation `context |- subject : type`.
///
/// Children, by rule:
///   Var      the derivation of the variable's type (in the prefix context)
///   Pi       domain, codomain
///   Lambda   domain, body
///   Apply    function, argument
///   Equiv    the converted derivation
///   Add      both operands
///   Subst    replacement, subject (in the extended context)
struct Derivation {
  Rule rule;
  TypeContext<CC> context;
  CCTerm subject;
  CCTerm type;
  std::vector<DerivationPtr> children;
  ContextDerivations context_types;
};

/// Plain CC: meta-level substitution in ty-Apply.
struct CCRules {
  static constexpr bool explicit_substitutions = false;

  static CCTerm whnf(const CCTerm& t) { return cc_whnf(t); }
  static bool equiv(const CCTerm& a, const CCTerm& b) { return cc_equiv(a, b); }
  static CCTerm normalize(const CCTerm& t) { return cc_normalize(t); }
  static std::optional<PiView> pi_view(const CCTerm& whnf_type) {
    if (!whnf_type.is(Kind::Pi)) return std::nullopt;
    return PiView{whnf_type.binder(), whnf_type.dom(), whnf_type.cod()};
  }
  static CCTerm instantiate(const CCTerm& cod, const std::string& x, const CCTerm& arg) {
    return subst(cod, x, arg);
  }
};

/// CC^sigma: the application type keeps the substitution syntactic unless
/// it is vacuous.
struct CCSRules {
  static constexpr bool explicit_substitutions = true;

  static CCTerm whnf(const CCTerm& t) {
    StepBudget budget;
    return ccs_whnf(t, budget);
  }
  static bool equiv(const CCTerm& a, const CCTerm& b) { return ccs_equiv(a, b); }
  static CCTerm normalize(const CCTerm& t) { return ccs_normalize(t); }
  static std::optional<PiView> pi_view(const CCTerm& whnf_type) {
    return ccs_pi_view(whnf_type);
  }
  static CCTerm instantiate(const CCTerm& cod, const std::string& x, const CCTerm& arg) {
    if (!cod.has_free(x)) return cod;
    return CCTerm::esubst(cod, x, arg);
  }
};

/// Result of a context well-formedness check.
struct WfReport {
  bool ok = true;
  std::optional<std::size_t> offending;  // entry index
  std::string message;

  explicit operator bool() const noexcept { return ok; }
};

template <class Rules>
class BasicChecker {
 public:
  /// Validates `ctx`; throws KernelError(IllFormedContext) naming the first
  /// offending entry.
  explicit BasicChecker(const TypeContext<CC>& ctx) {
    WfReport report = build(ctx);
    if (!report) throw KernelError(ErrorCode::IllFormedContext, report.message);
  }

  /// Non-throwing well-formedness check of `ctx`.
  static WfReport validate(const TypeContext<CC>& ctx) {
    BasicChecker checker;
    return checker.build(ctx);
  }

  const TypeContext<CC>& context() const noexcept { return scope_.ctx; }

  /// Derivations of `Gamma_<i |- A_i : U` for every context entry.
  const std::vector<DerivationPtr>& entry_derivations() const noexcept {
    return scope_.types->types;
  }

  /// A checker for the context of an existing derivation node, reusing its
  /// context derivations instead of re-validating.
  static BasicChecker at(const Derivation& d) {
    BasicChecker out;
    out.scope_ = Scope{d.context, d.context_types};
    return out;
  }

  DerivationPtr infer(const CCTerm& t) const { return infer_in(scope_, t); }

  /// Checks `t` against `expected`, inserting one ty-Equiv node when the
  /// inferred type is only convertible.
  DerivationPtr check(const CCTerm& t, const CCTerm& expected) const {
    return check_in(scope_, t, expected);
  }

 private:
  struct Scope {
    TypeContext<CC> ctx;
    ContextDerivations types = std::make_shared<const ContextInfo>();
  };

  BasicChecker() = default;

  WfReport build(const TypeContext<CC>& ctx) {
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const auto& entry = ctx[i];
      std::string problem;
      if (scope_.ctx.contains(entry.name)) {
        problem = "duplicate name";
      } else {
        try {
          auto d = expect_universe(infer_in(scope_, entry.type)).first;
          scope_ = extend(scope_, entry.name, entry.type, std::move(d));
          continue;
        } catch (const KernelError& e) {
          problem = e.what();
        }
      }
      return WfReport{false, i,
                      "entry " + std::to_string(i) + " (" + entry.name + "): " + problem};
    }
    return {};
  }

  static DerivationPtr node(Rule rule, const Scope& s, CCTerm subject, CCTerm type,
                            std::vector<DerivationPtr> children) {
    return std::make_shared<const Derivation>(Derivation{
        rule, s.ctx, std::move(subject), std::move(type), std::move(children), s.types});
  }

  static DerivationPtr convert(const Scope& s, const DerivationPtr& d, CCTerm target) {
    return node(Rule::Equiv, s, d->subject, std::move(target), {d});
  }

  // A binder name that is new to the context; `body` is where it scopes.
  static std::string binder_for(const Scope& s, const std::string& x, const CCTerm& body) {
    if (!s.ctx.contains(x)) return x;
    return fresh_name(x, [&](const std::string& n) {
      return s.ctx.contains(n) || (n != x && body.has_free(n));
    });
  }

  static Scope extend(const Scope& s, const std::string& x, const CCTerm& type,
                      DerivationPtr type_derivation,
                      std::optional<CCTerm> value = std::nullopt) {
    auto info = std::make_shared<ContextInfo>(*s.types);
    info->types.push_back(std::move(type_derivation));
    info->has_values = info->has_values || value.has_value();
    info->values.push_back(std::move(value));
    return Scope{s.ctx.extended(x, type), std::move(info)};
  }

  // Replaces variables bound by enclosing explicit substitutions with
  // their values.
  static CCTerm unfold(const Scope& s, CCTerm t) {
    if (!s.types->has_values) return t;
    for (std::size_t i = s.ctx.size(); i-- > 0;) {
      const auto& v = s.types->values[i];
      if (v && t.has_free(s.ctx[i].name)) t = subst(t, s.ctx[i].name, *v);
    }
    return t;
  }

  static CCTerm head(const Scope& s, const CCTerm& t) {
    CCTerm w = Rules::whnf(t);
    if (!s.types->has_values || w.is(Kind::Universe) || w.is(Kind::NatType) ||
        Rules::pi_view(w))
      return w;
    return Rules::whnf(unfold(s, t));
  }

  static Scope scope_of(const Derivation& d) { return Scope{d.context, d.context_types}; }

  static std::pair<DerivationPtr, std::uint64_t> expect_universe(const DerivationPtr& d) {
    const CCTerm w = head(scope_of(*d), d->type);
    if (!w.is(Kind::Universe))
      throw KernelError(ErrorCode::NotAType,
                        print(d->subject) + " has type " + print(d->type) +
                            ", which is not a universe");
    if (alpha_eq(w, d->type)) return {d, w.level()};
    return {convert(scope_of(*d), d, w), w.level()};
  }

  static DerivationPtr expect_nat(const Scope& s, const DerivationPtr& d) {
    const CCTerm w = head(s, d->type);
    if (!w.is(Kind::NatType))
      throw KernelError(ErrorCode::TypeMismatch,
                        "expected Nat, got " + print(Rules::normalize(d->type)) +
                            " for " + print(d->subject));
    return alpha_eq(w, d->type) ? d : convert(s, d, w);
  }

  static DerivationPtr check_in(const Scope& s, const CCTerm& t, const CCTerm& expected) {
    auto d = infer_in(s, t);
    if (alpha_eq(d->type, expected)) return d;
    if (!Rules::equiv(d->type, expected) &&
        !(s.types->has_values && Rules::equiv(unfold(s, d->type), unfold(s, expected))))
      throw KernelError(ErrorCode::TypeMismatch,
                        "expected " + print(Rules::normalize(expected)) + ", got " +
                            print(Rules::normalize(d->type)) + " for " + print(t));
    return convert(s, d, expected);
  }

  static DerivationPtr infer_in(const Scope& s, const CCTerm& t) {
    switch (t.kind()) {
      case Kind::Var: {
        const auto i = s.ctx.index_of(t.name());
        if (!i) throw KernelError(ErrorCode::UnboundVariable, t.name());
        return node(Rule::Var, s, t, s.ctx[*i].type, {s.types->types[*i]});
      }
      case Kind::Universe:
        return node(Rule::Universe, s, t, CCTerm::universe(t.level() + 1), {});
      case Kind::NatType:
        return node(Rule::Nat, s, t, CCTerm::universe(0), {});
      case Kind::NatLit:
        return node(Rule::NatLit, s, t, CCTerm::nat(), {});
      case Kind::Add: {
        auto l = expect_nat(s, infer_in(s, t.lhs()));
        auto r = expect_nat(s, infer_in(s, t.rhs()));
        return node(Rule::Add, s, t, CCTerm::nat(), {l, r});
      }
      case Kind::Pi: {
        auto [dom, i] = expect_universe(infer_in(s, t.dom()));
        const std::string x = binder_for(s, t.binder(), t.cod());
        const CCTerm cod = rename_var(t.cod(), t.binder(), x);
        const Scope inner = extend(s, x, t.dom(), dom);
        auto [cd, j] = expect_universe(infer_in(inner, cod));
        return node(Rule::Pi, s, CCTerm::pi(x, t.dom(), cod),
                    CCTerm::universe(std::max(i, j)), {dom, cd});
      }
      case Kind::Lam: {
        auto dom = expect_universe(infer_in(s, t.dom())).first;
        const std::string x = binder_for(s, t.binder(), t.body());
        const CCTerm body = rename_var(t.body(), t.binder(), x);
        const Scope inner = extend(s, x, t.dom(), dom);
        auto bd = infer_in(inner, body);
        return node(Rule::Lambda, s, CCTerm::lam(x, t.dom(), body, t.tag()),
                    CCTerm::pi(x, t.dom(), bd->type), {dom, bd});
      }
      case Kind::App: {
        auto fd = infer_in(s, t.fn());
        const CCTerm w = head(s, fd->type);
        const auto view = Rules::pi_view(w);
        if (!view)
          throw KernelError(ErrorCode::NotAFunction,
                            print(t.fn()) + " has type " + print(Rules::normalize(fd->type)));
        if (!alpha_eq(w, fd->type)) fd = convert(s, fd, w);
        auto ad = check_in(s, t.arg(), view->dom);
        return node(Rule::Apply, s, t, Rules::instantiate(view->cod, view->binder, t.arg()),
                    {fd, ad});
      }
      case Kind::ESubst: {
        if constexpr (!Rules::explicit_substitutions) {
          throw KernelError(ErrorCode::TypeMismatch,
                            "explicit substitution outside CC^sigma: " + print(t));
        } else {
          const auto ann = t.annotation();
          DerivationPtr nd;
          DerivationPtr td;
          if (ann) {
            td = expect_universe(infer_in(s, *ann)).first;
            nd = check_in(s, t.replacement(), *ann);
          } else {
            nd = infer_in(s, t.replacement());
            td = expect_universe(infer_in(s, nd->type)).first;
          }
          const std::string x = binder_for(s, t.binder(), t.subject());
          const CCTerm subject = rename_var(t.subject(), t.binder(), x);
          const Scope inner = extend(s, x, nd->type, td, t.replacement());
          auto md = infer_in(inner, subject);
          return node(Rule::Subst, s, CCTerm::esubst(subject, x, t.replacement(), ann),
                      CCTerm::esubst(md->type, x, t.replacement(), ann), {nd, md});
        }
      }
      case Kind::Label:
        break;
    }
    throw std::logic_error("label in a CC term");
  }

  Scope scope_;
};

using Checker = BasicChecker<CCRules>;
using SigmaChecker = BasicChecker<CCSRules>;

struct Inferred {
  CCTerm type;
  DerivationPtr derivation;
};

/// Infers the type of `term` in `ctx` together with its derivation.
inline Inferred cc_infer(const TypeContext<CC>& ctx, const CCTerm& term) {
  auto d = Checker(ctx).infer(term);
  return Inferred{d->type, d};
}

/// CC^sigma inference (explicit substitutions allowed).
inline Inferred ccs_infer(const TypeContext<CC>& ctx, const CCTerm& term) {
  auto d = SigmaChecker(ctx).infer(term);
  return Inferred{d->type, d};
}

inline WfReport cc_wf_context(const TypeContext<CC>& ctx) {
  return Checker::validate(ctx);
}

/// The free-variable telescope of a judgement `Gamma |- M : A`: every
/// variable M or A mentions, closed under the types of those variables,
/// in context order.
inline TypeContext<CC> fv_telescope(const Derivation& d) {
  const auto& ctx = d.context;
  std::vector<bool> needed(ctx.size(), false);
  std::vector<std::string> work;
  for (const auto& x : d.subject.free_names()) work.push_back(x);
  for (const auto& x : d.type.free_names()) work.push_back(x);
  while (!work.empty()) {
    const std::string x = work.back();
    work.pop_back();
    const auto i = ctx.index_of(x);
    if (!i || needed[*i]) continue;
    needed[*i] = true;
    for (const auto& y : ctx[*i].type.free_names()) work.push_back(y);
  }
  std::vector<ContextEntry<CC>> out;
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (needed[i]) out.push_back(ctx[i]);
  return TypeContext<CC>(std::move(out));
}

}  // namespace ccdefun

#endif  // CCDEFUN_CC_CHECK_HPP
