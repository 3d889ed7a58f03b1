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

// The DCC kernel: label reduction, equivalence with eta bridging for
// labels, typing under a label context, and label-context formation.

#ifndef CCDEFUN_DCC_HPP
#define CCDEFUN_DCC_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ccdefun/cc_reduce.hpp"
#include "ccdefun/context.hpp"
#include "ccdefun/error.hpp"
#include "ccdefun/print.hpp"
#include "ccdefun/term.hpp"

namespace ccdefun {

namespace detail {

inline const LabelEntry& require_label(const LabelContext& defs, LabelId id) {
  const LabelEntry* e = defs.find(id);
  if (!e) throw KernelError(ErrorCode::UnknownLabel, id.str() + " is not defined");
  return *e;
}

// `body[M1/x1, ..., Mn/xn, N/x]` for `l{M1..Mn} @ N`.
inline DCCTerm apply_label(const LabelContext& defs, const DCCTerm& label,
                           const DCCTerm& arg) {
  const LabelEntry& e = require_label(defs, label.label_id());
  const auto closure = label.closure();
  if (closure.size() != e.fvs.size())
    throw KernelError(ErrorCode::ClosureArity,
                      e.id.str() + " expects " + std::to_string(e.fvs.size()) +
                          " closure values, got " + std::to_string(closure.size()));
  Substitution<DCC> s;
  for (std::size_t i = 0; i < closure.size(); ++i) s.emplace_back(e.fvs[i].name, closure[i]);
  s.emplace_back(e.arg, arg);
  return subst_many(e.body, s);
}

inline std::optional<DCCTerm> dcc_contract(const LabelContext& defs, const DCCTerm& t) {
  if (t.is(Kind::App) && t.fn().is(Kind::Label)) return apply_label(defs, t.fn(), t.arg());
  if (t.is(Kind::Add) && t.lhs().is(Kind::NatLit) && t.rhs().is(Kind::NatLit))
    return DCCTerm::nat_lit(t.lhs().value() + t.rhs().value());
  return std::nullopt;
}

inline bool dcc_is_redex(const DCCTerm& t) {
  return (t.is(Kind::App) && t.fn().is(Kind::Label)) ||
         (t.is(Kind::Add) && t.lhs().is(Kind::NatLit) && t.rhs().is(Kind::NatLit));
}

inline std::optional<DCCTerm> dcc_step_impl(const LabelContext& defs, const DCCTerm& t) {
  if (dcc_is_redex(t)) return dcc_contract(defs, t);
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (auto k = dcc_step_impl(defs, t.child(i))) {
      std::vector<DCCTerm> kids;
      for (std::size_t j = 0; j < t.arity(); ++j) kids.push_back(j == i ? *k : t.child(j));
      return t.with_children(std::move(kids));
    }
  }
  return std::nullopt;
}

inline void dcc_reducts_impl(const LabelContext& defs, const DCCTerm& t,
                             std::vector<DCCTerm>& out) {
  if (dcc_is_redex(t)) out.push_back(*dcc_contract(defs, t));
  for (std::size_t i = 0; i < t.arity(); ++i) {
    std::vector<DCCTerm> inner;
    dcc_reducts_impl(defs, t.child(i), inner);
    for (auto& k : inner) {
      std::vector<DCCTerm> kids;
      for (std::size_t j = 0; j < t.arity(); ++j) kids.push_back(j == i ? k : t.child(j));
      out.push_back(t.with_children(std::move(kids)));
    }
  }
}

}  // namespace detail

/// One leftmost-outermost label-application or delta step.
inline std::optional<DCCTerm> dcc_reduce_step(const LabelContext& defs, const DCCTerm& t) {
  return detail::dcc_step_impl(defs, t);
}

/// Every term reachable from `t` in exactly one step, any position.
inline std::vector<DCCTerm> dcc_reducts(const LabelContext& defs, const DCCTerm& t) {
  std::vector<DCCTerm> out;
  detail::dcc_reducts_impl(defs, t, out);
  return out;
}

inline DCCTerm dcc_whnf(const LabelContext& defs, DCCTerm t, StepBudget& budget) {
  for (;;) {
    if (t.is(Kind::App)) {
      DCCTerm fn = dcc_whnf(defs, t.fn(), budget);
      if (fn.is(Kind::Label)) {
        budget.tick();
        t = detail::apply_label(defs, fn, t.arg());
        continue;
      }
      return t.with_children({fn, t.arg()});
    }
    if (t.is(Kind::Add)) {
      DCCTerm l = dcc_whnf(defs, t.lhs(), budget);
      DCCTerm r = dcc_whnf(defs, t.rhs(), budget);
      if (l.is(Kind::NatLit) && r.is(Kind::NatLit)) {
        budget.tick();
        return DCCTerm::nat_lit(l.value() + r.value());
      }
      return t.with_children({l, r});
    }
    return t;
  }
}

inline DCCTerm dcc_whnf(const LabelContext& defs, const DCCTerm& t) {
  StepBudget budget;
  return dcc_whnf(defs, t, budget);
}

inline DCCTerm dcc_normalize(const LabelContext& defs, const DCCTerm& t,
                             StepBudget& budget) {
  DCCTerm w = dcc_whnf(defs, t, budget);
  if (w.arity() == 0) return w;
  std::vector<DCCTerm> kids;
  kids.reserve(w.arity());
  for (std::size_t i = 0; i < w.arity(); ++i)
    kids.push_back(dcc_normalize(defs, w.child(i), budget));
  return w.with_children(std::move(kids));
}

inline DCCTerm dcc_normalize(const LabelContext& defs, const DCCTerm& t,
                             std::size_t budget_limit = kDefaultStepBudget) {
  StepBudget budget(budget_limit);
  return dcc_normalize(defs, t, budget);
}

inline std::vector<DCCTerm> dcc_trace(const LabelContext& defs, const DCCTerm& t,
                                      std::size_t budget_limit = kDefaultStepBudget) {
  StepBudget budget(budget_limit);
  std::vector<DCCTerm> out{t};
  while (auto next = dcc_reduce_step(defs, out.back())) {
    budget.tick();
    out.push_back(*next);
  }
  return out;
}

namespace detail {

inline std::string dcc_fresh_between(const DCCTerm& a, const DCCTerm& b, std::string base) {
  return fresh_name(std::move(base), [&](const std::string& n) {
    return a.has_free(n) || b.has_free(n);
  });
}

// Both arguments are normal forms.
inline bool dcc_conv_nf(const LabelContext& defs, const DCCTerm& a, const DCCTerm& b,
                        StepBudget& budget) {
  if (alpha_eq(a, b)) return true;
  if (a.kind() == b.kind()) {
    switch (a.kind()) {
      case Kind::Pi: {
        if (!dcc_conv_nf(defs, a.dom(), b.dom(), budget)) return false;
        const std::string z = dcc_fresh_between(a, b, a.binder());
        return dcc_conv_nf(defs, subst(a.cod(), a.binder(), DCCTerm::var(z)),
                           subst(b.cod(), b.binder(), DCCTerm::var(z)), budget);
      }
      case Kind::App:
      case Kind::Add:
        return dcc_conv_nf(defs, a.child(0), b.child(0), budget) &&
               dcc_conv_nf(defs, a.child(1), b.child(1), budget);
      case Kind::Label: {
        if (a.label_id() == b.label_id() && a.arity() == b.arity()) {
          bool same = true;
          for (std::size_t i = 0; i < a.arity() && same; ++i)
            same = dcc_conv_nf(defs, a.child(i), b.child(i), budget);
          if (same) return true;
        }
        break;
      }
      default:
        return false;
    }
  }
  const bool label_a = a.is(Kind::Label);
  const bool label_b = b.is(Kind::Label);
  if (!label_a && !label_b) return false;
  const LabelEntry& e = require_label(defs, label_a ? a.label_id() : b.label_id());
  const DCCTerm z = DCCTerm::var(dcc_fresh_between(a, b, e.arg));
  const DCCTerm lhs = dcc_normalize(defs, DCCTerm::app(a, z), budget);
  const DCCTerm rhs = dcc_normalize(defs, DCCTerm::app(b, z), budget);
  return dcc_conv_nf(defs, lhs, rhs, budget);
}

}  // namespace detail

/// Definitional equivalence in DCC: a common normal form, or eta through a
/// label on either side.
inline bool dcc_equiv(const LabelContext& defs, const DCCTerm& a, const DCCTerm& b,
                      std::size_t budget_limit = kDefaultStepBudget) {
  StepBudget budget(budget_limit);
  const DCCTerm na = dcc_normalize(defs, a, budget);
  const DCCTerm nb = dcc_normalize(defs, b, budget);
  return detail::dcc_conv_nf(defs, na, nb, budget);
}

/// Result of a DCC well-formedness check.
struct DccWfReport {
  bool ok = true;
  std::optional<LabelId> label;         // offending label entry
  std::optional<std::size_t> variable;  // offending context entry
  std::string message;

  explicit operator bool() const noexcept { return ok; }
};

/// Type checker for `defs; ctx |- M : A`. Construction validates both
/// contexts.
class DccChecker {
 public:
  DccChecker(LabelContext defs, TypeContext<DCC> ctx) {
    DccWfReport report = build(std::move(defs), ctx);
    if (!report)
      throw KernelError(report.label ? ErrorCode::IllFormedLabelContext
                                     : ErrorCode::IllFormedContext,
                        report.message);
  }

  static DccWfReport validate(LabelContext defs, const TypeContext<DCC>& ctx) {
    DccChecker checker;
    return checker.build(std::move(defs), ctx);
  }

  const LabelContext& defs() const noexcept { return defs_; }
  const TypeContext<DCC>& context() const noexcept { return ctx_; }

  DCCTerm infer(const DCCTerm& t) const { return infer_in(defs_, ctx_, t); }

  void check(const DCCTerm& t, const DCCTerm& expected) const {
    check_in(defs_, ctx_, t, expected, ErrorCode::TypeMismatch);
  }

 private:
  DccChecker() = default;

  DccWfReport build(LabelContext defs, const TypeContext<DCC>& ctx) {
    for (const auto& e : defs) {
      try {
        if (defs_.find(e.id)) throw KernelError(ErrorCode::LabelClash, "defined twice");
        check_entry(defs_, e);
      } catch (const KernelError& err) {
        return DccWfReport{false, e.id, std::nullopt, e.id.str() + ": " + err.what()};
      }
      defs_.push_back(e);
    }
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const auto& entry = ctx[i];
      try {
        if (ctx_.contains(entry.name))
          throw KernelError(ErrorCode::IllFormedContext, "duplicate name");
        expect_universe(defs_, ctx_, entry.type);
      } catch (const KernelError& err) {
        return DccWfReport{false, std::nullopt, i,
                           "entry " + std::to_string(i) + " (" + entry.name +
                               "): " + err.what()};
      }
      ctx_ = ctx_.extended(entry.name, entry.type);
    }
    return {};
  }

  // `prefix; fvs, x:A |- body : ret`, every component a type where needed.
  static void check_entry(const LabelContext& prefix, const LabelEntry& e) {
    TypeContext<DCC> scope;
    for (const auto& fv : e.fvs) {
      if (scope.contains(fv.name))
        throw KernelError(ErrorCode::IllFormedLabelContext,
                          "free variable " + fv.name + " listed twice");
      expect_universe(prefix, scope, fv.type);
      scope = scope.extended(fv.name, fv.type);
    }
    if (scope.contains(e.arg))
      throw KernelError(ErrorCode::IllFormedLabelContext,
                        "argument " + e.arg + " shadows a free variable");
    expect_universe(prefix, scope, e.arg_type);
    scope = scope.extended(e.arg, e.arg_type);
    expect_universe(prefix, scope, e.ret);
    check_in(prefix, scope, e.body, e.ret, ErrorCode::TypeMismatch);
  }

  static std::uint64_t expect_universe(const LabelContext& defs, const TypeContext<DCC>& ctx,
                                       const DCCTerm& t) {
    const DCCTerm ty = infer_in(defs, ctx, t);
    const DCCTerm w = dcc_whnf(defs, ty);
    if (!w.is(Kind::Universe))
      throw KernelError(ErrorCode::NotAType,
                        print(t) + " has type " + print(ty) + ", which is not a universe");
    return w.level();
  }

  static void check_in(const LabelContext& defs, const TypeContext<DCC>& ctx,
                       const DCCTerm& t, const DCCTerm& expected, ErrorCode code) {
    const DCCTerm actual = infer_in(defs, ctx, t);
    if (alpha_eq(actual, expected) || dcc_equiv(defs, actual, expected)) return;
    throw KernelError(code, "expected " + print(dcc_normalize(defs, expected)) + ", got " +
                                print(dcc_normalize(defs, actual)) + " for " + print(t));
  }

  static std::string binder_for(const TypeContext<DCC>& ctx, const std::string& x,
                                const DCCTerm& body) {
    if (!ctx.contains(x)) return x;
    return fresh_name(x, [&](const std::string& n) {
      return ctx.contains(n) || (n != x && body.has_free(n));
    });
  }

  static DCCTerm infer_in(const LabelContext& defs, const TypeContext<DCC>& ctx,
                          const DCCTerm& t) {
    switch (t.kind()) {
      case Kind::Var: {
        auto ty = ctx.lookup(t.name());
        if (!ty) throw KernelError(ErrorCode::UnboundVariable, t.name());
        return *ty;
      }
      case Kind::Universe:
        return DCCTerm::universe(t.level() + 1);
      case Kind::NatType:
        return DCCTerm::universe(0);
      case Kind::NatLit:
        return DCCTerm::nat();
      case Kind::Add:
        for (const DCCTerm& side : {t.lhs(), t.rhs()}) {
          const DCCTerm ty = infer_in(defs, ctx, side);
          if (!dcc_whnf(defs, ty).is(Kind::NatType))
            throw KernelError(ErrorCode::TypeMismatch,
                              "expected Nat, got " + print(ty) + " for " + print(side));
        }
        return DCCTerm::nat();
      case Kind::Pi: {
        const std::uint64_t i = expect_universe(defs, ctx, t.dom());
        const std::string x = binder_for(ctx, t.binder(), t.cod());
        const DCCTerm cod = subst(t.cod(), t.binder(), DCCTerm::var(x));
        const std::uint64_t j = expect_universe(defs, ctx.extended(x, t.dom()), cod);
        return DCCTerm::universe(std::max(i, j));
      }
      case Kind::App: {
        const DCCTerm fty = infer_in(defs, ctx, t.fn());
        const DCCTerm w = dcc_whnf(defs, fty);
        if (!w.is(Kind::Pi))
          throw KernelError(ErrorCode::NotAFunction,
                            print(t.fn()) + " has type " + print(dcc_normalize(defs, fty)));
        check_in(defs, ctx, t.arg(), w.dom(), ErrorCode::TypeMismatch);
        return subst(w.cod(), w.binder(), t.arg());
      }
      case Kind::Label: {
        const LabelEntry& e = detail::require_label(defs, t.label_id());
        const auto closure = t.closure();
        if (closure.size() != e.fvs.size())
          throw KernelError(ErrorCode::ClosureArity,
                            e.id.str() + " expects " + std::to_string(e.fvs.size()) +
                                " closure values, got " + std::to_string(closure.size()));
        Substitution<DCC> s;
        for (std::size_t i = 0; i < closure.size(); ++i) {
          const DCCTerm expected = subst_many(e.fvs[i].type, s);
          try {
            check_in(defs, ctx, closure[i], expected, ErrorCode::ClosureTypeMismatch);
          } catch (const KernelError& err) {
            if (err.code() != ErrorCode::ClosureTypeMismatch) throw;
            throw KernelError(ErrorCode::ClosureTypeMismatch,
                              e.id.str() + " closure value " + std::to_string(i) + " (" +
                                  e.fvs[i].name + "): " + err.what());
          }
          s.emplace_back(e.fvs[i].name, closure[i]);
        }
        return subst_many(DCCTerm::pi(e.arg, e.arg_type, e.ret), s);
      }
      default:
        break;
    }
    throw std::logic_error("unexpected node in a DCC term");
  }

  LabelContext defs_;
  TypeContext<DCC> ctx_;
};

/// The type of `term` under `defs; ctx`.
inline DCCTerm dcc_infer(const LabelContext& defs, const TypeContext<DCC>& ctx,
                         const DCCTerm& term) {
  return DccChecker(defs, ctx).infer(term);
}

inline DccWfReport dcc_wf(const LabelContext& defs, const TypeContext<DCC>& ctx) {
  return DccChecker::validate(defs, ctx);
}

}  // namespace ccdefun

#endif  // CCDEFUN_DCC_HPP
