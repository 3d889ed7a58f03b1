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

// CC reduction: beta plus delta on two Nat literals, normalization, and the
// algorithmic definitional equivalence (normalize, compare up to alpha,
// bridge with eta when exactly one side is an abstraction).

#ifndef CCDEFUN_CC_REDUCE_HPP
#define CCDEFUN_CC_REDUCE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ccdefun/error.hpp"
#include "ccdefun/term.hpp"

namespace ccdefun {

inline constexpr std::size_t kDefaultStepBudget = 1'000'000;

/// Counts reduction steps and fails loudly once exhausted. Well-typed input
/// never gets there.
class StepBudget {
 public:
  explicit StepBudget(std::size_t limit = kDefaultStepBudget) : remaining_(limit) {}

  void tick() {
    if (remaining_ == 0)
      throw KernelError(ErrorCode::StepBudgetExceeded,
                        "normalization did not terminate within the budget");
    --remaining_;
  }
  std::size_t remaining() const noexcept { return remaining_; }

 private:
  std::size_t remaining_;
};

/// Position of a redex: child indices from the root.
struct RedexPath {
  std::vector<std::size_t> steps;
  bool under_lambda = false;
};

namespace detail {

inline std::optional<CCTerm> cc_contract(const CCTerm& t) {
  if (t.is(Kind::App) && t.fn().is(Kind::Lam)) {
    const CCTerm lam = t.fn();
    return subst(lam.body(), lam.binder(), t.arg());
  }
  if (t.is(Kind::Add) && t.lhs().is(Kind::NatLit) && t.rhs().is(Kind::NatLit))
    return CCTerm::nat_lit(t.lhs().value() + t.rhs().value());
  return std::nullopt;
}

inline std::optional<RedexPath> cc_find_redex(const CCTerm& t) {
  if (cc_contract(t)) return RedexPath{};
  if (t.is(Kind::ESubst)) return std::nullopt;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (auto p = cc_find_redex(t.child(i))) {
      p->steps.insert(p->steps.begin(), i);
      if (t.is(Kind::Lam)) p->under_lambda = true;
      return p;
    }
  }
  return std::nullopt;
}

inline CCTerm cc_rewrite_at(const CCTerm& t, std::span<const std::size_t> path) {
  if (path.empty()) return *cc_contract(t);
  std::vector<CCTerm> kids;
  for (std::size_t i = 0; i < t.arity(); ++i)
    kids.push_back(i == path[0] ? cc_rewrite_at(t.child(i), path.subspan(1))
                                : t.child(i));
  return t.with_children(std::move(kids));
}

}  // namespace detail

/// Leftmost-outermost redex position, if any.
inline std::optional<RedexPath> cc_redex(const CCTerm& t) {
  return detail::cc_find_redex(t);
}

/// One leftmost-outermost beta/delta step, or nothing on a normal form.
inline std::optional<CCTerm> cc_reduce_step(const CCTerm& t) {
  auto path = detail::cc_find_redex(t);
  if (!path) return std::nullopt;
  return detail::cc_rewrite_at(t, path->steps);
}

/// Weak-head normal form.
inline CCTerm cc_whnf(CCTerm t, StepBudget& budget) {
  for (;;) {
    if (t.is(Kind::App)) {
      CCTerm fn = cc_whnf(t.fn(), budget);
      if (fn.is(Kind::Lam)) {
        budget.tick();
        t = subst(fn.body(), fn.binder(), t.arg());
        continue;
      }
      return t.with_children({fn, t.arg()});
    }
    if (t.is(Kind::Add)) {
      CCTerm l = cc_whnf(t.lhs(), budget);
      CCTerm r = cc_whnf(t.rhs(), budget);
      if (l.is(Kind::NatLit) && r.is(Kind::NatLit)) {
        budget.tick();
        return CCTerm::nat_lit(l.value() + r.value());
      }
      return t.with_children({l, r});
    }
    return t;
  }
}

inline CCTerm cc_whnf(const CCTerm& t) {
  StepBudget budget;
  return cc_whnf(t, budget);
}

/// Beta/delta normal form. Same result as iterating `cc_reduce_step`.
inline CCTerm cc_normalize(const CCTerm& t, StepBudget& budget) {
  CCTerm w = cc_whnf(t, budget);
  if (w.arity() == 0 || w.is(Kind::ESubst)) return w;
  std::vector<CCTerm> kids;
  kids.reserve(w.arity());
  for (std::size_t i = 0; i < w.arity(); ++i)
    kids.push_back(cc_normalize(w.child(i), budget));
  return w.with_children(std::move(kids));
}

inline CCTerm cc_normalize(const CCTerm& t,
                           std::size_t budget_limit = kDefaultStepBudget) {
  StepBudget budget(budget_limit);
  return cc_normalize(t, budget);
}

/// The full leftmost-outermost reduction sequence, starting with `t`.
inline std::vector<CCTerm> cc_trace(const CCTerm& t,
                                    std::size_t budget_limit = kDefaultStepBudget) {
  StepBudget budget(budget_limit);
  std::vector<CCTerm> out{t};
  while (auto next = cc_reduce_step(out.back())) {
    budget.tick();
    out.push_back(*next);
  }
  return out;
}

namespace detail {

inline std::string fresh_between(const CCTerm& a, const CCTerm& b,
                                 std::string base = "x") {
  return fresh_name(std::move(base), [&](const std::string& n) {
    return a.has_free(n) || b.has_free(n);
  });
}

// Both arguments are normal forms.
inline bool cc_conv_nf(const CCTerm& a, const CCTerm& b, StepBudget& budget) {
  if (alpha_eq(a, b)) return true;
  const bool lam_a = a.is(Kind::Lam);
  const bool lam_b = b.is(Kind::Lam);
  if (lam_a || lam_b) {
    const std::string z = fresh_between(a, b, lam_a ? a.binder() : b.binder());
    const CCTerm var = CCTerm::var(z);
    const CCTerm lhs = lam_a ? subst(a.body(), a.binder(), var) : CCTerm::app(a, var);
    const CCTerm rhs = lam_b ? subst(b.body(), b.binder(), var) : CCTerm::app(b, var);
    return cc_conv_nf(lhs, rhs, budget);
  }
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Pi: {
      if (!cc_conv_nf(a.dom(), b.dom(), budget)) return false;
      const std::string z = fresh_between(a, b, a.binder());
      return cc_conv_nf(subst(a.cod(), a.binder(), CCTerm::var(z)),
                        subst(b.cod(), b.binder(), CCTerm::var(z)), budget);
    }
    case Kind::App:
    case Kind::Add:
      return cc_conv_nf(a.child(0), b.child(0), budget) &&
             cc_conv_nf(a.child(1), b.child(1), budget);
    default:
      return false;
  }
}

}  // namespace detail

/// Definitional equivalence: reduce to a common form, or eta.
inline bool cc_equiv(const CCTerm& a, const CCTerm& b,
                     std::size_t budget_limit = kDefaultStepBudget) {
  StepBudget budget(budget_limit);
  const CCTerm na = cc_normalize(a, budget);
  const CCTerm nb = cc_normalize(b, budget);
  return detail::cc_conv_nf(na, nb, budget);
}

}  // namespace ccdefun

#endif  // CCDEFUN_CC_REDUCE_HPP
