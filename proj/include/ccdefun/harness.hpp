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

// Executable metatheory: translation properties checked on concrete
// judgements, and exhaustive enumeration of small well-typed terms.

#ifndef CCDEFUN_HARNESS_HPP
#define CCDEFUN_HARNESS_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ccdefun/cc_check.hpp"
#include "ccdefun/cc_reduce.hpp"
#include "ccdefun/dcc.hpp"
#include "ccdefun/defun.hpp"
#include "ccdefun/diagram.hpp"
#include "ccdefun/print.hpp"
#include "ccdefun/refun.hpp"

namespace ccdefun {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;

  explicit operator bool() const noexcept { return ok; }
};

struct HarnessReport {
  std::vector<CheckResult> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }

  void add(CheckResult c) { checks.push_back(std::move(c)); }

  /// One line per check: `PASS name` or `FAIL name: detail`.
  std::string text(const std::string& prefix = "") const {
    std::string out;
    for (const auto& c : checks) {
      out += prefix + (c.ok ? "PASS " : "FAIL ") + c.name;
      if (!c.detail.empty()) out += ": " + c.detail;
      out += "\n";
    }
    return out;
  }
};

namespace detail {

template <class F>
CheckResult guarded(std::string name, F&& body) {
  CheckResult r{std::move(name), true, {}};
  try {
    body(r);
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = e.what();
  }
  return r;
}

inline void refute(CheckResult& r, std::string detail) {
  if (!r.ok) return;
  r.ok = false;
  r.detail = std::move(detail);
}

inline bool is_ground(const TypeContext<CC>& ctx, const CCTerm& term) {
  return cc_whnf(Checker(ctx).infer(term)->type).is(Kind::NatType);
}

/// Canonical forms of closed DCC values.
inline bool is_dcc_value(const DCCTerm& t) {
  switch (t.kind()) {
    case Kind::Label:
    case Kind::Pi:
    case Kind::Universe:
    case Kind::NatType:
    case Kind::NatLit:
      return true;
    default:
      return false;
  }
}

}  // namespace detail

/// `[[Delta_Gamma]] ∪ [[M]]_d; [[Gamma]] |- [[M]] : [[A]]` in DCC, with the
/// translated label context and type context well formed and the type's
/// definitions contained in those of the judgement.
inline CheckResult check_type_preservation(const TypeContext<CC>& ctx, const CCTerm& term) {
  return detail::guarded("type preservation", [&](CheckResult& r) {
    const TranslationResult t = translate_program(ctx, term);
    const LabelContext delta = t.all_defs();
    const DccWfReport wf = dcc_wf(delta, t.dcc_ctx);
    if (!wf) return detail::refute(r, "translated context: " + wf.message);
    if (!label_subset(t.type_defs, delta))
      return detail::refute(r, "definitions of the type are not among those of the term");
    const DCCTerm inferred = dcc_infer(delta, t.dcc_ctx, t.term);
    if (!dcc_equiv(delta, inferred, t.type))
      detail::refute(r, print(t.term) + " has type " + print(inferred) + ", expected " +
                            print(t.type));
  });
}

/// `dccNormalize([[M]])` agrees with `[[ccNormalize(M)]]` under
/// `Delta_Gamma ∪ Delta_M ∪ Delta_N`, and the CC trace passes the
/// commuting diagram. At type Nat the two normal forms must be identical.
inline CheckResult check_reduction_preservation(const TypeContext<CC>& ctx, const CCTerm& term,
                                                std::size_t budget = kDefaultStepBudget) {
  return detail::guarded("reduction preservation", [&](CheckResult& r) {
    const std::vector<CCTerm> trace = cc_trace(term, budget);
    const DiagramReport diagram = check_diagram(ctx, trace);
    if (!diagram) return detail::refute(r, "diagram: " + diagram.failure);

    LabelMinter minter;
    Defunctionalizer df(minter);
    const Checker checker(ctx);
    LabelContext delta;
    for (const auto& d : checker.entry_derivations()) delta = label_union(delta, df.defs(d));
    const DerivationPtr dm = checker.infer(trace.front());
    const DerivationPtr dn = checker.infer(trace.back());
    delta = label_union(label_union(delta, df.defs(dm)), df.defs(dn));
    const DCCTerm lhs = dcc_normalize(delta, df.expr(dm), budget);
    const DCCTerm rhs = df.expr(dn);
    if (!dcc_equiv(delta, lhs, rhs))
      return detail::refute(r, print(lhs) + " is not equivalent to " + print(rhs));
    if (cc_whnf(dm->type).is(Kind::NatType)) {
      if (!alpha_eq(lhs, rhs))
        return detail::refute(r, "ground normal forms differ: " + print(lhs) + " vs " +
                                     print(rhs));
      if (!df.defs(dn).empty())
        detail::refute(r, "the ground value " + print(rhs) + " needs label definitions");
    }
  });
}

/// `ccEquiv(refun([[M]]), M)`, and the refunctionalized judgement checks in
/// CC at the refunctionalized type.
inline CheckResult check_round_trip(const TypeContext<CC>& ctx, const CCTerm& term) {
  return detail::guarded("round trip", [&](CheckResult& r) {
    const TranslationResult t = translate_program(ctx, term);
    const LabelContext delta = label_union(t.all_defs(), t.type_defs);
    Refunctionalizer back(delta);
    const CCTerm m = back.expr(t.term);
    if (!cc_equiv(m, term))
      return detail::refute(r, print(m) + " is not equivalent to " + print(term));
    const TypeContext<CC> g = back.context(t.dcc_ctx);
    for (std::size_t i = 0; i < g.size(); ++i)
      if (!cc_equiv(g[i].type, ctx[i].type))
        return detail::refute(r, "context entry " + g[i].name + " does not round trip");
    const CCTerm a = back.expr(t.type);
    const DerivationPtr d = Checker(g).infer(m);
    if (!cc_equiv(d->type, a))
      detail::refute(r, "refunctionalized term has type " + print(d->type) + ", expected " +
                            print(a));
  });
}

/// For a closed term: `[[M]]` normalizes within the budget to a value.
inline CheckResult check_type_safety(const CCTerm& term,
                                     std::size_t budget = kDefaultStepBudget) {
  return detail::guarded("type safety", [&](CheckResult& r) {
    const TranslationResult t = translate_program({}, term);
    const DCCTerm v = dcc_normalize(t.all_defs(), t.term, budget);
    if (!detail::is_dcc_value(v)) detail::refute(r, print(v) + " is stuck");
  });
}

/// Appending a fresh variable to Gamma and an unused label to Delta leaves
/// the translated judgement derivable with the same translation.
inline CheckResult check_weakening(const TypeContext<CC>& ctx, const CCTerm& term) {
  return detail::guarded("weakening", [&](CheckResult& r) {
    const TranslationResult t = translate_program(ctx, term);
    std::vector<std::string> used = ctx.names();
    for (const auto& v : free_vars(term)) used.push_back(v);
    const std::string w = fresh_name("w", [&](const std::string& n) {
      return std::find(used.begin(), used.end(), n) != used.end();
    });
    const TranslationResult tw = translate_program(ctx.extended(w, CCTerm::nat()), term);
    if (!alpha_eq(tw.term, t.term) || !label_subset(tw.all_defs(), t.all_defs()) ||
        !label_subset(t.all_defs(), tw.all_defs()))
      return detail::refute(r, "a fresh variable changes the translation");

    LabelContext delta = t.all_defs();
    std::uint32_t next = 0;
    for (const auto& e : delta) next = std::max(next, e.id.index + 1);
    delta.push_back(LabelEntry{LabelId{next}, {}, "x", DCCTerm::nat(), DCCTerm::var("x"),
                               DCCTerm::nat()});
    const TypeContext<DCC> g = t.dcc_ctx.extended(w, DCCTerm::nat());
    const DccWfReport wf = dcc_wf(delta, g);
    if (!wf) return detail::refute(r, "weakened context: " + wf.message);
    if (!dcc_equiv(delta, dcc_infer(delta, g, t.term), t.type))
      detail::refute(r, "the weakened judgement has a different type");
  });
}

/// All applicable checks for one judgement.
inline HarnessReport verify_judgement(const TypeContext<CC>& ctx, const CCTerm& term,
                                      std::size_t budget = kDefaultStepBudget) {
  HarnessReport report;
  report.add(check_type_preservation(ctx, term));
  report.add(check_round_trip(ctx, term));
  report.add(check_reduction_preservation(ctx, term, budget));
  if (ctx.empty()) report.add(check_type_safety(term, budget));
  report.add(check_weakening(ctx, term));
  return report;
}

/// The fixed context small terms are enumerated in.
inline TypeContext<CC> enumeration_context() {
  const CCTerm a = CCTerm::var("A");
  return TypeContext<CC>{{"A", CCTerm::universe(0)},
                         {"P", CCTerm::pi("x", a, CCTerm::universe(0))},
                         {"a", a}};
}

inline constexpr std::size_t kMaxEnumerationBudget = 8;

/// Every term of at most `budget` nodes over `enumeration_context()` that
/// the CC checker accepts, up to alpha-equivalence. Binders at depth d are
/// named `x<d>`; leaves are context variables, bound variables, `Type 0`,
/// `Nat` and `1`. Ordered by size, then by construction.
class SmallTermEnumerator {
 public:
  explicit SmallTermEnumerator(std::size_t budget) : budget_(budget) {
    if (budget > kMaxEnumerationBudget)
      throw std::invalid_argument("enumeration budget exceeds " +
                                  std::to_string(kMaxEnumerationBudget));
  }

  /// Raw terms of exactly `size` nodes at binder depth `depth`.
  const std::vector<CCTerm>& exact(std::size_t size, std::size_t depth) {
    const auto key = std::make_pair(size, depth);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<CCTerm> out;
    if (size == 1) {
      for (const auto& e : enumeration_context()) out.push_back(CCTerm::var(e.name));
      for (std::size_t i = 0; i < depth; ++i) out.push_back(CCTerm::var(binder(i)));
      out.push_back(CCTerm::universe(0));
      out.push_back(CCTerm::nat());
      out.push_back(CCTerm::nat_lit(1));
    } else {
      for (std::size_t l = 1; l + 1 < size; ++l) {
        const std::size_t rsize = size - 1 - l;
        const std::vector<CCTerm>& left = exact(l, depth);
        const std::vector<CCTerm>& inner = exact(rsize, depth + 1);
        for (const auto& dom : left)
          for (const auto& body : inner) out.push_back(CCTerm::lam(binder(depth), dom, body));
        for (const auto& dom : left)
          for (const auto& cod : inner) out.push_back(CCTerm::pi(binder(depth), dom, cod));
        const std::vector<CCTerm>& right = exact(rsize, depth);
        for (const auto& f : left)
          for (const auto& x : right) out.push_back(CCTerm::app(f, x));
        for (const auto& x : left)
          for (const auto& y : right) out.push_back(CCTerm::add(x, y));
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  /// Well-typed closed-over-the-pool terms of size at most the budget.
  std::vector<CCTerm> well_typed() {
    const Checker checker(enumeration_context());
    std::vector<CCTerm> out;
    for (std::size_t size = 1; size <= budget_; ++size) {
      for (const auto& t : exact(size, 0)) {
        try {
          checker.infer(t);
          out.push_back(t);
        } catch (const KernelError&) {
        }
      }
    }
    return out;
  }

 private:
  static std::string binder(std::size_t depth) { return "x" + std::to_string(depth); }

  std::size_t budget_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<CCTerm>> memo_;
};

inline std::vector<CCTerm> enumerate_small_terms(std::size_t budget) {
  return SmallTermEnumerator(budget).well_typed();
}

}  // namespace ccdefun

#endif  // CCDEFUN_HARNESS_HPP
