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

// Executes the commuting diagram between CC reduction, CC^sigma reduction
// and DCC reduction on one concrete reduction sequence.

#ifndef CCDEFUN_DIAGRAM_HPP
#define CCDEFUN_DIAGRAM_HPP

#include <functional>
#include <string>
#include <vector>

#include "ccdefun/cc_check.hpp"
#include "ccdefun/cc_reduce.hpp"
#include "ccdefun/ccs_reduce.hpp"
#include "ccdefun/dcc.hpp"
#include "ccdefun/defun.hpp"
#include "ccdefun/print.hpp"

namespace ccdefun {

struct DiagramReport {
  bool ok = true;
  std::size_t steps = 0;             // CC steps examined
  std::size_t subst_nodes = 0;       // explicit substitutions whose translation was checked
  std::size_t label_steps = 0;       // steps matched by a single DCC step
  std::size_t under_binder = 0;      // steps inside an abstraction, matched by equivalence
  std::string failure;               // first failing edge

  explicit operator bool() const noexcept { return ok; }
};

namespace detail {

class DiagramRun {
 public:
  explicit DiagramRun(const TypeContext<CC>& ctx)
      : checker_(ctx), sigma_checker_(ctx), cc_(minter_), sigma_(minter_) {
    for (const auto& d : checker_.entry_derivations()) ctx_defs_ = label_union(ctx_defs_, cc_.defs(d));
  }

  DiagramReport run(const std::vector<CCTerm>& trace) {
    DiagramReport report;
    if (trace.empty()) return report;
    try {
      for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
        step(report, i, trace[i], trace[i + 1]);
        if (!report.ok) return report;
        ++report.steps;
      }
      end_to_end(report, trace.front(), trace.back());
    } catch (const KernelError& e) {
      fail(report, std::string("kernel error: ") + e.what());
    }
    return report;
  }

 private:
  static void fail(DiagramReport& r, std::string what) {
    if (!r.ok) return;
    r.ok = false;
    r.failure = std::move(what);
  }

  void step(DiagramReport& r, std::size_t i, const CCTerm& m, const CCTerm& next) {
    const std::string at = "step " + std::to_string(i) + ": ";
    const DerivationPtr dm = checker_.infer(m);
    const DerivationPtr dsm = sigma_checker_.infer(sigma_embed(m));
    const DCCTerm tm = cc_.expr(dm);
    const DCCTerm tsm = sigma_.expr(dsm);
    const LabelContext dm_defs = cc_.defs(dm);
    const LabelContext dsm_defs = sigma_.defs(dsm);

    if (!alpha_eq(tsm, tm))
      return fail(r, at + "translation of the embedding differs: " + print(tsm) + " vs " +
                         print(tm));
    if (!label_subset(dsm_defs, dm_defs))
      return fail(r, at + "definitions of the embedding are not a subset");

    const auto redex = cc_redex(m);
    const auto s = ccs_reduce_step(sigma_embed(m));
    if (!redex || !s) return fail(r, at + "no redex in a non-final trace term");

    if (!ccs_equiv(*s, sigma_embed(next)))
      return fail(r, at + "sigma step " + print(*s) + " is not equivalent to " + print(next));
    if (!cc_equiv(erase_substitutions(*s), next))
      return fail(r, at + "erased sigma step disagrees with " + print(next));

    const DerivationPtr ds = sigma_checker_.infer(*s);
    check_substitutions(r, at, ds);
    if (!r.ok) return;

    const LabelContext ds_defs = sigma_.defs(ds);
    const LabelContext before = label_union(ctx_defs_, dsm_defs);
    const std::vector<LabelId> enclosing =
        redex->under_lambda ? enclosing_labels(ds, redex->steps) : std::vector<LabelId>{};
    for (const auto& e : ds_defs) {
      const LabelEntry* old = before.find(e.id);
      if (old && same_definition(*old, e)) continue;
      if (std::find(enclosing.begin(), enclosing.end(), e.id) != enclosing.end()) continue;
      return fail(r, at + "reduct introduces the definition " + describe(e));
    }

    const DCCTerm ts = sigma_.expr(ds);
    const LabelContext delta = label_union(label_union(ctx_defs_, dsm_defs), ds_defs);
    if (redex->under_lambda) {
      if (!dcc_equiv(delta, tsm, ts))
        return fail(r, at + "translations before and after a step under a binder differ");
      ++r.under_binder;
    } else {
      bool matched = false;
      for (const DCCTerm& k : dcc_reducts(delta, tsm)) {
        if (alpha_eq(k, ts)) {
          matched = true;
          break;
        }
      }
      if (!matched)
        return fail(r, at + "no single DCC step from " + print(tsm) + " reaches " + print(ts));
      ++r.label_steps;
    }

    const DerivationPtr dn = checker_.infer(next);
    const LabelContext all = label_union(delta, cc_.defs(dn));
    if (!dcc_equiv(all, ts, cc_.expr(dn)))
      return fail(r, at + "translation of the sigma reduct is not equivalent to that of " +
                         print(next));
  }

  // Labels of the abstractions on the path from the root to the redex.
  std::vector<LabelId> enclosing_labels(DerivationPtr d, const std::vector<std::size_t>& path) {
    std::vector<LabelId> out;
    for (std::size_t step : path) {
      while (d->rule == Rule::Equiv) d = d->children[0];
      if (d->rule == Rule::Lambda) out.push_back(sigma_.expr(d).label_id());
      std::size_t k = step;
      if (d->rule == Rule::Subst) k = step == 0 ? 1 : 0;
      if (d->rule == Rule::Var || k >= d->children.size()) break;
      d = d->children[k];
    }
    return out;
  }

  static std::string describe(const LabelEntry& e) {
    std::string out = e.id.str() + " {";
    for (std::size_t i = 0; i < e.fvs.size(); ++i)
      out += (i ? ", " : "") + e.fvs[i].name + " : " + print(e.fvs[i].type);
    return out + "} (" + e.arg + " : " + print(e.arg_type) + ") -> " + print(e.ret) +
           " := " + print(e.body);
  }

  void check_substitutions(DiagramReport& r, const std::string& at, const DerivationPtr& d) {
    std::vector<DerivationPtr> work{d};
    std::vector<const Derivation*> seen;
    while (!work.empty() && r.ok) {
      DerivationPtr cur = work.back();
      work.pop_back();
      if (std::find(seen.begin(), seen.end(), cur.get()) != seen.end()) continue;
      seen.push_back(cur.get());
      if (cur->rule == Rule::Subst) {
        const DCCTerm lhs = sigma_.expr(cur);
        const DCCTerm rhs = subst(sigma_.expr(cur->children[1]), cur->subject.binder(),
                                  sigma_.expr(cur->children[0]));
        if (!alpha_eq(lhs, rhs))
          return fail(r, at + "translation does not commute with " + print(cur->subject));
        ++r.subst_nodes;
      }
      for (const auto& c : cur->children) work.push_back(c);
    }
  }

  void end_to_end(DiagramReport& r, const CCTerm& m, const CCTerm& n) {
    const DerivationPtr dm = checker_.infer(m);
    const DerivationPtr dn = checker_.infer(n);
    const LabelContext delta =
        label_union(label_union(ctx_defs_, cc_.defs(dm)), cc_.defs(dn));
    const DCCTerm lhs = dcc_normalize(delta, cc_.expr(dm));
    if (!dcc_equiv(delta, lhs, cc_.expr(dn)))
      fail(r, "end to end: " + print(lhs) + " is not equivalent to the translated normal form");
  }

  LabelMinter minter_;
  Checker checker_;
  SigmaChecker sigma_checker_;
  Defunctionalizer cc_;
  SigmaDefunctionalizer sigma_;
  LabelContext ctx_defs_;
};

}  // namespace detail

/// Checks every edge of the diagram for the given CC reduction sequence
/// (each element one leftmost-outermost step from the previous).
inline DiagramReport check_diagram(const TypeContext<CC>& ctx, const std::vector<CCTerm>& trace) {
  return detail::DiagramRun(ctx).run(trace);
}

/// As above, for the full trace of `term`.
inline DiagramReport check_diagram(const TypeContext<CC>& ctx, const CCTerm& term,
                                   std::size_t budget_limit = kDefaultStepBudget) {
  return check_diagram(ctx, cc_trace(term, budget_limit));
}

}  // namespace ccdefun

#endif  // CCDEFUN_DIAGRAM_HPP
