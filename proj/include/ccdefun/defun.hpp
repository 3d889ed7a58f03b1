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

// The defunctionalization translation over typing derivations: the
// expression transformation (terms) and function-definition extraction
// (label contexts). Works on CC and CC^sigma derivations alike.

#ifndef CCDEFUN_DEFUN_HPP
#define CCDEFUN_DEFUN_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ccdefun/cc_check.hpp"
#include "ccdefun/context.hpp"
#include "ccdefun/dcc.hpp"
#include "ccdefun/error.hpp"
#include "ccdefun/term.hpp"

namespace ccdefun {

/// Assigns one label per definition. Two definitions share a label when
/// their bodies agree up to alpha and their type annotations agree after
/// normalization; the first one minted is kept. Ids are dense in minting
/// order.
class LabelMinter {
 public:
  LabelId mint(LabelEntry entry) {
    std::string key = canonical_key(normalized(entry));
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
    const LabelId id{static_cast<std::uint32_t>(entries_.size())};
    entry.id = id;
    entries_.push_back(std::move(entry));
    ids_.emplace(std::move(key), id);
    return id;
  }

  const LabelEntry& entry(LabelId id) const { return entries_[id.index]; }
  const LabelContext& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  LabelEntry normalized(const LabelEntry& e) const {
    std::vector<ContextEntry<DCC>> fvs;
    for (const auto& fv : e.fvs)
      fvs.push_back(ContextEntry<DCC>{fv.name, dcc_normalize(entries_, fv.type)});
    return LabelEntry{e.id, TypeContext<DCC>(std::move(fvs)), e.arg,
                      dcc_normalize(entries_, e.arg_type), e.body,
                      dcc_normalize(entries_, e.ret)};
  }

  std::unordered_map<std::string, LabelId> ids_;
  LabelContext entries_;
};

template <class Rules>
class BasicDefunctionalizer {
 public:
  explicit BasicDefunctionalizer(LabelMinter& minter) : minter_(minter) {}

  /// The expression transformation.
  DCCTerm expr(const DerivationPtr& d) {
    if (auto it = exprs_.find(d.get()); it != exprs_.end()) return it->second.second;
    DCCTerm out = expr_uncached(d);
    exprs_.emplace(d.get(), std::make_pair(d, out));
    return out;
  }

  /// The function definitions of the whole derivation.
  LabelContext defs(const DerivationPtr& d) {
    if (auto it = defs_.find(d.get()); it != defs_.end()) return it->second.second;
    LabelContext out = defs_uncached(d);
    defs_.emplace(d.get(), std::make_pair(d, out));
    return out;
  }

  /// A derivation of `at.context |- ty : U`, inferred once per
  /// (context, type) pair.
  DerivationPtr type_derivation(const Derivation& at, const CCTerm& ty) {
    const auto key = std::make_pair(static_cast<const void*>(at.context_types.get()),
                                    static_cast<const void*>(ty.node().get()));
    if (auto it = types_.find(key); it != types_.end()) return it->second.derivation;
    DerivationPtr d = BasicChecker<Rules>::at(at).infer(ty);
    types_.emplace(key, Pinned{at.context_types, ty, d});
    return d;
  }

  DCCTerm type_expr(const Derivation& at, const CCTerm& ty) {
    return expr(type_derivation(at, ty));
  }

  LabelContext type_defs(const Derivation& at, const CCTerm& ty) {
    return defs(type_derivation(at, ty));
  }

  LabelMinter& minter() noexcept { return minter_; }

 private:
  struct Pinned {
    ContextDerivations context;
    CCTerm type;
    DerivationPtr derivation;
  };

  const DerivationPtr& child(const DerivationPtr& d, std::size_t i) const {
    return d->children.at(i);
  }

  DCCTerm expr_uncached(const DerivationPtr& d) {
    const CCTerm& t = d->subject;
    switch (d->rule) {
      case Rule::Var:
        return DCCTerm::var(t.name());
      case Rule::Universe:
        return DCCTerm::universe(t.level());
      case Rule::Nat:
        return DCCTerm::nat();
      case Rule::NatLit:
        return DCCTerm::nat_lit(t.value());
      case Rule::Add:
        return DCCTerm::add(expr(child(d, 0)), expr(child(d, 1)));
      case Rule::Pi:
        return DCCTerm::pi(t.binder(), expr(child(d, 0)), expr(child(d, 1)));
      case Rule::Apply:
        return DCCTerm::app(expr(child(d, 0)), expr(child(d, 1)));
      case Rule::Equiv:
        return expr(child(d, 0));
      case Rule::Lambda: {
        const auto& [id, names] = lambda_label(d);
        std::vector<DCCTerm> closure;
        for (const auto& x : names) closure.push_back(DCCTerm::var(x));
        return DCCTerm::label(id, closure);
      }
      case Rule::Subst:
        return subst(expr(child(d, 1)), t.binder(), expr(child(d, 0)));
    }
    throw std::logic_error("unknown rule");
  }

  LabelContext defs_uncached(const DerivationPtr& d) {
    switch (d->rule) {
      case Rule::Universe:
      case Rule::Nat:
      case Rule::NatLit:
        return {};
      case Rule::Var:
        return defs(child(d, 0));
      case Rule::Pi:
      case Rule::Add:
        return label_union(defs(child(d, 0)), defs(child(d, 1)));
      case Rule::Subst:
        return label_union(defs(child(d, 1)), defs(child(d, 0)));
      case Rule::Apply:
        return label_union(label_union(defs(child(d, 0)), defs(child(d, 1))),
                           type_defs(*d, d->type));
      case Rule::Equiv:
        return label_union(defs(child(d, 0)), type_defs(*d, d->type));
      case Rule::Lambda: {
        LabelContext out = label_union(defs(child(d, 0)), defs(child(d, 1)));
        const LabelId id = lambda_label(d).first;
        return label_union(out, LabelContext({minter_.entry(id)}));
      }
    }
    throw std::logic_error("unknown rule");
  }

  // Mints (or finds) the label of a ty-Lambda node, with the node's own
  // closure variable names.
  const std::pair<LabelId, std::vector<std::string>>& lambda_label(const DerivationPtr& d) {
    if (auto it = lambdas_.find(d.get()); it != lambdas_.end()) return it->second;
    const TypeContext<CC> telescope = fv_telescope(*d);
    std::vector<ContextEntry<DCC>> fvs;
    for (const auto& entry : telescope) {
      const std::size_t i = *d->context.index_of(entry.name);
      fvs.push_back(ContextEntry<DCC>{entry.name, expr(d->context_types->types.at(i))});
    }
    const DerivationPtr& body = child(d, 1);
    LabelEntry entry{LabelId{0},
                     TypeContext<DCC>(std::move(fvs)),
                     d->subject.binder(),
                     expr(child(d, 0)),
                     expr(body),
                     type_expr(*body, body->type)};
    const LabelId id = minter_.mint(std::move(entry));
    pinned_.push_back(d);
    return lambdas_.emplace(d.get(), std::make_pair(id, telescope.names())).first->second;
  }

  LabelMinter& minter_;
  std::unordered_map<const Derivation*, std::pair<DerivationPtr, DCCTerm>> exprs_;
  std::unordered_map<const Derivation*, std::pair<DerivationPtr, LabelContext>> defs_;
  std::unordered_map<const Derivation*, std::pair<LabelId, std::vector<std::string>>> lambdas_;
  std::vector<DerivationPtr> pinned_;
  std::map<std::pair<const void*, const void*>, Pinned> types_;
};

using Defunctionalizer = BasicDefunctionalizer<CCRules>;
using SigmaDefunctionalizer = BasicDefunctionalizer<CCSRules>;

/// Renames label ids to preorder discovery order: starting from the given
/// roots, each newly seen label gets the next id and its definition is
/// searched before moving on. Labels never reached keep context order
/// after the discovered ones.
class LabelRenumbering {
 public:
  LabelRenumbering(const LabelContext& defs, const std::vector<DCCTerm>& roots) {
    for (const auto& root : roots) visit(defs, root);
    for (const auto& e : defs) discover(defs, e.id);
  }

  LabelId operator()(LabelId id) const {
    auto it = map_.find(id.index);
    return it == map_.end() ? id : LabelId{it->second};
  }

  DCCTerm apply(const DCCTerm& t) const {
    return map_labels(t, [&](LabelId id, const std::vector<DCCTerm>& kids) {
      return DCCTerm::label((*this)(id), kids);
    });
  }

  LabelContext apply(const LabelContext& defs) const {
    LabelContext out;
    for (const auto& e : defs) {
      std::vector<ContextEntry<DCC>> fvs;
      for (const auto& fv : e.fvs) fvs.push_back(ContextEntry<DCC>{fv.name, apply(fv.type)});
      out.push_back(LabelEntry{(*this)(e.id), TypeContext<DCC>(std::move(fvs)), e.arg,
                               apply(e.arg_type), apply(e.body), apply(e.ret)});
    }
    return out;
  }

  TypeContext<DCC> apply(const TypeContext<DCC>& ctx) const {
    std::vector<ContextEntry<DCC>> out;
    for (const auto& entry : ctx) out.push_back(ContextEntry<DCC>{entry.name, apply(entry.type)});
    return TypeContext<DCC>(std::move(out));
  }

 private:
  void visit(const LabelContext& defs, const DCCTerm& t) {
    if (t.is(Kind::Label)) discover(defs, t.label_id());
    for (std::size_t i = 0; i < t.arity(); ++i) visit(defs, t.child(i));
  }

  void discover(const LabelContext& defs, LabelId id) {
    if (map_.count(id.index)) return;
    map_.emplace(id.index, next_++);
    const LabelEntry* e = defs.find(id);
    if (!e) return;
    for (const auto& fv : e->fvs) visit(defs, fv.type);
    visit(defs, e->arg_type);
    visit(defs, e->body);
    visit(defs, e->ret);
  }

  std::map<std::uint32_t, std::uint32_t> map_;
  std::uint32_t next_ = 0;
};

/// The translation of a judgement `Gamma |- M : A` and of Gamma itself.
struct TranslationResult {
  DCCTerm term;               // [[M]]
  DCCTerm type;               // [[A]]
  LabelContext defs;          // [[M]]_d
  LabelContext ctx_defs;      // [[Gamma]]_d
  TypeContext<DCC> dcc_ctx;   // [[Gamma]]
  LabelContext type_defs;     // [[A]]_d

  /// `ctx_defs` united with `defs`, the label context the term checks in.
  LabelContext all_defs() const { return label_union(ctx_defs, defs); }
};

namespace detail {

struct RawContext {
  TypeContext<DCC> ctx;
  LabelContext defs;
};

template <class Rules>
RawContext defun_context_raw(BasicDefunctionalizer<Rules>& df,
                             const BasicChecker<Rules>& checker) {
  RawContext out;
  std::vector<ContextEntry<DCC>> entries;
  for (std::size_t i = 0; i < checker.context().size(); ++i) {
    const DerivationPtr& d = checker.entry_derivations()[i];
    entries.push_back(ContextEntry<DCC>{checker.context()[i].name, df.expr(d)});
    out.defs = label_union(out.defs, df.defs(d));
  }
  out.ctx = TypeContext<DCC>(std::move(entries));
  return out;
}

inline TranslationResult renumbered(TranslationResult r) {
  std::vector<DCCTerm> roots{r.term, r.type};
  for (const auto& e : r.dcc_ctx) roots.push_back(e.type);
  const LabelRenumbering ren(label_union(r.all_defs(), r.type_defs), roots);
  return TranslationResult{ren.apply(r.term),     ren.apply(r.type),
                           ren.apply(r.defs),     ren.apply(r.ctx_defs),
                           ren.apply(r.dcc_ctx),  ren.apply(r.type_defs)};
}

}  // namespace detail

/// Translates `ctx` and `term` in one run with shared label minting.
/// Labels are numbered in discovery order from the term.
inline TranslationResult translate_program(const TypeContext<CC>& ctx, const CCTerm& term) {
  LabelMinter minter;
  Defunctionalizer df(minter);
  const Checker checker(ctx);
  const auto raw = detail::defun_context_raw(df, checker);
  const DerivationPtr d = checker.infer(term);
  return detail::renumbered(TranslationResult{df.expr(d), df.type_expr(*d, d->type),
                                              df.defs(d), raw.defs, raw.ctx,
                                              df.type_defs(*d, d->type)});
}

/// Translates only a context: `([[Gamma]], [[Gamma]]_d)`.
inline std::pair<TypeContext<DCC>, LabelContext> defun_context(const TypeContext<CC>& ctx) {
  LabelMinter minter;
  Defunctionalizer df(minter);
  const auto raw = detail::defun_context_raw(df, Checker(ctx));
  std::vector<DCCTerm> roots;
  for (const auto& e : raw.ctx) roots.push_back(e.type);
  const LabelRenumbering ren(raw.defs, roots);
  return {ren.apply(raw.ctx), ren.apply(raw.defs)};
}

namespace detail {

inline TranslationResult translate_derivation(const DerivationPtr& d) {
  LabelMinter minter;
  Defunctionalizer df(minter);
  return renumbered(TranslationResult{df.expr(d), df.type_expr(*d, d->type), df.defs(d), {},
                                      {}, df.type_defs(*d, d->type)});
}

}  // namespace detail

/// `[[M]]` for the derivation of `Gamma |- M : A`.
inline DCCTerm defun_expr(const DerivationPtr& d) {
  return detail::translate_derivation(d).term;
}

/// `[[M]]_d` for the derivation of `Gamma |- M : A`, numbered consistently
/// with `defun_expr`.
inline LabelContext defun_defs(const DerivationPtr& d) {
  return detail::translate_derivation(d).defs;
}

}  // namespace ccdefun

#endif  // CCDEFUN_DEFUN_HPP
