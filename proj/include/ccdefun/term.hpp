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

// Immutable terms shared by CC, CC^sigma and DCC, with named binders.
//
// A single node representation backs both calculi; `Term<CC>` and
// `Term<DCC>` are distinct types so a CC term never flows into a DCC
// position by accident. CC terms may contain lambdas and explicit
// substitutions, DCC terms may contain labels.

#ifndef CCDEFUN_TERM_HPP
#define CCDEFUN_TERM_HPP

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ccdefun {

/// Calculus tags.
struct CC {};
struct DCC {};

template <class C>
concept Calculus = std::same_as<C, CC> || std::same_as<C, DCC>;

enum class Kind : std::uint8_t {
  Var,
  Universe,
  Pi,
  Lam,
  App,
  ESubst,
  NatType,
  NatLit,
  Add,
  Label,
};

/// Label names live in their own namespace, printed as `l<index>`.
struct LabelId {
  std::uint32_t index = 0;

  auto operator<=>(const LabelId&) const = default;
  std::string str() const { return "l" + std::to_string(index); }
};

namespace detail {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  Kind kind;
  std::string name;  // variable name, or binder for Pi/Lam/ESubst
  std::uint64_t value = 0;  // universe level, literal, label index
  std::optional<std::uint32_t> tag;  // source tag of a lambda
  std::vector<NodePtr> kids;
  std::vector<std::string> free;  // sorted, unique
  std::size_t size = 1;
};

// Pi/Lam bind in their second child, ESubst binds in its subject.
inline bool binds_child(Kind kind, std::size_t i) {
  switch (kind) {
    case Kind::Pi:
    case Kind::Lam: return i == 1;
    case Kind::ESubst: return i == 0;
    default: return false;
  }
}

inline bool has_binder(Kind kind) {
  return kind == Kind::Pi || kind == Kind::Lam || kind == Kind::ESubst;
}

inline NodePtr make_node(Kind kind, std::string name, std::uint64_t value,
                         std::optional<std::uint32_t> tag,
                         std::vector<NodePtr> kids) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  node->value = value;
  node->tag = tag;
  if (kind == Kind::Var) node->free.push_back(node->name);
  for (std::size_t i = 0; i < kids.size(); ++i) {
    const auto& kid = *kids[i];
    node->size += kid.size;
    std::vector<std::string> merged;
    merged.reserve(node->free.size() + kid.free.size());
    if (binds_child(kind, i)) {
      std::vector<std::string> pruned;
      pruned.reserve(kid.free.size());
      for (const auto& v : kid.free)
        if (v != node->name) pruned.push_back(v);
      std::set_union(node->free.begin(), node->free.end(), pruned.begin(),
                     pruned.end(), std::back_inserter(merged));
    } else {
      std::set_union(node->free.begin(), node->free.end(), kid.free.begin(),
                     kid.free.end(), std::back_inserter(merged));
    }
    node->free = std::move(merged);
  }
  node->kids = std::move(kids);
  return node;
}

}  // namespace detail

template <Calculus C>
class Term {
 public:
  using calculus = C;

  explicit Term(detail::NodePtr node) : node_(std::move(node)) {
    if (!node_) throw std::logic_error("null term");
  }

  static Term var(std::string name) {
    return Term(detail::make_node(Kind::Var, std::move(name), 0, {}, {}));
  }
  static Term universe(std::uint64_t level) {
    return Term(detail::make_node(Kind::Universe, {}, level, {}, {}));
  }
  static Term pi(std::string binder, const Term& dom, const Term& cod) {
    return Term(detail::make_node(Kind::Pi, std::move(binder), 0, {},
                                  {dom.node_, cod.node_}));
  }
  /// Non-dependent function type `dom -> cod`.
  static Term arrow(const Term& dom, const Term& cod) {
    return pi("_", dom, cod);
  }
  static Term app(const Term& fn, const Term& arg) {
    return Term(
        detail::make_node(Kind::App, {}, 0, {}, {fn.node_, arg.node_}));
  }
  static Term app(const Term& fn, std::initializer_list<Term> args) {
    Term out = fn;
    for (const auto& a : args) out = app(out, a);
    return out;
  }
  static Term nat() {
    return Term(detail::make_node(Kind::NatType, {}, 0, {}, {}));
  }
  static Term nat_lit(std::uint64_t value) {
    return Term(detail::make_node(Kind::NatLit, {}, value, {}, {}));
  }
  static Term add(const Term& lhs, const Term& rhs) {
    return Term(
        detail::make_node(Kind::Add, {}, 0, {}, {lhs.node_, rhs.node_}));
  }

  static Term lam(std::string binder, const Term& dom, const Term& body,
                  std::optional<std::uint32_t> tag = {})
    requires std::same_as<C, CC>
  {
    return Term(detail::make_node(Kind::Lam, std::move(binder), 0, tag,
                                  {dom.node_, body.node_}));
  }
  /// Explicit substitution `subject{binder := replacement}` (CC^sigma),
  /// optionally annotated with the type of `binder`.
  static Term esubst(const Term& subject, std::string binder,
                     const Term& replacement,
                     const std::optional<Term>& annotation = std::nullopt)
    requires std::same_as<C, CC>
  {
    std::vector<detail::NodePtr> kids{subject.node_, replacement.node_};
    if (annotation) kids.push_back(annotation->node_);
    return Term(detail::make_node(Kind::ESubst, std::move(binder), 0, {}, std::move(kids)));
  }

  static Term label(LabelId id, std::span<const Term> closure)
    requires std::same_as<C, DCC>
  {
    std::vector<detail::NodePtr> kids;
    kids.reserve(closure.size());
    for (const auto& t : closure) kids.push_back(t.node_);
    return Term(
        detail::make_node(Kind::Label, {}, id.index, {}, std::move(kids)));
  }
  static Term label(LabelId id, std::initializer_list<Term> closure)
    requires std::same_as<C, DCC>
  {
    return label(id, std::span<const Term>(closure.begin(), closure.size()));
  }

  Kind kind() const noexcept { return node_->kind; }
  bool is(Kind k) const noexcept { return node_->kind == k; }

  /// Variable name, or the binder of a Pi, Lam or ESubst.
  const std::string& name() const noexcept { return node_->name; }
  const std::string& binder() const noexcept { return node_->name; }
  std::uint64_t level() const noexcept { return node_->value; }
  std::uint64_t value() const noexcept { return node_->value; }
  LabelId label_id() const noexcept {
    return LabelId{static_cast<std::uint32_t>(node_->value)};
  }
  std::optional<std::uint32_t> tag() const noexcept { return node_->tag; }

  std::size_t arity() const noexcept { return node_->kids.size(); }
  Term child(std::size_t i) const { return Term(node_->kids.at(i)); }

  Term dom() const { return child(0); }
  Term cod() const { return child(1); }
  Term body() const { return child(1); }
  Term fn() const { return child(0); }
  Term arg() const { return child(1); }
  Term subject() const { return child(0); }
  Term replacement() const { return child(1); }
  std::optional<Term> annotation() const {
    if (!is(Kind::ESubst) || arity() < 3) return std::nullopt;
    return child(2);
  }
  Term lhs() const { return child(0); }
  Term rhs() const { return child(1); }
  std::vector<Term> closure() const {
    std::vector<Term> out;
    out.reserve(arity());
    for (const auto& k : node_->kids) out.emplace_back(k);
    return out;
  }

  /// Sorted set of unbound variable names.
  const std::vector<std::string>& free_names() const noexcept {
    return node_->free;
  }
  bool has_free(const std::string& x) const {
    return std::binary_search(node_->free.begin(), node_->free.end(), x);
  }
  /// Number of AST nodes.
  std::size_t size() const noexcept { return node_->size; }

  const detail::NodePtr& node() const noexcept { return node_; }
  bool same_node(const Term& other) const noexcept {
    return node_ == other.node_;
  }

  /// Rebuild this node with new children (and optionally a new binder).
  Term with_children(std::vector<Term> kids) const {
    return with_children(std::move(kids), node_->name);
  }
  Term with_children(std::vector<Term> kids, std::string binder) const {
    std::vector<detail::NodePtr> raw;
    raw.reserve(kids.size());
    bool same = binder == node_->name && kids.size() == node_->kids.size();
    for (std::size_t i = 0; i < kids.size(); ++i) {
      raw.push_back(kids[i].node_);
      if (same && raw.back() != node_->kids[i]) same = false;
    }
    if (same) return *this;
    return Term(detail::make_node(node_->kind, std::move(binder), node_->value,
                                  node_->tag, std::move(raw)));
  }

 private:
  detail::NodePtr node_;
};

using CCTerm = Term<CC>;
using DCCTerm = Term<DCC>;

/// Appends primes to `base` until `taken` rejects the candidate.
template <class Taken>
std::string fresh_name(std::string base, Taken&& taken) {
  if (base.empty()) base = "x";
  while (taken(base)) base += '\'';
  return base;
}

/// Unbound variables in left-to-right first-occurrence order.
template <Calculus C>
std::vector<std::string> free_vars(const Term<C>& t) {
  std::vector<std::string> out;
  std::vector<std::string> bound;
  std::function<void(const Term<C>&)> walk = [&](const Term<C>& u) {
    if (u.free_names().empty()) return;
    if (u.is(Kind::Var)) {
      const auto& x = u.name();
      if (std::find(bound.begin(), bound.end(), x) == bound.end() &&
          std::find(out.begin(), out.end(), x) == out.end())
        out.push_back(x);
      return;
    }
    for (std::size_t i = 0; i < u.arity(); ++i) {
      const bool binds = detail::binds_child(u.kind(), i);
      if (binds) bound.push_back(u.binder());
      walk(u.child(i));
      if (binds) bound.pop_back();
    }
  };
  walk(t);
  return out;
}

namespace detail {

template <Calculus C>
bool alpha_eq_impl(const Term<C>& a, const Term<C>& b,
                   std::vector<std::string>& env_a,
                   std::vector<std::string>& env_b) {
  if (a.same_node(b) && env_a == env_b) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Var: {
      // Innermost binding position, or npos when free.
      auto depth = [](const std::vector<std::string>& env,
                      const std::string& x) -> std::size_t {
        for (std::size_t i = env.size(); i-- > 0;)
          if (env[i] == x) return env.size() - i;
        return 0;
      };
      const auto da = depth(env_a, a.name());
      const auto db = depth(env_b, b.name());
      if (da != db) return false;
      return da != 0 || a.name() == b.name();
    }
    case Kind::Universe:
    case Kind::NatLit:
    case Kind::Label:
      if (a.value() != b.value()) return false;
      break;
    default:
      break;
  }
  if (a.arity() != b.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    const bool binds = binds_child(a.kind(), i);
    if (binds) {
      env_a.push_back(a.binder());
      env_b.push_back(b.binder());
    }
    const bool ok = alpha_eq_impl(a.child(i), b.child(i), env_a, env_b);
    if (binds) {
      env_a.pop_back();
      env_b.pop_back();
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

/// Equality up to consistent renaming of bound variables. Labels compare
/// by id; lambda tags are ignored.
template <Calculus C>
bool alpha_eq(const Term<C>& a, const Term<C>& b) {
  std::vector<std::string> env_a, env_b;
  return detail::alpha_eq_impl(a, b, env_a, env_b);
}

template <Calculus C>
using Substitution = std::vector<std::pair<std::string, Term<C>>>;

namespace detail {

template <Calculus C>
bool any_free_in(const Substitution<C>& s, const std::string& x) {
  for (const auto& [_, r] : s)
    if (r.has_free(x)) return true;
  return false;
}

template <Calculus C>
Term<C> subst_many_impl(const Term<C>& t, const Substitution<C>& s) {
  Substitution<C> live;
  for (const auto& entry : s)
    if (t.has_free(entry.first)) live.push_back(entry);
  if (live.empty()) return t;
  if (t.is(Kind::Var)) {
    for (const auto& [x, r] : live)
      if (x == t.name()) return r;
    return t;
  }
  if (t.is(Kind::ESubst))
    throw std::logic_error("simultaneous substitution into an explicit substitution");
  std::vector<Term<C>> kids;
  kids.reserve(t.arity());
  std::string binder = t.binder();
  if (!has_binder(t.kind())) {
    for (std::size_t i = 0; i < t.arity(); ++i)
      kids.push_back(subst_many_impl(t.child(i), live));
    return t.with_children(std::move(kids));
  }
  // Pi / Lam: domain is outside the binder, body inside.
  kids.push_back(subst_many_impl(t.child(0), live));
  Term<C> body = t.child(1);
  Substitution<C> inner;
  for (const auto& entry : live)
    if (entry.first != binder) inner.push_back(entry);
  if (!inner.empty() && any_free_in(inner, binder)) {
    const std::string renamed = fresh_name(binder, [&](const std::string& n) {
      if (body.has_free(n) || any_free_in(inner, n)) return true;
      for (const auto& e : inner)
        if (e.first == n) return true;
      return false;
    });
    body = subst_many_impl(body, Substitution<C>{{binder, Term<C>::var(renamed)}});
    binder = renamed;
  }
  kids.push_back(subst_many_impl(body, inner));
  return t.with_children(std::move(kids), std::move(binder));
}

template <Calculus C>
Term<C> subst_impl(const Term<C>& t, const std::string& x, const Term<C>& r) {
  if (!t.has_free(x)) return t;
  switch (t.kind()) {
    case Kind::Var:
      return r;
    case Kind::ESubst:
      if constexpr (std::same_as<C, CC>) {
        // Explicit substitutions are opaque: compose outside.
        return Term<C>::esubst(t, x, r);
      } else {
        break;
      }
    case Kind::Pi:
    case Kind::Lam: {
      Term<C> dom = subst_impl(t.child(0), x, r);
      Term<C> body = t.child(1);
      std::string binder = t.binder();
      if (binder != x && body.has_free(x)) {
        if (r.has_free(binder)) {
          const std::string renamed =
              fresh_name(binder, [&](const std::string& n) {
                return n == x || body.has_free(n) || r.has_free(n);
              });
          body = subst_impl(body, binder, Term<C>::var(renamed));
          binder = renamed;
        }
        body = subst_impl(body, x, r);
      }
      return t.with_children({dom, body}, std::move(binder));
    }
    default:
      break;
  }
  std::vector<Term<C>> kids;
  kids.reserve(t.arity());
  for (std::size_t i = 0; i < t.arity(); ++i)
    kids.push_back(subst_impl(t.child(i), x, r));
  return t.with_children(std::move(kids));
}

}  // namespace detail

/// Capture-avoiding meta-substitution `t[r/x]`. Label closures are
/// substituted pointwise; explicit substitutions are not entered.
template <Calculus C>
Term<C> subst(const Term<C>& t, const std::string& x, const Term<C>& r) {
  return detail::subst_impl(t, x, r);
}

/// Simultaneous capture-avoiding substitution `t[r1/x1, ..., rn/xn]`.
template <Calculus C>
Term<C> subst_many(const Term<C>& t, const Substitution<C>& s) {
  return detail::subst_many_impl(t, s);
}

/// Capture-avoiding renaming of the free variable `from` to `to`. Unlike
/// `subst`, this also renames inside explicit substitutions.
template <Calculus C>
Term<C> rename_var(const Term<C>& t, const std::string& from, const std::string& to) {
  if (from == to || !t.has_free(from)) return t;
  if (t.is(Kind::Var)) return Term<C>::var(to);
  std::string binder = t.binder();
  std::vector<Term<C>> kids;
  kids.reserve(t.arity());
  for (std::size_t i = 0; i < t.arity(); ++i) kids.push_back(t.child(i));
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (!detail::binds_child(t.kind(), i)) {
      kids[i] = rename_var(kids[i], from, to);
      continue;
    }
    if (binder == from) continue;
    if (binder == to && kids[i].has_free(from)) {
      const std::string fresh = fresh_name(binder, [&](const std::string& n) {
        return n == from || n == to || kids[i].has_free(n);
      });
      kids[i] = rename_var(kids[i], binder, fresh);
      binder = fresh;
    }
    kids[i] = rename_var(kids[i], from, to);
  }
  return t.with_children(std::move(kids), std::move(binder));
}

/// Renames the bound variable of a Pi/Lam/ESubst to `fresh`.
template <Calculus C>
Term<C> rename_binder(const Term<C>& t, const std::string& fresh) {
  if (!detail::has_binder(t.kind()) || t.binder() == fresh) return t;
  const std::size_t scoped = t.is(Kind::ESubst) ? 0 : 1;
  std::vector<Term<C>> kids;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    kids.push_back(i == scoped ? rename_var(t.child(i), t.binder(), fresh) : t.child(i));
  }
  return t.with_children(std::move(kids), fresh);
}

/// Structural fold: true if any subterm satisfies `pred`.
template <Calculus C, class Pred>
bool any_subterm(const Term<C>& t, Pred&& pred) {
  if (pred(t)) return true;
  for (std::size_t i = 0; i < t.arity(); ++i)
    if (any_subterm(t.child(i), pred)) return true;
  return false;
}

inline bool has_esubst(const CCTerm& t) {
  return any_subterm(t, [](const CCTerm& u) { return u.is(Kind::ESubst); });
}

/// Label ids in first-occurrence order.
inline std::vector<LabelId> labels_in(const DCCTerm& t) {
  std::vector<LabelId> out;
  std::function<void(const DCCTerm&)> walk = [&](const DCCTerm& u) {
    if (u.is(Kind::Label) &&
        std::find(out.begin(), out.end(), u.label_id()) == out.end())
      out.push_back(u.label_id());
    for (std::size_t i = 0; i < u.arity(); ++i) walk(u.child(i));
  };
  walk(t);
  return out;
}

/// Applies `f` to every label node bottom-up, rebuilding the term.
template <class F>
DCCTerm map_labels(const DCCTerm& t, F&& f) {
  if (t.arity() == 0 && !t.is(Kind::Label)) return t;
  std::vector<DCCTerm> kids;
  kids.reserve(t.arity());
  for (std::size_t i = 0; i < t.arity(); ++i)
    kids.push_back(map_labels(t.child(i), f));
  if (t.is(Kind::Label)) return f(t.label_id(), kids);
  return t.with_children(std::move(kids));
}

/// De Bruijn rendering: equal strings iff alpha-equivalent terms. `scope`
/// lists names treated as bound, outermost first.
template <Calculus C>
std::string canonical_string(const Term<C>& t, std::vector<std::string> scope = {}) {
  std::string out;
  std::function<void(const Term<C>&)> walk = [&](const Term<C>& u) {
    switch (u.kind()) {
      case Kind::Var: {
        for (std::size_t i = scope.size(); i-- > 0;) {
          if (scope[i] == u.name()) {
            out += '#';
            out += std::to_string(scope.size() - 1 - i);
            return;
          }
        }
        out += '$';
        out += u.name();
        return;
      }
      case Kind::Universe: out += "U" + std::to_string(u.level()); return;
      case Kind::NatType: out += "N"; return;
      case Kind::NatLit: out += std::to_string(u.value()); return;
      default: break;
    }
    static constexpr const char* heads[] = {"", "", "P", "L", "A", "S", "", "", "+", "l"};
    out += '(';
    out += heads[static_cast<int>(u.kind())];
    if (u.is(Kind::Label)) out += std::to_string(u.value());
    for (std::size_t i = 0; i < u.arity(); ++i) {
      out += ' ';
      const bool binds = detail::binds_child(u.kind(), i);
      if (binds) scope.push_back(u.binder());
      walk(u.child(i));
      if (binds) scope.pop_back();
    }
    out += ')';
  };
  walk(t);
  return out;
}

}  // namespace ccdefun

#endif  // CCDEFUN_TERM_HPP
