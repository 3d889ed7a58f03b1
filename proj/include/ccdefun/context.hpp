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

#ifndef CCDEFUN_CONTEXT_HPP
#define CCDEFUN_CONTEXT_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccdefun/error.hpp"
#include "ccdefun/term.hpp"

namespace ccdefun {

template <Calculus C>
struct ContextEntry {
  std::string name;
  Term<C> type;
};

/// Ordered telescope `x1 : A1, ..., xn : An`; each type may mention only
/// earlier names.
template <Calculus C>
class TypeContext {
 public:
  using Entry = ContextEntry<C>;

  TypeContext() = default;
  TypeContext(std::initializer_list<Entry> entries) : entries_(entries) {}
  explicit TypeContext(std::vector<Entry> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const Entry& operator[](std::size_t i) const { return entries_.at(i); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  bool contains(const std::string& x) const { return index_of(x).has_value(); }

  std::optional<std::size_t> index_of(const std::string& x) const {
    for (std::size_t i = entries_.size(); i-- > 0;)
      if (entries_[i].name == x) return i;
    return std::nullopt;
  }

  std::optional<Term<C>> lookup(const std::string& x) const {
    if (auto i = index_of(x)) return entries_[*i].type;
    return std::nullopt;
  }

  TypeContext extended(std::string name, Term<C> type) const {
    TypeContext out = *this;
    out.entries_.push_back(Entry{std::move(name), std::move(type)});
    return out;
  }

  /// The first `n` entries.
  TypeContext prefix(std::size_t n) const {
    return TypeContext(std::vector<Entry>(entries_.begin(),
                                          entries_.begin() + std::min(n, size())));
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& e : entries_) out.push_back(e.name);
    return out;
  }

  /// `this` appended with the entries of `other` whose names are new.
  TypeContext united(const TypeContext& other) const {
    TypeContext out = *this;
    for (const auto& e : other.entries_)
      if (!out.contains(e.name)) out.entries_.push_back(e);
    return out;
  }

 private:
  std::vector<Entry> entries_;
};

/// `l({fvs}, arg : arg_type -> body : ret)`.
struct LabelEntry {
  LabelId id;
  TypeContext<DCC> fvs;
  std::string arg;
  DCCTerm arg_type;
  DCCTerm body;
  DCCTerm ret;
};

/// Entries are equal when they agree up to alpha-renaming of the
/// telescope and argument binders.
inline std::string canonical_key(const LabelEntry& e) {
  std::vector<std::string> scope;
  std::string key = "{";
  for (const auto& fv : e.fvs) {
    key += canonical_string(fv.type, scope);
    key += ';';
    scope.push_back(fv.name);
  }
  key += "}";
  key += canonical_string(e.arg_type, scope);
  scope.push_back(e.arg);
  key += "->";
  key += canonical_string(e.body, scope);
  key += ':';
  key += canonical_string(e.ret, scope);
  return key;
}

inline bool same_definition(const LabelEntry& a, const LabelEntry& b) {
  return canonical_key(a) == canonical_key(b);
}

/// Ordered label definitions. Later entries may reference earlier labels.
class LabelContext {
 public:
  LabelContext() = default;
  explicit LabelContext(std::vector<LabelEntry> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const LabelEntry& operator[](std::size_t i) const { return entries_.at(i); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<LabelEntry>& entries() const noexcept { return entries_; }

  std::optional<std::size_t> index_of(LabelId id) const {
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].id == id) return i;
    return std::nullopt;
  }

  const LabelEntry* find(LabelId id) const {
    auto i = index_of(id);
    return i ? &entries_[*i] : nullptr;
  }

  void push_back(LabelEntry e) { entries_.push_back(std::move(e)); }

  LabelContext prefix(std::size_t n) const {
    return LabelContext(std::vector<LabelEntry>(
        entries_.begin(), entries_.begin() + std::min(n, size())));
  }

 private:
  std::vector<LabelEntry> entries_;
};

/// Entrywise containment: every entry of `small` occurs in `large` under the
/// same id with an alpha-equivalent definition.
inline bool label_subset(const LabelContext& small, const LabelContext& large) {
  for (const auto& e : small) {
    const LabelEntry* other = large.find(e.id);
    if (!other || !same_definition(e, *other)) return false;
  }
  return true;
}

/// `a` appended with the entries of `b` it does not already hold, in order.
inline LabelContext label_union(const LabelContext& a, const LabelContext& b) {
  LabelContext out = a;
  for (const auto& e : b) {
    if (const LabelEntry* existing = out.find(e.id)) {
      if (!same_definition(*existing, e))
        throw KernelError(ErrorCode::LabelClash,
                          e.id.str() + " has two different definitions");
      continue;
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace ccdefun

#endif  // CCDEFUN_CONTEXT_HPP
