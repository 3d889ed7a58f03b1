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

// Elaboration of parsed source files: axioms become context entries,
// definitions are checked and then expanded by substitution.

#ifndef CCDEFUN_PROGRAM_HPP
#define CCDEFUN_PROGRAM_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccdefun/cc_check.hpp"
#include "ccdefun/context.hpp"
#include "ccdefun/dcc.hpp"
#include "ccdefun/error.hpp"
#include "ccdefun/parse.hpp"
#include "ccdefun/term.hpp"

namespace ccdefun {

struct CCProgram {
  TypeContext<CC> context;
  std::optional<CCTerm> main;
};

struct DCCProgram {
  LabelContext defs;
  TypeContext<DCC> context;
  std::optional<DCCTerm> main;
};

/// Checks every declaration in order and expands definitions.
inline CCProgram elaborate(const SourceFile<CC>& file) {
  Substitution<CC> defs;
  std::vector<ContextEntry<CC>> entries;
  auto in_scope = [&] { return TypeContext<CC>(entries); };
  for (const auto& decl : file.declarations) {
    const CCTerm type = subst_many(decl.type, defs);
    const Checker checker(in_scope());
    const CCTerm sort = cc_whnf(checker.infer(type)->type);
    if (!sort.is(Kind::Universe))
      throw KernelError(ErrorCode::NotAType,
                        "declared type of " + decl.name + " is not a type: " + print(type));
    if (decl.form == Declaration<CC>::Form::Axiom) {
      entries.push_back(ContextEntry<CC>{decl.name, type});
      continue;
    }
    const CCTerm body = subst_many(*decl.body, defs);
    try {
      checker.check(body, type);
    } catch (const KernelError& e) {
      throw KernelError(e.code(), "in definition of " + decl.name + ": " + e.what());
    }
    defs.emplace_back(decl.name, body);
  }
  CCProgram out{in_scope(), std::nullopt};
  if (file.main) out.main = subst_many(*file.main, defs);
  return out;
}

inline CCProgram load_cc(std::string_view text) { return elaborate(parse_cc_file(text)); }

/// Collects labels, checks the label context and declarations, and expands
/// definitions.
inline DCCProgram elaborate(const SourceFile<DCC>& file) {
  LabelContext labels;
  for (const auto& l : file.labels) {
    if (labels.find(l.entry.id))
      throw KernelError(ErrorCode::IllFormedLabelContext, l.entry.id.str() + " defined twice");
    labels.push_back(l.entry);
  }
  const DccWfReport wf = dcc_wf(labels, {});
  if (!wf) throw KernelError(ErrorCode::IllFormedLabelContext, wf.message);
  Substitution<DCC> defs;
  std::vector<ContextEntry<DCC>> entries;
  for (const auto& decl : file.declarations) {
    const TypeContext<DCC> ctx(entries);
    const DCCTerm type = subst_many(decl.type, defs);
    const DccChecker checker(labels, ctx);
    const DCCTerm sort = dcc_whnf(labels, checker.infer(type));
    if (!sort.is(Kind::Universe))
      throw KernelError(ErrorCode::NotAType,
                        "declared type of " + decl.name + " is not a type: " + print(type));
    if (decl.form == Declaration<DCC>::Form::Axiom) {
      entries.push_back(ContextEntry<DCC>{decl.name, type});
      continue;
    }
    const DCCTerm body = subst_many(*decl.body, defs);
    try {
      checker.check(body, type);
    } catch (const KernelError& e) {
      throw KernelError(e.code(), "in definition of " + decl.name + ": " + e.what());
    }
    defs.emplace_back(decl.name, body);
  }
  DCCProgram out{labels, TypeContext<DCC>(entries), std::nullopt};
  if (file.main) out.main = subst_many(*file.main, defs);
  return out;
}

inline DCCProgram load_dcc(std::string_view text) { return elaborate(parse_dcc_file(text)); }

}  // namespace ccdefun

#endif  // CCDEFUN_PROGRAM_HPP
