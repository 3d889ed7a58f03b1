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

// Text and JSON renderings of translation results, and their readers.

#ifndef CCDEFUN_EMIT_HPP
#define CCDEFUN_EMIT_HPP

#include <optional>
#include <string>
#include <string_view>

#include "ccdefun/context.hpp"
#include "ccdefun/defun.hpp"
#include "ccdefun/parse.hpp"
#include "ccdefun/print.hpp"
#include "ccdefun/program.hpp"
#include "json.hpp"

namespace ccdefun {

/// `label lN {x : T, ...} (x : A) -> R := body;`
inline std::string emit_label(const LabelEntry& e) {
  std::string out = "label " + e.id.str() + " {";
  for (std::size_t i = 0; i < e.fvs.size(); ++i) {
    if (i) out += ", ";
    out += e.fvs[i].name + " : " + print(e.fvs[i].type);
  }
  out += "} (" + e.arg + " : " + print(e.arg_type) + ") -> " + print(e.ret);
  out += " := " + print(e.body) + ";";
  return out;
}

inline std::string emit_label_context_text(const LabelContext& defs) {
  std::string out;
  for (const auto& e : defs) out += emit_label(e) + "\n";
  return out;
}

inline nlohmann::ordered_json label_context_json(const LabelContext& defs) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& e : defs) {
    nlohmann::ordered_json fvs = nlohmann::ordered_json::array();
    for (const auto& fv : e.fvs) fvs.push_back({{"x", fv.name}, {"type", print(fv.type)}});
    out.push_back({{"name", e.id.str()},
                   {"fvs", fvs},
                   {"arg", {{"x", e.arg}, {"type", print(e.arg_type)}}},
                   {"body", print(e.body)},
                   {"ret", print(e.ret)}});
  }
  return out;
}

inline std::string emit_label_context_json(const LabelContext& defs) {
  return label_context_json(defs).dump(2);
}

/// A complete `.dcc` file for a translation result.
inline std::string emit_text(const TranslationResult& r) {
  std::string out = emit_label_context_text(r.all_defs());
  for (const auto& e : r.dcc_ctx) out += "axiom " + e.name + " : " + print(e.type) + ";\n";
  out += "-- type: " + print(r.type) + "\n";
  out += "main " + print(r.term) + ";\n";
  return out;
}

inline std::string emit_json(const TranslationResult& r) {
  nlohmann::ordered_json ctx = nlohmann::ordered_json::array();
  for (const auto& e : r.dcc_ctx) ctx.push_back({{"x", e.name}, {"type", print(e.type)}});
  nlohmann::ordered_json doc = {{"labels", label_context_json(r.all_defs())},
                        {"context", ctx},
                        {"term", print(r.term)},
                        {"type", print(r.type)}};
  return doc.dump(2);
}

/// A `.cc` file with the context as axioms and an optional main term.
inline std::string emit_cc(const TypeContext<CC>& ctx, const std::optional<CCTerm>& main) {
  std::string out;
  for (const auto& e : ctx) out += "axiom " + e.name + " : " + print(e.type) + ";\n";
  if (main) out += "main " + print(*main) + ";\n";
  return out;
}

/// Reads the label array of a JSON document produced by `emit_json`, or a
/// bare label array.
inline LabelContext label_context_from_json(std::string_view text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::ordered_json::exception& e) {
    throw ParseError(1, 1, std::string("invalid JSON: ") + e.what());
  }
  const nlohmann::ordered_json& labels = doc.is_object() ? doc.at("labels") : doc;
  LabelContext out;
  try {
    for (const auto& l : labels) {
      const std::string name = l.at("name").get<std::string>();
      const auto idx = detail::label_index(name);
      if (!idx) throw ParseError(1, 1, "bad label name " + name);
      std::vector<ContextEntry<DCC>> fvs;
      for (const auto& fv : l.at("fvs"))
        fvs.push_back({fv.at("x").get<std::string>(),
                       parse_dcc_term(fv.at("type").get<std::string>())});
      out.push_back(LabelEntry{LabelId{*idx}, TypeContext<DCC>(std::move(fvs)),
                               l.at("arg").at("x").get<std::string>(),
                               parse_dcc_term(l.at("arg").at("type").get<std::string>()),
                               parse_dcc_term(l.at("body").get<std::string>()),
                               parse_dcc_term(l.at("ret").get<std::string>())});
    }
  } catch (const nlohmann::ordered_json::exception& e) {
    throw ParseError(1, 1, std::string("malformed label document: ") + e.what());
  }
  return out;
}

/// Reads the labels of a `.dcc` text without checking them.
inline LabelContext label_context_from_text(std::string_view text) {
  LabelContext out;
  for (const auto& l : parse_dcc_file(text).labels) out.push_back(l.entry);
  return out;
}

/// Same ids in the same order with alpha-equivalent definitions.
inline bool same_label_context(const LabelContext& a, const LabelContext& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].id != b[i].id || !same_definition(a[i], b[i])) return false;
  return true;
}

}  // namespace ccdefun

#endif  // CCDEFUN_EMIT_HPP
