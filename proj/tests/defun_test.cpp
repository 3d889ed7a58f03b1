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

#include <gtest/gtest.h>

#include "golden.hpp"
#include "label_util.hpp"
#include "test_util.hpp"

namespace ccdefun {
namespace {

using testing::cc;
using testing::dcc;

TranslationResult translate_corpus(const std::string& name) {
  const CCProgram p = testing::load_corpus(name);
  return translate_program(p.context, *p.main);
}

TEST(Defun, DependentComposeMatchesGolden) {
  const TranslationResult r = translate_corpus("compose.cc");
  EXPECT_EQ(print(r.term), "l0{}");
  const LabelContext expected = label_context_from_text(testing::kDependentComposeLabels);
  EXPECT_TRUE(testing::same_labels(r.all_defs(), expected));
  const std::vector<std::vector<std::string>> closures{
      {}, {"A"}, {"A", "B"}, {"A", "B", "C"}, {"A", "B", "C", "f"}, {"A", "B", "C", "f", "g"}};
  const LabelContext defs = r.all_defs();
  ASSERT_EQ(defs.size(), 6u);
  for (std::uint32_t i = 0; i < 6; ++i) {
    const LabelEntry* e = defs.find(LabelId{i});
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(testing::closure_names(*e), closures[i]) << "l" << i;
  }
  EXPECT_TRUE(dcc_equiv(r.all_defs(), r.type, dcc(testing::kDependentComposeType)));
}

TEST(Defun, SimpleComposeMatchesFigureWithoutBaseTypes) {
  const TranslationResult r = translate_corpus("compose_simple.cc");
  const testing::LabelFilter filter({"A", "B", "C"}, 1);
  EXPECT_EQ(print(filter.apply(r.term)), "l1{}");
  const LabelContext expected = label_context_from_text(testing::kSimpleComposeLabels);
  EXPECT_TRUE(testing::same_labels(filter.apply(r.all_defs()), expected));
  const LabelContext filtered = filter.apply(r.all_defs());
  const LabelEntry* l3 = filtered.find(LabelId{3});
  ASSERT_NE(l3, nullptr);
  EXPECT_EQ(testing::closure_names(*l3), (std::vector<std::string>{"f", "g"}));
  EXPECT_EQ(print(l3->body), "f (g x)");
}

TEST(Defun, SimpleComposeKeepsBaseTypesInClosures) {
  const TranslationResult r = translate_corpus("compose_simple.cc");
  const std::vector<std::set<std::string>> closures{
      {"A", "B", "C"}, {"A", "B", "C", "f"}, {"A", "B", "C", "f", "g"}};
  for (std::uint32_t i = 0; i < 3; ++i) {
    const auto names = testing::closure_names(*r.all_defs().find(LabelId{i}));
    EXPECT_EQ(std::set<std::string>(names.begin(), names.end()), closures[i]);
  }
}

TEST(Defun, SimpleComposeOverNatMatchesFigureExactly) {
  const TranslationResult r = translate_corpus("compose_nat.cc");
  const testing::LabelFilter shift({}, 1);
  EXPECT_EQ(print(shift.apply(r.term)), "l1{}");
  EXPECT_TRUE(testing::same_labels(shift.apply(r.all_defs()),
                                   label_context_from_text(testing::kSimpleComposeNatLabels)));
}

TEST(Defun, SubstitutionCreatesNewLabel) {
  const CCProgram p = testing::load_corpus("subst_label.cc");
  const TranslationResult r = translate_program(p.context, *p.main);
  EXPECT_EQ(r.all_defs().size(), 3u);
  EXPECT_EQ(r.ctx_defs.size(), 1u);
  EXPECT_EQ(testing::closure_names(r.ctx_defs[0]), (std::vector<std::string>{"f"}));
  bool found_created = false;
  for (const auto& e : r.defs)
    if (print(e.body) == "add 1 (" + print(r.term.arg()) + " n)") found_created = true;
  EXPECT_TRUE(found_created);
  EXPECT_EQ(print(r.term), "a l0{}");
  EXPECT_TRUE(label_subset(r.type_defs, r.defs));
  const CCTerm cc_type = cc_normalize(cc_infer(p.context, *p.main).type);
  EXPECT_TRUE(alpha_eq(cc_type, cc("A (fun (n : Nat) => add 1 (add 1 n))")));
}

TEST(Defun, SubstitutionExampleTypesAreEquivalent) {
  const CCProgram p = testing::load_corpus("subst_label.cc");
  const TranslationResult r = translate_program(p.context, *p.main);
  const LabelContext delta = r.all_defs();
  const DCCTerm inferred = dcc_normalize(delta, dcc_infer(delta, r.dcc_ctx, r.term));
  ASSERT_TRUE(inferred.is(Kind::App));
  ASSERT_TRUE(inferred.arg().is(Kind::Label));
  const DCCTerm applied = dcc_normalize(delta, DCCTerm::app(inferred.arg(), DCCTerm::var("n")));
  EXPECT_TRUE(alpha_eq(applied, dcc("add 1 (add 1 n)")));
  EXPECT_TRUE(dcc_equiv(delta, inferred, r.type));
}

TEST(Defun, ClosedLambdaHasEmptyClosure) {
  const TranslationResult r = translate_program({}, cc("fun (x : Type 0) => x"));
  EXPECT_EQ(print(r.term), "l0{}");
  ASSERT_EQ(r.defs.size(), 1u);
  EXPECT_TRUE(r.defs[0].fvs.empty());
}

TEST(Defun, UniverseHasNoDefinitions) {
  const TranslationResult r = translate_program({}, cc("Type 0"));
  EXPECT_TRUE(r.all_defs().empty());
  EXPECT_EQ(print(r.type), "Type 1");
}

TEST(Defun, ContextTranslation) {
  EXPECT_TRUE(defun_context({}).first.empty());
  const auto [ctx, defs] = defun_context({{"A", cc("Type 0")}, {"f", cc("A -> A")}});
  EXPECT_EQ(ctx.size(), 2u);
  EXPECT_TRUE(defs.empty());
  EXPECT_EQ(print(ctx[1].type), "A -> A");
}

TEST(Defun, DeterministicOutput) {
  const TranslationResult a = translate_corpus("church_pair.cc");
  const TranslationResult b = translate_corpus("church_pair.cc");
  EXPECT_TRUE(alpha_eq(a.term, b.term));
  EXPECT_TRUE(same_label_context(a.all_defs(), b.all_defs()));
}

TEST(Defun, UnionProperties) {
  const LabelContext d = translate_corpus("compose.cc").all_defs();
  EXPECT_TRUE(same_label_context(label_union(d, {}), d));
  EXPECT_TRUE(same_label_context(label_union(d, d), d));
  EXPECT_TRUE(label_subset({}, d));
}

TEST(Defun, TypeDefinitionsAreContainedInTermDefinitions) {
  for (const auto& path : testing::corpus_files()) {
    const CCProgram p = load_cc(testing::read_file(path));
    if (!p.main) continue;
    SCOPED_TRACE(path.filename().string());
    const TranslationResult r = translate_program(p.context, *p.main);
    EXPECT_TRUE(label_subset(r.type_defs, r.all_defs()));
  }
}

TEST(Defun, EveryLabelIsWellTyped) {
  for (const auto& path : testing::corpus_files()) {
    const CCProgram p = load_cc(testing::read_file(path));
    SCOPED_TRACE(path.filename().string());
    if (!p.main) {
      const auto [ctx, defs] = defun_context(p.context);
      EXPECT_TRUE(dcc_wf(defs, ctx));
      continue;
    }
    const TranslationResult r = translate_program(p.context, *p.main);
    const DccWfReport wf = dcc_wf(r.all_defs(), r.dcc_ctx);
    EXPECT_TRUE(wf) << wf.message;
  }
}

TEST(Defun, AlphaEquivalentLambdasShareLabelWithOwnClosures) {
  const TypeContext<CC> g{{"A", cc("Type 0")}, {"a", cc("A")}, {"b", cc("A")}};
  const TranslationResult r =
      translate_program(g, cc("(fun (p : A -> A) (q : A -> A) => p) (fun (x : A) => a) "
                              "(fun (y : A) => b)"));
  EXPECT_NE(print(r.term).find("{A, a}"), std::string::npos);
  EXPECT_NE(print(r.term).find("{A, b}"), std::string::npos);
}

TEST(Emit, TextAndJsonDescribeTheSameLabels) {
  for (const auto& path : testing::corpus_files()) {
    const CCProgram p = load_cc(testing::read_file(path));
    if (!p.main) continue;
    SCOPED_TRACE(path.filename().string());
    const TranslationResult r = translate_program(p.context, *p.main);
    const LabelContext from_text = label_context_from_text(emit_text(r));
    const LabelContext from_json = label_context_from_json(emit_json(r));
    EXPECT_TRUE(same_label_context(from_text, from_json));
    EXPECT_TRUE(same_label_context(from_text, r.all_defs()));
  }
}

TEST(Emit, EmptyLabelContextIsEmptyArray) {
  EXPECT_EQ(emit_label_context_json({}), "[]");
}

TEST(Emit, TextOutputRechecks) {
  for (const auto& path : testing::corpus_files()) {
    const CCProgram p = load_cc(testing::read_file(path));
    if (!p.main) continue;
    SCOPED_TRACE(path.filename().string());
    const TranslationResult r = translate_program(p.context, *p.main);
    const DCCProgram back = load_dcc(emit_text(r));
    ASSERT_TRUE(back.main);
    EXPECT_TRUE(alpha_eq(*back.main, r.term));
    EXPECT_TRUE(dcc_equiv(back.defs, dcc_infer(back.defs, back.context, *back.main), r.type));
  }
}

TEST(Emit, LabelLineLayout) {
  const TranslationResult r = translate_corpus("compose_nat.cc");
  EXPECT_NE(emit_text(r).find("label l2 {f : Nat -> Nat, g : Nat -> Nat} (x : Nat) -> Nat := f (g x);"),
            std::string::npos);
}

}  // namespace
}  // namespace ccdefun
