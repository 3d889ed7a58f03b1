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
#include "test_util.hpp"

namespace ccdefun {
namespace {

using testing::cc;
using testing::dcc;

TEST(Refun, LabelBecomesFunctionWithClosureSubstituted) {
  const LabelContext d = label_context_from_text(testing::kSimpleComposeNatLabels);
  EXPECT_TRUE(alpha_eq(refun_expr(d, dcc("l3{f, g}")), cc("fun (x : Nat) => f (g x)")));
  EXPECT_TRUE(alpha_eq(refun_expr(d, dcc("l3{h, k}")), cc("fun (x : Nat) => h (k x)")));
}

TEST(Refun, VariableIsUnchanged) { EXPECT_TRUE(alpha_eq(refun_expr({}, dcc("x")), cc("x"))); }

TEST(Refun, FalsityIsPreservedLiterally) {
  EXPECT_TRUE(alpha_eq(refun_expr({}, dcc("(x : Type 0) -> x")), cc("(x : Type 0) -> x")));
}

TEST(Refun, DependentComposeRoundTrips) {
  const LabelContext d = label_context_from_text(testing::kDependentComposeLabels);
  const CCTerm compose = testing::load_corpus("compose.cc").main.value();
  EXPECT_TRUE(cc_equiv(refun_expr(d, dcc("l0{}")), compose));
}

TEST(Refun, UnknownLabel) {
  try {
    refun_expr({}, dcc("l4{}"));
    FAIL();
  } catch (const KernelError& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownLabel);
  }
}

TEST(Refun, ContextsArePointwise) {
  EXPECT_TRUE(refun_context({}, {}).empty());
  const TypeContext<CC> g = refun_context({}, TypeContext<DCC>{{"A", dcc("Type 0")}});
  ASSERT_EQ(g.size(), 1u);
  EXPECT_TRUE(alpha_eq(g[0].type, cc("Type 0")));
  const CCProgram p = testing::load_corpus("subst_label.cc");
  const TranslationResult r = translate_program(p.context, *p.main);
  const TypeContext<CC> back = refun_context(r.all_defs(), r.dcc_ctx);
  ASSERT_EQ(back.size(), p.context.size());
  for (std::size_t i = 0; i < back.size(); ++i) EXPECT_TRUE(cc_equiv(back[i].type, p.context[i].type));
}

TEST(Refun, CompatibleWithSubstitution) {
  for (const auto& path : testing::corpus_files()) {
    const CCProgram p = load_cc(testing::read_file(path));
    if (!p.main) continue;
    SCOPED_TRACE(path.filename().string());
    const TranslationResult r = translate_program(p.context, *p.main);
    const LabelContext d = label_union(r.all_defs(), r.type_defs);
    for (const auto& e : d) {
      if (e.fvs.empty()) continue;
      const std::string x = e.fvs[e.fvs.size() - 1].name;
      const DCCTerm n = DCCTerm::var("fresh_value");
      std::vector<DCCTerm> closure;
      for (const auto& fv : e.fvs) closure.push_back(DCCTerm::var(fv.name));
      const DCCTerm m = DCCTerm::label(e.id, closure);
      EXPECT_TRUE(alpha_eq(refun_expr(d, subst(m, x, n)),
                           subst(refun_expr(d, m), x, refun_expr(d, n))));
    }
  }
}

TEST(Refun, BackwardTypingOnCorpus) {
  for (const auto& path : testing::corpus_files()) {
    const CCProgram p = load_cc(testing::read_file(path));
    if (!p.main) continue;
    SCOPED_TRACE(path.filename().string());
    EXPECT_TRUE(check_round_trip(p.context, *p.main)) << check_round_trip(p.context, *p.main).detail;
  }
}

TEST(Refun, BackwardReductionPreservation) {
  for (const char* name : {"compose_applied.cc", "church_nat.cc", "twice.cc", "fin.cc"}) {
    SCOPED_TRACE(name);
    const CCProgram p = testing::load_corpus(name);
    const TranslationResult r = translate_program(p.context, *p.main);
    const LabelContext d = r.all_defs();
    const auto trace = dcc_trace(d, r.term);
    for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
      const CCTerm before = refun_expr(d, trace[i]);
      const CCTerm after = refun_expr(d, trace[i + 1]);
      EXPECT_TRUE(cc_equiv(before, after));
      const auto cc_trace_from = cc_trace(before);
      bool reached = false;
      for (const auto& t : cc_trace_from) reached = reached || alpha_eq(cc_normalize(t), cc_normalize(after));
      EXPECT_TRUE(reached);
    }
  }
}

}  // namespace
}  // namespace ccdefun
