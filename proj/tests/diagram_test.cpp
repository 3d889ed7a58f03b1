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

#include "test_util.hpp"

namespace ccdefun {
namespace {

using testing::cc;

TEST(Diagram, AppliedComposePasses) {
  const CCProgram p = testing::load_corpus("compose_applied.cc");
  const DiagramReport r = check_diagram(p.context, *p.main);
  EXPECT_TRUE(r) << r.failure;
  EXPECT_GT(r.steps, 0u);
  EXPECT_GT(r.subst_nodes, 0u);
  EXPECT_GT(r.label_steps, 0u);
}

TEST(Diagram, SingleStepIdentity) {
  const TypeContext<CC> g{{"A", cc("Type 0")}, {"a", cc("A")}};
  const DiagramReport r = check_diagram(g, cc("(fun (x : A) => x) a"));
  EXPECT_TRUE(r) << r.failure;
  EXPECT_EQ(r.steps, 1u);
}

TEST(Diagram, SubstitutionExamplePasses) {
  const CCProgram p = testing::load_corpus("subst_label.cc");
  const DiagramReport r = check_diagram(p.context, *p.main);
  EXPECT_TRUE(r) << r.failure;
}

TEST(Diagram, StepsUnderBindersAreCounted) {
  const DiagramReport r = check_diagram(
      {}, cc("(fun (f : Nat -> Nat) (y : Nat) => f (f y)) (fun (z : Nat) => add z 2)"));
  EXPECT_TRUE(r) << r.failure;
  EXPECT_EQ(r.steps, 3u);
  EXPECT_EQ(r.under_binder, 2u);
}

TEST(Diagram, EveryCorpusTracePasses) {
  for (const auto& path : testing::corpus_files()) {
    const CCProgram p = load_cc(testing::read_file(path));
    if (!p.main) continue;
    SCOPED_TRACE(path.filename().string());
    const DiagramReport r = check_diagram(p.context, *p.main);
    EXPECT_TRUE(r) << r.failure;
  }
}

TEST(Diagram, ReportsBrokenTrace) {
  const std::vector<CCTerm> trace{cc("add 1 1"), cc("3")};
  const DiagramReport r = check_diagram({}, trace);
  EXPECT_FALSE(r);
  EXPECT_NE(r.failure.find("step 0"), std::string::npos);
}

TEST(Diagram, MonotonicityAlongSigmaReduction) {
  for (const auto& path : testing::corpus_files()) {
    const CCProgram p = load_cc(testing::read_file(path));
    if (!p.main) continue;
    SCOPED_TRACE(path.filename().string());
    LabelMinter minter;
    const SigmaChecker checker(p.context);
    CCTerm t = *p.main;
    LabelContext previous = SigmaDefunctionalizer(minter).defs(checker.infer(t));
    for (int i = 0; i < 25; ++i) {
      const auto next = ccs_reduce_step(t);
      if (!next) break;
      const LabelContext defs = SigmaDefunctionalizer(minter).defs(checker.infer(*next));
      EXPECT_TRUE(label_subset(defs, previous)) << "step " << i;
      previous = defs;
      t = *next;
    }
  }
}

TEST(Diagram, ClosureApplicationAvoidsCapture) {
  const CCTerm closure = CCTerm::esubst(cc("fun (x : Nat) => add x y"), "y", cc("1"));
  const auto r = ccs_reduce_step(CCTerm::app(closure, cc("y")));
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(alpha_eq(erase_substitutions(*r), cc("add y 1")));
}

TEST(Diagram, ClosureApplicationKeepsDomainAnnotation) {
  const CCTerm closure = CCTerm::esubst(cc("fun (x : R) => x"), "R", cc("Nat"), cc("Type 0"));
  const auto r = ccs_reduce_step(CCTerm::app(closure, cc("3")));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(print(*r), "x{x : R := 3}{R : Type 0 := Nat}");
  const CCTerm type = SigmaChecker(TypeContext<CC>{}).infer(*r)->type;
  EXPECT_TRUE(alpha_eq(erase_substitutions(type), cc("Nat")));
}

}  // namespace
}  // namespace ccdefun
