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

TEST(Sigma, EmbeddingIsIdentity) {
  for (const char* s : {"x", "Type 0", "fun (A : Type 0) (x : A) => x"})
    EXPECT_TRUE(alpha_eq(sigma_embed(cc(s)), cc(s)));
}

TEST(Sigma, BetaProducesExplicitSubstitution) {
  const auto r = ccs_reduce_step(cc("(fun (x : Nat) => add x 1) 2"));
  ASSERT_TRUE(r);
  ASSERT_TRUE(r->is(Kind::ESubst));
  EXPECT_EQ(r->binder(), "x");
  EXPECT_TRUE(alpha_eq(r->subject(), cc("add x 1")));
  EXPECT_TRUE(alpha_eq(r->replacement(), cc("2")));
}

TEST(Sigma, VariableRules) {
  EXPECT_TRUE(alpha_eq(*ccs_reduce_step(CCTerm::esubst(cc("x"), "x", cc("N"))), cc("N")));
  EXPECT_TRUE(alpha_eq(*ccs_reduce_step(CCTerm::esubst(cc("y"), "x", cc("N"))), cc("y")));
  EXPECT_TRUE(
      alpha_eq(*ccs_reduce_step(CCTerm::esubst(cc("Type 2"), "x", cc("N"))), cc("Type 2")));
}

TEST(Sigma, SubstitutionPushesThroughApplication) {
  const CCTerm r = *ccs_reduce_step(CCTerm::esubst(cc("f x"), "x", cc("N")));
  EXPECT_EQ(print(r), "f{x := N} x{x := N}");
}

TEST(Sigma, SubstitutionIntoAbstractionIsStuck) {
  const CCTerm closure = CCTerm::esubst(cc("fun (z : Nat) => add y z"), "y", cc("3"));
  EXPECT_FALSE(ccs_reduce_step(closure));
  EXPECT_TRUE(alpha_eq(ccs_normalize(closure), closure));
}

TEST(Sigma, AppliedClosureReduces) {
  const CCTerm closure = CCTerm::esubst(cc("fun (z : Nat) => add y z"), "y", cc("3"));
  EXPECT_TRUE(alpha_eq(ccs_normalize(CCTerm::app(closure, cc("4"))), cc("7")));
}

TEST(Sigma, ClosureEquivalence) {
  const CCTerm closure = CCTerm::esubst(cc("fun (z : Nat) => add y z"), "y", cc("3"));
  EXPECT_TRUE(ccs_equiv(closure, cc("fun (w : Nat) => add 3 w")));
  EXPECT_TRUE(ccs_equiv(cc("fun (w : Nat) => add 3 w"), closure));
  EXPECT_FALSE(ccs_equiv(closure, cc("fun (w : Nat) => add 4 w")));
  EXPECT_TRUE(cc_equiv(erase_substitutions(closure), cc("fun (w : Nat) => add 3 w")));
}

TEST(Sigma, ApplicationTypeIsSyntacticSubstitution) {
  const TypeContext<CC> g{{"P", cc("Nat -> Type 0")}, {"p", cc("(n : Nat) -> P n")}};
  const DerivationPtr d = SigmaChecker(g).infer(cc("p 3"));
  ASSERT_TRUE(d->type.is(Kind::ESubst));
  EXPECT_TRUE(ccs_equiv(d->type, cc("P 3")));
}

TEST(Sigma, VacuousApplicationTypeIsNotWrapped) {
  const TypeContext<CC> g{{"f", cc("Nat -> Nat")}};
  EXPECT_TRUE(alpha_eq(SigmaChecker(g).infer(cc("f 3"))->type, cc("Nat")));
}

TEST(Sigma, DependentSubstitutionChainsTypeCheck) {
  const TypeContext<CC> g{{"A", cc("Type 0")},
                          {"B", cc("A -> Type 0")},
                          {"C", cc("(x : A) -> B x -> Type 0")},
                          {"g", cc("(x : A) -> B x")},
                          {"c", cc("(x : A) -> (y : B x) -> C x y")},
                          {"a", cc("A")}};
  const CCTerm chain =
      CCTerm::esubst(CCTerm::esubst(cc("c x y"), "x", cc("a")), "y", cc("g a"));
  EXPECT_NO_THROW(SigmaChecker(g).infer(chain));
}

TEST(Sigma, TranslationCommutesWithSubstitution) {
  const TypeContext<CC> g{{"A", cc("Type 0")}, {"N", cc("A")}};
  const CCTerm s = CCTerm::esubst(cc("fun (x : A) => y"), "y", cc("N"));
  LabelMinter minter;
  SigmaDefunctionalizer df(minter);
  const DerivationPtr d = SigmaChecker(g).infer(s);
  ASSERT_EQ(d->rule, Rule::Subst);
  const DCCTerm t = df.expr(d);
  ASSERT_TRUE(t.is(Kind::Label));
  EXPECT_TRUE(alpha_eq(t, subst(df.expr(d->children[1]), "y", df.expr(d->children[0]))));
  EXPECT_EQ(print(t.closure().back()), "N");
}

TEST(Sigma, EmbeddingTranslatesIdentically) {
  const CCTerm compose = testing::load_corpus("compose.cc").main.value();
  LabelMinter minter;
  Defunctionalizer cc_df(minter);
  SigmaDefunctionalizer s_df(minter);
  const DerivationPtr dc = Checker(TypeContext<CC>{}).infer(compose);
  const DerivationPtr ds = SigmaChecker(TypeContext<CC>{}).infer(sigma_embed(compose));
  EXPECT_TRUE(alpha_eq(cc_df.expr(dc), s_df.expr(ds)));
  EXPECT_TRUE(label_subset(s_df.defs(ds), cc_df.defs(dc)));
}

TEST(Sigma, EmbeddingDefinitionsAreSubsetForSubstitutionExample) {
  const CCProgram p = testing::load_corpus("subst_label.cc");
  LabelMinter minter;
  Defunctionalizer cc_df(minter);
  SigmaDefunctionalizer s_df(minter);
  const DerivationPtr dc = Checker(p.context).infer(*p.main);
  const DerivationPtr ds = SigmaChecker(p.context).infer(*p.main);
  EXPECT_TRUE(label_subset(s_df.defs(ds), cc_df.defs(dc)));
  EXPECT_LT(s_df.defs(ds).size(), cc_df.defs(dc).size());
}

}  // namespace
}  // namespace ccdefun
