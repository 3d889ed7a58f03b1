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

TEST(Harness, CorpusHasEnoughPrograms) { EXPECT_GE(testing::corpus_files().size(), 20u); }

TEST(Harness, CorpusPassesEveryCheck) {
  for (const auto& path : testing::corpus_files()) {
    const CCProgram p = load_cc(testing::read_file(path));
    if (!p.main) continue;
    SCOPED_TRACE(path.filename().string());
    const HarnessReport r = verify_judgement(p.context, *p.main);
    EXPECT_TRUE(r.ok()) << r.text();
  }
}

TEST(Harness, GroundProgramsEvaluateIdentically) {
  const std::vector<std::pair<std::string, std::string>> expected{
      {"two_plus_two.cc", "4"},  {"church_nat.cc", "3"},   {"church_bool.cc", "10"},
      {"twice.cc", "7"},         {"fin.cc", "2"},          {"fin_bound.cc", "5"},
      {"curried_add.cc", "7"},   {"compose_twice.cc", "4"}, {"identity_applied.cc", "42"},
      {"const.cc", "5"},         {"church_pair.cc", "7"},  {"church_pair_snd.cc", "6"},
      {"leibniz.cc", "9"},       {"type_level.cc", "6"},   {"compose_applied.cc", "11"}};
  for (const auto& [name, value] : expected) {
    SCOPED_TRACE(name);
    const CCProgram p = testing::load_corpus(name);
    EXPECT_EQ(print(cc_normalize(*p.main)), value);
    const TranslationResult r = translate_program(p.context, *p.main);
    EXPECT_EQ(print(dcc_normalize(r.all_defs(), r.term)), value);
  }
}

TEST(Harness, ValuesNeedNoDefinitions) {
  const TranslationResult r = translate_program({}, cc("4"));
  EXPECT_TRUE(r.all_defs().empty());
  EXPECT_TRUE(check_reduction_preservation({}, cc("4")));
}

TEST(Harness, TypePreservationExamples) {
  EXPECT_TRUE(check_type_preservation({}, cc("Type 0")));
  const CCProgram p = testing::load_corpus("subst_label.cc");
  EXPECT_TRUE(check_type_preservation(p.context, *p.main));
}

TEST(Harness, RoundTripExamples) {
  EXPECT_TRUE(check_round_trip({}, cc("fun (x : Type 0) => x")));
  const CCProgram p = testing::load_corpus("church_pair.cc");
  EXPECT_TRUE(check_round_trip(p.context, *p.main));
}

TEST(Harness, TypeSafetyDetectsClosedValues) {
  EXPECT_TRUE(check_type_safety(cc("(fun (x : Nat) => add x 1) 1")));
  EXPECT_TRUE(check_type_safety(cc("fun (x : Nat) => x")));
}

TEST(Harness, EnumerationSmallSizes) {
  const auto size1 = enumerate_small_terms(1);
  EXPECT_EQ(size1.size(), 6u);
  for (const auto& t : size1) EXPECT_EQ(t.size(), 1u);
  bool has_universe = false;
  bool has_variable = false;
  for (const auto& t : size1) {
    has_universe = has_universe || t.is(Kind::Universe);
    has_variable = has_variable || t.is(Kind::Var);
  }
  EXPECT_TRUE(has_universe);
  EXPECT_TRUE(has_variable);
  const auto size3 = enumerate_small_terms(3);
  bool has_identity = false;
  for (const auto& t : size3) has_identity = has_identity || alpha_eq(t, cc("fun (x : Type 0) => x"));
  EXPECT_TRUE(has_identity);
}

TEST(Harness, EnumerationCountIsFrozen) {
  EXPECT_EQ(enumerate_small_terms(5).size(), 347u);
}

TEST(Harness, EnumerationIsDeterministic) {
  const auto a = enumerate_small_terms(5);
  const auto b = enumerate_small_terms(5);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(alpha_eq(a[i], b[i]));
}

TEST(Harness, EnumerationBudgetIsBounded) {
  EXPECT_THROW(enumerate_small_terms(9), std::invalid_argument);
}

TEST(Harness, EnumeratedTermsPassEveryCheck) {
  const TypeContext<CC> g = enumeration_context();
  for (const auto& t : enumerate_small_terms(6)) {
    const HarnessReport r = verify_judgement(g, t);
    EXPECT_TRUE(r.ok()) << print(t) << "\n" << r.text();
  }
}

TEST(Harness, WeakeningSpotCheck) {
  const CCProgram p = testing::load_corpus("compose_simple.cc");
  EXPECT_TRUE(check_weakening(p.context, *p.main));
}

TEST(Harness, ReportText) {
  HarnessReport r;
  r.add(CheckResult{"a", true, {}});
  r.add(CheckResult{"b", false, "broken"});
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.text("f: "), "f: PASS a\nf: FAIL b: broken\n");
}

}  // namespace
}  // namespace ccdefun
