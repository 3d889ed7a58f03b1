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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "test_util.hpp"

namespace ccdefun {
namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(CCDEFUN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string corpus(const std::string& name) {
  return (testing::corpus_dir() / name).string();
}

TEST(Cli, CheckPrintsType) {
  const CliRun r = run_cli("check " + corpus("identity.cc"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(A : Type 0) -> A -> A\n");
}

TEST(Cli, CheckRejectsIllTyped) {
  EXPECT_EQ(run_cli("check " + corpus("illtyped/illtyped.cc")).code, 1);
}

TEST(Cli, ParseErrorExitCode) {
  const auto path = std::filesystem::temp_directory_path() / "ccdefun_bad_syntax.cc";
  {
    std::ofstream f(path);
    f << "main (fun (x : Nat) => ;\n";
  }
  EXPECT_EQ(run_cli("check " + path.string()).code, 2);
  EXPECT_EQ(run_cli("check /nonexistent/file.cc").code, 2);
  EXPECT_EQ(run_cli("defun " + corpus("identity.cc") + " --emit yaml").code, 2);
}

TEST(Cli, DefunComposeEmitsSixLabels) {
  const CliRun r = run_cli("defun " + corpus("compose.cc"));
  EXPECT_EQ(r.code, 0);
  std::size_t labels = 0;
  for (std::size_t pos = 0; (pos = r.out.find("label l", pos)) != std::string::npos; ++pos) ++labels;
  EXPECT_EQ(labels, 6u);
  EXPECT_NE(r.out.find("main l0{};"), std::string::npos);
}

TEST(Cli, DefunJsonAndOut) {
  const auto path = std::filesystem::temp_directory_path() / "ccdefun_compose.json";
  const CliRun r = run_cli("defun " + corpus("compose.cc") + " --emit json --out " + path.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  const LabelContext from_json = label_context_from_json(testing::read_file(path));
  EXPECT_EQ(from_json.size(), 6u);
  const LabelContext from_text = label_context_from_text(run_cli("defun " + corpus("compose.cc")).out);
  EXPECT_TRUE(same_label_context(from_json, from_text));
}

TEST(Cli, DefunOutputRechecksAndRefunctionalizes) {
  const auto path = std::filesystem::temp_directory_path() / "ccdefun_subst.dcc";
  ASSERT_EQ(run_cli("defun " + corpus("subst_label.cc") + " --out " + path.string()).code, 0);
  const CliRun checked = run_cli("checkdcc " + path.string());
  EXPECT_EQ(checked.code, 0);
  const CliRun back = run_cli("refun " + path.string());
  EXPECT_EQ(back.code, 0);
  const CCProgram p = load_cc(back.out);
  const CCProgram original = testing::load_corpus("subst_label.cc");
  EXPECT_TRUE(cc_equiv(*p.main, *original.main));
}

TEST(Cli, EvalAgreesAcrossTargets) {
  const CliRun a = run_cli("eval " + corpus("two_plus_two.cc") + " --target cc");
  const CliRun b = run_cli("eval " + corpus("two_plus_two.cc") + " --target dcc");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(a.out, "4\n");
  EXPECT_EQ(b.out, "4\n");
}

TEST(Cli, IllTypedDccFilesAreRejected) {
  for (const char* name : {"wrong_arity.dcc", "wrong_closure_type.dcc", "unknown_label.dcc",
                           "universe_mismatch.dcc", "non_telescope.dcc"}) {
    SCOPED_TRACE(name);
    EXPECT_EQ(run_cli("checkdcc " + corpus(std::string("illtyped/") + name)).code, 1);
  }
}

TEST(Cli, VerifyCorpusDirectory) {
  const CliRun r = run_cli("verify " + testing::corpus_dir().string());
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyReportsFailures) {
  const CliRun r = run_cli("verify " + corpus("illtyped/illtyped.cc"));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, DiagnosticsAreSingleLine) {
  const std::string cmd = std::string(CCDEFUN_CLI_PATH) + " check " +
                          corpus("illtyped/illtyped.cc") + " 2>&1 1>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string err;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) err.append(buf, n);
  pclose(pipe);
  ASSERT_FALSE(err.empty());
  EXPECT_EQ(err.find('\n'), err.size() - 1);
}

}  // namespace
}  // namespace ccdefun
