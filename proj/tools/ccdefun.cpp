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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ccdefun/ccdefun.hpp"

namespace fs = std::filesystem;
using namespace ccdefun;

namespace {

enum Exit { kOk = 0, kTypeError = 1, kParseError = 2, kVerifyFailure = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_dcc_path(const std::string& path) { return fs::path(path).extension() == ".dcc"; }

// Runs a command body, mapping library errors to exit codes.
template <class F>
int run(const std::string& file, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::cerr << "ccdefun: parse error: " << file << ":" << one_line(e.what()) << "\n";
    return kParseError;
  } catch (const IoError& e) {
    std::cerr << "ccdefun: " << one_line(e.what()) << "\n";
    return kParseError;
  } catch (const KernelError& e) {
    std::cerr << "ccdefun: type error: " << file << ": " << one_line(e.what()) << "\n";
    return kTypeError;
  }
}

int cmd_check(const std::string& file) {
  return run(file, [&] {
    const CCProgram p = load_cc(read_file(file));
    const Checker checker(p.context);
    if (p.main) {
      std::cout << print(cc_normalize(checker.infer(*p.main)->type)) << "\n";
    } else {
      std::cout << "ok\n";
    }
    return kOk;
  });
}

int cmd_defun(const std::string& file, const std::string& emit, const std::string& out_path) {
  return run(file, [&] {
    const CCProgram p = load_cc(read_file(file));
    std::string text;
    if (p.main) {
      const TranslationResult r = translate_program(p.context, *p.main);
      text = emit == "json" ? emit_json(r) + "\n" : emit_text(r);
    } else {
      const auto [ctx, defs] = defun_context(p.context);
      if (emit == "json") {
        nlohmann::ordered_json c = nlohmann::ordered_json::array();
        for (const auto& e : ctx) c.push_back({{"x", e.name}, {"type", print(e.type)}});
        text = nlohmann::ordered_json{{"labels", label_context_json(defs)}, {"context", c}}.dump(2) +
               "\n";
      } else {
        text = emit_label_context_text(defs);
        for (const auto& e : ctx) text += "axiom " + e.name + " : " + print(e.type) + ";\n";
      }
    }
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw IoError("cannot write " + out_path);
      out << text;
    }
    return kOk;
  });
}

int cmd_checkdcc(const std::string& file) {
  return run(file, [&] {
    const DCCProgram p = load_dcc(read_file(file));
    const DccChecker checker(p.defs, p.context);
    if (p.main) {
      std::cout << print(dcc_normalize(p.defs, checker.infer(*p.main))) << "\n";
    } else {
      std::cout << "ok\n";
    }
    return kOk;
  });
}

int cmd_eval(const std::string& file, const std::string& target) {
  return run(file, [&] {
    if (is_dcc_path(file)) {
      const DCCProgram p = load_dcc(read_file(file));
      if (!p.main) throw KernelError(ErrorCode::NotAType, "no main term to evaluate");
      DccChecker(p.defs, p.context).infer(*p.main);
      std::cout << print(dcc_normalize(p.defs, *p.main)) << "\n";
      return kOk;
    }
    const CCProgram p = load_cc(read_file(file));
    if (!p.main) throw KernelError(ErrorCode::NotAType, "no main term to evaluate");
    if (target == "dcc") {
      const TranslationResult r = translate_program(p.context, *p.main);
      std::cout << print(dcc_normalize(r.all_defs(), r.term)) << "\n";
    } else {
      Checker(p.context).infer(*p.main);
      std::cout << print(cc_normalize(*p.main)) << "\n";
    }
    return kOk;
  });
}

int cmd_refun(const std::string& file) {
  return run(file, [&] {
    const DCCProgram p = load_dcc(read_file(file));
    Refunctionalizer back(p.defs);
    const TypeContext<CC> ctx = back.context(p.context);
    std::optional<CCTerm> main;
    if (p.main) main = back.expr(*p.main);
    const Checker checker(ctx);
    if (main) checker.infer(*main);
    std::cout << emit_cc(ctx, main);
    return kOk;
  });
}

// Checks of one file; load failures are reported as failed checks.
HarnessReport verify_file(const std::string& file) {
  HarnessReport report;
  try {
    if (is_dcc_path(file)) {
      const DCCProgram p = load_dcc(read_file(file));
      report.add(detail::guarded("backward typing", [&](CheckResult& r) {
        Refunctionalizer back(p.defs);
        const Checker checker(back.context(p.context));
        if (!p.main) return;
        const DCCTerm a = DccChecker(p.defs, p.context).infer(*p.main);
        const DerivationPtr d = checker.infer(back.expr(*p.main));
        if (!cc_equiv(d->type, back.expr(a)))
          detail::refute(r, "refunctionalized term has type " + print(d->type));
      }));
      return report;
    }
    const CCProgram p = load_cc(read_file(file));
    if (p.main) return verify_judgement(p.context, *p.main);
    report.add(detail::guarded("type preservation", [&](CheckResult& r) {
      const auto [ctx, defs] = defun_context(p.context);
      const DccWfReport wf = dcc_wf(defs, ctx);
      if (!wf) detail::refute(r, wf.message);
    }));
  } catch (const std::exception& e) {
    report.add(CheckResult{"load", false, one_line(e.what())});
  }
  return report;
}

int cmd_verify(const std::string& target) {
  std::vector<std::string> files;
  if (fs::is_directory(target)) {
    for (const auto& entry : fs::directory_iterator(target)) {
      const auto ext = entry.path().extension();
      if (entry.is_regular_file() && (ext == ".cc" || ext == ".dcc"))
        files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
  } else if (fs::exists(target)) {
    files.push_back(target);
  } else {
    std::cerr << "ccdefun: cannot read " << target << "\n";
    return kParseError;
  }
  std::size_t failed = 0;
  for (const auto& f : files) {
    const HarnessReport report = verify_file(f);
    std::cout << report.text(fs::path(f).filename().string() + ": ");
    if (!report.ok()) ++failed;
  }
  std::cout << files.size() - failed << "/" << files.size() << " files passed\n";
  if (failed) {
    std::cerr << "ccdefun: verification failed for " << failed << " file(s)\n";
    return kVerifyFailure;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Type-preserving defunctionalization for the Calculus of Constructions"};
  app.require_subcommand(1);
  std::string file;
  std::string emit = "text";
  std::string out_path;
  std::string target = "cc";

  auto* check = app.add_subcommand("check", "Type check a .cc file and print the type of main");
  check->add_option("FILE", file)->required();
  auto* defun = app.add_subcommand("defun", "Defunctionalize a .cc file");
  defun->add_option("FILE", file)->required();
  defun->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"text", "json"}));
  defun->add_option("--out", out_path, "Write the output to PATH");
  auto* checkdcc = app.add_subcommand("checkdcc", "Type check a .dcc file");
  checkdcc->add_option("FILE", file)->required();
  auto* eval = app.add_subcommand("eval", "Normalize the main term");
  eval->add_option("FILE", file)->required();
  eval->add_option("--target", target, "Calculus to evaluate in")
      ->check(CLI::IsMember({"cc", "dcc"}));
  auto* refun = app.add_subcommand("refun", "Refunctionalize a .dcc file into .cc text");
  refun->add_option("FILE", file)->required();
  auto* verify = app.add_subcommand("verify", "Run the metatheory checks on a file or directory");
  verify->add_option("PATH", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParseError;
  }

  if (*check) return cmd_check(file);
  if (*defun) return cmd_defun(file, emit, out_path);
  if (*checkdcc) return cmd_checkdcc(file);
  if (*eval) return cmd_eval(file, target);
  if (*refun) return cmd_refun(file);
  return cmd_verify(file);
}
