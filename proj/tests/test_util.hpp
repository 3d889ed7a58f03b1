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

#ifndef CCDEFUN_TESTS_TEST_UTIL_HPP
#define CCDEFUN_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ccdefun/ccdefun.hpp"

namespace ccdefun::testing {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::filesystem::path corpus_dir() { return CCDEFUN_CORPUS_DIR; }

/// The `.cc` files directly inside the corpus directory, sorted.
inline std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(corpus_dir()))
    if (e.is_regular_file() && e.path().extension() == ".cc") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

inline CCProgram load_corpus(const std::string& name) {
  return load_cc(read_file(corpus_dir() / name));
}

inline CCTerm cc(const std::string& s) { return parse_cc_term(s); }
inline DCCTerm dcc(const std::string& s) { return parse_dcc_term(s); }

}  // namespace ccdefun::testing

#endif  // CCDEFUN_TESTS_TEST_UTIL_HPP
