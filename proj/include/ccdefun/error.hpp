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

#ifndef CCDEFUN_ERROR_HPP
#define CCDEFUN_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ccdefun {

enum class ErrorCode {
  UnboundVariable,
  NotAFunction,
  TypeMismatch,
  NotAType,
  IllFormedContext,
  StepBudgetExceeded,
  UnknownLabel,
  ClosureArity,
  ClosureTypeMismatch,
  LabelClash,
  IllFormedLabelContext,
  DiagramFailure,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnboundVariable: return "unbound variable";
    case ErrorCode::NotAFunction: return "not a function";
    case ErrorCode::TypeMismatch: return "type mismatch";
    case ErrorCode::NotAType: return "not a type";
    case ErrorCode::IllFormedContext: return "ill-formed context";
    case ErrorCode::StepBudgetExceeded: return "step budget exceeded";
    case ErrorCode::UnknownLabel: return "unknown label";
    case ErrorCode::ClosureArity: return "closure arity";
    case ErrorCode::ClosureTypeMismatch: return "closure type mismatch";
    case ErrorCode::LabelClash: return "label clash";
    case ErrorCode::IllFormedLabelContext: return "ill-formed label context";
    case ErrorCode::DiagramFailure: return "diagram failure";
  }
  return "error";
}

/// Raised by the kernels, the translations and the diagram checker.
class KernelError : public std::runtime_error {
 public:
  KernelError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Surface-syntax error with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& detail)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + detail),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ccdefun

#endif  // CCDEFUN_ERROR_HPP
