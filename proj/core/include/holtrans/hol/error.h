// Copyright 2026 The holtrans Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOLTRANS_HOL_ERROR_H_
#define HOLTRANS_HOL_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace holtrans::hol {

enum class ErrorCode : std::uint8_t {
  kArityMismatch,
  kAppTypeMismatch,
  kRuleViolation,
  kConstTypeMismatch,
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kAppTypeMismatch: return "AppTypeMismatch";
    case ErrorCode::kRuleViolation: return "RuleViolation";
    case ErrorCode::kConstTypeMismatch: return "ConstTypeMismatch";
  }
  return "Unknown";
}

class HolError : public std::runtime_error {
 public:
  HolError(ErrorCode code, const std::string& message, std::string rule = {})
      : std::runtime_error(std::string(ErrorCodeName(code)) +
                           (rule.empty() ? "" : "(" + rule + ")") + ": " + message),
        code_(code),
        rule_(std::move(rule)) {}

  ErrorCode code() const { return code_; }
  // Name of the violated inference rule, for RuleViolation.
  const std::string& rule() const { return rule_; }

 private:
  ErrorCode code_;
  std::string rule_;
};

}  // namespace holtrans::hol

#endif  // HOLTRANS_HOL_ERROR_H_
