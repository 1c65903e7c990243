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

#ifndef HOLTRANS_TRANSLATE_ERROR_H_
#define HOLTRANS_TRANSLATE_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace holtrans::translate {

enum class ErrorCode : std::uint8_t {
  kUndeclaredTypeOp,
  kUndeclaredConstant,
  kInstanceMatchFailure,
  kNotAProposition,
  kDuplicateDeclaration,
  kUnsupportedDefinition,
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUndeclaredTypeOp: return "UndeclaredTypeOp";
    case ErrorCode::kUndeclaredConstant: return "UndeclaredConstant";
    case ErrorCode::kInstanceMatchFailure: return "InstanceMatchFailure";
    case ErrorCode::kNotAProposition: return "NotAProposition";
    case ErrorCode::kDuplicateDeclaration: return "DuplicateDeclaration";
    case ErrorCode::kUnsupportedDefinition: return "UnsupportedDefinition";
  }
  return "Unknown";
}

class TranslateError : public std::runtime_error {
 public:
  TranslateError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace holtrans::translate

#endif  // HOLTRANS_TRANSLATE_ERROR_H_
