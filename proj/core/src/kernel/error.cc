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

#include "holtrans/kernel/error.h"

namespace holtrans::kernel {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnboundVariable: return "UnboundVariable";
    case ErrorCode::kUnboundConstant: return "UnboundConstant";
    case ErrorCode::kNotAFunction: return "NotAFunction";
    case ErrorCode::kDomainMismatch: return "DomainMismatch";
    case ErrorCode::kIllegalSort: return "IllegalSort";
    case ErrorCode::kNotAType: return "NotAType";
    case ErrorCode::kDuplicateVariable: return "DuplicateVariable";
    case ErrorCode::kDuplicateConstant: return "DuplicateConstant";
    case ErrorCode::kIllTypedDeclaration: return "IllTypedDeclaration";
    case ErrorCode::kRuleTypeMismatch: return "RuleTypeMismatch";
    case ErrorCode::kNonPatternLhs: return "NonPatternLhs";
    case ErrorCode::kUnboundRhsVariable: return "UnboundRhsVariable";
    case ErrorCode::kFuelExhausted: return "FuelExhausted";
  }
  return "Unknown";
}

KernelError::KernelError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace holtrans::kernel
