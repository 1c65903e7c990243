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

#ifndef HOLTRANS_KERNEL_ERROR_H_
#define HOLTRANS_KERNEL_ERROR_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace holtrans::kernel {

enum class ErrorCode : std::uint8_t {
  kUnboundVariable,
  kUnboundConstant,
  kNotAFunction,
  kDomainMismatch,
  kIllegalSort,
  kNotAType,
  kDuplicateVariable,
  kDuplicateConstant,
  kIllTypedDeclaration,
  kRuleTypeMismatch,
  kNonPatternLhs,
  kUnboundRhsVariable,
  kFuelExhausted,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the kernel. The message is human readable; the code
// is what callers should branch on.
class KernelError : public std::runtime_error {
 public:
  KernelError(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace holtrans::kernel

#endif  // HOLTRANS_KERNEL_ERROR_H_
