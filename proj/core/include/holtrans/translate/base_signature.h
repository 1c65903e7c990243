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

// The hand-written base file hol.dk, in the two encodings: the equational
// one (Q0), where the inference rules are constants, and the one where
// implication and universal quantification are primitive and provability is
// defined by rewriting (PTS).

#ifndef HOLTRANS_TRANSLATE_BASE_SIGNATURE_H_
#define HOLTRANS_TRANSLATE_BASE_SIGNATURE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holtrans/dkfile/document.h"
#include "holtrans/kernel/signature.h"

namespace holtrans::translate {

enum class Mode : std::uint8_t { kQ0, kPts };

std::string_view ModeName(Mode mode);
std::optional<Mode> ParseMode(std::string_view name);

inline constexpr const char* kBaseModule = "hol";

// Source text of hol.dk.
std::string_view BaseText(Mode mode);

// BaseText parsed.
dkfile::DkDocument BaseDocument(Mode mode);

// The checked base signature. Throws dkfile::CheckError if it does not check,
// which would be a bug.
kernel::Signature BaseSignature(Mode mode, const kernel::Options& options = {});

// Identifiers that generated names must avoid: the base constants plus the
// keywords of the concrete syntax.
const std::vector<std::string>& ReservedNames();

}  // namespace holtrans::translate

#endif  // HOLTRANS_TRANSLATE_BASE_SIGNATURE_H_
