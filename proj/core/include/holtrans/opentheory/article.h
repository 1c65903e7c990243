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

// OpenTheory article files: one command per line, `#` comment lines,
// integers, quoted names and keywords.

#ifndef HOLTRANS_OPENTHEORY_ARTICLE_H_
#define HOLTRANS_OPENTHEORY_ARTICLE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace holtrans::opentheory {

enum class Keyword : std::uint8_t {
  kAbsTerm,
  kAbsThm,
  kAppTerm,
  kAppThm,
  kAssume,
  kAxiom,
  kBetaConv,
  kCons,
  kConst,
  kConstTerm,
  kDeductAntisym,
  kDef,
  kDefineConst,
  kDefineConstList,
  kDefineTypeOp,
  kEqMp,
  kHdTl,
  kNil,
  kOpType,
  kPop,
  kPragma,
  kProveHyp,
  kRef,
  kRefl,
  kRemove,
  kSubst,
  kSym,
  kThm,
  kTrans,
  kTypeOp,
  kVar,
  kVarTerm,
  kVarType,
  kVersion,
};

std::string_view KeywordName(Keyword k);
std::optional<Keyword> ParseKeyword(std::string_view s);

struct Command {
  enum class Kind : std::uint8_t { kInt, kName, kKeyword };
  Kind kind = Kind::kKeyword;
  std::int64_t number = 0;
  std::string name;  // decoded
  Keyword keyword = Keyword::kNil;
  std::size_t line = 0;

  static Command Int(std::int64_t n, std::size_t line = 0);
  static Command Name(std::string s, std::size_t line = 0);
  static Command Key(Keyword k, std::size_t line = 0);

  friend bool operator==(const Command& a, const Command& b) {
    return a.kind == b.kind && a.number == b.number && a.name == b.name &&
           a.keyword == b.keyword;
  }
};

enum class ArticleErrorCode : std::uint8_t {
  kUnknownCommand,
  kMalformedString,
  kStackUnderflow,
  kTypeErrorOnStack,
  kSequentMismatch,
  kUnsupportedVersion,
  kMissingKey,
  kLogicError,
};

std::string_view ArticleErrorCodeName(ArticleErrorCode code);

class ArticleError : public std::runtime_error {
 public:
  ArticleError(ArticleErrorCode code, const std::string& message, std::size_t line = 0,
               std::size_t command_index = 0);

  ArticleErrorCode code() const { return code_; }
  std::size_t line() const { return line_; }
  std::size_t command_index() const { return command_index_; }

 private:
  ArticleErrorCode code_;
  std::size_t line_;
  std::size_t command_index_;
};

std::vector<Command> ParseArticle(std::string_view text);

// Inverse of ParseArticle up to comments and blank lines.
std::string WriteCommand(const Command& c);
std::string WriteArticle(const std::vector<Command>& commands);

}  // namespace holtrans::opentheory

#endif  // HOLTRANS_OPENTHEORY_ARTICLE_H_
