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

#include "holtrans/opentheory/article.h"

#include <array>
#include <charconv>
#include <utility>

namespace holtrans::opentheory {

namespace {

constexpr std::array<std::pair<Keyword, std::string_view>, 34> kKeywords = {{
    {Keyword::kAbsTerm, "absTerm"},
    {Keyword::kAbsThm, "absThm"},
    {Keyword::kAppTerm, "appTerm"},
    {Keyword::kAppThm, "appThm"},
    {Keyword::kAssume, "assume"},
    {Keyword::kAxiom, "axiom"},
    {Keyword::kBetaConv, "betaConv"},
    {Keyword::kCons, "cons"},
    {Keyword::kConst, "const"},
    {Keyword::kConstTerm, "constTerm"},
    {Keyword::kDeductAntisym, "deductAntisym"},
    {Keyword::kDef, "def"},
    {Keyword::kDefineConst, "defineConst"},
    {Keyword::kDefineConstList, "defineConstList"},
    {Keyword::kDefineTypeOp, "defineTypeOp"},
    {Keyword::kEqMp, "eqMp"},
    {Keyword::kHdTl, "hdTl"},
    {Keyword::kNil, "nil"},
    {Keyword::kOpType, "opType"},
    {Keyword::kPop, "pop"},
    {Keyword::kPragma, "pragma"},
    {Keyword::kProveHyp, "proveHyp"},
    {Keyword::kRef, "ref"},
    {Keyword::kRefl, "refl"},
    {Keyword::kRemove, "remove"},
    {Keyword::kSubst, "subst"},
    {Keyword::kSym, "sym"},
    {Keyword::kThm, "thm"},
    {Keyword::kTrans, "trans"},
    {Keyword::kTypeOp, "typeOp"},
    {Keyword::kVar, "var"},
    {Keyword::kVarTerm, "varTerm"},
    {Keyword::kVarType, "varType"},
    {Keyword::kVersion, "version"},
}};

bool IsInteger(std::string_view s) {
  std::size_t i = s.starts_with('-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

std::string_view KeywordName(Keyword k) {
  for (const auto& [key, name] : kKeywords) {
    if (key == k) return name;
  }
  return "?";
}

std::optional<Keyword> ParseKeyword(std::string_view s) {
  for (const auto& [key, name] : kKeywords) {
    if (name == s) return key;
  }
  return std::nullopt;
}

Command Command::Int(std::int64_t n, std::size_t line) {
  Command c;
  c.kind = Kind::kInt;
  c.number = n;
  c.line = line;
  return c;
}

Command Command::Name(std::string s, std::size_t line) {
  Command c;
  c.kind = Kind::kName;
  c.name = std::move(s);
  c.line = line;
  return c;
}

Command Command::Key(Keyword k, std::size_t line) {
  Command c;
  c.kind = Kind::kKeyword;
  c.keyword = k;
  c.line = line;
  return c;
}

std::string_view ArticleErrorCodeName(ArticleErrorCode code) {
  switch (code) {
    case ArticleErrorCode::kUnknownCommand: return "UnknownCommand";
    case ArticleErrorCode::kMalformedString: return "MalformedString";
    case ArticleErrorCode::kStackUnderflow: return "StackUnderflow";
    case ArticleErrorCode::kTypeErrorOnStack: return "TypeErrorOnStack";
    case ArticleErrorCode::kSequentMismatch: return "SequentMismatch";
    case ArticleErrorCode::kUnsupportedVersion: return "UnsupportedVersion";
    case ArticleErrorCode::kMissingKey: return "MissingKey";
    case ArticleErrorCode::kLogicError: return "LogicError";
  }
  return "Unknown";
}

namespace {

std::string Describe(ArticleErrorCode code, const std::string& message, std::size_t line,
                     std::size_t command_index) {
  std::string out(ArticleErrorCodeName(code));
  if (line > 0) out += " at line " + std::to_string(line);
  if (command_index > 0) out += " (command " + std::to_string(command_index) + ")";
  out += ": " + message;
  return out;
}

}  // namespace

ArticleError::ArticleError(ArticleErrorCode code, const std::string& message,
                           std::size_t line, std::size_t command_index)
    : std::runtime_error(Describe(code, message, line, command_index)),
      code_(code),
      line_(line),
      command_index_(command_index) {}

std::vector<Command> ParseArticle(std::string_view text) {
  std::vector<Command> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '"') {
      if (line.size() < 2 || line.back() != '"') {
        throw ArticleError(ArticleErrorCode::kMalformedString, "unterminated name", line_no);
      }
      std::string_view body = line.substr(1, line.size() - 2);
      std::string decoded;
      decoded.reserve(body.size());
      for (std::size_t i = 0; i < body.size(); ++i) {
        const char c = body[i];
        if (c == '"') {
          throw ArticleError(ArticleErrorCode::kMalformedString, "unescaped quote", line_no);
        }
        if (c != '\\') {
          decoded += c;
          continue;
        }
        if (i + 1 == body.size()) {
          throw ArticleError(ArticleErrorCode::kMalformedString, "dangling backslash",
                             line_no);
        }
        const char next = body[++i];
        if (next == '"' || next == '\\') {
          decoded += next;
        } else {
          // Other escapes belong to the name syntax itself (such as an escaped
          // namespace separator) and are kept as written.
          decoded += '\\';
          decoded += next;
        }
      }
      out.push_back(Command::Name(std::move(decoded), line_no));
      continue;
    }
    if (IsInteger(line)) {
      std::int64_t n = 0;
      auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), n);
      if (ec != std::errc() || ptr != line.data() + line.size()) {
        throw ArticleError(ArticleErrorCode::kUnknownCommand,
                           "integer out of range: " + std::string(line), line_no);
      }
      out.push_back(Command::Int(n, line_no));
      continue;
    }
    if (auto k = ParseKeyword(line)) {
      out.push_back(Command::Key(*k, line_no));
      continue;
    }
    throw ArticleError(ArticleErrorCode::kUnknownCommand,
                       "unknown command '" + std::string(line) + "'", line_no);
  }
  return out;
}

}  // namespace holtrans::opentheory
