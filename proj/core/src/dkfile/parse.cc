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

#include <unordered_set>

#include "holtrans/dkfile/document.h"

namespace holtrans::dkfile {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& expectation)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": expected " + expectation),
      line_(line),
      column_(column) {}

namespace {

enum class Tok : std::uint8_t {
  kIdent,
  kType,
  kDef,
  kColon,
  kDefEq,
  kArrow,
  kFatArrow,
  kRewrite,
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kComma,
  kDot,
  kName,
  kComment,
  kEnd,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

bool IsWordChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> Run() {
    std::vector<Token> out;
    for (;;) {
      SkipSpace();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= text_.size()) {
        t.kind = Tok::kEnd;
        out.push_back(t);
        return out;
      }
      const char c = text_[pos_];
      if (c == '(' && Peek(1) == ';') {
        t.kind = Tok::kComment;
        t.text = ReadComment(t);
      } else if (IsWordChar(c)) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && IsWordChar(text_[pos_])) Advance();
        t.text = std::string(text_.substr(start, pos_ - start));
        if (t.text[0] >= '0' && t.text[0] <= '9') {
          throw ParseError(t.line, t.column, "an identifier not starting with a digit");
        }
        t.kind = t.text == "Type" ? Tok::kType : t.text == "def" ? Tok::kDef : Tok::kIdent;
      } else if (c == '#') {
        if (text_.substr(pos_, 5) != "#NAME") throw ParseError(t.line, t.column, "#NAME");
        for (int i = 0; i < 5; ++i) Advance();
        t.kind = Tok::kName;
      } else if (c == ':') {
        Advance();
        if (Peek(0) == '=') {
          Advance();
          t.kind = Tok::kDefEq;
        } else {
          t.kind = Tok::kColon;
        }
      } else if (c == '-') {
        if (text_.substr(pos_, 3) == "-->") {
          for (int i = 0; i < 3; ++i) Advance();
          t.kind = Tok::kRewrite;
        } else if (text_.substr(pos_, 2) == "->") {
          Advance();
          Advance();
          t.kind = Tok::kArrow;
        } else {
          throw ParseError(t.line, t.column, "'->' or '-->'");
        }
      } else if (c == '=') {
        if (Peek(1) != '>') throw ParseError(t.line, t.column, "'=>'");
        Advance();
        Advance();
        t.kind = Tok::kFatArrow;
      } else {
        switch (c) {
          case '(': t.kind = Tok::kLParen; break;
          case ')': t.kind = Tok::kRParen; break;
          case '[': t.kind = Tok::kLBracket; break;
          case ']': t.kind = Tok::kRBracket; break;
          case ',': t.kind = Tok::kComma; break;
          case '.': t.kind = Tok::kDot; break;
          default:
            throw ParseError(t.line, t.column, "a token, found '" + std::string(1, c) + "'");
        }
        Advance();
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char Peek(std::size_t k) const {
    return pos_ + k < text_.size() ? text_[pos_ + k] : '\0';
  }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      Advance();
    }
  }

  // Comments nest. The text excludes the delimiters and one space of padding
  // on each side.
  std::string ReadComment(const Token& start) {
    Advance();
    Advance();
    const std::size_t body = pos_;
    int depth = 1;
    while (pos_ < text_.size()) {
      if (Peek(0) == '(' && Peek(1) == ';') {
        ++depth;
        Advance();
        Advance();
      } else if (Peek(0) == ';' && Peek(1) == ')') {
        if (--depth == 0) {
          std::string_view inner = text_.substr(body, pos_ - body);
          Advance();
          Advance();
          if (inner.starts_with(' ')) inner.remove_prefix(1);
          if (inner.ends_with(' ')) inner.remove_suffix(1);
          return std::string(inner);
        }
        Advance();
        Advance();
      } else {
        Advance();
      }
    }
    throw ParseError(start.line, start.column, "';)' closing this comment");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  DkDocument Run() {
    DkDocument doc;
    for (;;) {
      const Token& t = tokens_[pos_];
      switch (t.kind) {
        case Tok::kEnd:
          return doc;
        case Tok::kComment:
          doc.items.push_back(Comment{t.text});
          ++pos_;
          break;
        case Tok::kName:
          ++pos_;
          doc.module = Expect(Tok::kIdent, "a module name").text;
          Expect(Tok::kDot, "'.'");
          break;
        case Tok::kDef: {
          ++pos_;
          Defn d;
          d.name = Expect(Tok::kIdent, "a definition name").text;
          Expect(Tok::kColon, "':'");
          d.type = ParseTerm();
          Expect(Tok::kDefEq, "':='");
          d.body = ParseTerm();
          Expect(Tok::kDot, "'.'");
          doc.items.push_back(std::move(d));
          break;
        }
        case Tok::kLBracket:
          doc.items.push_back(ParseRule());
          break;
        case Tok::kIdent: {
          Decl d;
          d.name = Next().text;
          Expect(Tok::kColon, "':'");
          d.type = ParseTerm();
          Expect(Tok::kDot, "'.'");
          doc.items.push_back(std::move(d));
          break;
        }
        default:
          Fail("a declaration, definition, rule or comment");
      }
    }
  }

 private:
  void SkipComments() {
    while (tokens_[pos_].kind == Tok::kComment) ++pos_;
  }

  const Token& PeekTok(std::size_t k = 0) {
    SkipComments();
    std::size_t i = pos_;
    for (std::size_t seen = 0;; ++i) {
      if (tokens_[i].kind == Tok::kComment) continue;
      if (seen == k || tokens_[i].kind == Tok::kEnd) return tokens_[i];
      ++seen;
    }
  }

  const Token& Next() {
    SkipComments();
    const Token& t = tokens_[pos_];
    if (t.kind != Tok::kEnd) ++pos_;
    return t;
  }

  [[noreturn]] void Fail(const std::string& expectation) {
    const Token& t = PeekTok();
    throw ParseError(t.line, t.column, expectation);
  }

  const Token& Expect(Tok kind, const char* expectation) {
    if (PeekTok().kind != kind) Fail(expectation);
    return Next();
  }

  Rule ParseRule() {
    Expect(Tok::kLBracket, "'['");
    Rule r;
    if (PeekTok().kind != Tok::kRBracket) {
      for (;;) {
        std::string name = Expect(Tok::kIdent, "a rule variable").text;
        Expect(Tok::kColon, "':'");
        kernel::Term type = ParseTerm();
        r.rule.context.Push(name, type);
        rule_vars_.insert(std::move(name));
        if (PeekTok().kind == Tok::kComma) {
          Next();
          continue;
        }
        break;
      }
    }
    Expect(Tok::kRBracket, "']'");
    r.rule.lhs = ParseTerm();
    Expect(Tok::kRewrite, "'-->'");
    r.rule.rhs = ParseTerm();
    Expect(Tok::kDot, "'.'");
    rule_vars_.clear();
    return r;
  }

  kernel::Term ParseTerm() {
    if (PeekTok().kind == Tok::kIdent && PeekTok(1).kind == Tok::kColon) {
      std::string name = Next().text;
      Next();
      kernel::Term domain = ParseApp();
      const Tok arrow = PeekTok().kind;
      if (arrow != Tok::kArrow && arrow != Tok::kFatArrow) Fail("'->' or '=>'");
      Next();
      scope_.push_back(name);
      kernel::Term body = ParseTerm();
      scope_.pop_back();
      return arrow == Tok::kArrow ? kernel::Term::Prod(name, domain, body)
                                  : kernel::Term::Abs(name, domain, body);
    }
    kernel::Term a = ParseApp();
    if (PeekTok().kind != Tok::kArrow) return a;
    Next();
    scope_.emplace_back();  // anonymous: cannot be referenced
    kernel::Term b = ParseTerm();
    scope_.pop_back();
    return kernel::Term::Prod("_", a, b);
  }

  bool StartsAtom() {
    const Tok k = PeekTok().kind;
    return k == Tok::kIdent || k == Tok::kType || k == Tok::kLParen;
  }

  kernel::Term ParseApp() {
    kernel::Term head = ParseAtom();
    while (StartsAtom()) head = kernel::Term::App(head, ParseAtom());
    return head;
  }

  kernel::Term ParseAtom() {
    const Token& t = PeekTok();
    switch (t.kind) {
      case Tok::kType:
        Next();
        return kernel::Term::Type();
      case Tok::kLParen: {
        Next();
        kernel::Term inner = ParseTerm();
        Expect(Tok::kRParen, "')'");
        return inner;
      }
      case Tok::kIdent: {
        std::string name = Next().text;
        for (std::size_t i = scope_.size(); i-- > 0;) {
          if (scope_[i] == name) {
            return kernel::Term::Bound(static_cast<std::uint32_t>(scope_.size() - 1 - i));
          }
        }
        if (rule_vars_.contains(name)) return kernel::Term::Free(std::move(name));
        return kernel::Term::Const(std::move(name));
      }
      default:
        Fail("a term");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
  std::unordered_set<std::string> rule_vars_;
};

}  // namespace

DkDocument Parse(std::string_view text) {
  Lexer lexer(text);
  Parser parser(lexer.Run());
  return parser.Run();
}

}  // namespace holtrans::dkfile
