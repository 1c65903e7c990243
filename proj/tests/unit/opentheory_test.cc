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

#include <gtest/gtest.h>

#include "holtrans/opentheory/article.h"
#include "holtrans/opentheory/vm.h"
#include "test_dirs.h"

namespace holtrans::opentheory {
namespace {

ArticleErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const ArticleError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no ArticleError";
  return ArticleErrorCode::kLogicError;
}

VMState RunText(const std::string& text) { return opentheory::Run(ParseArticle(text)); }

std::string Identity() { return testing::ReadFile(testing::CorpusDir() / "identity.art"); }

TEST(ArticleParse, CommandsAndComments) {
  const auto cmds = ParseArticle("# comment\n6\nversion\n\"a\\\"b\"\n-3\nnil\n");
  ASSERT_EQ(cmds.size(), 5u);
  EXPECT_EQ(cmds[0], Command::Int(6));
  EXPECT_EQ(cmds[1], Command::Key(Keyword::kVersion));
  EXPECT_EQ(cmds[2], Command::Name("a\"b"));
  EXPECT_EQ(cmds[3], Command::Int(-3));
  EXPECT_EQ(cmds[4].line, 6u);
}

TEST(ArticleParse, Errors) {
  EXPECT_EQ(CodeOf([] { ParseArticle("frobnicate\n"); }), ArticleErrorCode::kUnknownCommand);
  EXPECT_EQ(CodeOf([] { ParseArticle("\"open\n"); }), ArticleErrorCode::kMalformedString);
}

TEST(ArticleParse, WriteRoundTrips) {
  const auto cmds = ParseArticle(Identity());
  EXPECT_EQ(ParseArticle(WriteArticle(cmds)), cmds);
  for (const auto& file : testing::CorpusFiles()) {
    const auto all = ParseArticle(testing::ReadFile(file));
    EXPECT_EQ(ParseArticle(WriteArticle(all)), all) << file;
  }
}

TEST(ArticleParse, KeywordNames) {
  EXPECT_EQ(ParseKeyword("defineTypeOp"), Keyword::kDefineTypeOp);
  EXPECT_EQ(KeywordName(Keyword::kHdTl), "hdTl");
  EXPECT_FALSE(ParseKeyword("thm2").has_value());
}

TEST(Vm, IdentityArticle) {
  const VMState s = RunText(Identity());
  ASSERT_EQ(s.theorems.size(), 1u);
  EXPECT_TRUE(s.theorems[0].sequent.hyps.empty());
  const hol::Term x = hol::Term::Var("x", hol::Type::Var("A"));
  EXPECT_EQ(s.theorems[0].sequent.concl, hol::Term::Eq(hol::Term::Abs(x, x), hol::Term::Abs(x, x)));
}

TEST(Vm, VersionIsRequired) {
  EXPECT_EQ(CodeOf([] { RunText("nil\n"); }), ArticleErrorCode::kUnsupportedVersion);
  EXPECT_EQ(CodeOf([] { RunText("5\nversion\n"); }), ArticleErrorCode::kUnsupportedVersion);
}

TEST(Vm, StackErrors) {
  EXPECT_EQ(CodeOf([] { RunText("6\nversion\nrefl\n"); }), ArticleErrorCode::kStackUnderflow);
  EXPECT_EQ(CodeOf([] { RunText("6\nversion\n1\nrefl\n"); }),
            ArticleErrorCode::kTypeErrorOnStack);
  EXPECT_EQ(CodeOf([] { RunText("6\nversion\n3\nref\n"); }), ArticleErrorCode::kMissingKey);
}

TEST(Vm, DictionaryOperations) {
  const VMState s = RunText("6\nversion\n\"n\"\n0\ndef\n0\nremove\npop\n");
  // def leaves its object on the stack; remove pushes another copy.
  ASSERT_EQ(s.stack.size(), 1u);
  EXPECT_EQ(s.stack[0].kind, ObjectKind::kName);
  EXPECT_TRUE(s.dictionary.empty());
  const VMState t = RunText("6\nversion\n\"a\"\nnil\ncons\nhdTl\n");
  ASSERT_EQ(t.stack.size(), 2u);
  EXPECT_EQ(t.stack[0].kind, ObjectKind::kName);
  EXPECT_EQ(t.stack[1].kind, ObjectKind::kList);
}

TEST(Vm, SequentMismatchCarriesCommandIndex) {
  // Prove x = x instead of the stated (\x. x) = (\x. x).
  std::string text = Identity();
  const std::string original = "3\ndef\nrefl\n";
  const auto at = text.find(original);
  ASSERT_NE(at, std::string::npos);
  text.replace(at, original.size(), "3\ndef\n2\nref\nrefl\n");
  try {
    RunText(text);
    FAIL() << "no error";
  } catch (const ArticleError& e) {
    EXPECT_EQ(e.code(), ArticleErrorCode::kSequentMismatch);
    EXPECT_GT(e.command_index(), 0u);
    EXPECT_GT(e.line(), 0u);
  }
}

TEST(Vm, EveryCorpusArticleRuns) {
  for (const auto& file : testing::CorpusFiles()) {
    VMOptions paranoid;
    paranoid.paranoid = true;
    const VMState s = opentheory::Run(ParseArticle(testing::ReadFile(file)), paranoid);
    EXPECT_FALSE(s.theorems.empty()) << file;
  }
}

TEST(Vm, DefineTypeOpTheorems) {
  const VMState s =
      RunText(testing::ReadFile(testing::CorpusDir() / "define_type_op.art"));
  EXPECT_TRUE(s.type_ops.at("unit1").defined);
  EXPECT_TRUE(s.constants.at("abs1").defined);
  EXPECT_TRUE(s.constants.at("rep1").defined);
}

TEST(Vm, AntiUnifyFindsLeastGeneralGeneralization) {
  const hol::Type b = hol::Type::Bool(), i = hol::Type::Ind();
  const hol::Type g = AntiUnify({hol::Type::Fun(b, b), hol::Type::Fun(i, i)});
  ASSERT_TRUE(g.is_fun());
  EXPECT_TRUE(g.domain().is_var());
  EXPECT_EQ(g.domain(), g.codomain());
  const hol::Type h = AntiUnify({hol::Type::Fun(b, b), hol::Type::Fun(i, b)});
  EXPECT_TRUE(h.domain().is_var());
  EXPECT_EQ(h.codomain(), b);
}

}  // namespace
}  // namespace holtrans::opentheory
