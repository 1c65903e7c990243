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

#include "holtrans/dkfile/document.h"
#include "holtrans/dkfile/mangle.h"
#include "holtrans/kernel/error.h"
#include "holtrans/kernel/typecheck.h"
#include "holtrans/translate/base_signature.h"
#include "holtrans/translate/translate.h"
#include "random_hol.h"

namespace holtrans::dkfile {
namespace {

using kernel::Term;

TEST(DkParse, Items) {
  const DkDocument doc = Parse(
      "#NAME m.\n"
      "(; a (; nested ;) comment ;)\n"
      "a : Type.\n"
      "def id : a -> a := x : a => x.\n"
      "[x : a] id x --> x.\n");
  EXPECT_EQ(doc.module, "m");
  ASSERT_EQ(doc.items.size(), 4u);
  EXPECT_EQ(std::get<Comment>(doc.items[0]).text, "a (; nested ;) comment");
  EXPECT_EQ(std::get<Decl>(doc.items[1]).type, Term::Type());
  const Defn& id = std::get<Defn>(doc.items[2]);
  EXPECT_EQ(id.body, Term::Abs("x", Term::Const("a"), Term::Bound(0)));
  const Rule& rule = std::get<Rule>(doc.items[3]);
  EXPECT_EQ(rule.rule.lhs, Term::App(Term::Const("id"), Term::Free("x")));
  const DocumentStats stats = Count(doc);
  EXPECT_EQ(stats.declarations, 1u);
  EXPECT_EQ(stats.definitions, 1u);
  EXPECT_EQ(stats.rules, 1u);
  EXPECT_EQ(stats.comments, 1u);
}

TEST(DkParse, DependentProducts) {
  const DkDocument doc = Parse("f : a : Type -> a -> a.\n");
  const Term& t = std::get<Decl>(doc.items[0]).type;
  EXPECT_EQ(t, Term::Prod("a", Term::Type(), Term::Arrow(Term::Bound(0), Term::Bound(0))));
}

TEST(DkParse, ErrorsCarryPositions) {
  try {
    Parse("a : Type.\nb : .\n");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(Parse("a : Type"), ParseError);
  EXPECT_THROW(Parse("(; open"), ParseError);
  EXPECT_THROW(Parse("a : Type. 9a : Type."), ParseError);
}

TEST(DkEmit, BaseTextsRoundTrip) {
  for (auto mode : {translate::Mode::kQ0, translate::Mode::kPts}) {
    const DkDocument doc = translate::BaseDocument(mode);
    EXPECT_EQ(Parse(Emit(doc)), doc);
    EXPECT_EQ(Emit(Parse(Emit(doc))), Emit(doc));
  }
}

// parse . emit is the identity on generated documents: translated theorems
// over a small theory, the declarations they need, rules and comments.
TEST(DkEmit, RandomDocumentsRoundTrip) {
  for (int i = 0; i < 100; ++i) {
    const auto mode = i % 2 ? translate::Mode::kPts : translate::Mode::kQ0;
    translate::TranslationEnv env(mode);
    translate::Translator tr(env, testing::TheoryResolver());
    testing::RandomHol gen(500 + i);
    DkDocument doc;
    doc.module = "random_" + std::to_string(i);
    const int theorems = 1 + gen.Pick(3);
    for (int k = 0; k < theorems; ++k) {
      const testing::CheckedProof d = gen.RandomProof(3);
      Defn thm = tr.Theorem("thm_" + std::to_string(k), d.sequent, d.proof);
      for (Item& item : tr.TakePending()) doc.items.push_back(std::move(item));
      doc.items.push_back(Comment{"theorem " + std::to_string(k)});
      doc.items.push_back(std::move(thm));
    }
    if (i % 3 == 0) {
      const DkDocument base = translate::BaseDocument(mode);
      for (const Item& item : base.items) {
        if (std::holds_alternative<Rule>(item)) doc.items.push_back(item);
      }
    }
    const std::string text = Emit(doc);
    EXPECT_EQ(Parse(text), doc) << text;
  }
}

// Emitted documents check exactly when the in-memory document checks.
TEST(DkCheck, EmittedTextChecksLikeTheDocument) {
  for (int i = 0; i < 30; ++i) {
    const auto mode = i % 2 ? translate::Mode::kPts : translate::Mode::kQ0;
    const kernel::Signature base = translate::BaseSignature(mode);
    translate::TranslationEnv env(mode);
    translate::Translator tr(env, testing::TheoryResolver());
    testing::RandomHol gen(900 + i);
    const testing::CheckedProof d = gen.RandomProof(4);
    DkDocument doc;
    Defn thm = tr.Theorem("thm", d.sequent, d.proof);
    doc.items = tr.TakePending();
    doc.items.push_back(thm);
    // A broken copy: the statement of the theorem is replaced by Type.
    DkDocument broken = doc;
    std::get<Defn>(broken.items.back()).type = Term::Type();
    for (const DkDocument* candidate : {&doc, &broken}) {
      auto outcome = [&](const DkDocument& x) {
        kernel::Signature sig = base;
        try {
          Check(sig, x);
          return true;
        } catch (const CheckError&) {
          return false;
        }
      };
      EXPECT_EQ(outcome(*candidate), outcome(Parse(Emit(*candidate))));
    }
    kernel::Signature sig = base;
    EXPECT_NO_THROW(Check(sig, Parse(Emit(doc))));
  }
}

TEST(DkCheck, ReportsTheItem) {
  kernel::Signature sig = translate::BaseSignature(translate::Mode::kQ0);
  try {
    Check(sig, Parse("x : undeclared.\n"));
    FAIL() << "no error";
  } catch (const CheckError& e) {
    EXPECT_EQ(e.item(), "x");
    // The unbound name surfaces inside the declaration's error.
    EXPECT_EQ(e.code(), kernel::ErrorCode::kIllTypedDeclaration);
    EXPECT_NE(std::string(e.what()).find("undeclared"), std::string::npos) << e.what();
  }
}

TEST(Mangle, Base) {
  EXPECT_EQ(MangleBase("Data.List.map"), "Data_List_map");
  EXPECT_EQ(MangleBase("1st"), "_1st");
  EXPECT_EQ(MangleBase("Type"), "_Type");
  EXPECT_EQ(MangleBase(""), "_");
  EXPECT_EQ(MangleBase("\xC2\xAC"), "_u00AC_");
  EXPECT_EQ(MangleBase("a+b"), "a_u002B_b");
}

TEST(Mangle, Injective) {
  Mangler m({"bool"});
  EXPECT_EQ(m.Mangle("a.b"), "a_b");
  EXPECT_EQ(m.Mangle("a_b"), "a_b_1");
  EXPECT_EQ(m.Mangle("a.b"), "a_b");
  EXPECT_EQ(m.Mangle("bool"), "bool_1");
  EXPECT_EQ(m.collisions().size(), 2u);
  EXPECT_TRUE(m.Taken("a_b_1"));
  EXPECT_FALSE(m.Taken("c"));
}

}  // namespace
}  // namespace holtrans::dkfile
