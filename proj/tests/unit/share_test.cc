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
#include "holtrans/kernel/print.h"
#include "holtrans/kernel/reduce.h"
#include "holtrans/opentheory/article.h"
#include "holtrans/opentheory/vm.h"
#include "holtrans/translate/article.h"
#include "holtrans/translate/base_signature.h"
#include "holtrans/translate/share.h"
#include "holtrans/translate/translate.h"
#include "random_hol.h"
#include "test_dirs.h"

namespace holtrans::translate {
namespace {

using kernel::Term;

dkfile::DkDocument Unshared(const std::string& file, Mode mode) {
  const opentheory::VMState state =
      opentheory::Run(opentheory::ParseArticle(testing::ReadFile(testing::CorpusDir() / file)));
  TranslationEnv env(mode);
  Translator tr(env);
  ArticleOptions options;
  options.sharing = false;
  return TranslateArticle(tr, state, "m", BaseSignature(mode), options).doc;
}

std::unordered_set<std::string> Names(const ShareResult& r) {
  return {r.definitions.begin(), r.definitions.end()};
}

// Every definition of `b` is convertible to the one of `a` with the same
// name, and the declarations agree exactly.
void ExpectEquivalent(const kernel::Signature& sig, const dkfile::DkDocument& a,
                      const dkfile::DkDocument& b) {
  ASSERT_EQ(a.items.size(), b.items.size());
  for (std::size_t i = 0; i < a.items.size(); ++i) {
    if (const auto* da = std::get_if<dkfile::Defn>(&a.items[i])) {
      const auto& db = std::get<dkfile::Defn>(b.items[i]);
      EXPECT_EQ(da->name, db.name);
      EXPECT_TRUE(kernel::Convertible(sig, da->type, db.type)) << da->name;
      EXPECT_TRUE(kernel::Convertible(sig, da->body, db.body)) << da->name;
    } else {
      EXPECT_TRUE(a.items[i] == b.items[i]);
    }
  }
}

TEST(Share, HoistsRepeatedTerms) {
  for (auto mode : {Mode::kQ0, Mode::kPts}) {
    const kernel::Signature sig = BaseSignature(mode);
    const dkfile::DkDocument doc = Unshared("shared.art", mode);
    const ShareResult r = Share(sig, doc);
    EXPECT_FALSE(r.definitions.empty());
    EXPECT_GE(r.hits, 2 * r.definitions.size());
    EXPECT_LT(dkfile::Emit(r.doc).size(), dkfile::Emit(doc).size());
    kernel::Signature checked = sig;
    EXPECT_NO_THROW(dkfile::Check(checked, r.doc));
    ExpectEquivalent(sig, doc, InlineDefinitions(r.doc, Names(r)));
  }
}

TEST(Share, LeavesSmallDocumentsAlone) {
  const kernel::Signature sig = BaseSignature(Mode::kQ0);
  const dkfile::DkDocument doc = Unshared("identity.art", Mode::kQ0);
  const ShareResult r = Share(sig, doc);
  EXPECT_TRUE(r.definitions.empty());
  EXPECT_EQ(r.hits, 0u);
  EXPECT_EQ(r.doc, doc);
}

TEST(Share, MinimumSizeIsRespected) {
  const kernel::Signature sig = BaseSignature(Mode::kQ0);
  const dkfile::DkDocument doc = Unshared("shared.art", Mode::kQ0);
  ShareOptions options;
  options.min_size = 1'000'000;
  EXPECT_EQ(Share(sig, doc, options).doc, doc);
}

TEST(Share, FreshNamesAvoidExistingOnes) {
  const kernel::Signature sig = BaseSignature(Mode::kQ0);
  dkfile::DkDocument doc = Unshared("shared.art", Mode::kQ0);
  // A theorem already named like the first default share name.
  doc.items.insert(doc.items.begin(), dkfile::Decl{"s", Term::Const("type")});
  const ShareResult r = Share(sig, doc);
  for (const std::string& name : r.definitions) EXPECT_NE(name, "s");
  kernel::Signature checked = sig;
  EXPECT_NO_THROW(dkfile::Check(checked, r.doc));
}

TEST(ShareProperty, RandomDocumentsStayCheckable) {
  for (int i = 0; i < 40; ++i) {
    const Mode mode = i % 2 ? Mode::kPts : Mode::kQ0;
    kernel::Signature sig = BaseSignature(mode);
    TranslationEnv env(mode);
    Translator tr(env, testing::TheoryResolver());
    testing::RandomHol gen(700 + i);
    dkfile::DkDocument doc;
    for (int k = 0; k < 4; ++k) {
      const testing::CheckedProof d = gen.RandomProof(4);
      dkfile::Defn thm = tr.Theorem("thm_" + std::to_string(k), d.sequent, d.proof);
      for (dkfile::Item& item : tr.TakePending()) doc.items.push_back(std::move(item));
      doc.items.push_back(std::move(thm));
    }
    ShareOptions options;
    options.min_size = 4;
    const ShareResult r = Share(sig, doc, options);
    kernel::Signature plain = sig, shared = sig;
    ASSERT_NO_THROW(dkfile::Check(plain, doc));
    EXPECT_NO_THROW(dkfile::Check(shared, dkfile::Parse(dkfile::Emit(r.doc))))
        << dkfile::Emit(r.doc);
    dkfile::DkDocument prefix;
    for (const auto& item : doc.items) {
      if (std::holds_alternative<dkfile::Decl>(item)) prefix.items.push_back(item);
    }
    kernel::Signature decls = sig;
    dkfile::AppendUnchecked(decls, prefix);
    ExpectEquivalent(decls, doc, InlineDefinitions(r.doc, Names(r)));
  }
}

}  // namespace
}  // namespace holtrans::translate
