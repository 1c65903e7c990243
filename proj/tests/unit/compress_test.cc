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

#include <limits>

#include <gtest/gtest.h>

#include "holtrans/dkfile/document.h"
#include "holtrans/kernel/reduce.h"
#include "holtrans/kernel/typecheck.h"
#include "holtrans/translate/base_signature.h"
#include "holtrans/translate/compress.h"
#include "holtrans/translate/translate.h"
#include "random_hol.h"

namespace holtrans::translate {
namespace {

const hol::Type A = hol::Type::Var("A");

std::size_t CountKind(const hol::Proof& d, hol::ProofKind kind) {
  std::size_t n = d.kind() == kind;
  for (const hol::Proof& p : d.premises()) n += CountKind(p, kind);
  return n;
}

TEST(Compress, CongruenceTreeBecomesOneNode) {
  const hol::Term x = hol::Term::Var("x", A);
  const hol::Term g = hol::Term::Var("g", hol::Type::Fun(A, A));
  const hol::Proof d = hol::Proof::AppThm(hol::Proof::Refl(g), hol::Proof::Beta(x, x));
  const hol::Proof c = CompressConversions(d);
  EXPECT_EQ(c.kind(), hol::ProofKind::kConv);
  EXPECT_EQ(ProofTreeSize(d), 3u);
  EXPECT_EQ(ProofTreeSize(c), 1u);
  EXPECT_EQ(hol::CheckProof(c), hol::CheckProof(d));
}

TEST(Compress, SingleNodesAreKept) {
  const hol::Term x = hol::Term::Var("x", A);
  const hol::Proof refl = hol::Proof::Refl(x);
  EXPECT_EQ(CompressConversions(refl).kind(), hol::ProofKind::kRefl);
}

TEST(Compress, StopsAtOtherRules) {
  // EqMp (AppThm (Refl (= x)) (Assume y = z)) (Assume x = y): the AppThm has
  // an Assume premise, so nothing below EqMp is a pure conversion of two or
  // more nodes.
  const hol::Term x = hol::Term::Var("x", A), y = hol::Term::Var("y", A),
                  z = hol::Term::Var("z", A);
  const hol::Proof step = hol::Proof::AppThm(
      hol::Proof::Refl(hol::Term::App(hol::Term::EqConst(A), x)),
      hol::Proof::Assume(hol::Term::Eq(y, z)));
  const hol::Proof d = hol::Proof::EqMp(step, hol::Proof::Assume(hol::Term::Eq(x, y)));
  const hol::Proof c = CompressConversions(d);
  EXPECT_EQ(CountKind(c, hol::ProofKind::kConv), 0u);
  EXPECT_EQ(ProofTreeSize(c), ProofTreeSize(d));
}

TEST(Compress, TreeSizeCountsSharedSubproofsPerUse) {
  const hol::Term x = hol::Term::Var("x", A);
  hol::Proof d = hol::Proof::Refl(x);
  for (int i = 0; i < 70; ++i) d = hol::Proof::DeductAntiSym(d, d);
  EXPECT_EQ(ProofTreeSize(d), std::numeric_limits<std::size_t>::max());
}

TEST(CompressProperty, PreservesConclusionsAndTypes) {
  for (auto mode : {Mode::kQ0, Mode::kPts}) {
    testing::RandomHol gen(mode == Mode::kQ0 ? 31 : 32);
    kernel::Signature sig = BaseSignature(mode);
    TranslationEnv env(mode);
    Translator tr(env, testing::TheoryResolver());
    for (int i = 0; i < 150; ++i) {
      const testing::CheckedProof d = gen.RandomProof(4);
      const hol::Proof c = CompressConversions(d.proof);
      ASSERT_EQ(hol::CheckProof(c), d.sequent);
      EXPECT_LE(ProofTreeSize(c), ProofTreeSize(d.proof));
      const kernel::Term t = tr.ProofOf(c);
      const kernel::Term goal = tr.PropType(d.sequent.concl);
      const kernel::Context ctx = tr.ContextFor(d.sequent, t);
      dkfile::DkDocument pending;
      pending.items = tr.TakePending();
      dkfile::Check(sig, pending);
      kernel::TypeChecker checker(sig, ctx);
      EXPECT_NO_THROW(checker.Check(t, goal));
    }
  }
}

}  // namespace
}  // namespace holtrans::translate
