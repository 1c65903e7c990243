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

#include "holtrans/kernel/error.h"
#include "holtrans/kernel/print.h"
#include "holtrans/kernel/reduce.h"
#include "holtrans/kernel/signature.h"
#include "holtrans/kernel/term.h"
#include "holtrans/kernel/typecheck.h"
#include "holtrans/translate/base_signature.h"
#include "holtrans/translate/translate.h"
#include "random_hol.h"

namespace holtrans::kernel {
namespace {

Term C(const char* name) { return Term::Const(name); }
Term F(const char* name) { return Term::Free(name); }

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const KernelError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no KernelError";
  return ErrorCode::kFuelExhausted;
}

// nat with z, s and addition by recursion on the first argument.
Signature Peano() {
  Signature sig;
  sig.Add(ConstDecl{"nat", Term::Type()});
  sig.Add(ConstDecl{"z", C("nat")});
  sig.Add(ConstDecl{"s", Term::Arrow(C("nat"), C("nat"))});
  sig.Add(ConstDecl{"plus", Term::Arrow(C("nat"), Term::Arrow(C("nat"), C("nat")))});
  sig.Add(RewriteRule{{{"n", C("nat")}}, Term::Apps(C("plus"), {C("z"), F("n")}), F("n")});
  sig.Add(RewriteRule{{{"m", C("nat")}, {"n", C("nat")}},
                      Term::Apps(C("plus"), {Term::App(C("s"), F("m")), F("n")}),
                      Term::App(C("s"), Term::Apps(C("plus"), {F("m"), F("n")}))});
  return sig;
}

Term Numeral(int n) {
  Term t = C("z");
  for (int i = 0; i < n; ++i) t = Term::App(C("s"), t);
  return t;
}

TEST(KernelTerm, EqualityIgnoresBinderNames) {
  const Term a = Term::Abs("x", C("nat"), Term::Bound(0));
  const Term b = Term::Abs("y", C("nat"), Term::Bound(0));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_NE(a, Term::Abs("x", C("bool"), Term::Bound(0)));
}

TEST(KernelTerm, LambdaAbstractsTheNamedVariable) {
  const Term t = Term::Lambda("x", C("nat"), Term::App(C("s"), F("x")));
  EXPECT_EQ(t.body(), Term::App(C("s"), Term::Bound(0)));
  EXPECT_EQ(t.loose_bound(), 0u);
  EXPECT_TRUE(FreeVarNames(t).empty());
}

TEST(KernelTerm, InstantiateShiftsOuterIndices) {
  // (0 1)[0 := c] = c 0
  const Term body = Term::App(Term::Bound(0), Term::Bound(1));
  EXPECT_EQ(Instantiate(body, C("c")), Term::App(C("c"), Term::Bound(0)));
  EXPECT_EQ(Lift(Term::Bound(2), 3, 1), Term::Bound(5));
  EXPECT_EQ(Lift(Term::Bound(0), 3, 1), Term::Bound(0));
}

TEST(KernelTerm, SubstituteAvoidsCapture) {
  // (\y. x)[x := y] keeps the free y free.
  const Term t = Term::Lambda("y", C("nat"), F("x"));
  const Term r = Substitute(t, {{"x", F("y")}});
  EXPECT_EQ(r.body(), F("y"));
  EXPECT_EQ(FreeVarNames(r), std::vector<std::string>{"y"});
}

TEST(KernelPrint, ArrowsAndBinders) {
  EXPECT_EQ(ToString(Term::Arrow(C("a"), Term::Arrow(C("b"), C("c")))), "a -> b -> c");
  EXPECT_EQ(ToString(Term::Arrow(Term::Arrow(C("a"), C("b")), C("c"))), "(a -> b) -> c");
  EXPECT_EQ(ToString(Term::Lambda("x", C("a"), F("x"))), "x : a => x");
  EXPECT_EQ(ToString(Term::App(C("f"), Term::App(C("g"), C("x")))), "f (g x)");
}

TEST(KernelReduce, RewritingComputesAddition) {
  const Signature sig = Peano();
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      const Term sum = Term::Apps(C("plus"), {Numeral(a), Numeral(b)});
      EXPECT_EQ(Normalize(sig, sum), Numeral(a + b));
      EXPECT_EQ(NormalizeBySteps(sig, sum, Strategy::kRightmostInnermost), Numeral(a + b));
    }
  }
}

TEST(KernelReduce, StrategiesContractDifferentRedexes) {
  const Signature sig = Peano();
  // (\x. z) (plus z z): outermost contracts the beta redex, innermost the rule.
  const Term t = Term::App(Term::Abs("x", C("nat"), C("z")),
                           Term::Apps(C("plus"), {C("z"), C("z")}));
  EXPECT_EQ(*ReduceStep(sig, t, Strategy::kLeftmostOutermost), C("z"));
  EXPECT_EQ(*ReduceStep(sig, t, Strategy::kRightmostInnermost),
            Term::App(Term::Abs("x", C("nat"), C("z")), C("z")));
  EXPECT_FALSE(ReduceStep(sig, C("z")).has_value());
}

TEST(KernelReduce, DefinitionsUnfold) {
  Signature sig = Peano();
  sig.Add(ConstDef{"two", C("nat"), Numeral(2)});
  EXPECT_TRUE(Convertible(sig, Term::Apps(C("plus"), {C("two"), C("two")}), Numeral(4)));
  EXPECT_FALSE(Convertible(sig, C("two"), Numeral(3)));
}

TEST(KernelReduce, FuelBoundsLoopingRules) {
  Signature sig;
  sig.AddUnchecked(ConstDecl{"a", Term::Type()});
  sig.AddUnchecked(ConstDecl{"loop", C("a")});
  sig.AddUnchecked(RewriteRule{{}, C("loop"), C("loop")});
  Options small;
  small.fuel = 100;
  EXPECT_EQ(CodeOf([&] { Normalize(sig, C("loop"), small); }), ErrorCode::kFuelExhausted);
}

TEST(KernelTyping, IdentityFunction) {
  Signature sig;
  sig.Add(ConstDecl{"a", Term::Type()});
  const Term id = Term::Lambda("x", C("a"), F("x"));
  EXPECT_EQ(InferType(sig, {}, id), Term::Arrow(C("a"), C("a")));
  // No abstraction over Type: its domain would be a kind.
  const Term poly = Term::Lambda("t", Term::Type(), Term::Lambda("x", F("t"), F("x")));
  EXPECT_EQ(CodeOf([&] { InferType(sig, {}, poly); }), ErrorCode::kNotAType);
}

TEST(KernelTyping, ContextVariables) {
  Signature sig;
  sig.Add(ConstDecl{"a", Term::Type()});
  const Context ctx{{"x", C("a")}};
  EXPECT_EQ(InferType(sig, ctx, F("x")), C("a"));
  EXPECT_EQ(CodeOf([&] { InferType(sig, ctx, F("y")); }), ErrorCode::kUnboundVariable);
}

TEST(KernelTyping, ErrorCodes) {
  Signature sig;
  sig.Add(ConstDecl{"a", Term::Type()});
  sig.Add(ConstDecl{"b", Term::Type()});
  sig.Add(ConstDecl{"x", C("a")});
  sig.Add(ConstDecl{"g", Term::Arrow(C("b"), C("b"))});
  EXPECT_EQ(CodeOf([&] { InferType(sig, {}, C("nope")); }), ErrorCode::kUnboundConstant);
  // Applying a type is NotAFunction; applying an x : a fails conversion of
  // a to a product.
  EXPECT_EQ(CodeOf([&] { InferType(sig, {}, Term::App(C("a"), C("x"))); }),
            ErrorCode::kNotAFunction);
  EXPECT_EQ(CodeOf([&] { InferType(sig, {}, Term::App(C("x"), C("x"))); }),
            ErrorCode::kDomainMismatch);
  EXPECT_EQ(CodeOf([&] { InferType(sig, {}, Term::App(C("g"), C("x"))); }),
            ErrorCode::kDomainMismatch);
  EXPECT_EQ(CodeOf([&] { InferType(sig, {}, Term::Kind()); }), ErrorCode::kIllegalSort);
  EXPECT_EQ(CodeOf([&] { InferType(sig, {}, Term::Lambda("y", C("x"), F("y"))); }),
            ErrorCode::kNotAType);
}

TEST(KernelSignature, RejectsBadItems) {
  Signature sig;
  sig.Add(ConstDecl{"a", Term::Type()});
  sig.Add(ConstDecl{"c", C("a")});
  sig.Add(ConstDecl{"f", Term::Arrow(C("a"), C("a"))});
  EXPECT_EQ(CodeOf([&] { sig.Add(ConstDecl{"a", Term::Type()}); }),
            ErrorCode::kDuplicateConstant);
  EXPECT_EQ(CodeOf([&] { sig.Add(ConstDecl{"d", C("c")}); }),
            ErrorCode::kIllTypedDeclaration);
  EXPECT_EQ(CodeOf([&] { sig.Add(ConstDef{"d", C("a"), C("a")}); }),
            ErrorCode::kIllTypedDeclaration);
  // The lhs head is a variable.
  EXPECT_EQ(CodeOf([&] {
              sig.Add(RewriteRule{{{"h", Term::Arrow(C("a"), C("a"))}},
                                  Term::App(F("h"), C("c")), C("c")});
            }),
            ErrorCode::kNonPatternLhs);
  EXPECT_EQ(CodeOf([&] {
              sig.Add(RewriteRule{{{"y", C("a")}}, Term::App(C("f"), C("c")), F("y")});
            }),
            ErrorCode::kUnboundRhsVariable);
  EXPECT_EQ(CodeOf([&] { sig.Add(RewriteRule{{}, Term::App(C("f"), C("c")), C("a")}); }),
            ErrorCode::kRuleTypeMismatch);
  EXPECT_EQ(sig.rule_count(), 0u);
}

TEST(KernelSignature, BaseSignaturesRevalidate) {
  for (auto mode : {translate::Mode::kQ0, translate::Mode::kPts}) {
    const Signature sig = translate::BaseSignature(mode);
    EXPECT_NO_THROW(CheckSignature(sig));
  }
  EXPECT_EQ(translate::BaseSignature(translate::Mode::kQ0).rule_count(), 1u);
  EXPECT_EQ(translate::BaseSignature(translate::Mode::kPts).rule_count(), 3u);
}

// Normal forms are fixed points, and reduction preserves types.
TEST(KernelProperty, SubjectReductionOnRandomTerms) {
  for (int i = 0; i < 40; ++i) {
    const auto mode = i % 2 ? translate::Mode::kPts : translate::Mode::kQ0;
    const Signature sig = translate::BaseSignature(mode);
    translate::TranslationEnv env(mode);
    translate::Translator tr(env);
    testing::RandomHol gen(100 + i, /*base_only=*/true);
    const testing::KernelSample s = testing::RandomKernelSample(gen, tr);
    const Term type = InferType(sig, s.context, s.term);
    const Term nf = Normalize(sig, s.term);
    EXPECT_FALSE(ReduceStep(sig, nf).has_value()) << ToString(nf);
    EXPECT_TRUE(Convertible(sig, InferType(sig, s.context, nf), type)) << ToString(s.term);
    EXPECT_EQ(NormalizeBySteps(sig, s.term, Strategy::kLeftmostOutermost), nf);
  }
}

}  // namespace
}  // namespace holtrans::kernel
