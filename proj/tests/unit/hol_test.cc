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

#include "holtrans/hol/error.h"
#include "holtrans/hol/proof.h"
#include "holtrans/hol/term.h"
#include "holtrans/hol/type.h"
#include "random_hol.h"

namespace holtrans::hol {
namespace {

const Type A = Type::Var("A");
const Type B = Type::Var("B");

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const HolError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no HolError";
  return ErrorCode::kConstTypeMismatch;
}

TEST(HolType, BuiltinArities) {
  EXPECT_EQ(CodeOf([] { Type::Op("bool", {A}); }), ErrorCode::kArityMismatch);
  EXPECT_EQ(CodeOf([] { Type::Op("->", {A}); }), ErrorCode::kArityMismatch);
  EXPECT_TRUE(Type::Fun(A, B).is_fun());
  EXPECT_EQ(ToString(Type::Fun(A, Type::Fun(B, Type::Bool()))), "A -> B -> bool");
}

TEST(HolType, MatchAndInstantiate) {
  TypeSubst theta;
  ASSERT_TRUE(MatchType(Type::Fun(A, A), Type::Fun(Type::Bool(), Type::Bool()), theta));
  EXPECT_EQ(theta.at("A"), Type::Bool());
  TypeSubst clash;
  EXPECT_FALSE(MatchType(Type::Fun(A, A), Type::Fun(Type::Bool(), Type::Ind()), clash));
  EXPECT_EQ(Instantiate(Type::Fun(A, B), {{"B", A}}), Type::Fun(A, A));
  EXPECT_EQ(TypeVars(Type::Fun(B, Type::Fun(A, B))), (std::vector<std::string>{"B", "A"}));
}

TEST(HolTerm, ApplicationIsTypeChecked) {
  const Term f = Term::Var("f", Type::Fun(A, B));
  const Term x = Term::Var("x", A);
  EXPECT_EQ(Term::App(f, x).type(), B);
  EXPECT_EQ(CodeOf([&] { Term::App(f, Term::Var("y", B)); }), ErrorCode::kAppTypeMismatch);
  EXPECT_EQ(CodeOf([&] { Term::Const("=", Type::Fun(A, Type::Bool())); }),
            ErrorCode::kConstTypeMismatch);
}

TEST(HolTerm, AlphaEquivalenceIsEquality) {
  const Term x = Term::Var("x", A), y = Term::Var("y", A);
  EXPECT_EQ(Term::Abs(x, x), Term::Abs(y, y));
  EXPECT_NE(Term::Abs(x, y), Term::Abs(y, y));
  // Variables with the same name and different types are different.
  EXPECT_NE(Term::Var("x", A), Term::Var("x", B));
}

TEST(HolTerm, SubstitutionDoesNotCapture) {
  const Term x = Term::Var("x", A), y = Term::Var("y", A);
  // (\y. x)[x := y] is \z. y, not \y. y.
  const Term t = SubstFree({{x, y}}, Term::Abs(y, x));
  EXPECT_NE(t, Term::Abs(y, y));
  EXPECT_EQ(FreeVars(t), std::vector<Term>{y});
}

TEST(HolTerm, TypeInstantiationRetypesVariables) {
  const Term x = Term::Var("x", A);
  const Term t = InstTypes({{"A", Type::Bool()}}, Term::Eq(x, x));
  EXPECT_EQ(t, Term::Eq(Term::Var("x", Type::Bool()), Term::Var("x", Type::Bool())));
}

TEST(HolTerm, BetaNormalize) {
  const Term x = Term::Var("x", A), y = Term::Var("y", A);
  const Term k = Term::Abs(x, Term::Abs(y, x));
  const Term z = Term::Var("z", A);
  EXPECT_EQ(BetaNormalize(Term::App(Term::App(k, z), x)), z);
}

TEST(HolProof, PrimitiveRules) {
  const Term x = Term::Var("x", A), y = Term::Var("y", A);
  EXPECT_EQ(CheckProof(Proof::Refl(x)), Sequent::Make({}, Term::Eq(x, x)));
  EXPECT_EQ(CheckProof(Proof::Beta(x, y)),
            Sequent::Make({}, Term::Eq(Term::App(Term::Abs(x, y), x), y)));
  const Term xy = Term::Eq(x, y);
  EXPECT_EQ(CheckProof(Proof::Assume(xy)), Sequent::Make({xy}, xy));
  const Sequent abs = CheckProof(Proof::AbsThm(Term::Var("z", A), Proof::Assume(xy)));
  EXPECT_EQ(abs.hyps, std::vector<Term>{xy});
}

TEST(HolProof, SideConditionsAreEnforced) {
  const Term x = Term::Var("x", A), y = Term::Var("y", A);
  const Term xy = Term::Eq(x, y);
  // x is free in the hypothesis.
  EXPECT_EQ(CodeOf([&] { CheckProof(Proof::AbsThm(x, Proof::Assume(xy))); }),
            ErrorCode::kRuleViolation);
  // EqMp with a minor premise that does not match.
  const Term p = Term::Var("p", Type::Bool()), q = Term::Var("q", Type::Bool());
  EXPECT_EQ(CodeOf([&] {
              CheckProof(Proof::EqMp(Proof::Assume(Term::Eq(p, q)), Proof::Assume(q)));
            }),
            ErrorCode::kRuleViolation);
  EXPECT_EQ(CodeOf([&] { CheckProof(Proof::Assume(x)); }), ErrorCode::kRuleViolation);
}

TEST(HolProof, DeductAntiSymRemovesCrossHypotheses) {
  const Term p = Term::Var("p", Type::Bool()), q = Term::Var("q", Type::Bool());
  const Sequent s = CheckProof(Proof::DeductAntiSym(Proof::Assume(p), Proof::Assume(q)));
  EXPECT_EQ(s, Sequent::Make({p, q}, Term::Eq(p, q)));
}

TEST(HolProof, DerivedRules) {
  const Term x = Term::Var("x", A), y = Term::Var("y", A), z = Term::Var("z", A);
  const Proof xy = Proof::Assume(Term::Eq(x, y));
  const Proof yz = Proof::Assume(Term::Eq(y, z));
  EXPECT_EQ(CheckProof(Sym(xy, CheckProof(xy))).concl, Term::Eq(y, x));
  const Sequent t = CheckProof(Trans(xy, CheckProof(xy), yz));
  EXPECT_EQ(t, Sequent::Make({Term::Eq(x, y), Term::Eq(y, z)}, Term::Eq(x, z)));
  // {p} |- p discharges p from {p, q} |- p = q.
  const Term p = Term::Var("p", Type::Bool()), q = Term::Var("q", Type::Bool());
  const Proof top = Proof::DeductAntiSym(Proof::Assume(p), Proof::Assume(q));
  const Proof lower = Proof::Refl(p);  // |- p = p, not p: nothing to discharge
  EXPECT_EQ(CheckProof(ProveHyp(lower, top)).hyps.size(), 2u);
  const Proof has_p = Proof::Assume(p);
  EXPECT_EQ(CheckProof(ProveHyp(has_p, top)), CheckProof(top));
  const Term redex = Term::App(Term::Abs(x, Term::Eq(x, y)), z);
  EXPECT_EQ(CheckProof(BetaConv(redex)).concl, Term::Eq(redex, Term::Eq(z, y)));
}

TEST(HolProof, SubstInstantiatesHypothesesToo) {
  const Term x = Term::Var("x", A), y = Term::Var("y", A);
  Subst s;
  s.theta["A"] = Type::Bool();
  const Term xb = Term::Var("x", Type::Bool());
  const Term t = Term::Var("t", Type::Bool());
  s.sigma.push_back({xb, t});
  const Sequent out = CheckProof(Proof::Subst(s, Proof::Assume(Term::Eq(x, y))));
  const Term expected = Term::Eq(t, Term::Var("y", Type::Bool()));
  EXPECT_EQ(out, Sequent::Make({expected}, expected));
}

TEST(HolProof, CheckerMemoizesSharedSubproofs) {
  const Term x = Term::Var("x", A);
  const Term f = Term::Var("f", Type::Fun(A, A));
  Proof d = Proof::Refl(x);
  for (int i = 0; i < 40; ++i) d = Proof::AppThm(Proof::Refl(f), d);
  // A chain, so the tree and the DAG agree; checking is linear.
  ProofChecker checker;
  checker.Check(d);
  EXPECT_EQ(checker.checked_nodes(), 81u);
}

TEST(HolProperty, GeneratedProofsRecheck) {
  testing::RandomHol gen(7);
  for (int i = 0; i < 200; ++i) {
    const testing::CheckedProof d = gen.RandomProof(4);
    EXPECT_EQ(CheckProof(d.proof), d.sequent);
    EXPECT_LE(testing::ProofDepth(d.proof), 4u);
  }
}

TEST(HolProperty, SubstitutionPreservesTypes) {
  testing::RandomHol gen(8);
  for (int i = 0; i < 200; ++i) {
    const Type ty = gen.RandomType(2);
    const Term m = gen.RandomTerm(ty, 3);
    const Subst s = gen.RandomSubst(m);
    EXPECT_EQ(ApplySubst(s, m).type(), Instantiate(ty, s.theta));
    // The empty substitution is the identity.
    EXPECT_EQ(ApplySubst(Subst{}, m), m);
  }
}

}  // namespace
}  // namespace holtrans::hol
