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

// Derivation trees of HOL and the checker that recomputes their sequents.
//
// The primitive rules are Refl, AbsThm, AppThm, Beta, Assume, EqMp,
// DeductAntiSym and Subst. Axiom, DefineConst and DefineTypeOp introduce
// assumed sequents. Conv(M, N) is a reflexivity step at two beta-equivalent
// terms; it only appears after conversion compression.
//
// Proof factories do not check anything. CheckProof (or Conclude, for a single
// step) validates premises and throws RuleViolation.

#ifndef HOLTRANS_HOL_PROOF_H_
#define HOLTRANS_HOL_PROOF_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "holtrans/hol/term.h"
#include "holtrans/hol/type.h"

namespace holtrans::hol {

// Gamma |- phi. Hypotheses are kept sorted by AlphaCompare, without
// duplicates.
struct Sequent {
  std::vector<Term> hyps;
  Term concl;

  static Sequent Make(std::vector<Term> hyps, Term concl);
  friend bool operator==(const Sequent& a, const Sequent& b);
};

std::vector<Term> UnionHyps(const std::vector<Term>& a, const std::vector<Term>& b);
std::vector<Term> RemoveHyp(const std::vector<Term>& hyps, const Term& phi);

std::string ToString(const Sequent& s);

// Everything defineTypeOp introduces. From |- phi t with phi : A -> bool it
// yields the operator `name` over `type_vars`, abs : A -> T, rep : T -> A and
//   |- (\a. abs (rep a)) = (\a. a)
//   |- (\r. rep (abs r) = r) = (\r. phi r)
struct TypeOpDefinition {
  std::string name;
  std::string abs_name;
  std::string rep_name;
  std::vector<std::string> type_vars;
  Term predicate;
  Term witness;
  Type rep_type;
  Type new_type;
  Term abs;
  Term rep;
  Sequent abs_rep;
  Sequent rep_abs;
};

// Throws RuleViolation if `premise` is not |- phi t or if phi mentions a
// type variable outside `type_vars`.
std::shared_ptr<const TypeOpDefinition> MakeTypeOpDefinition(
    std::string name, std::string abs_name, std::string rep_name,
    std::vector<std::string> type_vars, const Sequent& premise);

enum class ProofKind : std::uint8_t {
  kRefl,
  kConv,
  kAbsThm,
  kAppThm,
  kBeta,
  kAssume,
  kEqMp,
  kDeductAntiSym,
  kSubst,
  kAxiom,
  kDefineConst,
  kDefineTypeOp,
};

std::string_view RuleName(ProofKind kind);

class Proof {
 public:
  Proof() = default;

  static Proof Refl(Term m);
  static Proof Conv(Term m, Term n);
  static Proof AbsThm(Term var, Proof d);
  static Proof AppThm(Proof d1, Proof d2);
  // |- (\x. m) x = m
  static Proof Beta(Term var, Term m);
  static Proof Assume(Term phi);
  // d1 : phi = psi, d2 : phi
  static Proof EqMp(Proof d1, Proof d2);
  static Proof DeductAntiSym(Proof d1, Proof d2);
  static Proof Subst(hol::Subst s, Proof d);
  static Proof Axiom(Sequent s);
  static Proof DefineConst(std::string name, Term body);
  // which = 0 for the abs/rep theorem, 1 for the rep/abs theorem.
  static Proof DefineTypeOp(std::shared_ptr<const TypeOpDefinition> def, int which,
                            Proof premise);

  explicit operator bool() const { return node_ != nullptr; }

  ProofKind kind() const;
  // Refl/Conv/Beta: M; Assume: phi; AbsThm/Beta: the variable via var().
  const Term& term() const;
  // Conv: N; Beta: the body M.
  const Term& term2() const;
  const Term& var() const;
  const std::vector<Proof>& premises() const;
  const hol::Subst& subst() const;
  const Sequent& axiom() const;
  const std::string& name() const;
  const std::shared_ptr<const TypeOpDefinition>& type_op() const;
  int which() const;

  const void* id() const { return node_.get(); }
  long use_count() const { return node_.use_count(); }

 private:
  struct Node;
  explicit Proof(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Applies one rule to already-checked premise sequents.
Sequent Conclude(const Proof& node, std::span<const Sequent> premises);

// Recomputes sequents bottom-up, memoized on node identity.
class ProofChecker {
 public:
  const Sequent& Check(const Proof& d);
  // Records an already-known sequent, so that Check stops there.
  void Seed(const Proof& d, Sequent s);
  std::size_t checked_nodes() const { return memo_.size(); }

 private:
  std::unordered_map<const void*, std::pair<Proof, Sequent>> memo_;
};

Sequent CheckProof(const Proof& d);

// Derived rules, expanded into primitive steps. The sequents are those of the
// premises, used to build the intermediate terms.
Proof Sym(const Proof& d, const Sequent& s);
Proof Trans(const Proof& d1, const Sequent& s1, const Proof& d2);
// From lower : Gamma |- phi and top : Delta |- psi derives
// Gamma u (Delta - {phi}) |- psi.
Proof ProveHyp(const Proof& lower, const Proof& top);
// |- (\v. t) u = t[u/v]
Proof BetaConv(const Term& redex);

}  // namespace holtrans::hol

#endif  // HOLTRANS_HOL_PROOF_H_
