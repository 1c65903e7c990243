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

#include "holtrans/hol/proof.h"

#include <algorithm>

#include "holtrans/hol/error.h"

namespace holtrans::hol {

namespace {

[[noreturn]] void Violation(ProofKind kind, const std::string& reason) {
  throw HolError(ErrorCode::kRuleViolation, reason, std::string(RuleName(kind)));
}

}  // namespace

Sequent Sequent::Make(std::vector<Term> hyps, Term concl) {
  std::sort(hyps.begin(), hyps.end(), AlphaLess{});
  hyps.erase(std::unique(hyps.begin(), hyps.end()), hyps.end());
  return Sequent{std::move(hyps), std::move(concl)};
}

bool operator==(const Sequent& a, const Sequent& b) {
  return a.concl == b.concl && a.hyps == b.hyps;
}

std::vector<Term> UnionHyps(const std::vector<Term>& a, const std::vector<Term>& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = AlphaCompare(a[i], b[j]);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.push_back(b[j++]);
    } else {
      out.push_back(a[i++]);
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return out;
}

std::vector<Term> RemoveHyp(const std::vector<Term>& hyps, const Term& phi) {
  std::vector<Term> out;
  out.reserve(hyps.size());
  for (const Term& h : hyps) {
    if (h != phi) out.push_back(h);
  }
  return out;
}

std::string ToString(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.hyps.size(); ++i) {
    if (i > 0) out += ", ";
    out += ToString(s.hyps[i]);
  }
  if (!out.empty()) out += ' ';
  out += "|- ";
  out += ToString(s.concl);
  return out;
}

std::shared_ptr<const TypeOpDefinition> MakeTypeOpDefinition(
    std::string name, std::string abs_name, std::string rep_name,
    std::vector<std::string> type_vars, const Sequent& premise) {
  const ProofKind kind = ProofKind::kDefineTypeOp;
  if (!premise.hyps.empty()) Violation(kind, "premise has hypotheses");
  const Term& c = premise.concl;
  if (!c.is_app()) Violation(kind, "premise " + ToString(c) + " is not of the form P t");
  auto def = std::make_shared<TypeOpDefinition>();
  def->predicate = c.fn();
  def->witness = c.arg();
  if (def->predicate.has_free_vars()) {
    Violation(kind, "predicate " + ToString(def->predicate) + " has free variables");
  }
  std::vector<std::string> used;
  CollectTypeVars(def->predicate, used);
  for (const std::string& v : used) {
    if (std::find(type_vars.begin(), type_vars.end(), v) == type_vars.end()) {
      Violation(kind, "type variable " + v + " of the predicate is not a parameter");
    }
  }
  std::vector<Type> params;
  for (const std::string& v : type_vars) params.push_back(Type::Var(v));
  def->rep_type = def->witness.type();
  def->new_type = Type::Op(name, std::move(params));
  const Type& a = def->rep_type;
  const Type& t = def->new_type;
  def->abs = Term::Const(abs_name, Type::Fun(a, t));
  def->rep = Term::Const(rep_name, Type::Fun(t, a));
  // (\a. abs (rep a)) = (\a. a)
  {
    Term x = Term::Bound(0, t);
    Term lhs = Term::AbsRaw("a", t, Term::App(def->abs, Term::App(def->rep, x)));
    Term rhs = Term::AbsRaw("a", t, x);
    def->abs_rep = Sequent{{}, Term::Eq(lhs, rhs)};
  }
  // (\r. rep (abs r) = r) = (\r. phi r)
  {
    Term x = Term::Bound(0, a);
    Term lhs = Term::AbsRaw(
        "r", a, Term::Eq(Term::App(def->rep, Term::App(def->abs, x)), x));
    Term rhs = Term::AbsRaw("r", a, Term::App(def->predicate, x));
    def->rep_abs = Sequent{{}, Term::Eq(lhs, rhs)};
  }
  def->name = std::move(name);
  def->abs_name = std::move(abs_name);
  def->rep_name = std::move(rep_name);
  def->type_vars = std::move(type_vars);
  return def;
}

std::string_view RuleName(ProofKind kind) {
  switch (kind) {
    case ProofKind::kRefl: return "Refl";
    case ProofKind::kConv: return "Conv";
    case ProofKind::kAbsThm: return "AbsThm";
    case ProofKind::kAppThm: return "AppThm";
    case ProofKind::kBeta: return "Beta";
    case ProofKind::kAssume: return "Assume";
    case ProofKind::kEqMp: return "EqMp";
    case ProofKind::kDeductAntiSym: return "DeductAntiSym";
    case ProofKind::kSubst: return "Subst";
    case ProofKind::kAxiom: return "Axiom";
    case ProofKind::kDefineConst: return "DefineConst";
    case ProofKind::kDefineTypeOp: return "DefineTypeOp";
  }
  return "Unknown";
}

struct Proof::Node {
  ProofKind kind = ProofKind::kRefl;
  Term term;
  Term term2;
  std::vector<Proof> premises;
  hol::Subst subst;
  Sequent axiom;
  std::string name;
  std::shared_ptr<const TypeOpDefinition> type_op;
  int which = 0;
};

Proof Proof::Refl(Term m) {
  Node n;
  n.kind = ProofKind::kRefl;
  n.term = std::move(m);
  return Proof(std::make_shared<const Node>(std::move(n)));
}

Proof Proof::Conv(Term m, Term n2) {
  Node n;
  n.kind = ProofKind::kConv;
  n.term = std::move(m);
  n.term2 = std::move(n2);
  return Proof(std::make_shared<const Node>(std::move(n)));
}

Proof Proof::AbsThm(Term var, Proof d) {
  Node n;
  n.kind = ProofKind::kAbsThm;
  n.term = std::move(var);
  n.premises = {std::move(d)};
  return Proof(std::make_shared<const Node>(std::move(n)));
}

Proof Proof::AppThm(Proof d1, Proof d2) {
  Node n;
  n.kind = ProofKind::kAppThm;
  n.premises = {std::move(d1), std::move(d2)};
  return Proof(std::make_shared<const Node>(std::move(n)));
}

Proof Proof::Beta(Term var, Term m) {
  Node n;
  n.kind = ProofKind::kBeta;
  n.term = std::move(var);
  n.term2 = std::move(m);
  return Proof(std::make_shared<const Node>(std::move(n)));
}

Proof Proof::Assume(Term phi) {
  Node n;
  n.kind = ProofKind::kAssume;
  n.term = std::move(phi);
  return Proof(std::make_shared<const Node>(std::move(n)));
}

Proof Proof::EqMp(Proof d1, Proof d2) {
  Node n;
  n.kind = ProofKind::kEqMp;
  n.premises = {std::move(d1), std::move(d2)};
  return Proof(std::make_shared<const Node>(std::move(n)));
}

Proof Proof::DeductAntiSym(Proof d1, Proof d2) {
  Node n;
  n.kind = ProofKind::kDeductAntiSym;
  n.premises = {std::move(d1), std::move(d2)};
  return Proof(std::make_shared<const Node>(std::move(n)));
}

Proof Proof::Subst(hol::Subst s, Proof d) {
  Node n;
  n.kind = ProofKind::kSubst;
  n.subst = std::move(s);
  n.premises = {std::move(d)};
  return Proof(std::make_shared<const Node>(std::move(n)));
}

Proof Proof::Axiom(Sequent s) {
  Node n;
  n.kind = ProofKind::kAxiom;
  n.axiom = std::move(s);
  return Proof(std::make_shared<const Node>(std::move(n)));
}

Proof Proof::DefineConst(std::string name, Term body) {
  Node n;
  n.kind = ProofKind::kDefineConst;
  n.name = std::move(name);
  n.term = std::move(body);
  return Proof(std::make_shared<const Node>(std::move(n)));
}

Proof Proof::DefineTypeOp(std::shared_ptr<const TypeOpDefinition> def, int which,
                          Proof premise) {
  Node n;
  n.kind = ProofKind::kDefineTypeOp;
  n.type_op = std::move(def);
  n.which = which;
  n.premises = {std::move(premise)};
  return Proof(std::make_shared<const Node>(std::move(n)));
}

ProofKind Proof::kind() const { return node_->kind; }
const Term& Proof::term() const { return node_->term; }
const Term& Proof::term2() const { return node_->term2; }
const Term& Proof::var() const { return node_->term; }
const std::vector<Proof>& Proof::premises() const { return node_->premises; }
const hol::Subst& Proof::subst() const { return node_->subst; }
const Sequent& Proof::axiom() const { return node_->axiom; }
const std::string& Proof::name() const { return node_->name; }
const std::shared_ptr<const TypeOpDefinition>& Proof::type_op() const {
  return node_->type_op;
}
int Proof::which() const { return node_->which; }

namespace {

std::pair<Term, Term> RequireEq(ProofKind kind, const Term& t, const char* what) {
  auto eq = DestEq(t);
  if (!eq) Violation(kind, std::string(what) + " " + ToString(t) + " is not an equation");
  return *eq;
}

void RequireBool(ProofKind kind, const Term& t) {
  if (!t.type().is_bool()) {
    Violation(kind, ToString(t) + " has type " + ToString(t.type()) + ", not bool");
  }
}

}  // namespace

Sequent Conclude(const Proof& node, std::span<const Sequent> premises) {
  const ProofKind kind = node.kind();
  if (premises.size() != node.premises().size()) {
    Violation(kind, "wrong number of premises");
  }
  switch (kind) {
    case ProofKind::kRefl:
      return Sequent{{}, Term::Eq(node.term(), node.term())};
    case ProofKind::kConv: {
      const Term& m = node.term();
      const Term& n = node.term2();
      if (m.type() != n.type() || BetaNormalize(m) != BetaNormalize(n)) {
        Violation(kind, ToString(m) + " and " + ToString(n) + " are not beta-equivalent");
      }
      return Sequent{{}, Term::Eq(m, n)};
    }
    case ProofKind::kAbsThm: {
      const Term& x = node.var();
      if (!x.is_var()) Violation(kind, ToString(x) + " is not a variable");
      auto [l, r] = RequireEq(kind, premises[0].concl, "premise");
      for (const Term& h : premises[0].hyps) {
        if (FreeIn(x, h)) {
          Violation(kind, "variable " + ToString(x) + " is free in hypothesis " +
                              ToString(h));
        }
      }
      return Sequent{premises[0].hyps, Term::Eq(Term::Abs(x, l), Term::Abs(x, r))};
    }
    case ProofKind::kAppThm: {
      auto [f, g] = RequireEq(kind, premises[0].concl, "first premise");
      auto [m, n] = RequireEq(kind, premises[1].concl, "second premise");
      if (!f.type().is_fun() || f.type().domain() != m.type()) {
        Violation(kind, "cannot apply " + ToString(f) + " : " + ToString(f.type()) +
                            " to " + ToString(m) + " : " + ToString(m.type()));
      }
      return Sequent{UnionHyps(premises[0].hyps, premises[1].hyps),
                     Term::Eq(Term::App(f, m), Term::App(g, n))};
    }
    case ProofKind::kBeta: {
      const Term& x = node.var();
      if (!x.is_var()) Violation(kind, ToString(x) + " is not a variable");
      const Term& m = node.term2();
      return Sequent{{}, Term::Eq(Term::App(Term::Abs(x, m), x), m)};
    }
    case ProofKind::kAssume:
      RequireBool(kind, node.term());
      return Sequent{{node.term()}, node.term()};
    case ProofKind::kEqMp: {
      auto [phi, psi] = RequireEq(kind, premises[0].concl, "first premise");
      RequireBool(kind, phi);
      if (phi != premises[1].concl) {
        Violation(kind, "left-hand side " + ToString(phi) +
                            " does not match the second premise " +
                            ToString(premises[1].concl));
      }
      return Sequent{UnionHyps(premises[0].hyps, premises[1].hyps), psi};
    }
    case ProofKind::kDeductAntiSym: {
      const Term& phi = premises[0].concl;
      const Term& psi = premises[1].concl;
      return Sequent{UnionHyps(RemoveHyp(premises[0].hyps, psi),
                               RemoveHyp(premises[1].hyps, phi)),
                     Term::Eq(phi, psi)};
    }
    case ProofKind::kSubst: {
      const hol::Subst& s = node.subst();
      try {
        std::vector<Term> hyps;
        hyps.reserve(premises[0].hyps.size());
        for (const Term& h : premises[0].hyps) hyps.push_back(ApplySubst(s, h));
        return Sequent::Make(std::move(hyps), ApplySubst(s, premises[0].concl));
      } catch (const HolError& e) {
        if (e.code() == ErrorCode::kRuleViolation) throw;
        Violation(kind, e.what());
      }
    }
    case ProofKind::kAxiom: {
      const Sequent& s = node.axiom();
      for (const Term& h : s.hyps) RequireBool(kind, h);
      RequireBool(kind, s.concl);
      return Sequent::Make(s.hyps, s.concl);
    }
    case ProofKind::kDefineConst: {
      const Term& m = node.term();
      if (m.has_free_vars()) {
        Violation(kind, "definition body " + ToString(m) + " has free variables");
      }
      return Sequent{{}, Term::Eq(Term::Const(node.name(), m.type()), m)};
    }
    case ProofKind::kDefineTypeOp: {
      const TypeOpDefinition& def = *node.type_op();
      const Sequent& p = premises[0];
      if (!p.hyps.empty() || p.concl != Term::App(def.predicate, def.witness)) {
        Violation(kind, "premise " + ToString(p) + " does not justify type " + def.name);
      }
      return node.which() == 0 ? def.abs_rep : def.rep_abs;
    }
  }
  Violation(kind, "unknown rule");
}

const Sequent& ProofChecker::Check(const Proof& d) {
  if (auto it = memo_.find(d.id()); it != memo_.end()) return it->second.second;
  // Explicit stack: derivations produced by long articles can be very deep.
  std::vector<std::pair<Proof, bool>> stack{{d, false}};
  while (!stack.empty()) {
    auto [cur, expanded] = stack.back();
    stack.pop_back();
    if (memo_.contains(cur.id())) continue;
    if (!expanded) {
      stack.emplace_back(cur, true);
      for (const Proof& p : cur.premises()) {
        if (!memo_.contains(p.id())) stack.emplace_back(p, false);
      }
      continue;
    }
    std::vector<Sequent> prem;
    prem.reserve(cur.premises().size());
    for (const Proof& p : cur.premises()) prem.push_back(memo_.at(p.id()).second);
    Sequent s = Conclude(cur, prem);
    memo_.emplace(cur.id(), std::make_pair(cur, std::move(s)));
  }
  return memo_.at(d.id()).second;
}

void ProofChecker::Seed(const Proof& d, Sequent s) {
  memo_.emplace(d.id(), std::make_pair(d, std::move(s)));
}

Sequent CheckProof(const Proof& d) {
  ProofChecker checker;
  return checker.Check(d);
}

Proof Sym(const Proof& d, const Sequent& s) {
  auto [t, u] = RequireEq(ProofKind::kEqMp, s.concl, "sym premise");
  (void)u;
  // |- (=) = (=), then (= t) = (= u), then (t = t) = (u = t), then u = t.
  Proof eq_refl = Proof::Refl(Term::EqConst(t.type()));
  Proof step = Proof::AppThm(Proof::AppThm(eq_refl, d), Proof::Refl(t));
  return Proof::EqMp(step, Proof::Refl(t));
}

Proof Trans(const Proof& d1, const Sequent& s1, const Proof& d2) {
  auto [t, u] = RequireEq(ProofKind::kEqMp, s1.concl, "trans premise");
  (void)u;
  Proof eq_t = Proof::Refl(Term::App(Term::EqConst(t.type()), t));
  return Proof::EqMp(Proof::AppThm(eq_t, d2), d1);
}

Proof ProveHyp(const Proof& lower, const Proof& top) {
  return Proof::EqMp(Proof::DeductAntiSym(lower, top), lower);
}

Proof BetaConv(const Term& redex) {
  if (!redex.is_app() || !redex.fn().is_abs()) {
    Violation(ProofKind::kBeta, ToString(redex) + " is not a beta-redex");
  }
  auto [v, body] = OpenAbs(redex.fn());
  Proof beta = Proof::Beta(v, body);
  const Term& u = redex.arg();
  if (u == v) return beta;
  return Proof::Subst(hol::Subst{{}, {{v, u}}}, beta);
}

}  // namespace holtrans::hol
