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

#include "holtrans/translate/translate.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "holtrans/translate/error.h"

namespace holtrans::translate {

namespace {

using kernel::Term;

Term C(const char* name) { return Term::Const(name); }

bool Intersects(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  for (const std::string& x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) return true;
  }
  return false;
}

void AddUnique(std::vector<std::string>& out, const std::string& s) {
  if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
}

std::vector<std::string> TypeVarsOfTerm(const hol::Term& t) {
  std::vector<std::string> out;
  hol::CollectTypeVars(t, out);
  return out;
}

}  // namespace

std::optional<hol::Term> MatchEta(const hol::Sequent& s) {
  if (!s.hyps.empty()) return std::nullopt;
  auto eq = hol::DestEq(s.concl);
  if (!eq) return std::nullopt;
  const auto& [lhs, rhs] = *eq;
  if (!lhs.is_abs()) return std::nullopt;
  const hol::Term& body = lhs.body();
  if (!body.is_app() || !body.arg().is_bound() || body.arg().index() != 0) {
    return std::nullopt;
  }
  if (body.fn().loose_bound() != 0 || body.fn() != rhs) return std::nullopt;
  return rhs;
}

bool Translator::SequentLess::operator()(const std::vector<hol::Term>& a,
                                         const std::vector<hol::Term>& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = hol::AlphaCompare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Translator::Translator(TranslationEnv& env, Resolver resolver)
    : env_(env), resolver_(std::move(resolver)) {}

void Translator::Ensure(const hol::Type& a) {
  if (a.is_var()) return;
  for (const hol::Type& arg : a.args()) Ensure(arg);
  if (env_.HasTypeOp(a.name()) || !resolver_.type_op_arity) return;
  if (auto arity = resolver_.type_op_arity(a.name())) {
    pending_.emplace_back(env_.DeclareTypeOp(a.name(), *arity));
  }
}

void Translator::EnsureConstant(const std::string& name) {
  if (env_.HasConstant(name) || !resolver_.constant_type) return;
  if (auto type = resolver_.constant_type(name)) {
    Ensure(*type);
    pending_.emplace_back(env_.DeclareConstant(name, *type));
  }
}

Term Translator::TypeTerm(const hol::Type& a) {
  Ensure(a);
  return env_.TypeTerm(a);
}

Term Translator::TypeType(const hol::Type& a) { return Term::App(C("term"), TypeTerm(a)); }

Term Translator::TermOf(const hol::Term& m) {
  if (auto it = term_memo_.find(m.id()); it != term_memo_.end()) return it->second.second;
  Term out;
  switch (m.kind()) {
    case hol::TermKind::kBound:
      out = Term::Bound(m.index());
      break;
    case hol::TermKind::kVar:
      Ensure(m.var_type());
      out = Term::Free(env_.TermVarKey(m));
      break;
    case hol::TermKind::kConst: {
      EnsureConstant(m.name());
      const ConstantEntry& entry = env_.Constant(m.name());
      hol::TypeSubst theta;
      if (!hol::MatchType(entry.generic, m.type(), theta)) {
        throw TranslateError(ErrorCode::kInstanceMatchFailure,
                             m.name() + " : " + hol::ToString(m.type()) +
                                 " is not an instance of " + hol::ToString(entry.generic));
      }
      out = Term::Const(entry.id);
      for (const std::string& v : entry.type_vars) out = Term::App(out, TypeTerm(theta.at(v)));
      break;
    }
    case hol::TermKind::kAbs:
      out = Term::Abs(dkfile::MangleBase(m.name()), TypeType(m.var_type()), TermOf(m.body()));
      break;
    case hol::TermKind::kApp:
      out = Term::App(TermOf(m.fn()), TermOf(m.arg()));
      break;
  }
  term_memo_.emplace(m.id(), std::make_pair(m, out));
  return out;
}

Term Translator::PropType(const hol::Term& phi) {
  if (!phi.type().is_bool()) {
    throw TranslateError(ErrorCode::kNotAProposition,
                         hol::ToString(phi) + " : " + hol::ToString(phi.type()));
  }
  return Term::App(C("proof"), TermOf(phi));
}

kernel::Context Translator::HypContext(const std::vector<hol::Term>& hyps) {
  kernel::Context ctx;
  for (const hol::Term& h : hyps) {
    std::string key = env_.HypKey(h);
    if (!ctx.Contains(key)) ctx.Push(std::move(key), PropType(h));
  }
  return ctx;
}

std::vector<std::string> Translator::KeysFor(const hol::Sequent& s, const Term& t) {
  std::vector<std::string> tyvars;
  std::vector<std::string> vars;
  std::vector<std::string> hyps;
  auto add_term = [&](const hol::Term& phi) {
    std::vector<std::string> tv;
    hol::CollectTypeVars(phi, tv);
    for (const std::string& v : tv) AddUnique(tyvars, env_.TypeVarKey(v));
    for (const hol::Term& x : hol::FreeVars(phi)) AddUnique(vars, env_.TermVarKey(x));
  };
  add_term(s.concl);
  for (const hol::Term& h : s.hyps) add_term(h);
  for (const hol::Term& h : s.hyps) AddUnique(hyps, env_.HypKey(h));
  if (t) {
    for (const std::string& key : kernel::FreeVarNames(t)) {
      const VarInfo* info = env_.Lookup(key);
      if (info == nullptr) throw std::logic_error("unknown free variable " + key);
      switch (info->kind) {
        case VarKind::kTypeVar:
          AddUnique(tyvars, key);
          break;
        case VarKind::kTermVar:
          for (const std::string& v : hol::TypeVars(info->term.type())) {
            AddUnique(tyvars, env_.TypeVarKey(v));
          }
          AddUnique(vars, key);
          break;
        case VarKind::kHyp:
          add_term(info->term);
          AddUnique(hyps, key);
          break;
      }
    }
  }
  std::vector<std::string> out = std::move(tyvars);
  out.insert(out.end(), vars.begin(), vars.end());
  out.insert(out.end(), hyps.begin(), hyps.end());
  return out;
}

kernel::Context Translator::ContextFor(const hol::Sequent& s, const Term& t) {
  kernel::Context ctx;
  for (const std::string& key : KeysFor(s, t)) {
    const VarInfo& info = *env_.Lookup(key);
    switch (info.kind) {
      case VarKind::kTypeVar:
        ctx.Push(key, C("type"));
        break;
      case VarKind::kTermVar:
        ctx.Push(key, TypeType(info.term.type()));
        break;
      case VarKind::kHyp:
        ctx.Push(key, PropType(info.term));
        break;
    }
  }
  return ctx;
}

Term Translator::Bind(const std::vector<std::string>& keys, const Term& body, bool pi) {
  Term out = body;
  for (std::size_t i = keys.size(); i-- > 0;) {
    const VarInfo& info = *env_.Lookup(keys[i]);
    Term domain;
    switch (info.kind) {
      case VarKind::kTypeVar: domain = C("type"); break;
      case VarKind::kTermVar: domain = TypeType(info.term.type()); break;
      case VarKind::kHyp: domain = PropType(info.term); break;
    }
    Term abstracted = kernel::Abstract(out, keys[i]);
    out = pi ? Term::Prod(info.display, domain, abstracted)
             : Term::Abs(info.display, domain, abstracted);
  }
  return out;
}

Term Translator::ProofOf(const hol::Proof& d) {
  if (auto it = proof_memo_.find(d.id()); it != proof_memo_.end()) return it->second.second;
  SequentOf(d);
  // Post-order with an explicit stack: article derivations can be deep.
  std::vector<std::pair<hol::Proof, bool>> stack{{d, false}};
  while (!stack.empty()) {
    auto [cur, expanded] = stack.back();
    stack.pop_back();
    if (proof_memo_.contains(cur.id())) continue;
    // The premise of a type definition does not appear in its translation.
    const bool opaque = cur.kind() == hol::ProofKind::kDefineTypeOp;
    if (!expanded && !opaque) {
      stack.emplace_back(cur, true);
      for (const hol::Proof& p : cur.premises()) {
        if (!proof_memo_.contains(p.id())) stack.emplace_back(p, false);
      }
      continue;
    }
    std::vector<Term> premises;
    if (!opaque) {
      for (const hol::Proof& p : cur.premises()) premises.push_back(proof_memo_.at(p.id()).second);
    }
    Term out = TransNode(cur, premises);
    proof_memo_.emplace(cur.id(), std::make_pair(cur, std::move(out)));
  }
  return proof_memo_.at(d.id()).second;
}

Term Translator::TransNode(const hol::Proof& d, const std::vector<Term>& premises) {
  switch (d.kind()) {
    case hol::ProofKind::kRefl:
      return Term::Apps(C("Refl"), {TypeTerm(d.term().type()), TermOf(d.term())});
    case hol::ProofKind::kConv:
      return Term::Apps(C("Refl"), {TypeTerm(d.term2().type()), TermOf(d.term2())});
    case hol::ProofKind::kBeta:
      return Term::Apps(C("Refl"), {TypeTerm(d.term2().type()), TermOf(d.term2())});
    case hol::ProofKind::kAbsThm: {
      const hol::Term& x = d.var();
      auto [lhs, rhs] = *hol::DestEq(SequentOf(d).concl);
      const std::string key = env_.TermVarKey(x);
      Term body = Term::Abs(env_.Lookup(key)->display, TypeType(x.type()),
                            kernel::Abstract(premises[0], key));
      return Term::Apps(C("FunExt"), {TypeTerm(x.type()), TypeTerm(lhs.type().codomain()),
                                      TermOf(lhs), TermOf(rhs), body});
    }
    case hol::ProofKind::kAppThm: {
      auto [f, g] = *hol::DestEq(SequentOf(d.premises()[0]).concl);
      auto [m, n] = *hol::DestEq(SequentOf(d.premises()[1]).concl);
      return Term::Apps(C("AppThm"), {TypeTerm(m.type()), TypeTerm(f.type().codomain()),
                                      TermOf(f), TermOf(g), TermOf(m), TermOf(n), premises[0],
                                      premises[1]});
    }
    case hol::ProofKind::kAssume:
      PropType(d.term());
      return Term::Free(env_.HypKey(d.term()));
    case hol::ProofKind::kEqMp: {
      auto [phi, psi] = *hol::DestEq(SequentOf(d.premises()[0]).concl);
      return Term::Apps(C("EqMp"), {TermOf(phi), TermOf(psi), premises[0], premises[1]});
    }
    case hol::ProofKind::kDeductAntiSym: {
      const hol::Term& phi = SequentOf(d.premises()[0]).concl;
      const hol::Term& psi = SequentOf(d.premises()[1]).concl;
      const std::string hphi = env_.HypKey(phi);
      const std::string hpsi = env_.HypKey(psi);
      Term left = Term::Abs(hpsi, PropType(psi), kernel::Abstract(premises[0], hpsi));
      Term right = Term::Abs(hphi, PropType(phi), kernel::Abstract(premises[1], hphi));
      return Term::Apps(C("PropExt"), {TermOf(phi), TermOf(psi), left, right});
    }
    case hol::ProofKind::kSubst:
      return SubstProof(d, premises[0]);
    case hol::ProofKind::kAxiom:
      if (auto t = MatchEta(d.axiom())) {
        return EtaProof(hol::DestEq(d.axiom().concl)->first, *t);
      }
      return AxiomTerm(d.axiom());
    case hol::ProofKind::kDefineConst:
      return DefinitionTerm(d);
    case hol::ProofKind::kDefineTypeOp:
      return TypeOpAxiomTerm(d);
  }
  throw std::logic_error("unknown proof node");
}

Term Translator::EtaProof(const hol::Term& lhs, const hol::Term& rhs) {
  const hol::Type& a = lhs.var_type();
  const hol::Type& b = rhs.type().codomain();
  Term t = TermOf(rhs);
  Term pointwise =
      Term::Abs("x", TypeType(a), Term::Apps(C("Refl"), {TypeTerm(b), Term::App(t, Term::Bound(0))}));
  return Term::Apps(C("FunExt"), {TypeTerm(a), TypeTerm(b), TermOf(lhs), t, pointwise});
}

Term Translator::AxiomTerm(const hol::Sequent& s) {
  std::vector<hol::Term> key = s.hyps;
  key.push_back(s.concl);
  const std::vector<std::string> keys = KeysFor(s, {});
  auto it = axioms_.find(key);
  if (it == axioms_.end()) {
    Term type = Bind(keys, PropType(s.concl), true);
    std::string id = env_.FreshId("axiom");
    pending_.emplace_back(dkfile::Decl{id, type});
    it = axioms_.emplace(std::move(key), std::move(id)).first;
  }
  Term out = Term::Const(it->second);
  for (const std::string& k : keys) out = Term::App(out, Term::Free(k));
  return out;
}

Term Translator::DefinitionTerm(const hol::Proof& d) {
  const std::string& name = d.name();
  const hol::Term& body = d.term();
  EnsureConstant(name);
  if (!env_.HasConstant(name)) {
    Ensure(body.type());
    pending_.emplace_back(env_.DeclareConstant(name, body.type()));
  }
  const ConstantEntry& entry = env_.Constant(name);
  if (entry.generic != body.type()) {
    throw TranslateError(ErrorCode::kUnsupportedDefinition,
                         "definition of " + name + " at " + hol::ToString(body.type()) +
                             " but the constant has type " + hol::ToString(entry.generic));
  }
  for (const std::string& v : TypeVarsOfTerm(body)) {
    if (std::find(entry.type_vars.begin(), entry.type_vars.end(), v) == entry.type_vars.end()) {
      throw TranslateError(ErrorCode::kUnsupportedDefinition,
                           "type variable " + v + " of the definition of " + name +
                               " does not occur in its type");
    }
  }
  std::vector<std::string> keys;
  for (const std::string& v : entry.type_vars) keys.push_back(env_.TypeVarKey(v));
  auto it = definition_axioms_.find(name);
  if (it == definition_axioms_.end()) {
    Term type = Bind(keys, PropType(SequentOf(d).concl), true);
    std::string id = env_.FreshId(entry.id + "_def");
    pending_.emplace_back(dkfile::Decl{id, type});
    it = definition_axioms_.emplace(name, std::move(id)).first;
  }
  Term out = Term::Const(it->second);
  for (const std::string& k : keys) out = Term::App(out, Term::Free(k));
  return out;
}

Term Translator::TypeOpAxiomTerm(const hol::Proof& d) {
  const hol::TypeOpDefinition& def = *d.type_op();
  if (!env_.HasTypeOp(def.name)) {
    Ensure(def.rep_type);
    pending_.emplace_back(env_.DeclareTypeOp(def.name, def.type_vars.size()));
  }
  for (const hol::Term& c : {def.abs, def.rep}) {
    EnsureConstant(c.name());
    if (!env_.HasConstant(c.name())) {
      Ensure(c.type());
      pending_.emplace_back(env_.DeclareConstant(c.name(), c.type()));
    }
  }
  std::vector<std::string> keys;
  for (const std::string& v : def.type_vars) keys.push_back(env_.TypeVarKey(v));
  auto it = type_op_axioms_.find(def.name);
  if (it == type_op_axioms_.end()) {
    const std::string& base = env_.TypeOpId(def.name);
    std::string abs_rep = env_.FreshId(base + "_abs_rep");
    pending_.emplace_back(dkfile::Decl{abs_rep, Bind(keys, PropType(def.abs_rep.concl), true)});
    std::string rep_abs = env_.FreshId(base + "_rep_abs");
    pending_.emplace_back(dkfile::Decl{rep_abs, Bind(keys, PropType(def.rep_abs.concl), true)});
    it = type_op_axioms_.emplace(def.name, std::make_pair(abs_rep, rep_abs)).first;
  }
  Term out = Term::Const(d.which() == 0 ? it->second.first : it->second.second);
  for (const std::string& k : keys) out = Term::App(out, Term::Free(k));
  return out;
}

Term Translator::SubstProof(const hol::Proof& d, const Term& premise) {
  const hol::Subst& s = d.subst();

  // Free variables of a translated proof, closed under "the type of this
  // variable mentions": hypotheses mention term and type variables, term
  // variables mention type variables.
  struct Free {
    std::vector<std::string> type_vars;  // HOL names
    std::vector<hol::Term> vars;
    std::vector<std::pair<std::string, hol::Term>> hyps;  // key, proposition
  };
  auto collect = [this](const Term& t) {
    Free f;
    auto add_term_parts = [&f](const hol::Term& phi) {
      std::vector<std::string> tv;
      hol::CollectTypeVars(phi, tv);
      for (const std::string& v : tv) AddUnique(f.type_vars, v);
      for (const hol::Term& x : hol::FreeVars(phi)) {
        if (std::find(f.vars.begin(), f.vars.end(), x) == f.vars.end()) f.vars.push_back(x);
      }
    };
    for (const std::string& key : kernel::FreeVarNames(t)) {
      const VarInfo& info = *env_.Lookup(key);
      switch (info.kind) {
        case VarKind::kTypeVar:
          AddUnique(f.type_vars, info.type_var);
          break;
        case VarKind::kTermVar:
          add_term_parts(info.term);
          break;
        case VarKind::kHyp:
          add_term_parts(info.term);
          f.hyps.emplace_back(key, info.term);
          break;
      }
    }
    return f;
  };
  auto lam = [this](const std::string& key, const Term& domain, const Term& body) {
    return Term::Abs(env_.Lookup(key)->display, domain, kernel::Abstract(body, key));
  };

  // Type substitution: (\a1..am:type. \x:||A||.. \h:||phi||.. |D|) |A1|..
  Term t1 = premise;
  {
    const Free f = collect(premise);
    std::vector<std::string> active;
    for (const auto& [v, image] : s.theta) {
      if (image.is_var() && image.name() == v) continue;
      if (std::find(f.type_vars.begin(), f.type_vars.end(), v) != f.type_vars.end()) {
        active.push_back(v);
      }
    }
    if (!active.empty()) {
      std::vector<std::pair<std::string, Term>> binders;  // key, domain
      std::vector<Term> args;
      for (const std::string& v : active) {
        binders.emplace_back(env_.TypeVarKey(v), C("type"));
        args.push_back(TypeTerm(s.theta.at(v)));
      }
      for (const hol::Term& x : f.vars) {
        if (!Intersects(hol::TypeVars(x.type()), active)) continue;
        binders.emplace_back(env_.TermVarKey(x), TypeType(x.type()));
        args.push_back(TermOf(hol::InstTypes(s.theta, x)));
      }
      for (const auto& [key, phi] : f.hyps) {
        if (!Intersects(TypeVarsOfTerm(phi), active)) continue;
        binders.emplace_back(key, PropType(phi));
        const hol::Term image = hol::InstTypes(s.theta, phi);
        PropType(image);
        args.push_back(Term::Free(env_.HypKey(image)));
      }
      Term fn = premise;
      for (std::size_t i = binders.size(); i-- > 0;) {
        fn = lam(binders[i].first, binders[i].second, fn);
      }
      t1 = Term::Apps(fn, args);
    }
  }

  // Term substitution: (\x1:||B1||..\h:||phi||.. t1) |M1|.. h'..
  Term t2 = t1;
  {
    const Free f = collect(t1);
    // The first binding of a variable wins, as in the logic.
    std::vector<std::pair<hol::Term, hol::Term>> first;
    for (const auto& [x, image] : s.sigma) {
      bool seen = false;
      for (const auto& [y, unused] : first) seen = seen || y == x;
      if (!seen) first.emplace_back(x, image);
    }
    std::vector<std::pair<hol::Term, hol::Term>> active;
    for (const auto& [x, image] : first) {
      if (image != x && std::find(f.vars.begin(), f.vars.end(), x) != f.vars.end()) {
        active.emplace_back(x, image);
      }
    }
    if (!active.empty()) {
      std::vector<std::pair<std::string, Term>> binders;
      std::vector<Term> args;
      for (const auto& [x, image] : active) {
        binders.emplace_back(env_.TermVarKey(x), TypeType(x.type()));
        args.push_back(TermOf(image));
      }
      for (const auto& [key, phi] : f.hyps) {
        bool mentions = false;
        for (const auto& [x, image] : active) mentions = mentions || hol::FreeIn(x, phi);
        if (!mentions) continue;
        binders.emplace_back(key, PropType(phi));
        const hol::Term image = hol::SubstFree(first, phi);
        PropType(image);
        args.push_back(Term::Free(env_.HypKey(image)));
      }
      Term fn = t1;
      for (std::size_t i = binders.size(); i-- > 0;) {
        fn = lam(binders[i].first, binders[i].second, fn);
      }
      t2 = Term::Apps(fn, args);
    }
  }
  return t2;
}

dkfile::Defn Translator::Theorem(const std::string& name, const hol::Sequent& s,
                                 const hol::Proof& d) {
  Term body = ProofOf(d);
  const std::vector<std::string> keys = KeysFor(s, {});
  auto in_statement = [&keys](const std::string& k) {
    return std::find(keys.begin(), keys.end(), k) != keys.end();
  };
  // Variables internal to the derivation get closed witnesses; term
  // variables first, since their witnesses mention their types.
  kernel::Substitution witnesses;
  for (const std::string& key : kernel::FreeVarNames(body)) {
    if (in_statement(key)) continue;
    const VarInfo& info = *env_.Lookup(key);
    if (info.kind == VarKind::kHyp) {
      throw std::logic_error("hypothesis " + hol::ToString(info.term) +
                             " is used but not in the sequent");
    }
    if (info.kind != VarKind::kTermVar) continue;
    Term a = TypeTerm(info.term.type());
    Term refl_pred = Term::Abs("x", TypeType(info.term.type()),
                               Term::Apps(C("eq"), {a, Term::Bound(0), Term::Bound(0)}));
    witnesses.emplace(key, Term::Apps(C("select"), {a, refl_pred}));
  }
  if (!witnesses.empty()) body = kernel::Substitute(body, witnesses);
  kernel::Substitution types;
  for (const std::string& key : kernel::FreeVarNames(body)) {
    if (!in_statement(key)) types.emplace(key, C("bool"));
  }
  if (!types.empty()) body = kernel::Substitute(body, types);
  return dkfile::Defn{name, Bind(keys, PropType(s.concl), true), Bind(keys, body, false)};
}

std::vector<dkfile::Item> Translator::TakePending() {
  std::vector<dkfile::Item> out;
  out.swap(pending_);
  return out;
}

}  // namespace holtrans::translate
