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

#include "holtrans/opentheory/vm.h"

#include <algorithm>
#include <set>

#include "holtrans/hol/error.h"

namespace holtrans::opentheory {

using hol::Proof;
using hol::Sequent;

std::string_view ObjectKindName(ObjectKind k) {
  switch (k) {
    case ObjectKind::kNum: return "number";
    case ObjectKind::kName: return "name";
    case ObjectKind::kList: return "list";
    case ObjectKind::kTypeOp: return "type operator";
    case ObjectKind::kType: return "type";
    case ObjectKind::kConst: return "constant";
    case ObjectKind::kVar: return "variable";
    case ObjectKind::kTerm: return "term";
    case ObjectKind::kThm: return "theorem";
  }
  return "?";
}

Object Object::Num(std::int64_t n) {
  Object o;
  o.kind = ObjectKind::kNum;
  o.num = n;
  return o;
}

Object Object::Name(std::string s) {
  Object o;
  o.kind = ObjectKind::kName;
  o.name = std::move(s);
  return o;
}

Object Object::List(std::vector<Object> items) {
  Object o;
  o.kind = ObjectKind::kList;
  o.list = std::make_shared<const std::vector<Object>>(std::move(items));
  return o;
}

Object Object::TypeOp(std::string s) {
  Object o;
  o.kind = ObjectKind::kTypeOp;
  o.name = std::move(s);
  return o;
}

Object Object::Type(hol::Type t) {
  Object o;
  o.kind = ObjectKind::kType;
  o.type = std::move(t);
  return o;
}

Object Object::Const(std::string s) {
  Object o;
  o.kind = ObjectKind::kConst;
  o.name = std::move(s);
  return o;
}

Object Object::Var(hol::Term v) {
  Object o;
  o.kind = ObjectKind::kVar;
  o.term = std::move(v);
  return o;
}

Object Object::Term(hol::Term t) {
  Object o;
  o.kind = ObjectKind::kTerm;
  o.term = std::move(t);
  return o;
}

Object Object::Thm(hol::Proof p, hol::Sequent s) {
  Object o;
  o.kind = ObjectKind::kThm;
  o.proof = std::move(p);
  o.sequent = std::make_shared<const hol::Sequent>(std::move(s));
  return o;
}

namespace {

[[noreturn]] void Fail(ArticleErrorCode code, const std::string& message) {
  throw ArticleError(code, message);
}

bool IsBuiltinTypeOp(const std::string& name) {
  return name == hol::kBoolName || name == hol::kFunName || name == hol::kIndName;
}

bool IsBuiltinConst(const std::string& name) {
  return name == hol::kEqName || name == hol::kSelectName;
}

class Machine {
 public:
  Machine(VMState& state, const VMOptions& options) : s_(state), options_(options) {}

  void Execute(const Command& cmd) {
    switch (cmd.kind) {
      case Command::Kind::kInt:
        s_.stack.push_back(Object::Num(cmd.number));
        return;
      case Command::Kind::kName:
        s_.stack.push_back(Object::Name(cmd.name));
        return;
      case Command::Kind::kKeyword:
        break;
    }
    if (!s_.version_seen && cmd.keyword != Keyword::kVersion) {
      Fail(ArticleErrorCode::kUnsupportedVersion,
           "article does not start with a version command");
    }
    try {
      Dispatch(cmd.keyword);
    } catch (const hol::HolError& e) {
      Fail(ArticleErrorCode::kLogicError, e.what());
    }
  }

 private:
  Object Pop(ObjectKind kind) {
    if (s_.stack.empty()) {
      Fail(ArticleErrorCode::kStackUnderflow,
           std::string("expected a ") + std::string(ObjectKindName(kind)));
    }
    Object o = std::move(s_.stack.back());
    s_.stack.pop_back();
    if (o.kind != kind) {
      Fail(ArticleErrorCode::kTypeErrorOnStack,
           "expected a " + std::string(ObjectKindName(kind)) + ", found a " +
               std::string(ObjectKindName(o.kind)));
    }
    return o;
  }

  Object PopAny() {
    if (s_.stack.empty()) Fail(ArticleErrorCode::kStackUnderflow, "empty stack");
    Object o = std::move(s_.stack.back());
    s_.stack.pop_back();
    return o;
  }

  std::vector<Object> PopList() { return *Pop(ObjectKind::kList).list; }

  static const Object& Expect(const Object& o, ObjectKind kind) {
    if (o.kind != kind) {
      Fail(ArticleErrorCode::kTypeErrorOnStack,
           "expected a " + std::string(ObjectKindName(kind)) + " in list, found a " +
               std::string(ObjectKindName(o.kind)));
    }
    return o;
  }

  static std::vector<Object> ExpectPair(const Object& o) {
    Expect(o, ObjectKind::kList);
    if (o.list->size() != 2) {
      Fail(ArticleErrorCode::kTypeErrorOnStack, "expected a pair");
    }
    return *o.list;
  }

  // Checks the new proof step against the premises' stored sequents.
  Object Thm(const Proof& p, std::initializer_list<const Object*> premises) {
    hol::ProofChecker checker;
    for (const Object* o : premises) checker.Seed(o->proof, *o->sequent);
    Sequent s = checker.Check(p);
    if (options_.paranoid && hol::CheckProof(p) != s) {
      Fail(ArticleErrorCode::kLogicError, "internal: sequent mismatch on recheck");
    }
    return Object::Thm(p, std::move(s));
  }

  void NoteTypeOp(const std::string& name, std::size_t arity, bool defined) {
    if (IsBuiltinTypeOp(name)) {
      if (defined) Fail(ArticleErrorCode::kLogicError, "cannot redefine " + name);
      return;
    }
    auto [it, inserted] = s_.type_ops.emplace(name, TypeOpInfo{arity, defined});
    if (inserted) {
      s_.type_op_order.push_back(name);
      return;
    }
    if (defined && it->second.defined) {
      Fail(ArticleErrorCode::kLogicError, "type operator " + name + " defined twice");
    }
    if (it->second.arity != arity) {
      throw hol::HolError(hol::ErrorCode::kArityMismatch,
                          "type operator " + name + " used with arity " +
                              std::to_string(arity) + " and " +
                              std::to_string(it->second.arity));
    }
    it->second.defined = it->second.defined || defined;
  }

  void DefineConstant(const std::string& name, const hol::Type& generic) {
    if (IsBuiltinConst(name)) Fail(ArticleErrorCode::kLogicError, "cannot redefine " + name);
    auto [it, inserted] = s_.constants.emplace(name, ConstantInfo{});
    if (inserted) s_.constant_order.push_back(name);
    if (it->second.defined || !it->second.instances.empty()) {
      Fail(ArticleErrorCode::kLogicError, "constant " + name + " is already in use");
    }
    it->second.defined = true;
    it->second.generic = generic;
  }

  void NoteConstInstance(const std::string& name, const hol::Type& type) {
    if (IsBuiltinConst(name)) return;
    auto [it, inserted] = s_.constants.emplace(name, ConstantInfo{});
    if (inserted) s_.constant_order.push_back(name);
    ConstantInfo& info = it->second;
    if (info.defined) {
      hol::TypeSubst theta;
      if (!hol::MatchType(info.generic, type, theta)) {
        Fail(ArticleErrorCode::kLogicError,
             "constant " + name + " used at " + hol::ToString(type) +
                 ", not an instance of " + hol::ToString(info.generic));
      }
      return;
    }
    if (std::find(info.instances.begin(), info.instances.end(), type) ==
        info.instances.end()) {
      info.instances.push_back(type);
    }
  }

  void Dispatch(opentheory::Keyword k) {
    switch (k) {
      case Keyword::kVersion: {
        const std::int64_t v = Pop(ObjectKind::kNum).num;
        if (v != 6) {
          Fail(ArticleErrorCode::kUnsupportedVersion,
               "version " + std::to_string(v) + " is not supported (only 6)");
        }
        s_.version_seen = true;
        return;
      }
      case Keyword::kAbsTerm: {
        hol::Term body = Pop(ObjectKind::kTerm).term;
        hol::Term var = Pop(ObjectKind::kVar).term;
        s_.stack.push_back(Object::Term(hol::Term::Abs(var, body)));
        return;
      }
      case Keyword::kAbsThm: {
        Object th = Pop(ObjectKind::kThm);
        hol::Term var = Pop(ObjectKind::kVar).term;
        s_.stack.push_back(Thm(Proof::AbsThm(var, th.proof), {&th}));
        return;
      }
      case Keyword::kAppTerm: {
        hol::Term x = Pop(ObjectKind::kTerm).term;
        hol::Term f = Pop(ObjectKind::kTerm).term;
        s_.stack.push_back(Object::Term(hol::Term::App(f, x)));
        return;
      }
      case Keyword::kAppThm: {
        Object arg = Pop(ObjectKind::kThm);
        Object fun = Pop(ObjectKind::kThm);
        s_.stack.push_back(Thm(Proof::AppThm(fun.proof, arg.proof), {&fun, &arg}));
        return;
      }
      case Keyword::kAssume: {
        hol::Term phi = Pop(ObjectKind::kTerm).term;
        s_.stack.push_back(Thm(Proof::Assume(phi), {}));
        return;
      }
      case Keyword::kAxiom: {
        hol::Term phi = Pop(ObjectKind::kTerm).term;
        std::vector<hol::Term> hyps;
        for (const Object& o : PopList()) hyps.push_back(Expect(o, ObjectKind::kTerm).term);
        Proof p = Proof::Axiom(Sequent::Make(std::move(hyps), phi));
        Object th = Thm(p, {});
        s_.assumptions.push_back(Theorem{*th.sequent, p, s_.executed});
        s_.stack.push_back(std::move(th));
        return;
      }
      case Keyword::kBetaConv: {
        hol::Term t = Pop(ObjectKind::kTerm).term;
        s_.stack.push_back(Thm(hol::BetaConv(t), {}));
        return;
      }
      case Keyword::kCons: {
        std::vector<Object> tail = PopList();
        Object head = PopAny();
        tail.insert(tail.begin(), std::move(head));
        s_.stack.push_back(Object::List(std::move(tail)));
        return;
      }
      case Keyword::kConst:
        s_.stack.push_back(Object::Const(Pop(ObjectKind::kName).name));
        return;
      case Keyword::kConstTerm: {
        hol::Type ty = Pop(ObjectKind::kType).type;
        std::string name = Pop(ObjectKind::kConst).name;
        NoteConstInstance(name, ty);
        s_.stack.push_back(Object::Term(hol::Term::Const(name, ty)));
        return;
      }
      case Keyword::kDeductAntisym: {
        Object right = Pop(ObjectKind::kThm);
        Object left = Pop(ObjectKind::kThm);
        s_.stack.push_back(
            Thm(Proof::DeductAntiSym(left.proof, right.proof), {&left, &right}));
        return;
      }
      case Keyword::kDef: {
        const std::int64_t key = Pop(ObjectKind::kNum).num;
        if (s_.stack.empty()) Fail(ArticleErrorCode::kStackUnderflow, "def on empty stack");
        s_.dictionary[key] = s_.stack.back();
        return;
      }
      case Keyword::kDefineConst: {
        hol::Term body = Pop(ObjectKind::kTerm).term;
        std::string name = Pop(ObjectKind::kName).name;
        DefineConstant(name, body.type());
        Proof p = Proof::DefineConst(name, body);
        Object th = Thm(p, {});
        s_.stack.push_back(Object::Const(name));
        s_.stack.push_back(std::move(th));
        return;
      }
      case Keyword::kDefineConstList: {
        DefineConstList();
        return;
      }
      case Keyword::kDefineTypeOp: {
        Object th = Pop(ObjectKind::kThm);
        std::vector<std::string> vars;
        for (const Object& o : PopList()) vars.push_back(Expect(o, ObjectKind::kName).name);
        std::string rep = Pop(ObjectKind::kName).name;
        std::string abs = Pop(ObjectKind::kName).name;
        std::string name = Pop(ObjectKind::kName).name;
        auto def = hol::MakeTypeOpDefinition(name, abs, rep, vars, *th.sequent);
        NoteTypeOp(name, vars.size(), true);
        DefineConstant(abs, def->abs.type());
        DefineConstant(rep, def->rep.type());
        Object t0 = Thm(Proof::DefineTypeOp(def, 0, th.proof), {&th});
        Object t1 = Thm(Proof::DefineTypeOp(def, 1, th.proof), {&th});
        s_.stack.push_back(Object::TypeOp(name));
        s_.stack.push_back(Object::Const(abs));
        s_.stack.push_back(Object::Const(rep));
        s_.stack.push_back(std::move(t0));
        s_.stack.push_back(std::move(t1));
        return;
      }
      case Keyword::kEqMp: {
        Object minor = Pop(ObjectKind::kThm);
        Object major = Pop(ObjectKind::kThm);
        s_.stack.push_back(Thm(Proof::EqMp(major.proof, minor.proof), {&major, &minor}));
        return;
      }
      case Keyword::kHdTl: {
        std::vector<Object> items = PopList();
        if (items.empty()) Fail(ArticleErrorCode::kTypeErrorOnStack, "hdTl of empty list");
        Object head = items.front();
        items.erase(items.begin());
        s_.stack.push_back(std::move(head));
        s_.stack.push_back(Object::List(std::move(items)));
        return;
      }
      case Keyword::kNil:
        s_.stack.push_back(Object::List({}));
        return;
      case Keyword::kOpType: {
        std::vector<hol::Type> args;
        for (const Object& o : PopList()) args.push_back(Expect(o, ObjectKind::kType).type);
        std::string name = Pop(ObjectKind::kTypeOp).name;
        NoteTypeOp(name, args.size(), false);
        s_.stack.push_back(Object::Type(hol::Type::Op(name, std::move(args))));
        return;
      }
      case Keyword::kPop:
      case Keyword::kPragma:
        PopAny();
        return;
      case Keyword::kProveHyp: {
        Object top = Pop(ObjectKind::kThm);
        Object lower = Pop(ObjectKind::kThm);
        s_.stack.push_back(Thm(hol::ProveHyp(lower.proof, top.proof), {&lower, &top}));
        return;
      }
      case Keyword::kRef: {
        const std::int64_t key = Pop(ObjectKind::kNum).num;
        auto it = s_.dictionary.find(key);
        if (it == s_.dictionary.end()) {
          Fail(ArticleErrorCode::kMissingKey, "no dictionary entry " + std::to_string(key));
        }
        s_.stack.push_back(it->second);
        return;
      }
      case Keyword::kRefl: {
        hol::Term t = Pop(ObjectKind::kTerm).term;
        s_.stack.push_back(Thm(Proof::Refl(t), {}));
        return;
      }
      case Keyword::kRemove: {
        const std::int64_t key = Pop(ObjectKind::kNum).num;
        auto it = s_.dictionary.find(key);
        if (it == s_.dictionary.end()) {
          Fail(ArticleErrorCode::kMissingKey, "no dictionary entry " + std::to_string(key));
        }
        s_.stack.push_back(std::move(it->second));
        s_.dictionary.erase(it);
        return;
      }
      case Keyword::kSubst: {
        Object th = Pop(ObjectKind::kThm);
        std::vector<Object> both = ExpectPair(Pop(ObjectKind::kList));
        hol::Subst subst;
        for (const Object& o : *Expect(both[0], ObjectKind::kList).list) {
          std::vector<Object> pair = ExpectPair(o);
          subst.theta[Expect(pair[0], ObjectKind::kName).name] =
              Expect(pair[1], ObjectKind::kType).type;
        }
        for (const Object& o : *Expect(both[1], ObjectKind::kList).list) {
          std::vector<Object> pair = ExpectPair(o);
          subst.sigma.emplace_back(Expect(pair[0], ObjectKind::kVar).term,
                                   Expect(pair[1], ObjectKind::kTerm).term);
        }
        s_.stack.push_back(Thm(Proof::Subst(std::move(subst), th.proof), {&th}));
        return;
      }
      case Keyword::kSym: {
        Object th = Pop(ObjectKind::kThm);
        s_.stack.push_back(Thm(hol::Sym(th.proof, *th.sequent), {&th}));
        return;
      }
      case Keyword::kThm: {
        hol::Term phi = Pop(ObjectKind::kTerm).term;
        std::vector<hol::Term> hyps;
        for (const Object& o : PopList()) hyps.push_back(Expect(o, ObjectKind::kTerm).term);
        Object th = Pop(ObjectKind::kThm);
        Sequent stated = Sequent::Make(std::move(hyps), phi);
        if (!(stated == *th.sequent)) {
          Fail(ArticleErrorCode::kSequentMismatch,
               "stated " + hol::ToString(stated) + " but proved " +
                   hol::ToString(*th.sequent));
        }
        s_.theorems.push_back(Theorem{std::move(stated), th.proof, s_.executed});
        return;
      }
      case Keyword::kTrans: {
        Object right = Pop(ObjectKind::kThm);
        Object left = Pop(ObjectKind::kThm);
        s_.stack.push_back(
            Thm(hol::Trans(left.proof, *left.sequent, right.proof), {&left, &right}));
        return;
      }
      case Keyword::kTypeOp:
        s_.stack.push_back(Object::TypeOp(Pop(ObjectKind::kName).name));
        return;
      case Keyword::kVar: {
        hol::Type ty = Pop(ObjectKind::kType).type;
        std::string name = Pop(ObjectKind::kName).name;
        s_.stack.push_back(Object::Var(hol::Term::Var(std::move(name), std::move(ty))));
        return;
      }
      case Keyword::kVarTerm:
        s_.stack.push_back(Object::Term(Pop(ObjectKind::kVar).term));
        return;
      case Keyword::kVarType:
        s_.stack.push_back(Object::Type(hol::Type::Var(Pop(ObjectKind::kName).name)));
        return;
    }
    Fail(ArticleErrorCode::kUnknownCommand, "unhandled keyword");
  }

  // Desugared into primitive steps: each c_i = t_i is introduced by
  // DefineConst, the variables are substituted by the constants, and the
  // resulting hypotheses are discharged one by one.
  void DefineConstList() {
    Object th = Pop(ObjectKind::kThm);
    std::vector<Object> pairs = PopList();
    hol::Subst subst;
    std::vector<Proof> defs;
    std::vector<Object> consts;
    hol::ProofChecker checker;
    checker.Seed(th.proof, *th.sequent);
    for (const Object& o : pairs) {
      std::vector<Object> pair = ExpectPair(o);
      const std::string& name = Expect(pair[0], ObjectKind::kName).name;
      const hol::Term& var = Expect(pair[1], ObjectKind::kVar).term;
      const hol::Term* body = nullptr;
      for (const hol::Term& h : th.sequent->hyps) {
        auto eq = hol::DestEq(h);
        if (eq && eq->first == var) body = &eq->second;
      }
      if (body == nullptr) {
        Fail(ArticleErrorCode::kLogicError,
             "no hypothesis defines " + hol::ToString(var));
      }
      DefineConstant(name, body->type());
      defs.push_back(Proof::DefineConst(name, *body));
      subst.sigma.emplace_back(var, hol::Term::Const(name, var.type()));
      consts.push_back(Object::Const(name));
    }
    Proof cur = Proof::Subst(std::move(subst), th.proof);
    for (const Proof& d : defs) cur = hol::ProveHyp(d, cur);
    Sequent s = checker.Check(cur);
    s_.stack.push_back(Object::List(std::move(consts)));
    s_.stack.push_back(Object::Thm(cur, std::move(s)));
  }

  VMState& s_;
  const VMOptions& options_;
};

}  // namespace

void Step(VMState& state, const Command& cmd, const VMOptions& options) {
  Machine m(state, options);
  ++state.executed;
  m.Execute(cmd);
}

VMState Run(const std::vector<Command>& commands, const VMOptions& options) {
  VMState state;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    try {
      Step(state, commands[i], options);
    } catch (const ArticleError& e) {
      if (e.command_index() != 0) throw;
      // Strip the code prefix already present in what().
      std::string msg = e.what();
      const std::string prefix = std::string(ArticleErrorCodeName(e.code())) + ": ";
      if (msg.starts_with(prefix)) msg = msg.substr(prefix.size());
      throw ArticleError(e.code(), msg, commands[i].line, i + 1);
    }
  }
  if (!state.version_seen) {
    throw ArticleError(ArticleErrorCode::kUnsupportedVersion, "missing version command");
  }
  InferGenericTypes(state);
  return state;
}

namespace {

class AntiUnifier {
 public:
  explicit AntiUnifier(const std::vector<hol::Type>& types) {
    for (const hol::Type& t : types) {
      for (const std::string& v : hol::TypeVars(t)) used_.insert(v);
    }
  }

  hol::Type Generalize(const std::vector<hol::Type>& ts) {
    bool all_same = std::all_of(ts.begin(), ts.end(), [&](const hol::Type& t) { return t == ts[0]; });
    if (all_same) return ts[0];
    const hol::Type& first = ts[0];
    const bool same_op = first.is_op() && std::all_of(ts.begin(), ts.end(), [&](const hol::Type& t) {
      return t.is_op() && t.name() == first.name() && t.args().size() == first.args().size();
    });
    if (same_op) {
      std::vector<hol::Type> args;
      for (std::size_t i = 0; i < first.args().size(); ++i) {
        std::vector<hol::Type> column;
        for (const hol::Type& t : ts) column.push_back(t.args()[i]);
        args.push_back(Generalize(column));
      }
      return hol::Type::Op(first.name(), std::move(args));
    }
    for (const auto& [key, var] : vars_) {
      if (key == ts) return var;
    }
    std::string name;
    do {
      name = "t" + std::to_string(next_++);
    } while (used_.contains(name));
    hol::Type v = hol::Type::Var(name);
    vars_.emplace_back(ts, v);
    return v;
  }

 private:
  std::set<std::string> used_;
  std::vector<std::pair<std::vector<hol::Type>, hol::Type>> vars_;
  int next_ = 0;
};

}  // namespace

hol::Type AntiUnify(const std::vector<hol::Type>& types) {
  AntiUnifier u(types);
  return u.Generalize(types);
}

void InferGenericTypes(VMState& state) {
  for (auto& [name, info] : state.constants) {
    if (info.defined || info.instances.empty()) continue;
    info.generic = AntiUnify(info.instances);
  }
}

}  // namespace holtrans::opentheory
