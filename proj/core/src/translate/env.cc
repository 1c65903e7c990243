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

#include "holtrans/translate/env.h"

#include <cstdio>
#include <unordered_set>

#include "holtrans/translate/error.h"

namespace holtrans::translate {

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

class Digest {
 public:
  void Byte(unsigned char c) {
    h_ ^= c;
    h_ *= kFnvPrime;
  }
  void Str(std::string_view s) {
    for (char c : s) Byte(static_cast<unsigned char>(c));
    Byte(0);
  }
  void Num(std::uint64_t n) {
    for (int i = 0; i < 8; ++i) Byte(static_cast<unsigned char>(n >> (8 * i)));
  }
  void Type(const hol::Type& t) {
    if (t.is_var()) {
      Byte('v');
      Str(t.name());
      return;
    }
    Byte('o');
    Str(t.name());
    Num(t.args().size());
    for (const hol::Type& a : t.args()) Type(a);
  }
  // Binder names are not hashed: bodies are in de Bruijn form.
  void Term(const hol::Term& t) {
    switch (t.kind()) {
      case hol::TermKind::kBound:
        Byte('b');
        Num(t.index());
        return;
      case hol::TermKind::kVar:
        Byte('x');
        Str(t.name());
        Type(t.var_type());
        return;
      case hol::TermKind::kConst:
        Byte('c');
        Str(t.name());
        Type(t.var_type());
        return;
      case hol::TermKind::kAbs:
        Byte('l');
        Type(t.var_type());
        Term(t.body());
        return;
      case hol::TermKind::kApp:
        Byte('a');
        Term(t.fn());
        Term(t.arg());
        return;
    }
  }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = kFnvOffset;
};

kernel::Term TypeArrows(std::size_t n) {
  kernel::Term t = kernel::Term::Const("type");
  for (std::size_t i = 0; i < n; ++i) t = kernel::Term::Arrow(kernel::Term::Const("type"), t);
  return t;
}

}  // namespace

std::uint64_t CanonicalHash(const hol::Term& t) {
  Digest d;
  d.Term(t);
  return d.value();
}

TranslationEnv::TranslationEnv(Mode mode) : mode_(mode) {
  for (const std::string& name : ReservedNames()) mangler_.Reserve(name);
  type_ops_.emplace(hol::kBoolName, std::make_pair(std::string("bool"), 0));
  type_ops_.emplace(hol::kIndName, std::make_pair(std::string("ind"), 0));
  type_ops_.emplace(hol::kFunName, std::make_pair(std::string("arrow"), 2));
  const hol::Type a = hol::Type::Var("A");
  constants_.emplace(hol::kEqName,
                     ConstantEntry{"eq", hol::Type::Fun(a, hol::Type::Fun(a, hol::Type::Bool())),
                                   {"A"}});
  constants_.emplace(
      hol::kSelectName,
      ConstantEntry{"select", hol::Type::Fun(hol::Type::Fun(a, hol::Type::Bool()), a), {"A"}});
}

dkfile::Decl TranslationEnv::DeclareTypeOp(const std::string& name, std::size_t arity) {
  if (type_ops_.contains(name)) {
    throw TranslateError(ErrorCode::kDuplicateDeclaration,
                         "type operator " + name + " is already declared");
  }
  const std::string& id = mangler_.Mangle(name);
  type_ops_.emplace(name, std::make_pair(id, arity));
  return dkfile::Decl{id, TypeArrows(arity)};
}

dkfile::Decl TranslationEnv::DeclareConstant(const std::string& name, const hol::Type& generic) {
  if (constants_.contains(name)) {
    throw TranslateError(ErrorCode::kDuplicateDeclaration,
                         "constant " + name + " is already declared");
  }
  ConstantEntry entry{mangler_.Mangle(name), generic, hol::TypeVars(generic)};
  kernel::Term type = TypeType(generic);
  for (std::size_t i = entry.type_vars.size(); i-- > 0;) {
    const std::string key = TypeVarKey(entry.type_vars[i]);
    type = kernel::Term::Prod(vars_.at(key).display, kernel::Term::Const("type"),
                              kernel::Abstract(type, key));
  }
  dkfile::Decl decl{entry.id, type};
  constants_.emplace(name, std::move(entry));
  return decl;
}

bool TranslationEnv::HasTypeOp(const std::string& name) const { return type_ops_.contains(name); }

bool TranslationEnv::HasConstant(const std::string& name) const {
  return constants_.contains(name);
}

const std::string& TranslationEnv::TypeOpId(const std::string& name) const {
  auto it = type_ops_.find(name);
  if (it == type_ops_.end()) {
    throw TranslateError(ErrorCode::kUndeclaredTypeOp, "type operator " + name);
  }
  return it->second.first;
}

std::size_t TranslationEnv::TypeOpArity(const std::string& name) const {
  TypeOpId(name);
  return type_ops_.at(name).second;
}

const ConstantEntry& TranslationEnv::Constant(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) {
    throw TranslateError(ErrorCode::kUndeclaredConstant, "constant " + name);
  }
  return it->second;
}

kernel::Term TranslationEnv::TypeTerm(const hol::Type& a) {
  if (auto it = type_memo_.find(a.id()); it != type_memo_.end()) return it->second.second;
  kernel::Term out;
  if (a.is_var()) {
    out = kernel::Term::Free(TypeVarKey(a.name()));
  } else {
    if (a.args().size() != TypeOpArity(a.name())) {
      throw TranslateError(ErrorCode::kUndeclaredTypeOp,
                           "type operator " + a.name() + " used with arity " +
                               std::to_string(a.args().size()));
    }
    out = kernel::Term::Const(TypeOpId(a.name()));
    for (const hol::Type& arg : a.args()) out = kernel::Term::App(out, TypeTerm(arg));
  }
  type_memo_.emplace(a.id(), std::make_pair(a, out));
  return out;
}

kernel::Term TranslationEnv::TypeType(const hol::Type& a) {
  return kernel::Term::App(kernel::Term::Const("term"), TypeTerm(a));
}

std::string TranslationEnv::TypeVarKey(const std::string& name) {
  if (auto it = type_var_keys_.find(name); it != type_var_keys_.end()) return it->second;
  std::string key = "'" + name;
  VarInfo info;
  info.kind = VarKind::kTypeVar;
  info.display = dkfile::MangleBase(name);
  info.type_var = name;
  vars_.emplace(key, std::move(info));
  type_var_keys_.emplace(name, key);
  return key;
}

std::string TranslationEnv::TermVarKey(const hol::Term& var) {
  if (auto it = term_var_keys_.find(var); it != term_var_keys_.end()) return it->second;
  std::string key = var.name() + "@" + std::to_string(term_var_keys_.size());
  VarInfo info;
  info.kind = VarKind::kTermVar;
  info.display = dkfile::MangleBase(var.name());
  info.term = var;
  vars_.emplace(key, std::move(info));
  term_var_keys_.emplace(var, key);
  return key;
}

std::string TranslationEnv::HypKey(const hol::Term& phi) {
  if (auto it = hyp_keys_.find(phi); it != hyp_keys_.end()) return it->second;
  char buf[24];
  std::snprintf(buf, sizeof(buf), "h_%016llx",
                static_cast<unsigned long long>(CanonicalHash(phi)));
  std::string key = buf;
  for (int n = 1; vars_.contains(key); ++n) key = std::string(buf) + "_" + std::to_string(n);
  VarInfo info;
  info.kind = VarKind::kHyp;
  info.display = key;
  info.term = phi;
  vars_.emplace(key, std::move(info));
  hyp_keys_.emplace(phi, key);
  return key;
}

const VarInfo* TranslationEnv::Lookup(std::string_view key) const {
  auto it = vars_.find(std::string(key));
  return it == vars_.end() ? nullptr : &it->second;
}

std::string TranslationEnv::FreshId(const std::string& base) {
  std::string id = base;
  for (int n = 1; mangler_.Taken(id); ++n) id = base + "_" + std::to_string(n);
  mangler_.Reserve(id);
  return id;
}

}  // namespace holtrans::translate
