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

#include "holtrans/kernel/signature.h"

#include <algorithm>
#include <unordered_set>

#include "holtrans/kernel/error.h"
#include "holtrans/kernel/print.h"
#include "holtrans/kernel/reduce.h"
#include "holtrans/kernel/typecheck.h"

namespace holtrans::kernel {

Context::Context(std::initializer_list<std::pair<std::string, Term>> entries) {
  for (const auto& [name, type] : entries) Push(name, type);
}

void Context::Push(std::string name, Term type) {
  index_[name] = entries_.size();
  entries_.emplace_back(std::move(name), std::move(type));
}

void Context::Pop() {
  const std::string name = entries_.back().first;
  entries_.pop_back();
  index_.erase(name);
  // Re-expose an earlier entry with the same name, if any.
  for (std::size_t i = entries_.size(); i-- > 0;) {
    if (entries_[i].first == name) {
      index_[name] = i;
      break;
    }
  }
}

const Term* Context::Lookup(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? nullptr : &entries_[it->second].second;
}

namespace {

[[noreturn]] void Fail(ErrorCode code, const std::string& message) {
  throw KernelError(code, message);
}

Pattern CompilePattern(const Term& t,
                       const std::unordered_map<std::string, std::uint32_t>& vars,
                       std::vector<bool>& bound, const Term& lhs) {
  if (t.is_free()) {
    auto it = vars.find(t.name());
    if (it == vars.end()) {
      Fail(ErrorCode::kNonPatternLhs,
           "variable " + t.name() + " is not declared by the rule context in " +
               ToString(lhs));
    }
    Pattern p;
    p.kind = Pattern::Kind::kVar;
    p.var = it->second;
    bound[it->second] = true;
    return p;
  }
  Spine spine = Unfold(t);
  if (!spine.head.is_const()) {
    Fail(ErrorCode::kNonPatternLhs,
         "subterm " + ToString(t) + " of " + ToString(lhs) +
             " is neither a variable nor a constant application");
  }
  Pattern p;
  p.kind = Pattern::Kind::kConst;
  p.name = spine.head.name();
  for (const Term& a : spine.args) p.args.push_back(CompilePattern(a, vars, bound, lhs));
  return p;
}

}  // namespace

CompiledRule CompileRule(const RewriteRule& rule) {
  std::unordered_map<std::string, std::uint32_t> vars;
  std::vector<std::string> names;
  for (const auto& [name, type] : rule.context.entries()) {
    vars[name] = static_cast<std::uint32_t>(names.size());
    names.push_back(name);
  }
  Spine spine = Unfold(rule.lhs);
  if (!spine.head.is_const()) {
    Fail(ErrorCode::kNonPatternLhs,
         "head of " + ToString(rule.lhs) + " is not a constant");
  }
  CompiledRule out;
  out.head = spine.head.name();
  out.var_count = static_cast<std::uint32_t>(names.size());
  std::vector<bool> bound(names.size(), false);
  for (const Term& a : spine.args) {
    out.args.push_back(CompilePattern(a, vars, bound, rule.lhs));
  }
  for (const std::string& v : FreeVarNames(rule.rhs)) {
    auto it = vars.find(v);
    if (it == vars.end() || !bound[it->second]) {
      Fail(ErrorCode::kUnboundRhsVariable,
           "variable " + v + " of the right-hand side does not occur in " +
               ToString(rule.lhs));
    }
  }
  // Context entry i becomes loose index i.
  out.rhs = AbstractMany(rule.rhs, names);
  return out;
}

void Signature::AddUnchecked(SignatureItem item) {
  const std::size_t index = items_.size();
  if (auto* d = std::get_if<ConstDecl>(&item)) {
    constants_[d->name] = Entry{d->type, Term()};
  } else if (auto* f = std::get_if<ConstDef>(&item)) {
    constants_[f->name] = Entry{f->type, f->body};
  } else {
    CompiledRule compiled = CompileRule(std::get<RewriteRule>(item));
    compiled.item_index = index;
    rules_[compiled.head].push_back(std::move(compiled));
    ++rule_count_;
  }
  items_.push_back(std::move(item));
}

const Term* Signature::TypeOf(std::string_view name) const {
  auto it = constants_.find(std::string(name));
  return it == constants_.end() ? nullptr : &it->second.type;
}

const Term* Signature::DefinitionOf(std::string_view name) const {
  auto it = constants_.find(std::string(name));
  if (it == constants_.end() || !it->second.body) return nullptr;
  return &it->second.body;
}

std::span<const CompiledRule> Signature::RulesFor(std::string_view head) const {
  auto it = rules_.find(std::string(head));
  if (it == rules_.end()) return {};
  return it->second;
}

namespace {

std::string ItemName(const SignatureItem& item) {
  if (auto* d = std::get_if<ConstDecl>(&item)) return d->name;
  if (auto* f = std::get_if<ConstDef>(&item)) return f->name;
  return "rule " + ToString(std::get<RewriteRule>(item).lhs);
}

// Runs `body`, rewrapping kernel errors (other than fuel exhaustion) as
// `code`, so callers learn which item is at fault.
template <typename F>
void Wrapped(ErrorCode code, const std::string& what, F&& body) {
  try {
    body();
  } catch (const KernelError& e) {
    if (e.code() == ErrorCode::kFuelExhausted || e.code() == code) throw;
    Fail(code, what + ": " + e.what());
  }
}

void CheckDeclarationType(const Signature& sig, const std::string& name,
                          const Term& type, const Options& options) {
  Wrapped(ErrorCode::kIllTypedDeclaration, name, [&] {
    Context empty;
    TypeChecker checker(sig, empty, options);
    checker.InferSort(type);
  });
}

void CheckItem(const Signature& prefix, const SignatureItem& item,
               const Options& options) {
  if (auto* d = std::get_if<ConstDecl>(&item)) {
    if (prefix.Contains(d->name)) {
      Fail(ErrorCode::kDuplicateConstant, d->name + " is already declared");
    }
    CheckDeclarationType(prefix, d->name, d->type, options);
    return;
  }
  if (auto* f = std::get_if<ConstDef>(&item)) {
    if (prefix.Contains(f->name)) {
      Fail(ErrorCode::kDuplicateConstant, f->name + " is already declared");
    }
    CheckDeclarationType(prefix, f->name, f->type, options);
    Wrapped(ErrorCode::kIllTypedDeclaration, f->name, [&] {
      Context empty;
      TypeChecker checker(prefix, empty, options);
      checker.Check(f->body, f->type);
    });
    return;
  }
  const auto& rule = std::get<RewriteRule>(item);
  // Shape and variable checks come first and keep their own codes.
  CompiledRule compiled = CompileRule(rule);
  if (!prefix.Contains(compiled.head)) {
    Fail(ErrorCode::kUnboundConstant,
         "rule head " + compiled.head + " is not declared");
  }
  Wrapped(ErrorCode::kRuleTypeMismatch, ItemName(item), [&] {
    CheckContext(prefix, rule.context, options);
    TypeChecker checker(prefix, rule.context, options);
    Term lhs_type = checker.Infer(rule.lhs);
    Term rhs_type = checker.Infer(rule.rhs);
    if (!checker.reducer().Convertible(lhs_type, rhs_type)) {
      Fail(ErrorCode::kRuleTypeMismatch,
           "left-hand side has type " + ToString(lhs_type) +
               " but right-hand side has type " + ToString(rhs_type));
    }
  });
}

}  // namespace

void Signature::Add(SignatureItem item, const Options& options) {
  CheckItem(*this, item, options);
  AddUnchecked(std::move(item));
}

void CheckSignature(const Signature& sig, const Options& options) {
  Signature prefix;
  for (const SignatureItem& item : sig.items()) prefix.Add(item, options);
}

void CheckContext(const Signature& sig, const Context& context,
                  const Options& options) {
  Context prefix;
  for (const auto& [name, type] : context.entries()) {
    if (prefix.Contains(name)) {
      Fail(ErrorCode::kDuplicateVariable, name + " is bound twice");
    }
    TypeChecker checker(sig, prefix, options);
    Term sort = checker.reducer().Whnf(checker.Infer(type));
    if (!sort.is_type()) {
      Fail(ErrorCode::kNotAType,
           "type " + ToString(type) + " of " + name + " has type " +
               ToString(sort) + ", not Type");
    }
    prefix.Push(name, type);
  }
}

}  // namespace holtrans::kernel
