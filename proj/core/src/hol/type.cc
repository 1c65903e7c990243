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

#include "holtrans/hol/type.h"

#include <algorithm>
#include <functional>

#include "holtrans/hol/error.h"

namespace holtrans::hol {

struct Type::Node {
  bool var = false;
  std::string name;
  std::vector<Type> args;
  std::size_t hash = 0;
};

namespace {

std::size_t Mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Type Type::Var(std::string name) {
  Node n;
  n.var = true;
  n.hash = Mix(0x51, std::hash<std::string>{}(name));
  n.name = std::move(name);
  return Type(std::make_shared<const Node>(std::move(n)));
}

Type Type::Op(std::string name, std::vector<Type> args) {
  std::size_t expected = args.size();
  if (name == kBoolName || name == kIndName) expected = 0;
  if (name == kFunName) expected = 2;
  if (expected != args.size()) {
    throw HolError(ErrorCode::kArityMismatch,
                   "type operator " + name + " expects " + std::to_string(expected) +
                       " arguments, got " + std::to_string(args.size()));
  }
  Node n;
  n.hash = Mix(0x77, std::hash<std::string>{}(name));
  for (const Type& a : args) n.hash = Mix(n.hash, a.hash());
  n.name = std::move(name);
  n.args = std::move(args);
  return Type(std::make_shared<const Node>(std::move(n)));
}

Type Type::Bool() {
  static const Type kBool = Op(kBoolName);
  return kBool;
}

Type Type::Ind() {
  static const Type kInd = Op(kIndName);
  return kInd;
}

Type Type::Fun(Type domain, Type codomain) {
  return Op(kFunName, {std::move(domain), std::move(codomain)});
}

bool Type::is_var() const { return node_->var; }
bool Type::is_fun() const { return !node_->var && node_->name == kFunName; }
bool Type::is_bool() const { return !node_->var && node_->name == kBoolName; }
const std::string& Type::name() const { return node_->name; }
const std::vector<Type>& Type::args() const { return node_->args; }
std::size_t Type::hash() const { return node_->hash; }

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.hash() != b.hash()) return false;
  return Type::Compare(a, b) == 0;
}

int Type::Compare(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return 0;
  if (a.is_var() != b.is_var()) return a.is_var() ? -1 : 1;
  if (int c = a.name().compare(b.name()); c != 0) return c < 0 ? -1 : 1;
  const auto& xs = a.args();
  const auto& ys = b.args();
  if (xs.size() != ys.size()) return xs.size() < ys.size() ? -1 : 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (int c = Compare(xs[i], ys[i]); c != 0) return c;
  }
  return 0;
}

Type Instantiate(const Type& t, const TypeSubst& theta) {
  if (theta.empty()) return t;
  if (t.is_var()) {
    auto it = theta.find(t.name());
    return it == theta.end() ? t : it->second;
  }
  if (t.args().empty()) return t;
  std::vector<Type> args;
  args.reserve(t.args().size());
  bool changed = false;
  for (const Type& a : t.args()) {
    args.push_back(Instantiate(a, theta));
    changed = changed || args.back().id() != a.id();
  }
  return changed ? Type::Op(t.name(), std::move(args)) : t;
}

void CollectTypeVars(const Type& t, std::vector<std::string>& out) {
  if (t.is_var()) {
    if (std::find(out.begin(), out.end(), t.name()) == out.end()) {
      out.push_back(t.name());
    }
    return;
  }
  for (const Type& a : t.args()) CollectTypeVars(a, out);
}

std::vector<std::string> TypeVars(const Type& t) {
  std::vector<std::string> out;
  CollectTypeVars(t, out);
  return out;
}

bool MatchType(const Type& pattern, const Type& instance, TypeSubst& theta) {
  if (pattern.is_var()) {
    auto [it, inserted] = theta.emplace(pattern.name(), instance);
    return inserted || it->second == instance;
  }
  if (instance.is_var() || pattern.name() != instance.name() ||
      pattern.args().size() != instance.args().size()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.args().size(); ++i) {
    if (!MatchType(pattern.args()[i], instance.args()[i], theta)) return false;
  }
  return true;
}

namespace {

void Print(std::string& out, const Type& t, bool atom) {
  if (t.is_var()) {
    out += t.name();
    return;
  }
  if (t.is_fun()) {
    if (atom) out += '(';
    Print(out, t.domain(), true);
    out += " -> ";
    Print(out, t.codomain(), false);
    if (atom) out += ')';
    return;
  }
  out += t.name();
  if (!t.args().empty()) {
    out += '(';
    for (std::size_t i = 0; i < t.args().size(); ++i) {
      if (i > 0) out += ", ";
      Print(out, t.args()[i], false);
    }
    out += ')';
  }
}

}  // namespace

std::string ToString(const Type& t) {
  std::string out;
  Print(out, t, false);
  return out;
}

}  // namespace holtrans::hol
