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

// Simple types of higher-order logic: type variables and applied type
// operators. The built-in operators are bool, ind (arity 0) and -> (arity 2).

#ifndef HOLTRANS_HOL_TYPE_H_
#define HOLTRANS_HOL_TYPE_H_

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace holtrans::hol {

inline constexpr const char* kBoolName = "bool";
inline constexpr const char* kIndName = "ind";
inline constexpr const char* kFunName = "->";

class Type {
 public:
  Type() = default;

  static Type Var(std::string name);
  // Throws ArityMismatch for a built-in operator with the wrong arity.
  static Type Op(std::string name, std::vector<Type> args = {});
  static Type Bool();
  static Type Ind();
  static Type Fun(Type domain, Type codomain);

  explicit operator bool() const { return node_ != nullptr; }

  bool is_var() const;
  bool is_op() const { return !is_var(); }
  bool is_fun() const;
  bool is_bool() const;
  const std::string& name() const;
  const std::vector<Type>& args() const;
  // Only for function types.
  const Type& domain() const { return args()[0]; }
  const Type& codomain() const { return args()[1]; }

  std::size_t hash() const;
  const void* id() const { return node_.get(); }

  friend bool operator==(const Type& a, const Type& b);
  friend bool operator!=(const Type& a, const Type& b) { return !(a == b); }
  friend bool operator<(const Type& a, const Type& b) { return Compare(a, b) < 0; }
  // Total order: variables before operators, then by name, then arguments.
  static int Compare(const Type& a, const Type& b);

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TypeHash {
  std::size_t operator()(const Type& t) const { return t.hash(); }
};

using TypeSubst = std::map<std::string, Type>;

Type Instantiate(const Type& t, const TypeSubst& theta);

// Type variables in order of first occurrence (left to right), appended to
// `out` without duplicates.
void CollectTypeVars(const Type& t, std::vector<std::string>& out);
std::vector<std::string> TypeVars(const Type& t);

// Extends `theta` so that Instantiate(pattern, theta) == instance. Returns
// false if no such extension exists.
bool MatchType(const Type& pattern, const Type& instance, TypeSubst& theta);

std::string ToString(const Type& t);

}  // namespace holtrans::hol

#endif  // HOLTRANS_HOL_TYPE_H_
