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

// Terms of higher-order logic.
//
// A free variable is identified by its name and its type. Bound variables are
// stored as de Bruijn indices and abstractions keep the binder name only for
// display, so structural equality is alpha-equivalence. Every term carries its
// simple type, computed (and checked) at construction.

#ifndef HOLTRANS_HOL_TERM_H_
#define HOLTRANS_HOL_TERM_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holtrans/hol/type.h"

namespace holtrans::hol {

inline constexpr const char* kEqName = "=";
inline constexpr const char* kSelectName = "select";

enum class TermKind : std::uint8_t { kBound, kVar, kConst, kAbs, kApp };

class Term {
 public:
  Term() = default;

  static Term Var(std::string name, Type type);
  // The built-in constants = and select must be used at an instance of their
  // generic type; other constants are checked by whoever declares them.
  static Term Const(std::string name, Type type);
  // Throws AppTypeMismatch unless fn : A -> B and arg : A.
  static Term App(Term fn, Term arg);
  // lambda var. body, where `var` is a Var whose occurrences in `body` become
  // bound.
  static Term Abs(const Term& var, const Term& body);
  // Low-level constructors over de Bruijn bodies.
  static Term Bound(std::uint32_t index, Type type);
  static Term AbsRaw(std::string binder, Type binder_type, Term body);

  static Term EqConst(const Type& a);
  static Term SelectConst(const Type& a);
  static Term Eq(const Term& lhs, const Term& rhs);

  explicit operator bool() const { return node_ != nullptr; }

  TermKind kind() const;
  bool is_bound() const { return kind() == TermKind::kBound; }
  bool is_var() const { return kind() == TermKind::kVar; }
  bool is_const() const { return kind() == TermKind::kConst; }
  bool is_abs() const { return kind() == TermKind::kAbs; }
  bool is_app() const { return kind() == TermKind::kApp; }

  // Type of the whole term.
  const Type& type() const;
  // Var/Const name, or the binder display name of an abstraction.
  const std::string& name() const;
  // Var/Const/Bound annotation, or the binder type of an abstraction.
  const Type& var_type() const;
  std::uint32_t index() const;
  // Body of an abstraction, with index 0 referring to the binder.
  const Term& body() const;
  const Term& fn() const;
  const Term& arg() const;

  std::size_t hash() const;
  std::uint64_t size() const;
  std::uint32_t loose_bound() const;
  bool has_free_vars() const;
  const void* id() const { return node_.get(); }
  long use_count() const { return node_.use_count(); }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// Total order on terms modulo alpha-equivalence, used to keep hypothesis sets
// sorted canonically.
int AlphaCompare(const Term& a, const Term& b);
inline bool AlphaEqual(const Term& a, const Term& b) { return a == b; }

struct AlphaLess {
  bool operator()(const Term& a, const Term& b) const { return AlphaCompare(a, b) < 0; }
};

inline Type InferType(const Term& t) { return t.type(); }

// lhs and rhs of an equation, if `t` is one.
std::optional<std::pair<Term, Term>> DestEq(const Term& t);

// Opens an abstraction with a variable named after the binder, primed until
// it does not clash with a free variable of the body.
std::pair<Term, Term> OpenAbs(const Term& abs);

// Replaces loose index 0 by `value`.
Term InstantiateBound(const Term& body, const Term& value);

// Free variables, each once, in order of first occurrence.
std::vector<Term> FreeVars(const Term& t);
bool FreeIn(const Term& var, const Term& t);

// Type variables occurring anywhere in t, in order of first occurrence.
void CollectTypeVars(const Term& t, std::vector<std::string>& out);

// theta is applied first; sigma's domain lists variables with their
// post-theta types. Substitution is simultaneous.
struct Subst {
  TypeSubst theta;
  std::vector<std::pair<Term, Term>> sigma;
};

Term InstTypes(const TypeSubst& theta, const Term& t);
Term SubstFree(const std::vector<std::pair<Term, Term>>& sigma, const Term& t);
Term ApplySubst(const Subst& s, const Term& t);

Term BetaNormalize(const Term& t);

std::string ToString(const Term& t);

}  // namespace holtrans::hol

#endif  // HOLTRANS_HOL_TERM_H_
