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

// Terms of the lambda-Pi calculus modulo rewriting.
//
// Bound variables are de Bruijn indices; binders keep a display name that is
// only used for printing. Free variables and constants are referenced by name.
// Equality on Term ignores display names, so alpha-equivalent terms compare
// equal. Terms are immutable and share structure freely.

#ifndef HOLTRANS_KERNEL_TERM_H_
#define HOLTRANS_KERNEL_TERM_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace holtrans::kernel {

enum class Sort : std::uint8_t { kType, kKind };

enum class TermKind : std::uint8_t {
  kBound,  // de Bruijn index
  kFree,   // named free variable (context entry, rule variable)
  kConst,
  kSort,
  kProd,
  kAbs,
  kApp,
};

class Term {
 public:
  Term() = default;

  static Term Bound(std::uint32_t index);
  static Term Free(std::string name);
  static Term Const(std::string name);
  static Term Type();
  static Term Kind();
  static Term OfSort(Sort sort);
  // `body` is in de Bruijn form: index 0 refers to this binder.
  static Term Prod(std::string binder, Term domain, Term body);
  static Term Abs(std::string binder, Term domain, Term body);
  static Term App(Term fn, Term arg);
  static Term Apps(Term head, std::span<const Term> args);
  static Term Apps(Term head, std::initializer_list<Term> args);

  // Named-binder conveniences: the free variable `name` in `body` becomes
  // bound by the new binder.
  static Term Pi(std::string_view name, Term domain, const Term& body);
  static Term Lambda(std::string_view name, Term domain, const Term& body);
  // Non-dependent product A -> B.
  static Term Arrow(Term domain, const Term& codomain);

  explicit operator bool() const { return node_ != nullptr; }

  TermKind kind() const;
  bool is_bound() const { return kind() == TermKind::kBound; }
  bool is_free() const { return kind() == TermKind::kFree; }
  bool is_const() const { return kind() == TermKind::kConst; }
  bool is_sort() const { return kind() == TermKind::kSort; }
  bool is_prod() const { return kind() == TermKind::kProd; }
  bool is_abs() const { return kind() == TermKind::kAbs; }
  bool is_app() const { return kind() == TermKind::kApp; }
  bool is_type() const;
  bool is_kind() const;

  std::uint32_t index() const;
  // Variable or constant name, or the display name of a binder.
  const std::string& name() const;
  Sort sort() const;
  const Term& domain() const;
  const Term& body() const;
  const Term& fn() const;
  const Term& arg() const;

  std::size_t hash() const;
  // Node count of the tree view (saturating).
  std::uint64_t size() const;
  // Every loose de Bruijn index is strictly below this bound.
  std::uint32_t loose_bound() const;
  // Bloom mask over free-variable names; zero means no free variables.
  std::uint64_t free_mask() const;
  // True when a Sort node occurs anywhere in the term.
  bool has_sort() const;

  // Identity of the shared node, for caches.
  const void* id() const { return node_.get(); }
  long use_count() const { return node_.use_count(); }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term Make(Node&& node);

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

std::uint64_t NameMask(std::string_view name);

// Head and arguments of an application spine.
struct Spine {
  Term head;
  std::vector<Term> args;
};
Spine Unfold(const Term& t);

// Shifts loose indices >= cutoff by `amount`.
Term Lift(const Term& t, std::uint32_t amount, std::uint32_t cutoff = 0);

// Replaces index 0 of `body` by `value`; other loose indices move down by one.
Term Instantiate(const Term& body, const Term& value);

// Replaces loose index i (< values.size()) by values[i]; higher indices move
// down by values.size().
Term InstantiateMany(const Term& body, std::span<const Term> values);

// Turns the free variable `name` into the loose index 0 (at the top level).
Term Abstract(const Term& t, std::string_view name);

// Turns names[i] into loose index i (at the top level). Used to close
// rewrite-rule right-hand sides over their context.
Term AbstractMany(const Term& t, std::span<const std::string> names);

using Substitution = std::map<std::string, Term, std::less<>>;

// Simultaneous capture-avoiding substitution of free variables.
Term Substitute(const Term& t, const Substitution& s);

// Sorted, de-duplicated names of the free variables of t.
std::vector<std::string> FreeVarNames(const Term& t);
bool OccursFree(const Term& t, std::string_view name);

// True when loose index `index` occurs in t.
bool HasLooseIndex(const Term& t, std::uint32_t index);

// Names of every constant occurring in t.
std::vector<std::string> ConstNames(const Term& t);

}  // namespace holtrans::kernel

#endif  // HOLTRANS_KERNEL_TERM_H_
