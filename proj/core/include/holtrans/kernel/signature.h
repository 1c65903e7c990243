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

#ifndef HOLTRANS_KERNEL_SIGNATURE_H_
#define HOLTRANS_KERNEL_SIGNATURE_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "holtrans/kernel/term.h"

namespace holtrans::kernel {

inline constexpr std::uint64_t kDefaultFuel = 10'000'000;

struct Options {
  // Reduction steps allowed per top-level kernel call.
  std::uint64_t fuel = kDefaultFuel;
};

// Ordered variable bindings. Types may mention earlier entries by name.
class Context {
 public:
  Context() = default;
  Context(std::initializer_list<std::pair<std::string, Term>> entries);

  // Appends without checking; see CheckContext.
  void Push(std::string name, Term type);
  void Pop();
  const Term* Lookup(std::string_view name) const;
  bool Contains(std::string_view name) const { return Lookup(name) != nullptr; }

  const std::vector<std::pair<std::string, Term>>& entries() const {
    return entries_;
  }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::pair<std::string, Term>> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// [context] lhs --> rhs. The context variables appear free in lhs and rhs.
struct RewriteRule {
  Context context;
  Term lhs;
  Term rhs;
};

struct ConstDecl {
  std::string name;
  Term type;
};

// A constant that unfolds to its body (delta reduction).
struct ConstDef {
  std::string name;
  Term type;
  Term body;
};

using SignatureItem = std::variant<ConstDecl, ConstDef, RewriteRule>;

// First-order left-hand side pattern compiled for matching.
struct Pattern {
  enum class Kind : std::uint8_t { kVar, kConst };
  Kind kind = Kind::kVar;
  std::uint32_t var = 0;  // index into the rule context
  std::string name;       // constant name
  std::vector<Pattern> args;
};

struct CompiledRule {
  std::string head;
  std::vector<Pattern> args;
  std::uint32_t var_count = 0;
  // rhs closed over the context: context entry i is loose index i.
  Term rhs;
  std::size_t item_index = 0;
};

// Thrown by CompileRule when the lhs is outside the first-order pattern
// fragment or the rhs mentions variables the lhs does not bind.
CompiledRule CompileRule(const RewriteRule& rule);

class Signature {
 public:
  Signature() = default;

  // Appends without checking. Use CheckSignature (or Add) for validation.
  void AddUnchecked(SignatureItem item);
  // Validates the item against the current prefix, then appends it.
  void Add(SignatureItem item, const Options& options = {});

  const Term* TypeOf(std::string_view name) const;
  const Term* DefinitionOf(std::string_view name) const;
  bool Contains(std::string_view name) const { return TypeOf(name) != nullptr; }
  std::span<const CompiledRule> RulesFor(std::string_view head) const;

  const std::vector<SignatureItem>& items() const { return items_; }
  std::size_t rule_count() const { return rule_count_; }
  std::size_t size() const { return items_.size(); }

 private:
  struct Entry {
    Term type;
    Term body;  // null for plain declarations
  };

  std::vector<SignatureItem> items_;
  std::unordered_map<std::string, Entry> constants_;
  std::unordered_map<std::string, std::vector<CompiledRule>> rules_;
  std::size_t rule_count_ = 0;
};

// Re-validates every item of `sig` against its prefix, in order.
void CheckSignature(const Signature& sig, const Options& options = {});

// Validates context formation: no duplicate names, each type has sort Type.
void CheckContext(const Signature& sig, const Context& context,
                  const Options& options = {});

}  // namespace holtrans::kernel

#endif  // HOLTRANS_KERNEL_SIGNATURE_H_
