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

// Translation environment: what has been declared so far, and the kernel
// names chosen for HOL type variables, term variables and hypotheses.
//
// Inside the translator every HOL variable is a kernel free variable under
// an internal key; keys never reach the output because emitted items are
// closed. Type variables, term variables and hypotheses use disjoint key
// shapes, so a term variable named like a type variable cannot be confused
// with it.

#ifndef HOLTRANS_TRANSLATE_ENV_H_
#define HOLTRANS_TRANSLATE_ENV_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "holtrans/dkfile/document.h"
#include "holtrans/dkfile/mangle.h"
#include "holtrans/hol/term.h"
#include "holtrans/hol/type.h"
#include "holtrans/kernel/term.h"
#include "holtrans/translate/base_signature.h"

namespace holtrans::translate {

struct ConstantEntry {
  std::string id;
  hol::Type generic;
  // Parameter order: first occurrence in `generic`. Fixed at declaration.
  std::vector<std::string> type_vars;
};

enum class VarKind : std::uint8_t { kTypeVar, kTermVar, kHyp };

struct VarInfo {
  VarKind kind = VarKind::kTypeVar;
  std::string display;  // binder name in the output
  std::string type_var;  // kTypeVar
  hol::Term term;        // the variable (kTermVar) or proposition (kHyp)
};

class TranslationEnv {
 public:
  explicit TranslationEnv(Mode mode = Mode::kQ0);

  Mode mode() const { return mode_; }

  // `p : type -> ... -> type`. Throws DuplicateDeclaration.
  dkfile::Decl DeclareTypeOp(const std::string& name, std::size_t arity);
  // `c : a1 : type -> ... -> an : type -> term |generic|`.
  // Throws DuplicateDeclaration.
  dkfile::Decl DeclareConstant(const std::string& name, const hol::Type& generic);

  bool HasTypeOp(const std::string& name) const;
  bool HasConstant(const std::string& name) const;
  // Throws UndeclaredTypeOp / UndeclaredConstant.
  const std::string& TypeOpId(const std::string& name) const;
  std::size_t TypeOpArity(const std::string& name) const;
  const ConstantEntry& Constant(const std::string& name) const;

  // |A| and ||A|| = term |A|. Type variables become free variables.
  kernel::Term TypeTerm(const hol::Type& a);
  kernel::Term TypeType(const hol::Type& a);

  std::string TypeVarKey(const std::string& name);
  std::string TermVarKey(const hol::Term& var);
  // h_phi: a content hash of the alpha-canonical form, with a numeric suffix
  // in the unlikely case of a hash collision.
  std::string HypKey(const hol::Term& phi);
  const VarInfo* Lookup(std::string_view key) const;

  // Output identifier for a HOL name (constants and type operators share
  // one namespace).
  const std::string& Mangle(const std::string& hol_name) { return mangler_.Mangle(hol_name); }
  // An unused output identifier: `base`, or `base_N`.
  std::string FreshId(const std::string& base);
  const dkfile::Mangler& mangler() const { return mangler_; }

 private:
  Mode mode_;
  dkfile::Mangler mangler_;
  std::unordered_map<std::string, std::pair<std::string, std::size_t>> type_ops_;
  std::unordered_map<std::string, ConstantEntry> constants_;
  std::unordered_map<std::string, VarInfo> vars_;
  std::unordered_map<std::string, std::string> type_var_keys_;
  std::map<hol::Term, std::string, hol::AlphaLess> term_var_keys_;
  std::map<hol::Term, std::string, hol::AlphaLess> hyp_keys_;
  std::unordered_map<const void*, std::pair<hol::Type, kernel::Term>> type_memo_;
};

// Stable 64-bit digest of the alpha-canonical form of a term.
std::uint64_t CanonicalHash(const hol::Term& t);

}  // namespace holtrans::translate

#endif  // HOLTRANS_TRANSLATE_ENV_H_
