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

// Seeded generators of HOL types, terms, substitutions and derivations for
// property tests. The small fixed theory has the type operators `nat`
// (arity 0) and `list` (arity 1) and the constants
//
//   zero : nat    cons : A -> list A -> list A    P : nat -> bool
//
// With `base_only` set, only the built-in bool, ind, = and select are used.

#ifndef HOLTRANS_TESTS_SUPPORT_RANDOM_HOL_H_
#define HOLTRANS_TESTS_SUPPORT_RANDOM_HOL_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "holtrans/hol/proof.h"
#include "holtrans/hol/term.h"
#include "holtrans/hol/type.h"
#include "holtrans/kernel/signature.h"
#include "holtrans/translate/translate.h"

namespace holtrans::testing {

// Resolver for the fixed theory.
translate::Resolver TheoryResolver();
std::optional<hol::Type> TheoryConstantType(const std::string& name);

// Depth of `d` as a tree.
std::size_t ProofDepth(const hol::Proof& d);

struct CheckedProof {
  hol::Proof proof;
  hol::Sequent sequent;
};

class RandomHol {
 public:
  explicit RandomHol(std::uint64_t seed, bool base_only = false)
      : rng_(seed), base_only_(base_only) {}

  hol::Type RandomType(int depth = 2);
  hol::Term RandomTerm(const hol::Type& type, int depth = 3);
  hol::Term RandomBool(int depth = 3) { return RandomTerm(hol::Type::Bool(), depth); }
  hol::Subst RandomSubst(const hol::Term& t);

  // A derivation of depth at most `depth`, every node validated with
  // hol::Conclude as it is built.
  CheckedProof RandomProof(int depth);

  std::mt19937_64& rng() { return rng_; }
  int Pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

 private:
  bool Coin() { return Pick(2) == 0; }
  hol::Term RandomVar(const hol::Type& type);
  std::optional<hol::Term> ConstantAt(const hol::Type& type);
  CheckedProof Node(hol::Proof node, std::vector<CheckedProof> premises);
  CheckedProof EqProof(const hol::Type& type, int depth);
  CheckedProof AnyProof(int depth);

  std::mt19937_64 rng_;
  bool base_only_;
};

// A well-typed kernel term over the base signature, with the context binding
// its free variables: a translated HOL term, a translated derivation, or the
// proposition type of one. `gen` must be base-only and `tr` must have no
// resolver.
struct KernelSample {
  kernel::Term term;
  kernel::Context context;
};
KernelSample RandomKernelSample(RandomHol& gen, translate::Translator& tr);

}  // namespace holtrans::testing

#endif  // HOLTRANS_TESTS_SUPPORT_RANDOM_HOL_H_
