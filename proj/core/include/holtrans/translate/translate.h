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

// The translation functions: |A| and ||A|| for types, |M| for terms,
// ||phi|| for propositions and |D| for derivations.

#ifndef HOLTRANS_TRANSLATE_TRANSLATE_H_
#define HOLTRANS_TRANSLATE_TRANSLATE_H_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "holtrans/dkfile/document.h"
#include "holtrans/hol/proof.h"
#include "holtrans/hol/term.h"
#include "holtrans/hol/type.h"
#include "holtrans/kernel/signature.h"
#include "holtrans/kernel/term.h"
#include "holtrans/translate/env.h"

namespace holtrans::translate {

// Answers for names the environment has not declared yet. When set, an
// unknown type operator or constant is declared on first use and the
// declaration is queued (see Translator::TakePending).
struct Resolver {
  std::function<std::optional<std::size_t>(const std::string&)> type_op_arity;
  std::function<std::optional<hol::Type>(const std::string&)> constant_type;
};

class Translator {
 public:
  explicit Translator(TranslationEnv& env, Resolver resolver = {});

  TranslationEnv& env() { return env_; }
  void set_resolver(Resolver resolver) { resolver_ = std::move(resolver); }

  kernel::Term TypeTerm(const hol::Type& a);
  kernel::Term TypeType(const hol::Type& a);
  kernel::Term TermOf(const hol::Term& m);
  // proof |phi|. Throws NotAProposition unless phi : bool.
  kernel::Term PropType(const hol::Term& phi);
  // h_phi : ||phi|| for every hypothesis.
  kernel::Context HypContext(const std::vector<hol::Term>& hyps);

  kernel::Term ProofOf(const hol::Proof& d);
  const hol::Sequent& SequentOf(const hol::Proof& d) { return checker_.Check(d); }

  // Binds every type variable, term variable and hypothesis free in `s` or
  // in `t`, in that order (hypotheses in sequent order).
  kernel::Context ContextFor(const hol::Sequent& s, const kernel::Term& t = {});

  // def name : Pi type vars. Pi term vars. ||G|| -> ||phi|| := lambda ... |D|.
  // Variables used inside D but absent from the sequent are instantiated by
  // closed witnesses (bool for types, a choice term for terms).
  dkfile::Defn Theorem(const std::string& name, const hol::Sequent& s, const hol::Proof& d);

  // Declarations introduced as a side effect (type operators, constants,
  // axioms, definitional axioms) since the last call, in dependency order.
  std::vector<dkfile::Item> TakePending();

  std::size_t axiom_count() const { return axioms_.size(); }
  // Numbering of emitted theorems, shared by every article of a run.
  std::size_t NextTheoremIndex() { return theorem_index_++; }

 private:
  void Ensure(const hol::Type& a);
  void EnsureConstant(const std::string& name);
  kernel::Term TransNode(const hol::Proof& d, const std::vector<kernel::Term>& premises);
  kernel::Term AxiomTerm(const hol::Sequent& s);
  kernel::Term DefinitionTerm(const hol::Proof& d);
  kernel::Term TypeOpAxiomTerm(const hol::Proof& d);
  kernel::Term EtaProof(const hol::Term& lhs, const hol::Term& rhs);
  kernel::Term SubstProof(const hol::Proof& d, const kernel::Term& premise);
  std::vector<std::string> KeysFor(const hol::Sequent& s, const kernel::Term& t);
  kernel::Term Bind(const std::vector<std::string>& keys, const kernel::Term& body, bool pi);

  struct SequentLess {
    bool operator()(const std::vector<hol::Term>& a, const std::vector<hol::Term>& b) const;
  };

  TranslationEnv& env_;
  Resolver resolver_;
  hol::ProofChecker checker_;
  std::vector<dkfile::Item> pending_;
  std::unordered_map<const void*, std::pair<hol::Term, kernel::Term>> term_memo_;
  std::unordered_map<const void*, std::pair<hol::Proof, kernel::Term>> proof_memo_;
  // Axiom sequents (hypotheses then conclusion) to their constant.
  std::map<std::vector<hol::Term>, std::string, SequentLess> axioms_;
  std::unordered_map<std::string, std::string> definition_axioms_;
  std::unordered_map<std::string, std::pair<std::string, std::string>> type_op_axioms_;
  std::size_t theorem_index_ = 0;
};

// The eta axiom |- (\x. t x) = t, recognized structurally. Returns t.
std::optional<hol::Term> MatchEta(const hol::Sequent& s);

}  // namespace holtrans::translate

#endif  // HOLTRANS_TRANSLATE_TRANSLATE_H_
