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

// The article stack machine (format version 6). Every theorem object carries
// a HOL derivation together with the sequent it proves.

#ifndef HOLTRANS_OPENTHEORY_VM_H_
#define HOLTRANS_OPENTHEORY_VM_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "holtrans/hol/proof.h"
#include "holtrans/hol/term.h"
#include "holtrans/hol/type.h"
#include "holtrans/opentheory/article.h"

namespace holtrans::opentheory {

enum class ObjectKind : std::uint8_t {
  kNum,
  kName,
  kList,
  kTypeOp,
  kType,
  kConst,
  kVar,
  kTerm,
  kThm,
};

std::string_view ObjectKindName(ObjectKind k);

struct Object {
  ObjectKind kind = ObjectKind::kNum;
  std::int64_t num = 0;
  std::string name;  // Name, TypeOp and Const
  std::shared_ptr<const std::vector<Object>> list;
  hol::Type type;
  hol::Term term;  // Var and Term
  hol::Proof proof;
  std::shared_ptr<const hol::Sequent> sequent;

  static Object Num(std::int64_t n);
  static Object Name(std::string s);
  static Object List(std::vector<Object> items);
  static Object TypeOp(std::string s);
  static Object Type(hol::Type t);
  static Object Const(std::string s);
  static Object Var(hol::Term v);
  static Object Term(hol::Term t);
  static Object Thm(hol::Proof p, hol::Sequent s);
};

struct Theorem {
  hol::Sequent sequent;
  hol::Proof proof;
  std::size_t command_index = 0;
};

struct ConstantInfo {
  hol::Type generic;  // set at definition, or inferred for imported constants
  bool defined = false;
  std::vector<hol::Type> instances;
};

struct TypeOpInfo {
  std::size_t arity = 0;
  bool defined = false;
};

struct VMState {
  std::vector<Object> stack;  // top is back()
  std::unordered_map<std::int64_t, Object> dictionary;
  std::vector<Theorem> assumptions;
  std::vector<Theorem> theorems;
  // Ordered by name for reproducible output.
  std::map<std::string, TypeOpInfo> type_ops;
  std::map<std::string, ConstantInfo> constants;
  std::vector<std::string> type_op_order;  // first appearance
  std::vector<std::string> constant_order;
  bool version_seen = false;
  std::size_t executed = 0;
};

struct VMOptions {
  // Re-check every theorem pushed on the stack with a fresh ProofChecker.
  bool paranoid = false;
};

// Executes one command. On error the state may be partially updated.
void Step(VMState& state, const Command& cmd, const VMOptions& options = {});

// Runs a whole article. Errors carry the command index (1-based) and line.
VMState Run(const std::vector<Command>& commands, const VMOptions& options = {});

// Generic types for imported constants: the least general generalization of
// all observed instance types. Called by Run.
void InferGenericTypes(VMState& state);

// Least general generalization of a non-empty list of types.
hol::Type AntiUnify(const std::vector<hol::Type>& types);

}  // namespace holtrans::opentheory

#endif  // HOLTRANS_OPENTHEORY_VM_H_
