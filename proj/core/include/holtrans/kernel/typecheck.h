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

#ifndef HOLTRANS_KERNEL_TYPECHECK_H_
#define HOLTRANS_KERNEL_TYPECHECK_H_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>

#include "holtrans/kernel/reduce.h"
#include "holtrans/kernel/signature.h"
#include "holtrans/kernel/term.h"

namespace holtrans::kernel {

// Syntax-directed type inference for the lambda-Pi calculus modulo. The
// conversion rule is folded into application: an argument is accepted when
// its type is convertible to the domain of the function.
//
// Binders are opened with fresh free variables, so every subterm the checker
// sees is closed with respect to de Bruijn indices and inferred types can be
// memoized on node identity.
class TypeChecker {
 public:
  TypeChecker(const Signature& sig, const Context& context,
              const Options& options = {});

  Term Infer(const Term& t);
  // Throws DomainMismatch unless the type of `t` is convertible to `expected`.
  void Check(const Term& t, const Term& expected);
  // Infers the type of `t` and requires it to reduce to a sort.
  Sort InferSort(const Term& t);

  Reducer& reducer() { return reducer_; }

 private:
  Term InferUncached(const Term& t);
  void RequireType(const Term& domain);
  std::string Fresh();
  std::string Describe(const Term& t);

  const Signature& sig_;
  const Context& context_;
  Reducer reducer_;
  std::unordered_map<std::string, Term> locals_;
  std::unordered_map<const void*, std::pair<Term, Term>> cache_;
  std::uint64_t next_fresh_ = 0;
};

Term InferType(const Signature& sig, const Context& context, const Term& t,
               const Options& options = {});

}  // namespace holtrans::kernel

#endif  // HOLTRANS_KERNEL_TYPECHECK_H_
