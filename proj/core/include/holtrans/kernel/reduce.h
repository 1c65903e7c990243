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

// Beta-Sigma reduction: beta, unfolding of definitions, and the rewrite rules
// of the signature. Rule matching is first-order.

#ifndef HOLTRANS_KERNEL_REDUCE_H_
#define HOLTRANS_KERNEL_REDUCE_H_

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "holtrans/kernel/signature.h"
#include "holtrans/kernel/term.h"

namespace holtrans::kernel {

enum class Strategy : std::uint8_t { kLeftmostOutermost, kRightmostInnermost };

// Contracts exactly one redex, chosen by `strategy`, using purely syntactic
// matching. Returns nullopt when `t` is in normal form.
std::optional<Term> ReduceStep(const Signature& sig, const Term& t,
                               Strategy strategy = Strategy::kLeftmostOutermost);

// Iterates ReduceStep to a fixed point. Quadratic; meant for tests and small
// terms. Normalize computes the same normal form much faster.
Term NormalizeBySteps(const Signature& sig, const Term& t, Strategy strategy,
                      const Options& options = {});

// Reduction engine with a shared fuel budget. Results are memoized on node
// identity, which is sound because reduction does not depend on typing.
class Reducer {
 public:
  explicit Reducer(const Signature& sig, const Options& options = {});

  Term Whnf(const Term& t);
  Term Normalize(const Term& t);
  bool Convertible(const Term& a, const Term& b);

  std::uint64_t steps() const { return steps_; }

 private:
  bool Match(const Pattern& p, const Term& t, std::vector<Term>& bindings);
  bool ConvertibleWhnf(const Term& a, const Term& b);
  void Spend();

  const Signature& sig_;
  std::uint64_t fuel_;
  std::uint64_t steps_ = 0;
  std::unordered_map<const void*, std::pair<Term, Term>> whnf_cache_;
  std::unordered_map<const void*, std::pair<Term, Term>> nf_cache_;
};

Term WeakHeadNormalize(const Signature& sig, const Term& t,
                       const Options& options = {});
Term Normalize(const Signature& sig, const Term& t, const Options& options = {});
bool Convertible(const Signature& sig, const Term& a, const Term& b,
                 const Options& options = {});

}  // namespace holtrans::kernel

#endif  // HOLTRANS_KERNEL_REDUCE_H_
