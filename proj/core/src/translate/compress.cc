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

#include "holtrans/translate/compress.h"

#include <limits>
#include <unordered_map>
#include <vector>

namespace holtrans::translate {

namespace {

bool InFragment(hol::ProofKind k) {
  return k == hol::ProofKind::kRefl || k == hol::ProofKind::kBeta ||
         k == hol::ProofKind::kAppThm || k == hol::ProofKind::kAbsThm ||
         k == hol::ProofKind::kConv;
}

class Compressor {
 public:
  hol::Proof Run(const hol::Proof& d) {
    // Post-order over the DAG: purity and rewritten nodes of the premises
    // are known when a node is finished.
    std::vector<std::pair<hol::Proof, bool>> stack{{d, false}};
    while (!stack.empty()) {
      auto [cur, expanded] = stack.back();
      stack.pop_back();
      if (done_.contains(cur.id())) continue;
      if (!expanded) {
        stack.emplace_back(cur, true);
        for (const hol::Proof& p : cur.premises()) {
          if (!done_.contains(p.id())) stack.emplace_back(p, false);
        }
        continue;
      }
      Finish(cur);
    }
    return Rewrite(d);
  }

 private:
  struct Info {
    hol::Proof keep;  // keeps the node alive while its id is a key
    bool pure = false;
  };

  void Finish(const hol::Proof& d) {
    bool pure = InFragment(d.kind());
    for (const hol::Proof& p : d.premises()) pure = pure && done_.at(p.id()).pure;
    done_.emplace(d.id(), Info{d, pure});
  }

  // The first pure node with premises on each path from the root is
  // maximal; nothing below it is visited.
  hol::Proof Rewrite(const hol::Proof& d) {
    std::vector<std::pair<hol::Proof, bool>> stack{{d, false}};
    while (!stack.empty()) {
      auto [cur, expanded] = stack.back();
      stack.pop_back();
      if (rewritten_.contains(cur.id())) continue;
      const bool collapse = done_.at(cur.id()).pure && !cur.premises().empty();
      if (!expanded && !collapse) {
        stack.emplace_back(cur, true);
        for (const hol::Proof& p : cur.premises()) {
          if (!rewritten_.contains(p.id())) stack.emplace_back(p, false);
        }
        continue;
      }
      hol::Proof out;
      if (collapse) {
        auto eq = hol::DestEq(checker_.Check(cur).concl);
        out = hol::Proof::Conv(eq->first, eq->second);
      } else {
        out = Rebuild(cur);
      }
      rewritten_.emplace(cur.id(), std::make_pair(cur, out));
    }
    return rewritten_.at(d.id()).second;
  }

  hol::Proof Rebuild(const hol::Proof& d) {
    std::vector<hol::Proof> prem;
    bool changed = false;
    for (const hol::Proof& p : d.premises()) {
      prem.push_back(rewritten_.at(p.id()).second);
      changed = changed || prem.back().id() != p.id();
    }
    if (!changed) return d;
    switch (d.kind()) {
      case hol::ProofKind::kAbsThm: return hol::Proof::AbsThm(d.var(), prem[0]);
      case hol::ProofKind::kAppThm: return hol::Proof::AppThm(prem[0], prem[1]);
      case hol::ProofKind::kEqMp: return hol::Proof::EqMp(prem[0], prem[1]);
      case hol::ProofKind::kDeductAntiSym: return hol::Proof::DeductAntiSym(prem[0], prem[1]);
      case hol::ProofKind::kSubst: return hol::Proof::Subst(d.subst(), prem[0]);
      case hol::ProofKind::kDefineTypeOp:
        return hol::Proof::DefineTypeOp(d.type_op(), d.which(), prem[0]);
      default: return d;
    }
  }

  std::unordered_map<const void*, Info> done_;
  std::unordered_map<const void*, std::pair<hol::Proof, hol::Proof>> rewritten_;
  hol::ProofChecker checker_;
};

}  // namespace

hol::Proof CompressConversions(const hol::Proof& d) {
  Compressor c;
  return c.Run(d);
}

std::size_t ProofTreeSize(const hol::Proof& d) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::unordered_map<const void*, std::pair<hol::Proof, std::size_t>> memo;
  std::vector<std::pair<hol::Proof, bool>> stack{{d, false}};
  while (!stack.empty()) {
    auto [cur, expanded] = stack.back();
    stack.pop_back();
    if (memo.contains(cur.id())) continue;
    if (!expanded) {
      stack.emplace_back(cur, true);
      for (const hol::Proof& p : cur.premises()) stack.emplace_back(p, false);
      continue;
    }
    std::size_t n = 1;
    for (const hol::Proof& p : cur.premises()) {
      const std::size_t k = memo.at(p.id()).second;
      n = kMax - n < k ? kMax : n + k;
    }
    memo.emplace(cur.id(), std::make_pair(cur, n));
  }
  return memo.at(d.id()).second;
}

}  // namespace holtrans::translate
