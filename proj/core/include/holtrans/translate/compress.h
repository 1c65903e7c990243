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

// Conversion-proof compression. In the shallow embedding beta-equal terms
// are convertible, so a congruence tree built only from Refl, Beta, AppThm
// and AbsThm proves its conclusion by reflexivity alone.

#ifndef HOLTRANS_TRANSLATE_COMPRESS_H_
#define HOLTRANS_TRANSLATE_COMPRESS_H_

#include <cstddef>

#include "holtrans/hol/proof.h"

namespace holtrans::translate {

// Replaces every maximal Refl/Beta/AppThm/AbsThm subtree of two or more nodes
// by one Conv node for the same conclusion. The conclusion of `d` and of
// every kept node is unchanged. Conv translates to a single Refl.
hol::Proof CompressConversions(const hol::Proof& d);

// Number of nodes of `d` counted as a tree (shared subproofs count once per
// use), saturating.
std::size_t ProofTreeSize(const hol::Proof& d);

}  // namespace holtrans::translate

#endif  // HOLTRANS_TRANSLATE_COMPRESS_H_
