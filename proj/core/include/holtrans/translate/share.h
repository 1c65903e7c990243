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

// Output-side sharing: repeated subterms of the generated definitions are
// hoisted into top-level definitions. A subterm under binders is abstracted
// over the binders it mentions (and the binders their types mention), so
// two occurrences are shared exactly when these closed abstractions agree.

#ifndef HOLTRANS_TRANSLATE_SHARE_H_
#define HOLTRANS_TRANSLATE_SHARE_H_

#include <cstddef>
#include <functional>
#include <string>
#include <unordered_set>
#include <vector>

#include "holtrans/dkfile/document.h"
#include "holtrans/kernel/signature.h"

namespace holtrans::translate {

struct ShareOptions {
  std::size_t min_size = 8;
  std::size_t min_count = 2;
  // Produces unused identifiers; defaults to `s`, `s_1`, ... avoiding the
  // names of the prefix signature and of the document.
  std::function<std::string(const std::string&)> fresh_name;
  kernel::Options kernel;
};

struct ShareResult {
  dkfile::DkDocument doc;
  std::vector<std::string> definitions;  // names of the hoisted definitions
  std::size_t hits = 0;                  // occurrences replaced
};

// `prefix` is the signature `doc` is checked against; it is used to infer the
// types of hoisted terms. Only definitions are rewritten.
ShareResult Share(const kernel::Signature& prefix, const dkfile::DkDocument& doc,
                  const ShareOptions& options = {});

// Removes the named definitions, replacing every reference by the body.
dkfile::DkDocument InlineDefinitions(const dkfile::DkDocument& doc,
                                     const std::unordered_set<std::string>& names);

}  // namespace holtrans::translate

#endif  // HOLTRANS_TRANSLATE_SHARE_H_
