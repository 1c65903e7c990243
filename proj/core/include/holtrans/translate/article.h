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

// From a finished article run to a .dk document: every exported theorem
// becomes `def thm_k`, preceded by the declarations it needs.

#ifndef HOLTRANS_TRANSLATE_ARTICLE_H_
#define HOLTRANS_TRANSLATE_ARTICLE_H_

#include <cstddef>
#include <string>

#include "holtrans/dkfile/document.h"
#include "holtrans/kernel/signature.h"
#include "holtrans/opentheory/vm.h"
#include "holtrans/translate/share.h"
#include "holtrans/translate/translate.h"

namespace holtrans::translate {

struct ArticleOptions {
  bool compress = false;
  bool sharing = true;
  ShareOptions share;
};

struct ArticleReport {
  std::size_t theorems = 0;
  std::size_t declarations = 0;  // type operators, constants and axioms
  std::size_t share_definitions = 0;
  std::size_t share_hits = 0;
};

struct TranslatedArticle {
  dkfile::DkDocument doc;
  ArticleReport report;
};

// `prefix` is the signature the result will be checked against (hol.dk and
// the documents emitted before this one). The translator's resolver is
// replaced by one answering from `state`.
TranslatedArticle TranslateArticle(Translator& tr, const opentheory::VMState& state,
                                   const std::string& module, const kernel::Signature& prefix,
                                   const ArticleOptions& options = {});

// Module name for an article file name: the stem, mangled.
std::string ModuleName(const std::string& path);

}  // namespace holtrans::translate

#endif  // HOLTRANS_TRANSLATE_ARTICLE_H_
