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

#include "holtrans/translate/article.h"

#include <filesystem>

#include "holtrans/dkfile/mangle.h"
#include "holtrans/translate/compress.h"

namespace holtrans::translate {

namespace {

constexpr std::size_t kMaxStatementComment = 160;

std::string Abbreviate(std::string s) {
  if (s.size() > kMaxStatementComment) {
    s.resize(kMaxStatementComment);
    s += " ...";
  }
  return s;
}

}  // namespace

std::string ModuleName(const std::string& path) {
  std::string name = dkfile::MangleBase(std::filesystem::path(path).stem().string());
  if (name == kBaseModule) name += "_art";
  return name;
}

TranslatedArticle TranslateArticle(Translator& tr, const opentheory::VMState& state,
                                   const std::string& module, const kernel::Signature& prefix,
                                   const ArticleOptions& options) {
  Resolver resolver;
  resolver.type_op_arity = [&state](const std::string& name) -> std::optional<std::size_t> {
    auto it = state.type_ops.find(name);
    if (it == state.type_ops.end()) return std::nullopt;
    return it->second.arity;
  };
  resolver.constant_type = [&state](const std::string& name) -> std::optional<hol::Type> {
    auto it = state.constants.find(name);
    if (it == state.constants.end() || !it->second.generic) return std::nullopt;
    return it->second.generic;
  };
  tr.set_resolver(std::move(resolver));
  const std::size_t collisions_before = tr.env().mangler().collisions().size();

  TranslatedArticle out;
  out.doc.module = module;
  std::vector<dkfile::Item> body;
  for (const opentheory::Theorem& thm : state.theorems) {
    const hol::Proof proof = options.compress ? CompressConversions(thm.proof) : thm.proof;
    const std::string name = tr.env().FreshId("thm_" + std::to_string(tr.NextTheoremIndex()));
    dkfile::Defn defn = tr.Theorem(name, thm.sequent, proof);
    for (dkfile::Item& item : tr.TakePending()) {
      ++out.report.declarations;
      body.push_back(std::move(item));
    }
    body.emplace_back(dkfile::Comment{Abbreviate(hol::ToString(thm.sequent))});
    body.emplace_back(std::move(defn));
    ++out.report.theorems;
  }
  const auto& collisions = tr.env().mangler().collisions();
  for (std::size_t i = collisions_before; i < collisions.size(); ++i) {
    out.doc.items.emplace_back(
        dkfile::Comment{"renamed " + collisions[i].first + " to " + collisions[i].second});
  }
  for (dkfile::Item& item : body) out.doc.items.push_back(std::move(item));

  if (options.sharing) {
    ShareOptions share = options.share;
    if (!share.fresh_name) {
      share.fresh_name = [&tr](const std::string& base) { return tr.env().FreshId(base); };
    }
    ShareResult shared = Share(prefix, out.doc, share);
    out.report.share_definitions = shared.definitions.size();
    out.report.share_hits = shared.hits;
    out.doc = std::move(shared.doc);
  }
  return out;
}

}  // namespace holtrans::translate
