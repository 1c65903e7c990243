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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <benchmark/benchmark.h>

#include "holtrans/dkfile/document.h"
#include "holtrans/kernel/reduce.h"
#include "holtrans/kernel/typecheck.h"
#include "holtrans/opentheory/article.h"
#include "holtrans/opentheory/vm.h"
#include "holtrans/translate/article.h"
#include "holtrans/translate/base_signature.h"

namespace {

using namespace holtrans;
using kernel::Term;

std::string ReadCorpus(const std::string& name) {
  std::ifstream in(std::filesystem::path(HOLTRANS_CORPUS_DIR) / (name + ".art"));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Church numeral n over the base type `ind`: f : ind -> ind, x : ind.
Term Church(int n) {
  const Term ind = Term::App(Term::Const("term"), Term::Const("ind"));
  Term body = Term::Free("x");
  for (int i = 0; i < n; ++i) body = Term::App(Term::Free("f"), body);
  return Term::Lambda("f", Term::Arrow(ind, ind), Term::Lambda("x", ind, body));
}

// (\n. \f. \x. n (n f) x) applied to a numeral squares the work of normalizing.
void BM_NormalizeChurch(benchmark::State& state) {
  const kernel::Signature sig = translate::BaseSignature(translate::Mode::kQ0);
  const Term ind = Term::App(Term::Const("term"), Term::Const("ind"));
  const Term num_type = Term::Arrow(Term::Arrow(ind, ind), Term::Arrow(ind, ind));
  const Term twice = Term::Lambda(
      "n", num_type,
      Term::Lambda("f", Term::Arrow(ind, ind),
                   Term::Apps(Term::Free("n"), {Term::App(Term::Free("n"), Term::Free("f"))})));
  const Term t = Term::App(twice, Church(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(kernel::Normalize(sig, t));
}
BENCHMARK(BM_NormalizeChurch)->Arg(8)->Arg(32)->Arg(128);

void BM_CheckBaseSignature(benchmark::State& state) {
  const auto mode = state.range(0) ? translate::Mode::kPts : translate::Mode::kQ0;
  const dkfile::DkDocument doc = translate::BaseDocument(mode);
  for (auto _ : state) {
    kernel::Signature sig;
    dkfile::Check(sig, doc);
    benchmark::DoNotOptimize(sig.size());
  }
}
BENCHMARK(BM_CheckBaseSignature)->Arg(0)->Arg(1);

void BM_RunArticle(benchmark::State& state) {
  const auto commands = opentheory::ParseArticle(ReadCorpus("define_type_op"));
  for (auto _ : state) benchmark::DoNotOptimize(opentheory::Run(commands).theorems.size());
}
BENCHMARK(BM_RunArticle);

void BM_TranslateAndCheck(benchmark::State& state) {
  const bool sharing = state.range(0) != 0;
  const opentheory::VMState vm = opentheory::Run(opentheory::ParseArticle(ReadCorpus("shared")));
  const kernel::Signature base = translate::BaseSignature(translate::Mode::kQ0);
  translate::ArticleOptions options;
  options.sharing = sharing;
  for (auto _ : state) {
    translate::TranslationEnv env;
    translate::Translator tr(env);
    const auto out = translate::TranslateArticle(tr, vm, "shared", base, options);
    kernel::Signature sig = base;
    dkfile::Check(sig, out.doc);
    benchmark::DoNotOptimize(sig.size());
  }
}
BENCHMARK(BM_TranslateAndCheck)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
