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

#include "holtrans/kernel/reduce.h"

#include <string>

#include "holtrans/kernel/error.h"

namespace holtrans::kernel {

namespace {

// Syntactic first-order matching, used by the single-step reducer.
bool MatchSyntactic(const Pattern& p, const Term& t, std::vector<Term>& binds) {
  if (p.kind == Pattern::Kind::kVar) {
    if (!binds[p.var]) {
      binds[p.var] = t;
      return true;
    }
    return binds[p.var] == t;
  }
  Spine s = Unfold(t);
  if (!s.head.is_const() || s.head.name() != p.name ||
      s.args.size() != p.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < p.args.size(); ++i) {
    if (!MatchSyntactic(p.args[i], s.args[i], binds)) return false;
  }
  return true;
}

// Contracts a redex whose head is the spine head and which uses `len` of the
// spine arguments, trying the longest prefix first when `outermost`.
std::optional<Term> RootStep(const Signature& sig, const Spine& spine,
                             bool outermost) {
  const Term& head = spine.head;
  const std::span<const Term> args = spine.args;
  if (head.is_abs()) {
    if (args.empty()) return std::nullopt;
    return Term::Apps(Instantiate(head.body(), args[0]), args.subspan(1));
  }
  if (!head.is_const()) return std::nullopt;
  const std::span<const CompiledRule> rules = sig.RulesFor(head.name());
  const Term* def = sig.DefinitionOf(head.name());
  auto try_len = [&](std::size_t len) -> std::optional<Term> {
    for (const CompiledRule& rule : rules) {
      if (rule.args.size() != len) continue;
      std::vector<Term> binds(rule.var_count);
      bool ok = true;
      for (std::size_t i = 0; i < len && ok; ++i) {
        ok = MatchSyntactic(rule.args[i], args[i], binds);
      }
      if (ok) {
        return Term::Apps(InstantiateMany(rule.rhs, binds), args.subspan(len));
      }
    }
    if (len == 0 && def != nullptr) return Term::Apps(*def, args);
    return std::nullopt;
  };
  if (outermost) {
    for (std::size_t len = args.size() + 1; len-- > 0;) {
      if (auto r = try_len(len)) return r;
    }
  } else {
    for (std::size_t len = 0; len <= args.size(); ++len) {
      if (auto r = try_len(len)) return r;
    }
  }
  return std::nullopt;
}

std::optional<Term> StepInBinder(const Signature& sig, const Term& t,
                                 Strategy strategy);

std::optional<Term> StepLO(const Signature& sig, const Term& t) {
  if (t.is_prod() || t.is_abs()) return StepInBinder(sig, t, Strategy::kLeftmostOutermost);
  if (!t.is_app() && !t.is_const()) return std::nullopt;
  Spine spine = Unfold(t);
  if (auto r = RootStep(sig, spine, /*outermost=*/true)) return r;
  if (auto h = StepInBinder(sig, spine.head, Strategy::kLeftmostOutermost)) {
    return Term::Apps(*h, spine.args);
  }
  for (std::size_t i = 0; i < spine.args.size(); ++i) {
    if (auto a = StepLO(sig, spine.args[i])) {
      spine.args[i] = *a;
      return Term::Apps(spine.head, spine.args);
    }
  }
  return std::nullopt;
}

std::optional<Term> StepRI(const Signature& sig, const Term& t) {
  if (t.is_prod() || t.is_abs()) return StepInBinder(sig, t, Strategy::kRightmostInnermost);
  if (!t.is_app() && !t.is_const()) return std::nullopt;
  Spine spine = Unfold(t);
  for (std::size_t i = spine.args.size(); i-- > 0;) {
    if (auto a = StepRI(sig, spine.args[i])) {
      spine.args[i] = *a;
      return Term::Apps(spine.head, spine.args);
    }
  }
  if (auto h = StepInBinder(sig, spine.head, Strategy::kRightmostInnermost)) {
    return Term::Apps(*h, spine.args);
  }
  return RootStep(sig, spine, /*outermost=*/false);
}

// Steps inside the domain or body of a binder. Non-binders yield nullopt.
std::optional<Term> StepInBinder(const Signature& sig, const Term& t,
                                 Strategy strategy) {
  if (!t.is_prod() && !t.is_abs()) return std::nullopt;
  auto rebuild = [&](Term domain, Term body) {
    return t.is_prod() ? Term::Prod(t.name(), std::move(domain), std::move(body))
                       : Term::Abs(t.name(), std::move(domain), std::move(body));
  };
  auto step = [&](const Term& s) {
    return strategy == Strategy::kLeftmostOutermost ? StepLO(sig, s) : StepRI(sig, s);
  };
  if (strategy == Strategy::kLeftmostOutermost) {
    if (auto d = step(t.domain())) return rebuild(*d, t.body());
    if (auto b = step(t.body())) return rebuild(t.domain(), *b);
  } else {
    if (auto b = step(t.body())) return rebuild(t.domain(), *b);
    if (auto d = step(t.domain())) return rebuild(*d, t.body());
  }
  return std::nullopt;
}

[[noreturn]] void OutOfFuel(std::uint64_t fuel) {
  throw KernelError(ErrorCode::kFuelExhausted,
                    "reduction exceeded " + std::to_string(fuel) + " steps");
}

}  // namespace

std::optional<Term> ReduceStep(const Signature& sig, const Term& t,
                               Strategy strategy) {
  return strategy == Strategy::kLeftmostOutermost ? StepLO(sig, t) : StepRI(sig, t);
}

Term NormalizeBySteps(const Signature& sig, const Term& t, Strategy strategy,
                      const Options& options) {
  Term cur = t;
  for (std::uint64_t steps = 0;; ++steps) {
    std::optional<Term> next = ReduceStep(sig, cur, strategy);
    if (!next) return cur;
    if (steps >= options.fuel) OutOfFuel(options.fuel);
    cur = std::move(*next);
  }
}

Reducer::Reducer(const Signature& sig, const Options& options)
    : sig_(sig), fuel_(options.fuel) {}

void Reducer::Spend() {
  if (++steps_ > fuel_) OutOfFuel(fuel_);
}

bool Reducer::Match(const Pattern& p, const Term& t, std::vector<Term>& binds) {
  if (p.kind == Pattern::Kind::kVar) {
    if (!binds[p.var]) {
      binds[p.var] = t;
      return true;
    }
    return Convertible(binds[p.var], t);
  }
  Term w = Whnf(t);
  Spine s = Unfold(w);
  if (!s.head.is_const() || s.head.name() != p.name ||
      s.args.size() != p.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < p.args.size(); ++i) {
    if (!Match(p.args[i], s.args[i], binds)) return false;
  }
  return true;
}

Term Reducer::Whnf(const Term& t) {
  if (!t.is_app() && !t.is_const()) return t;
  const bool cacheable = t.use_count() > 1;
  if (cacheable) {
    auto it = whnf_cache_.find(t.id());
    if (it != whnf_cache_.end()) return it->second.second;
  }
  Term cur = t;
  for (;;) {
    if (!cur.is_app() && !cur.is_const()) break;
    Spine spine = Unfold(cur);
    const Term& head = spine.head;
    if (head.is_abs()) {
      if (spine.args.empty()) break;
      Spend();
      cur = Term::Apps(Instantiate(head.body(), spine.args[0]),
                       std::span<const Term>(spine.args).subspan(1));
      continue;
    }
    if (!head.is_const()) break;
    if (const Term* def = sig_.DefinitionOf(head.name())) {
      Spend();
      cur = Term::Apps(*def, spine.args);
      continue;
    }
    bool fired = false;
    for (const CompiledRule& rule : sig_.RulesFor(head.name())) {
      if (rule.args.size() > spine.args.size()) continue;
      std::vector<Term> binds(rule.var_count);
      bool ok = true;
      for (std::size_t i = 0; i < rule.args.size() && ok; ++i) {
        ok = Match(rule.args[i], spine.args[i], binds);
      }
      if (!ok) continue;
      Spend();
      cur = Term::Apps(InstantiateMany(rule.rhs, binds),
                       std::span<const Term>(spine.args).subspan(rule.args.size()));
      fired = true;
      break;
    }
    if (!fired) break;
  }
  if (cacheable) whnf_cache_.emplace(t.id(), std::make_pair(t, cur));
  return cur;
}

Term Reducer::Normalize(const Term& t) {
  if (t.is_bound() || t.is_free() || t.is_sort()) return t;
  const bool cacheable = t.use_count() > 1;
  if (cacheable) {
    auto it = nf_cache_.find(t.id());
    if (it != nf_cache_.end()) return it->second.second;
  }
  Term w = Whnf(t);
  Term out;
  switch (w.kind()) {
    case TermKind::kProd:
      out = Term::Prod(w.name(), Normalize(w.domain()), Normalize(w.body()));
      break;
    case TermKind::kAbs:
      out = Term::Abs(w.name(), Normalize(w.domain()), Normalize(w.body()));
      break;
    case TermKind::kApp: {
      Spine spine = Unfold(w);
      for (Term& a : spine.args) a = Normalize(a);
      out = Term::Apps(spine.head, spine.args);
      break;
    }
    default:
      out = w;
  }
  if (cacheable) nf_cache_.emplace(t.id(), std::make_pair(t, out));
  return out;
}

bool Reducer::Convertible(const Term& a, const Term& b) {
  if (a == b) return true;
  // Same defined or rewritable head with convertible arguments: avoid
  // unfolding both sides.
  if (a.is_app() && b.is_app()) {
    Spine sa = Unfold(a);
    Spine sb = Unfold(b);
    if (sa.head.is_const() && sb.head.is_const() &&
        sa.head.name() == sb.head.name() && sa.args.size() == sb.args.size()) {
      bool all = true;
      for (std::size_t i = 0; i < sa.args.size() && all; ++i) {
        all = sa.args[i] == sb.args[i];
      }
      if (all) return true;
    }
  }
  return ConvertibleWhnf(Whnf(a), Whnf(b));
}

bool Reducer::ConvertibleWhnf(const Term& a, const Term& b) {
  if (a == b) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::kBound:
      return a.index() == b.index();
    case TermKind::kFree:
    case TermKind::kConst:
      return a.name() == b.name();
    case TermKind::kSort:
      return a.sort() == b.sort();
    case TermKind::kProd:
    case TermKind::kAbs:
      return Convertible(a.domain(), b.domain()) && Convertible(a.body(), b.body());
    case TermKind::kApp: {
      Spine sa = Unfold(a);
      Spine sb = Unfold(b);
      if (sa.args.size() != sb.args.size()) return false;
      if (!ConvertibleWhnf(sa.head, sb.head)) return false;
      for (std::size_t i = 0; i < sa.args.size(); ++i) {
        if (!Convertible(sa.args[i], sb.args[i])) return false;
      }
      return true;
    }
  }
  return false;
}

Term WeakHeadNormalize(const Signature& sig, const Term& t, const Options& options) {
  Reducer r(sig, options);
  return r.Whnf(t);
}

Term Normalize(const Signature& sig, const Term& t, const Options& options) {
  Reducer r(sig, options);
  return r.Normalize(t);
}

bool Convertible(const Signature& sig, const Term& a, const Term& b,
                 const Options& options) {
  Reducer r(sig, options);
  return r.Convertible(a, b);
}

}  // namespace holtrans::kernel
