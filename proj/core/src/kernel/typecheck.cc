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

#include "holtrans/kernel/typecheck.h"

#include "holtrans/kernel/error.h"
#include "holtrans/kernel/print.h"

namespace holtrans::kernel {

namespace {

[[noreturn]] void Fail(ErrorCode code, const std::string& message) {
  throw KernelError(code, message);
}

}  // namespace

TypeChecker::TypeChecker(const Signature& sig, const Context& context,
                         const Options& options)
    : sig_(sig), context_(context), reducer_(sig, options) {}

std::string TypeChecker::Fresh() { return "%" + std::to_string(next_fresh_++); }

// Normal form for error messages; falls back to the term itself when
// normalization runs out of fuel.
std::string TypeChecker::Describe(const Term& t) {
  try {
    Reducer r(sig_, Options{100'000});
    return ToString(r.Normalize(t));
  } catch (const KernelError&) {
    return ToString(t);
  }
}

Term TypeChecker::Infer(const Term& t) {
  const bool cacheable = t.use_count() > 1 && (t.is_app() || t.is_abs() || t.is_prod());
  if (cacheable) {
    auto it = cache_.find(t.id());
    if (it != cache_.end()) return it->second.second;
  }
  Term type = InferUncached(t);
  if (cacheable) cache_.emplace(t.id(), std::make_pair(t, type));
  return type;
}

void TypeChecker::RequireType(const Term& domain) {
  Term s = reducer_.Whnf(Infer(domain));
  if (!s.is_type()) {
    Fail(ErrorCode::kNotAType,
         ToString(domain) + " has type " + ToString(s) + ", not Type");
  }
}

Sort TypeChecker::InferSort(const Term& t) {
  Term s = reducer_.Whnf(Infer(t));
  if (!s.is_sort()) {
    Fail(ErrorCode::kIllegalSort,
         ToString(t) + " has type " + ToString(s) + ", which is not a sort");
  }
  return s.sort();
}

Term TypeChecker::InferUncached(const Term& t) {
  switch (t.kind()) {
    case TermKind::kBound:
      Fail(ErrorCode::kUnboundVariable,
           "loose de Bruijn index " + std::to_string(t.index()));
    case TermKind::kFree: {
      if (auto it = locals_.find(t.name()); it != locals_.end()) return it->second;
      if (const Term* type = context_.Lookup(t.name())) return *type;
      Fail(ErrorCode::kUnboundVariable, "unknown variable " + t.name());
    }
    case TermKind::kConst: {
      if (const Term* type = sig_.TypeOf(t.name())) return *type;
      Fail(ErrorCode::kUnboundConstant, "unknown constant " + t.name());
    }
    case TermKind::kSort:
      if (t.is_type()) return Term::Kind();
      Fail(ErrorCode::kIllegalSort, "Kind has no type");
    case TermKind::kProd: {
      RequireType(t.domain());
      const std::string x = Fresh();
      locals_.emplace(x, t.domain());
      Term body_type;
      try {
        body_type = reducer_.Whnf(Infer(Instantiate(t.body(), Term::Free(x))));
      } catch (...) {
        locals_.erase(x);
        throw;
      }
      locals_.erase(x);
      if (!body_type.is_sort()) {
        Fail(ErrorCode::kIllegalSort,
             "codomain of " + ToString(t) + " has type " + ToString(body_type) +
                 ", which is not a sort");
      }
      return body_type;
    }
    case TermKind::kAbs: {
      RequireType(t.domain());
      const std::string x = Fresh();
      locals_.emplace(x, t.domain());
      Term body_type;
      try {
        body_type = Infer(Instantiate(t.body(), Term::Free(x)));
      } catch (...) {
        locals_.erase(x);
        throw;
      }
      locals_.erase(x);
      if (body_type.is_kind()) {
        Fail(ErrorCode::kIllegalSort,
             "abstraction body of " + ToString(t) + " is a type family of sort Kind");
      }
      return Term::Prod(t.name(), t.domain(), Abstract(body_type, x));
    }
    case TermKind::kApp: {
      Term fn_type = reducer_.Whnf(Infer(t.fn()));
      if (fn_type.is_sort()) {
        Fail(ErrorCode::kNotAFunction,
             ToString(t.fn()) + " has sort " + ToString(fn_type) + " and cannot be applied");
      }
      // A type that is not a product is a failed conversion to one.
      if (!fn_type.is_prod()) {
        Fail(ErrorCode::kDomainMismatch,
             ToString(t.fn()) + " has type " + Describe(fn_type) +
                 ", which is not convertible to a product");
      }
      Term arg_type = Infer(t.arg());
      if (!reducer_.Convertible(arg_type, fn_type.domain())) {
        Fail(ErrorCode::kDomainMismatch,
             "argument " + ToString(t.arg()) + " has type " + Describe(arg_type) +
                 " but the function expects " + Describe(fn_type.domain()));
      }
      return Instantiate(fn_type.body(), t.arg());
    }
  }
  Fail(ErrorCode::kUnboundVariable, "malformed term");
}

void TypeChecker::Check(const Term& t, const Term& expected) {
  Term actual = Infer(t);
  if (!reducer_.Convertible(actual, expected)) {
    Fail(ErrorCode::kDomainMismatch,
         ToString(t) + " has type " + Describe(actual) + " but " +
             Describe(expected) + " was expected");
  }
}

Term InferType(const Signature& sig, const Context& context, const Term& t,
               const Options& options) {
  TypeChecker checker(sig, context, options);
  return checker.Infer(t);
}

}  // namespace holtrans::kernel
