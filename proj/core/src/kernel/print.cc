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

#include "holtrans/kernel/print.h"

#include <algorithm>
#include <sstream>

namespace holtrans::kernel {

bool IsIdentifier(std::string_view s) {
  if (s.empty()) return false;
  if (s[0] >= '0' && s[0] <= '9') return false;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return s != "Type" && s != "Kind" && s != "def";
}

std::string TermPrinter::ToString(const Term& t) {
  std::ostringstream out;
  Print(out, t);
  return out.str();
}

void TermPrinter::Print(std::ostream& out, const Term& t) {
  std::vector<std::string> scope;
  Print(out, t, scope);
}

void TermPrinter::Print(std::ostream& out, const Term& t,
                        std::vector<std::string>& scope) {
  occurring_.clear();
  for (std::string& n : ConstNames(t)) occurring_.insert(std::move(n));
  for (std::string& n : FreeVarNames(t)) occurring_.insert(std::move(n));
  PrintAt(out, t, kTop, scope);
}

std::string TermPrinter::FreshBinder(const std::string& hint,
                                     const std::vector<std::string>& scope) const {
  const std::string base =
      IsIdentifier(hint) && hint != "_" ? hint : std::string("x");
  auto taken = [&](const std::string& n) {
    if (occurring_.contains(n)) return true;
    if (reserved_ != nullptr && reserved_->contains(n)) return true;
    return std::find(scope.begin(), scope.end(), n) != scope.end();
  };
  if (!taken(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!taken(candidate)) return candidate;
  }
}

void TermPrinter::PrintAt(std::ostream& out, const Term& t, Level level,
                          std::vector<std::string>& scope) {
  switch (t.kind()) {
    case TermKind::kBound:
      if (t.index() < scope.size()) {
        out << scope[scope.size() - 1 - t.index()];
      } else {
        out << '#' << t.index();
      }
      return;
    case TermKind::kFree:
    case TermKind::kConst:
      out << t.name();
      return;
    case TermKind::kSort:
      out << (t.is_type() ? "Type" : "Kind");
      return;
    case TermKind::kProd:
    case TermKind::kAbs: {
      if (level != kTop) out << '(';
      const bool dependent = t.is_abs() || HasLooseIndex(t.body(), 0);
      std::string binder = dependent ? FreshBinder(t.name(), scope) : "_";
      if (dependent) out << binder << " : ";
      PrintAt(out, t.domain(), kApp, scope);
      out << (t.is_abs() ? " => " : " -> ");
      scope.push_back(std::move(binder));
      PrintAt(out, t.body(), kTop, scope);
      scope.pop_back();
      if (level != kTop) out << ')';
      return;
    }
    case TermKind::kApp: {
      if (level == kAtom) out << '(';
      Spine spine = Unfold(t);
      PrintAt(out, spine.head, kAtom, scope);
      for (const Term& a : spine.args) {
        out << ' ';
        PrintAt(out, a, kAtom, scope);
      }
      if (level == kAtom) out << ')';
      return;
    }
  }
}

std::string ToString(const Term& t) {
  TermPrinter printer;
  return printer.ToString(t);
}

}  // namespace holtrans::kernel
