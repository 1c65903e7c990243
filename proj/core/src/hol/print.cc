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

#include <algorithm>
#include <unordered_set>

#include "holtrans/hol/term.h"

namespace holtrans::hol {

namespace {

class Printer {
 public:
  explicit Printer(const Term& t) {
    for (const Term& v : FreeVars(t)) taken_.insert(v.name());
  }

  // Precedence: 0 top, 1 operand of =, 2 application argument.
  void Print(const Term& t, int prec) {
    switch (t.kind()) {
      case TermKind::kBound:
        if (t.index() < scope_.size()) {
          out_ += scope_[scope_.size() - 1 - t.index()];
        } else {
          out_ += "#" + std::to_string(t.index());
        }
        return;
      case TermKind::kVar:
      case TermKind::kConst:
        out_ += t.name() == kEqName ? "(=)" : t.name();
        return;
      case TermKind::kAbs: {
        if (prec > 0) out_ += '(';
        std::string name = t.name().empty() ? std::string("x") : t.name();
        while (taken_.contains(name) ||
               std::find(scope_.begin(), scope_.end(), name) != scope_.end()) {
          name += "'";
        }
        out_ += "\\" + name + ":" + ToString(t.var_type()) + ". ";
        scope_.push_back(name);
        Print(t.body(), 0);
        scope_.pop_back();
        if (prec > 0) out_ += ')';
        return;
      }
      case TermKind::kApp: {
        if (auto eq = DestEq(t)) {
          if (prec > 0) out_ += '(';
          Print(eq->first, 1);
          out_ += " = ";
          Print(eq->second, 1);
          if (prec > 0) out_ += ')';
          return;
        }
        if (prec > 1) out_ += '(';
        Print(t.fn(), 1);
        out_ += ' ';
        Print(t.arg(), 2);
        if (prec > 1) out_ += ')';
        return;
      }
    }
  }

  std::string Take() { return std::move(out_); }

 private:
  std::string out_;
  std::vector<std::string> scope_;
  std::unordered_set<std::string> taken_;
};

}  // namespace

std::string ToString(const Term& t) {
  if (!t) return "<null>";
  Printer p(t);
  p.Print(t, 0);
  return p.Take();
}

}  // namespace holtrans::hol
