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

#ifndef HOLTRANS_KERNEL_PRINT_H_
#define HOLTRANS_KERNEL_PRINT_H_

#include <ostream>
#include <string>
#include <unordered_set>
#include <vector>

#include "holtrans/kernel/term.h"

namespace holtrans::kernel {

// Prints terms in the concrete syntax of .dk files:
//   x : A -> B    dependent product      A -> B    arrow
//   x : A => M    abstraction            f a b     application
// Binder names are chosen so that no binder shadows another binder, a free
// variable, a constant of the term, or any name in `reserved`.
class TermPrinter {
 public:
  explicit TermPrinter(const std::unordered_set<std::string>* reserved = nullptr)
      : reserved_(reserved) {}

  void Print(std::ostream& out, const Term& t);
  // Prints `t` where the loose indices refer to `scope` (innermost last).
  void Print(std::ostream& out, const Term& t, std::vector<std::string>& scope);

  std::string ToString(const Term& t);

 private:
  enum Level { kTop = 0, kApp = 1, kAtom = 2 };

  void PrintAt(std::ostream& out, const Term& t, Level level,
               std::vector<std::string>& scope);
  std::string FreshBinder(const std::string& hint,
                          const std::vector<std::string>& scope) const;

  const std::unordered_set<std::string>* reserved_;
  std::unordered_set<std::string> occurring_;
};

std::string ToString(const Term& t);

bool IsIdentifier(std::string_view s);

}  // namespace holtrans::kernel

#endif  // HOLTRANS_KERNEL_PRINT_H_
