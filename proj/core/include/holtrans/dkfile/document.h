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

// .dk documents. The concrete syntax is
//
//   #NAME module.
//   (; comment ;)
//   name : A.
//   def name : A := M.
//   [x : A, y : B] lhs --> rhs.
//
// with `x : A -> B` for products, `A -> B` for non-dependent products,
// `x : A => M` for abstractions, juxtaposition for application, and `Type`
// for the sort.

#ifndef HOLTRANS_DKFILE_DOCUMENT_H_
#define HOLTRANS_DKFILE_DOCUMENT_H_

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "holtrans/kernel/error.h"
#include "holtrans/kernel/signature.h"
#include "holtrans/kernel/term.h"

namespace holtrans::dkfile {

struct Decl {
  std::string name;
  kernel::Term type;
};

struct Defn {
  std::string name;
  kernel::Term type;
  kernel::Term body;
};

struct Rule {
  kernel::RewriteRule rule;
};

struct Comment {
  std::string text;
};

using Item = std::variant<Decl, Defn, Rule, Comment>;

struct DkDocument {
  std::string module;
  std::vector<Item> items;
};

// Structural equality (terms up to binder display names).
bool operator==(const Item& a, const Item& b);
bool operator==(const DkDocument& a, const DkDocument& b);

void Emit(std::ostream& out, const DkDocument& doc);
std::string Emit(const DkDocument& doc);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& expectation);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

DkDocument Parse(std::string_view text);

// Appends the declarations, definitions and rules of `doc` to `sig` without
// checking them.
void AppendUnchecked(kernel::Signature& sig, const DkDocument& doc);

// Thrown by Check: the offending item and the kernel's diagnosis.
class CheckError : public std::runtime_error {
 public:
  CheckError(std::string item, const kernel::KernelError& error);

  const std::string& item() const { return item_; }
  kernel::ErrorCode code() const { return code_; }

 private:
  std::string item_;
  kernel::ErrorCode code_;
};

// Checks and appends every item of `doc` to `sig`, in order.
void Check(kernel::Signature& sig, const DkDocument& doc,
           const kernel::Options& options = {});

// Item counts, for reports.
struct DocumentStats {
  std::size_t declarations = 0;
  std::size_t definitions = 0;
  std::size_t rules = 0;
  std::size_t comments = 0;
};
DocumentStats Count(const DkDocument& doc);

}  // namespace holtrans::dkfile

#endif  // HOLTRANS_DKFILE_DOCUMENT_H_
