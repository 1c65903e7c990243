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

#include "holtrans/dkfile/document.h"

#include <sstream>

#include "holtrans/kernel/print.h"

namespace holtrans::dkfile {

bool operator==(const Item& a, const Item& b) {
  if (a.index() != b.index()) return false;
  if (auto* x = std::get_if<Decl>(&a)) {
    const auto& y = std::get<Decl>(b);
    return x->name == y.name && x->type == y.type;
  }
  if (auto* x = std::get_if<Defn>(&a)) {
    const auto& y = std::get<Defn>(b);
    return x->name == y.name && x->type == y.type && x->body == y.body;
  }
  if (auto* x = std::get_if<Rule>(&a)) {
    const auto& y = std::get<Rule>(b);
    const auto& cx = x->rule.context.entries();
    const auto& cy = y.rule.context.entries();
    if (cx.size() != cy.size()) return false;
    for (std::size_t i = 0; i < cx.size(); ++i) {
      if (cx[i].first != cy[i].first || cx[i].second != cy[i].second) return false;
    }
    return x->rule.lhs == y.rule.lhs && x->rule.rhs == y.rule.rhs;
  }
  return std::get<Comment>(a).text == std::get<Comment>(b).text;
}

bool operator==(const DkDocument& a, const DkDocument& b) {
  return a.module == b.module && a.items == b.items;
}

namespace {

std::string SanitizeComment(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    out += text[i];
    // Keep the comment from closing early or opening a nested one.
    if ((text[i] == ';' && i + 1 < text.size() && text[i + 1] == ')') ||
        (text[i] == '(' && i + 1 < text.size() && text[i + 1] == ';')) {
      out += ' ';
    }
  }
  return out;
}

}  // namespace

void Emit(std::ostream& out, const DkDocument& doc) {
  kernel::TermPrinter printer;
  if (!doc.module.empty()) out << "#NAME " << doc.module << ".\n";
  for (const Item& item : doc.items) {
    if (auto* d = std::get_if<Decl>(&item)) {
      out << d->name << " : ";
      printer.Print(out, d->type);
      out << ".\n";
    } else if (auto* f = std::get_if<Defn>(&item)) {
      out << "def " << f->name << " : ";
      printer.Print(out, f->type);
      out << " := ";
      printer.Print(out, f->body);
      out << ".\n";
    } else if (auto* r = std::get_if<Rule>(&item)) {
      out << '[';
      bool first = true;
      for (const auto& [name, type] : r->rule.context.entries()) {
        if (!first) out << ", ";
        first = false;
        out << name << " : ";
        printer.Print(out, type);
      }
      out << "] ";
      printer.Print(out, r->rule.lhs);
      out << " --> ";
      printer.Print(out, r->rule.rhs);
      out << ".\n";
    } else {
      out << "(; " << SanitizeComment(std::get<Comment>(item).text) << " ;)\n";
    }
  }
}

std::string Emit(const DkDocument& doc) {
  std::ostringstream out;
  Emit(out, doc);
  return out.str();
}

void AppendUnchecked(kernel::Signature& sig, const DkDocument& doc) {
  for (const Item& item : doc.items) {
    if (auto* d = std::get_if<Decl>(&item)) {
      sig.AddUnchecked(kernel::ConstDecl{d->name, d->type});
    } else if (auto* f = std::get_if<Defn>(&item)) {
      sig.AddUnchecked(kernel::ConstDef{f->name, f->type, f->body});
    } else if (auto* r = std::get_if<Rule>(&item)) {
      sig.AddUnchecked(r->rule);
    }
  }
}

CheckError::CheckError(std::string item, const kernel::KernelError& error)
    : std::runtime_error(item + ": " + error.what()),
      item_(std::move(item)),
      code_(error.code()) {}

void Check(kernel::Signature& sig, const DkDocument& doc, const kernel::Options& options) {
  for (const Item& item : doc.items) {
    std::string name;
    try {
      if (auto* d = std::get_if<Decl>(&item)) {
        name = d->name;
        sig.Add(kernel::ConstDecl{d->name, d->type}, options);
      } else if (auto* f = std::get_if<Defn>(&item)) {
        name = f->name;
        sig.Add(kernel::ConstDef{f->name, f->type, f->body}, options);
      } else if (auto* r = std::get_if<Rule>(&item)) {
        name = "rule " + kernel::ToString(r->rule.lhs);
        sig.Add(r->rule, options);
      }
    } catch (const kernel::KernelError& e) {
      throw CheckError(name, e);
    }
  }
}

DocumentStats Count(const DkDocument& doc) {
  DocumentStats s;
  for (const Item& item : doc.items) {
    if (std::holds_alternative<Decl>(item)) ++s.declarations;
    if (std::holds_alternative<Defn>(item)) ++s.definitions;
    if (std::holds_alternative<Rule>(item)) ++s.rules;
    if (std::holds_alternative<Comment>(item)) ++s.comments;
  }
  return s;
}

}  // namespace holtrans::dkfile
