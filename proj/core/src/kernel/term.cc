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

#include "holtrans/kernel/term.h"

#include <algorithm>
#include <cassert>
#include <functional>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace holtrans::kernel {

struct Term::Node {
  TermKind kind = TermKind::kSort;
  Sort sort = Sort::kType;
  std::uint32_t index = 0;
  std::string name;
  Term a;
  Term b;
  std::size_t hash = 0;
  std::uint64_t size = 1;
  std::uint32_t loose_bound = 0;
  std::uint64_t free_mask = 0;
  bool has_sort = false;
};

namespace {

std::size_t Mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::uint64_t SaturatingAdd(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  return r < a ? UINT64_MAX : r;
}

const std::string& EmptyString() {
  static const std::string kEmpty;
  return kEmpty;
}

}  // namespace

std::uint64_t NameMask(std::string_view name) {
  return std::uint64_t{1} << (std::hash<std::string_view>{}(name) % 64);
}

Term Term::Make(Node&& n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 0x51ed27;
  switch (n.kind) {
    case TermKind::kBound:
      n.loose_bound = n.index + 1;
      h = Mix(h, n.index);
      break;
    case TermKind::kFree:
      n.free_mask = NameMask(n.name);
      h = Mix(h, std::hash<std::string>{}(n.name));
      break;
    case TermKind::kConst:
      h = Mix(h, std::hash<std::string>{}(n.name));
      break;
    case TermKind::kSort:
      n.has_sort = true;
      h = Mix(h, static_cast<std::size_t>(n.sort) + 17);
      break;
    case TermKind::kProd:
    case TermKind::kAbs: {
      const Node& d = *n.a.node_;
      const Node& bd = *n.b.node_;
      n.loose_bound = std::max(d.loose_bound,
                               bd.loose_bound > 0 ? bd.loose_bound - 1 : 0u);
      n.size = SaturatingAdd(1, SaturatingAdd(d.size, bd.size));
      n.free_mask = d.free_mask | bd.free_mask;
      n.has_sort = d.has_sort || bd.has_sort;
      h = Mix(Mix(h, d.hash), bd.hash);
      break;
    }
    case TermKind::kApp: {
      const Node& f = *n.a.node_;
      const Node& x = *n.b.node_;
      n.loose_bound = std::max(f.loose_bound, x.loose_bound);
      n.size = SaturatingAdd(1, SaturatingAdd(f.size, x.size));
      n.free_mask = f.free_mask | x.free_mask;
      n.has_sort = f.has_sort || x.has_sort;
      h = Mix(Mix(h, f.hash), x.hash);
      break;
    }
  }
  n.hash = h;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::Bound(std::uint32_t index) {
  Node n;
  n.kind = TermKind::kBound;
  n.index = index;
  return Make(std::move(n));
}

Term Term::Free(std::string name) {
  Node n;
  n.kind = TermKind::kFree;
  n.name = std::move(name);
  return Make(std::move(n));
}

Term Term::Const(std::string name) {
  Node n;
  n.kind = TermKind::kConst;
  n.name = std::move(name);
  return Make(std::move(n));
}

Term Term::OfSort(Sort sort) {
  Node n;
  n.kind = TermKind::kSort;
  n.sort = sort;
  return Make(std::move(n));
}

Term Term::Type() {
  static const Term kType = OfSort(Sort::kType);
  return kType;
}

Term Term::Kind() {
  static const Term kKind = OfSort(Sort::kKind);
  return kKind;
}

Term Term::Prod(std::string binder, Term domain, Term body) {
  assert(domain && body);
  Node n;
  n.kind = TermKind::kProd;
  n.name = std::move(binder);
  n.a = std::move(domain);
  n.b = std::move(body);
  return Make(std::move(n));
}

Term Term::Abs(std::string binder, Term domain, Term body) {
  assert(domain && body);
  Node n;
  n.kind = TermKind::kAbs;
  n.name = std::move(binder);
  n.a = std::move(domain);
  n.b = std::move(body);
  return Make(std::move(n));
}

Term Term::App(Term fn, Term arg) {
  assert(fn && arg);
  Node n;
  n.kind = TermKind::kApp;
  n.a = std::move(fn);
  n.b = std::move(arg);
  return Make(std::move(n));
}

Term Term::Apps(Term head, std::span<const Term> args) {
  for (const Term& a : args) head = App(std::move(head), a);
  return head;
}

Term Term::Apps(Term head, std::initializer_list<Term> args) {
  return Apps(std::move(head), std::span<const Term>(args.begin(), args.size()));
}

Term Term::Pi(std::string_view name, Term domain, const Term& body) {
  return Prod(std::string(name), std::move(domain), Abstract(body, name));
}

Term Term::Lambda(std::string_view name, Term domain, const Term& body) {
  return Abs(std::string(name), std::move(domain), Abstract(body, name));
}

Term Term::Arrow(Term domain, const Term& codomain) {
  return Prod("_", std::move(domain), Lift(codomain, 1));
}

TermKind Term::kind() const { return node_->kind; }
bool Term::is_type() const {
  return node_->kind == TermKind::kSort && node_->sort == Sort::kType;
}
bool Term::is_kind() const {
  return node_->kind == TermKind::kSort && node_->sort == Sort::kKind;
}
std::uint32_t Term::index() const { return node_->index; }
const std::string& Term::name() const {
  return node_ ? node_->name : EmptyString();
}
Sort Term::sort() const { return node_->sort; }
const Term& Term::domain() const { return node_->a; }
const Term& Term::body() const { return node_->b; }
const Term& Term::fn() const { return node_->a; }
const Term& Term::arg() const { return node_->b; }
std::size_t Term::hash() const { return node_ ? node_->hash : 0; }
std::uint64_t Term::size() const { return node_ ? node_->size : 0; }
std::uint32_t Term::loose_bound() const { return node_->loose_bound; }
std::uint64_t Term::free_mask() const { return node_->free_mask; }
bool Term::has_sort() const { return node_->has_sort; }

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<const void*, const void*>& p) const {
    return Mix(std::hash<const void*>{}(p.first),
               std::hash<const void*>{}(p.second));
  }
};

// Structural comparison. Large shared subterms are remembered once proven
// equal so that comparing two DAGs does not unfold them into trees.
class EqualityChecker {
 public:
  bool Equal(const Term& a, const Term& b) {
    if (a.id() == b.id()) return true;
    if (!a || !b) return false;
    if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) {
      return false;
    }
    const bool memo = a.size() > 64 && (a.use_count() > 1 || b.use_count() > 1);
    if (memo && known_.contains({a.id(), b.id()})) return true;
    bool result = false;
    switch (a.kind()) {
      case TermKind::kBound:
        result = a.index() == b.index();
        break;
      case TermKind::kFree:
      case TermKind::kConst:
        result = a.name() == b.name();
        break;
      case TermKind::kSort:
        result = a.sort() == b.sort();
        break;
      case TermKind::kProd:
      case TermKind::kAbs:
        result = Equal(a.domain(), b.domain()) && Equal(a.body(), b.body());
        break;
      case TermKind::kApp:
        result = Equal(a.arg(), b.arg()) && Equal(a.fn(), b.fn());
        break;
    }
    if (result && memo) known_.insert({a.id(), b.id()});
    return result;
  }

 private:
  std::unordered_set<std::pair<const void*, const void*>, PairHash> known_;
};

struct KeyHash {
  std::size_t operator()(const std::pair<const void*, std::uint32_t>& k) const {
    return Mix(std::hash<const void*>{}(k.first), k.second);
  }
};

// Rebuilds a term bottom-up. `skip(t, depth)` prunes subterms that cannot
// change; `leaf(t, depth)` handles variables. Shared nodes are memoized per
// binder depth so DAG-shaped inputs stay linear.
template <typename Skip, typename Leaf>
class Rewriter {
 public:
  Rewriter(Skip skip, Leaf leaf) : skip_(std::move(skip)), leaf_(std::move(leaf)) {}

  Term Run(const Term& t, std::uint32_t depth) {
    if (skip_(t, depth)) return t;
    const bool memo = t.use_count() > 1 && t.size() > 4;
    if (memo) {
      auto it = cache_.find({t.id(), depth});
      if (it != cache_.end()) return it->second;
    }
    Term result;
    switch (t.kind()) {
      case TermKind::kBound:
      case TermKind::kFree:
      case TermKind::kConst:
      case TermKind::kSort:
        result = leaf_(t, depth);
        break;
      case TermKind::kProd:
      case TermKind::kAbs: {
        Term d = Run(t.domain(), depth);
        Term bd = Run(t.body(), depth + 1);
        if (d.id() == t.domain().id() && bd.id() == t.body().id()) {
          result = t;
        } else if (t.is_prod()) {
          result = Term::Prod(t.name(), std::move(d), std::move(bd));
        } else {
          result = Term::Abs(t.name(), std::move(d), std::move(bd));
        }
        break;
      }
      case TermKind::kApp: {
        Term f = Run(t.fn(), depth);
        Term x = Run(t.arg(), depth);
        if (f.id() == t.fn().id() && x.id() == t.arg().id()) {
          result = t;
        } else {
          result = Term::App(std::move(f), std::move(x));
        }
        break;
      }
    }
    if (memo) cache_.emplace(std::pair{t.id(), depth}, result);
    return result;
  }

 private:
  Skip skip_;
  Leaf leaf_;
  std::unordered_map<std::pair<const void*, std::uint32_t>, Term, KeyHash>
      cache_;
};

template <typename Skip, typename Leaf>
Term Rewrite(const Term& t, Skip skip, Leaf leaf) {
  Rewriter<Skip, Leaf> rw(std::move(skip), std::move(leaf));
  return rw.Run(t, 0);
}

// Lifts a value by `depth`, caching one result per depth.
class LiftCache {
 public:
  explicit LiftCache(const Term& value) : value_(value) {}
  Term Get(std::uint32_t depth) {
    if (depth == 0 || value_.loose_bound() == 0) return value_;
    auto it = lifted_.find(depth);
    if (it != lifted_.end()) return it->second;
    Term l = Lift(value_, depth);
    lifted_.emplace(depth, l);
    return l;
  }

 private:
  Term value_;
  std::unordered_map<std::uint32_t, Term> lifted_;
};

}  // namespace

bool operator==(const Term& a, const Term& b) {
  EqualityChecker eq;
  return eq.Equal(a, b);
}

Spine Unfold(const Term& t) {
  Spine s;
  Term cur = t;
  while (cur.is_app()) {
    s.args.push_back(cur.arg());
    cur = cur.fn();
  }
  std::reverse(s.args.begin(), s.args.end());
  s.head = std::move(cur);
  return s;
}

Term Lift(const Term& t, std::uint32_t amount, std::uint32_t cutoff) {
  if (amount == 0 || t.loose_bound() <= cutoff) return t;
  return Rewrite(
      t,
      [cutoff](const Term& s, std::uint32_t depth) {
        return s.loose_bound() <= cutoff + depth;
      },
      [amount, cutoff](const Term& s, std::uint32_t depth) {
        if (s.is_bound() && s.index() >= cutoff + depth) {
          return Term::Bound(s.index() + amount);
        }
        return s;
      });
}

Term Instantiate(const Term& body, const Term& value) {
  if (body.loose_bound() == 0) return body;
  LiftCache lifted(value);
  return Rewrite(
      body,
      [](const Term& s, std::uint32_t depth) { return s.loose_bound() <= depth; },
      [&lifted](const Term& s, std::uint32_t depth) {
        if (!s.is_bound() || s.index() < depth) return s;
        if (s.index() == depth) return lifted.Get(depth);
        return Term::Bound(s.index() - 1);
      });
}

Term InstantiateMany(const Term& body, std::span<const Term> values) {
  if (values.empty() || body.loose_bound() == 0) return body;
  std::vector<LiftCache> lifted;
  lifted.reserve(values.size());
  for (const Term& v : values) lifted.emplace_back(v);
  const auto n = static_cast<std::uint32_t>(values.size());
  return Rewrite(
      body,
      [](const Term& s, std::uint32_t depth) { return s.loose_bound() <= depth; },
      [&lifted, n](const Term& s, std::uint32_t depth) {
        if (!s.is_bound() || s.index() < depth) return s;
        const std::uint32_t i = s.index() - depth;
        if (i < n) return lifted[i].Get(depth);
        return Term::Bound(s.index() - n);
      });
}

Term Abstract(const Term& t, std::string_view name) {
  const std::uint64_t mask = NameMask(name);
  if ((t.free_mask() & mask) == 0) return t;
  return Rewrite(
      t,
      [mask](const Term& s, std::uint32_t) { return (s.free_mask() & mask) == 0; },
      [name](const Term& s, std::uint32_t depth) {
        if (s.is_free() && s.name() == name) return Term::Bound(depth);
        return s;
      });
}

Term AbstractMany(const Term& t, std::span<const std::string> names) {
  std::uint64_t mask = 0;
  std::unordered_map<std::string_view, std::uint32_t> position;
  for (std::uint32_t i = 0; i < names.size(); ++i) {
    mask |= NameMask(names[i]);
    position.emplace(names[i], i);
  }
  if ((t.free_mask() & mask) == 0) return t;
  return Rewrite(
      t,
      [mask](const Term& s, std::uint32_t) { return (s.free_mask() & mask) == 0; },
      [&position](const Term& s, std::uint32_t depth) {
        if (!s.is_free()) return s;
        auto it = position.find(s.name());
        if (it == position.end()) return s;
        return Term::Bound(depth + it->second);
      });
}

Term Substitute(const Term& t, const Substitution& s) {
  std::uint64_t mask = 0;
  for (const auto& [name, _] : s) mask |= NameMask(name);
  if ((t.free_mask() & mask) == 0) return t;
  std::unordered_map<std::string_view, LiftCache> images;
  for (const auto& [name, image] : s) images.emplace(name, LiftCache(image));
  return Rewrite(
      t,
      [mask](const Term& x, std::uint32_t) { return (x.free_mask() & mask) == 0; },
      [&images](const Term& x, std::uint32_t depth) {
        if (!x.is_free()) return x;
        auto it = images.find(x.name());
        if (it == images.end()) return x;
        return it->second.Get(depth);
      });
}

namespace {

template <typename Visit>
void ForEachNode(const Term& root, Visit visit) {
  std::unordered_set<const void*> seen;
  std::vector<Term> stack{root};
  while (!stack.empty()) {
    Term t = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(t.id()).second) continue;
    if (!visit(t)) continue;
    switch (t.kind()) {
      case TermKind::kProd:
      case TermKind::kAbs:
        stack.push_back(t.body());
        stack.push_back(t.domain());
        break;
      case TermKind::kApp:
        stack.push_back(t.arg());
        stack.push_back(t.fn());
        break;
      default:
        break;
    }
  }
}

}  // namespace

std::vector<std::string> FreeVarNames(const Term& t) {
  std::vector<std::string> names;
  ForEachNode(t, [&names](const Term& s) {
    if (s.free_mask() == 0) return false;
    if (s.is_free()) names.push_back(s.name());
    return true;
  });
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

bool OccursFree(const Term& t, std::string_view name) {
  const std::uint64_t mask = NameMask(name);
  bool found = false;
  ForEachNode(t, [&](const Term& s) {
    if (found || (s.free_mask() & mask) == 0) return false;
    if (s.is_free() && s.name() == name) found = true;
    return true;
  });
  return found;
}

bool HasLooseIndex(const Term& t, std::uint32_t index) {
  if (t.loose_bound() <= index) return false;
  switch (t.kind()) {
    case TermKind::kBound:
      return t.index() == index;
    case TermKind::kProd:
    case TermKind::kAbs:
      return HasLooseIndex(t.domain(), index) ||
             HasLooseIndex(t.body(), index + 1);
    case TermKind::kApp:
      return HasLooseIndex(t.fn(), index) || HasLooseIndex(t.arg(), index);
    default:
      return false;
  }
}

std::vector<std::string> ConstNames(const Term& t) {
  std::vector<std::string> names;
  ForEachNode(t, [&names](const Term& s) {
    if (s.is_const()) names.push_back(s.name());
    return true;
  });
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

}  // namespace holtrans::kernel
