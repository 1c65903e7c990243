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

#include "holtrans/hol/term.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "holtrans/hol/error.h"

namespace holtrans::hol {

struct Term::Node {
  TermKind kind = TermKind::kVar;
  std::uint32_t index = 0;
  std::string name;
  Type var_type;
  Type type;
  Term a;
  Term b;
  std::size_t hash = 0;
  std::uint64_t size = 1;
  std::uint32_t loose_bound = 0;
  bool has_free = false;
};

namespace {

std::size_t Mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::uint64_t AddSize(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  return a > max - b ? max : a + b;
}

}  // namespace

Term Term::Var(std::string name, Type type) {
  Node n;
  n.kind = TermKind::kVar;
  n.hash = Mix(Mix(2, std::hash<std::string>{}(name)), type.hash());
  n.name = std::move(name);
  n.var_type = type;
  n.type = std::move(type);
  n.has_free = true;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::Const(std::string name, Type type) {
  auto fail = [&](const char* shape) {
    throw HolError(ErrorCode::kConstTypeMismatch,
                   "constant " + name + " must have type " + shape + ", got " +
                       ToString(type));
  };
  if (name == kEqName) {
    if (!type.is_fun() || !type.codomain().is_fun() ||
        type.codomain().domain() != type.domain() ||
        !type.codomain().codomain().is_bool()) {
      fail("A -> A -> bool");
    }
  } else if (name == kSelectName) {
    if (!type.is_fun() || !type.domain().is_fun() ||
        !type.domain().codomain().is_bool() ||
        type.domain().domain() != type.codomain()) {
      fail("(A -> bool) -> A");
    }
  }
  Node n;
  n.kind = TermKind::kConst;
  n.hash = Mix(Mix(3, std::hash<std::string>{}(name)), type.hash());
  n.name = std::move(name);
  n.var_type = type;
  n.type = std::move(type);
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::Bound(std::uint32_t index, Type type) {
  Node n;
  n.kind = TermKind::kBound;
  n.index = index;
  n.hash = Mix(1, index);
  n.var_type = type;
  n.type = std::move(type);
  n.loose_bound = index + 1;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::App(Term fn, Term arg) {
  const Type& ft = fn.type();
  if (!ft.is_fun() || ft.domain() != arg.type()) {
    throw HolError(ErrorCode::kAppTypeMismatch,
                   "cannot apply " + ToString(fn) + " : " + ToString(ft) + " to " +
                       ToString(arg) + " : " + ToString(arg.type()));
  }
  Node n;
  n.kind = TermKind::kApp;
  n.type = ft.codomain();
  n.hash = Mix(Mix(5, fn.hash()), arg.hash());
  n.size = AddSize(AddSize(fn.size(), arg.size()), 1);
  n.loose_bound = std::max(fn.loose_bound(), arg.loose_bound());
  n.has_free = fn.has_free_vars() || arg.has_free_vars();
  n.a = std::move(fn);
  n.b = std::move(arg);
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::AbsRaw(std::string binder, Type binder_type, Term body) {
  Node n;
  n.kind = TermKind::kAbs;
  n.type = Type::Fun(binder_type, body.type());
  n.hash = Mix(Mix(4, binder_type.hash()), body.hash());
  n.size = AddSize(body.size(), 1);
  n.loose_bound = body.loose_bound() == 0 ? 0 : body.loose_bound() - 1;
  n.has_free = body.has_free_vars();
  n.name = std::move(binder);
  n.var_type = std::move(binder_type);
  n.a = std::move(body);
  return Term(std::make_shared<const Node>(std::move(n)));
}

TermKind Term::kind() const { return node_->kind; }
const Type& Term::type() const { return node_->type; }
const std::string& Term::name() const { return node_->name; }
const Type& Term::var_type() const { return node_->var_type; }
std::uint32_t Term::index() const { return node_->index; }
const Term& Term::body() const { return node_->a; }
const Term& Term::fn() const { return node_->a; }
const Term& Term::arg() const { return node_->b; }
std::size_t Term::hash() const { return node_->hash; }
std::uint64_t Term::size() const { return node_->size; }
std::uint32_t Term::loose_bound() const { return node_->loose_bound; }
bool Term::has_free_vars() const { return node_->has_free; }

Term Term::EqConst(const Type& a) {
  return Const(kEqName, Type::Fun(a, Type::Fun(a, Type::Bool())));
}

Term Term::SelectConst(const Type& a) {
  return Const(kSelectName, Type::Fun(Type::Fun(a, Type::Bool()), a));
}

Term Term::Eq(const Term& lhs, const Term& rhs) {
  return App(App(EqConst(lhs.type()), lhs), rhs);
}

namespace {

using PairKey = std::pair<const void*, const void*>;

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const {
    return Mix(std::hash<const void*>{}(k.first), std::hash<const void*>{}(k.second));
  }
};

class Comparer {
 public:
  int Compare(const Term& a, const Term& b) {
    if (a.id() == b.id()) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    const bool memo = a.size() > 16 && b.size() > 16;
    if (memo && equal_.contains({a.id(), b.id()})) return 0;
    int c = 0;
    switch (a.kind()) {
      case TermKind::kBound:
        c = a.index() == b.index() ? 0 : (a.index() < b.index() ? -1 : 1);
        if (c == 0) c = Type::Compare(a.var_type(), b.var_type());
        break;
      case TermKind::kVar:
      case TermKind::kConst:
        c = a.name().compare(b.name());
        c = c == 0 ? Type::Compare(a.var_type(), b.var_type()) : (c < 0 ? -1 : 1);
        break;
      case TermKind::kAbs:
        c = Type::Compare(a.var_type(), b.var_type());
        if (c == 0) c = Compare(a.body(), b.body());
        break;
      case TermKind::kApp:
        c = Compare(a.fn(), b.fn());
        if (c == 0) c = Compare(a.arg(), b.arg());
        break;
    }
    if (memo && c == 0) equal_.insert({a.id(), b.id()});
    return c;
  }

 private:
  std::unordered_set<PairKey, PairKeyHash> equal_;
};

// Structural rewriting with a memo keyed on (node, binder depth) for shared
// nodes. `leaf` handles Var/Const/Bound; `skip` prunes unchanged subtrees.
template <typename Skip, typename Leaf>
class Rewriter {
 public:
  Rewriter(Skip skip, Leaf leaf) : skip_(std::move(skip)), leaf_(std::move(leaf)) {}

  Term Run(const Term& t, std::uint32_t depth) {
    if (skip_(t, depth)) return t;
    const bool memo = t.use_count() > 1 && t.size() > 4;
    const Key key{t.id(), depth};
    if (memo) {
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    Term out;
    switch (t.kind()) {
      case TermKind::kAbs: {
        Term body = Run(t.body(), depth + 1);
        out = body.id() == t.body().id() ? t : Term::AbsRaw(t.name(), t.var_type(), body);
        break;
      }
      case TermKind::kApp: {
        Term f = Run(t.fn(), depth);
        Term x = Run(t.arg(), depth);
        out = f.id() == t.fn().id() && x.id() == t.arg().id() ? t : Term::App(f, x);
        break;
      }
      default:
        out = leaf_(t, depth);
    }
    if (memo) memo_.emplace(key, out);
    return out;
  }

 private:
  using Key = std::pair<const void*, std::uint32_t>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return Mix(std::hash<const void*>{}(k.first), k.second);
    }
  };
  Skip skip_;
  Leaf leaf_;
  std::unordered_map<Key, Term, KeyHash> memo_;
};

template <typename Skip, typename Leaf>
Term Rewrite(const Term& t, Skip skip, Leaf leaf) {
  Rewriter<Skip, Leaf> r(std::move(skip), std::move(leaf));
  return r.Run(t, 0);
}

Term Lift(const Term& t, std::uint32_t amount) {
  if (amount == 0 || t.loose_bound() == 0) return t;
  return Rewrite(
      t, [](const Term& s, std::uint32_t depth) { return s.loose_bound() <= depth; },
      [amount](const Term& s, std::uint32_t depth) {
        if (s.is_bound() && s.index() >= depth) {
          return Term::Bound(s.index() + amount, s.var_type());
        }
        return s;
      });
}

// Replaces free occurrences of `var` by index `depth` (relative).
Term AbstractVar(const Term& body, const Term& var) {
  if (!body.has_free_vars()) return body;
  return Rewrite(
      body, [](const Term& s, std::uint32_t) { return !s.has_free_vars(); },
      [&var](const Term& s, std::uint32_t depth) {
        if (s.is_var() && s == var) return Term::Bound(depth, s.var_type());
        return s;
      });
}

}  // namespace

Term Term::Abs(const Term& var, const Term& body) {
  if (!var.is_var()) {
    throw HolError(ErrorCode::kAppTypeMismatch,
                   "abstraction over non-variable " + ToString(var));
  }
  return AbsRaw(var.name(), var.var_type(), AbstractVar(body, var));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  Comparer c;
  return c.Compare(a, b) == 0;
}

int AlphaCompare(const Term& a, const Term& b) {
  Comparer c;
  return c.Compare(a, b);
}

std::optional<std::pair<Term, Term>> DestEq(const Term& t) {
  if (!t.is_app() || !t.fn().is_app()) return std::nullopt;
  const Term& c = t.fn().fn();
  if (!c.is_const() || c.name() != kEqName) return std::nullopt;
  return std::make_pair(t.fn().arg(), t.arg());
}

Term InstantiateBound(const Term& body, const Term& value) {
  if (body.loose_bound() == 0) return body;
  std::unordered_map<std::uint32_t, Term> lifted;
  return Rewrite(
      body, [](const Term& s, std::uint32_t depth) { return s.loose_bound() <= depth; },
      [&](const Term& s, std::uint32_t depth) {
        if (!s.is_bound() || s.index() < depth) return s;
        if (s.index() == depth) {
          auto it = lifted.find(depth);
          if (it == lifted.end()) it = lifted.emplace(depth, Lift(value, depth)).first;
          return it->second;
        }
        return Term::Bound(s.index() - 1, s.var_type());
      });
}

namespace {

template <typename Visit>
void ForEachNode(const Term& t, Visit&& visit) {
  std::unordered_set<const void*> seen;
  std::vector<Term> stack{t};
  while (!stack.empty()) {
    Term cur = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(cur.id()).second) continue;
    if (!visit(cur)) continue;
    if (cur.is_abs()) {
      stack.push_back(cur.body());
    } else if (cur.is_app()) {
      stack.push_back(cur.arg());
      stack.push_back(cur.fn());
    }
  }
}

}  // namespace

std::vector<Term> FreeVars(const Term& t) {
  std::vector<Term> out;
  std::unordered_set<Term, TermHash> seen;
  ForEachNode(t, [&](const Term& s) {
    if (!s.has_free_vars()) return false;
    if (s.is_var() && seen.insert(s).second) out.push_back(s);
    return true;
  });
  return out;
}

bool FreeIn(const Term& var, const Term& t) {
  bool found = false;
  ForEachNode(t, [&](const Term& s) {
    if (found || !s.has_free_vars()) return false;
    if (s.is_var() && s == var) found = true;
    return !found;
  });
  return found;
}

void CollectTypeVars(const Term& t, std::vector<std::string>& out) {
  // Pre-order, left to right, so the order is that of first occurrence.
  std::unordered_set<const void*> seen;
  std::function<void(const Term&)> go = [&](const Term& s) {
    if (s.use_count() > 1 && !seen.insert(s.id()).second) return;
    switch (s.kind()) {
      case TermKind::kVar:
      case TermKind::kConst:
      case TermKind::kBound:
        hol::CollectTypeVars(s.var_type(), out);
        return;
      case TermKind::kAbs:
        hol::CollectTypeVars(s.var_type(), out);
        go(s.body());
        return;
      case TermKind::kApp:
        go(s.fn());
        go(s.arg());
        return;
    }
  };
  go(t);
}

std::pair<Term, Term> OpenAbs(const Term& abs) {
  std::string name = abs.name().empty() ? std::string("x") : abs.name();
  std::vector<Term> fv = FreeVars(abs.body());
  auto clash = [&](const std::string& n) {
    return std::any_of(fv.begin(), fv.end(), [&](const Term& v) { return v.name() == n; });
  };
  while (clash(name)) name += "'";
  Term var = Term::Var(name, abs.var_type());
  return {var, InstantiateBound(abs.body(), var)};
}

Term InstTypes(const TypeSubst& theta, const Term& t) {
  if (theta.empty()) return t;
  std::unordered_map<const void*, Type> type_memo;
  auto inst = [&](const Type& ty) {
    auto it = type_memo.find(ty.id());
    if (it != type_memo.end()) return it->second;
    Type out = Instantiate(ty, theta);
    type_memo.emplace(ty.id(), out);
    return out;
  };
  std::unordered_map<const void*, Term> memo;
  std::function<Term(const Term&)> go = [&](const Term& s) -> Term {
    const bool cache = s.use_count() > 1;
    if (cache) {
      if (auto it = memo.find(s.id()); it != memo.end()) return it->second;
    }
    Term out;
    switch (s.kind()) {
      case TermKind::kBound: {
        Type ty = inst(s.var_type());
        out = ty.id() == s.var_type().id() ? s : Term::Bound(s.index(), ty);
        break;
      }
      case TermKind::kVar: {
        Type ty = inst(s.var_type());
        out = ty.id() == s.var_type().id() ? s : Term::Var(s.name(), ty);
        break;
      }
      case TermKind::kConst: {
        Type ty = inst(s.var_type());
        out = ty.id() == s.var_type().id() ? s : Term::Const(s.name(), ty);
        break;
      }
      case TermKind::kAbs: {
        Type ty = inst(s.var_type());
        Term body = go(s.body());
        out = ty.id() == s.var_type().id() && body.id() == s.body().id()
                  ? s
                  : Term::AbsRaw(s.name(), ty, body);
        break;
      }
      case TermKind::kApp: {
        Term f = go(s.fn());
        Term x = go(s.arg());
        out = f.id() == s.fn().id() && x.id() == s.arg().id() ? s : Term::App(f, x);
        break;
      }
    }
    if (cache) memo.emplace(s.id(), out);
    return out;
  };
  return go(t);
}

Term SubstFree(const std::vector<std::pair<Term, Term>>& sigma, const Term& t) {
  if (sigma.empty()) return t;
  std::unordered_map<Term, Term, TermHash> images;
  for (const auto& [var, image] : sigma) {
    if (!var.is_var()) {
      throw HolError(ErrorCode::kRuleViolation,
                     "substitution domain " + ToString(var) + " is not a variable",
                     "Subst");
    }
    if (var.type() != image.type()) {
      throw HolError(ErrorCode::kRuleViolation,
                     "image " + ToString(image) + " : " + ToString(image.type()) +
                         " does not have the type of " + ToString(var) + " : " +
                         ToString(var.type()),
                     "Subst");
    }
    images.emplace(var, image);  // the first binding of a variable wins
  }
  return Rewrite(
      t, [](const Term& s, std::uint32_t) { return !s.has_free_vars(); },
      [&images](const Term& s, std::uint32_t depth) {
        if (!s.is_var()) return s;
        auto it = images.find(s);
        if (it == images.end()) return s;
        // Images are closed terms, so they need no lifting; the depth is
        // irrelevant.
        (void)depth;
        return it->second;
      });
}

Term ApplySubst(const Subst& s, const Term& t) {
  return SubstFree(s.sigma, InstTypes(s.theta, t));
}

Term BetaNormalize(const Term& t) {
  std::unordered_map<const void*, std::pair<Term, Term>> memo;
  std::function<Term(const Term&)> go = [&](const Term& s) -> Term {
    if (s.is_var() || s.is_const() || s.is_bound()) return s;
    if (auto it = memo.find(s.id()); it != memo.end()) return it->second.second;
    Term out;
    if (s.is_abs()) {
      Term body = go(s.body());
      out = body.id() == s.body().id() ? s : Term::AbsRaw(s.name(), s.var_type(), body);
    } else {
      Term f = go(s.fn());
      Term x = go(s.arg());
      if (f.is_abs()) {
        out = go(InstantiateBound(f.body(), x));
      } else {
        out = f.id() == s.fn().id() && x.id() == s.arg().id() ? s : Term::App(f, x);
      }
    }
    memo.emplace(s.id(), std::make_pair(s, out));
    return out;
  };
  return go(t);
}

}  // namespace holtrans::hol
