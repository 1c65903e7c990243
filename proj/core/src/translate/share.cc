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

#include "holtrans/translate/share.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <tuple>
#include <unordered_map>

#include "holtrans/kernel/error.h"
#include "holtrans/kernel/typecheck.h"

namespace holtrans::translate {

namespace {

using kernel::Term;

struct PairHash {
  std::size_t operator()(const std::pair<const void*, std::size_t>& p) const {
    return std::hash<const void*>{}(p.first) * 31 + p.second;
  }
};

using Occurrence = std::pair<const void*, std::size_t>;  // node, context

std::uint64_t SatAdd(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

std::uint64_t SatMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

// Binder contexts, interned so that an occurrence is a (node, context) pair.
// Context 0 is empty.
class Contexts {
 public:
  Contexts() { nodes_.push_back(Node{0, {}, {}, 0}); }

  std::size_t Push(std::size_t parent, const std::string& name, const Term& domain) {
    auto key = std::make_pair(parent, domain.id());
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    nodes_.push_back(Node{parent, name, domain, nodes_[parent].depth + 1});
    index_.emplace(key, nodes_.size() - 1);
    return nodes_.size() - 1;
  }

  std::size_t depth(std::size_t c) const { return nodes_[c].depth; }

  // Binders outermost first.
  std::vector<std::pair<std::string, Term>> Binders(std::size_t c) const {
    std::vector<std::pair<std::string, Term>> out(nodes_[c].depth);
    for (std::size_t i = out.size(); i-- > 0;) {
      out[i] = {nodes_[c].name, nodes_[c].domain};
      c = nodes_[c].parent;
    }
    return out;
  }

 private:
  struct Node {
    std::size_t parent;
    std::string name;
    Term domain;
    std::size_t depth;
  };
  std::vector<Node> nodes_;
  std::map<std::pair<std::size_t, const void*>, std::size_t> index_;
};

class Sharer {
 public:
  Sharer(const kernel::Signature& prefix, const dkfile::DkDocument& doc,
         const ShareOptions& options)
      : sig_(prefix), doc_(doc), options_(options) {
    for (const auto& item : prefix.items()) {
      if (auto* d = std::get_if<kernel::ConstDecl>(&item)) names_.insert(d->name);
      if (auto* d = std::get_if<kernel::ConstDef>(&item)) names_.insert(d->name);
    }
    for (const auto& item : doc.items) {
      if (auto* d = std::get_if<dkfile::Decl>(&item)) names_.insert(d->name);
      if (auto* d = std::get_if<dkfile::Defn>(&item)) names_.insert(d->name);
    }
  }

  ShareResult Run() {
    Count();
    ShareResult result;
    result.doc.module = doc_.module;
    out_ = &result.doc;
    for (const dkfile::Item& item : doc_.items) {
      if (auto* d = std::get_if<dkfile::Defn>(&item)) {
        dkfile::Defn copy{d->name, Rewrite(d->type, 0, nullptr), Rewrite(d->body, 0, nullptr)};
        Emit(std::move(copy));
      } else {
        Emit(item);
      }
    }
    result.definitions = std::move(defined_);
    result.hits = hits_;
    return result;
  }

 private:
  struct Entry {
    std::uint64_t count = 0;
    bool decided = false;
    std::string name;  // empty: not hoisted
  };

  struct Key {
    Term closed;
    std::vector<std::size_t> positions;  // referenced binders, outermost first
  };

  void Emit(dkfile::Item item) {
    if (auto* d = std::get_if<dkfile::Defn>(&item)) {
      sig_.AddUnchecked(kernel::ConstDef{d->name, d->type, d->body});
    } else if (auto* d = std::get_if<dkfile::Decl>(&item)) {
      sig_.AddUnchecked(kernel::ConstDecl{d->name, d->type});
    } else if (auto* r = std::get_if<dkfile::Rule>(&item)) {
      sig_.AddUnchecked(r->rule);
    }
    out_->items.push_back(std::move(item));
  }

  const std::vector<std::uint32_t>& Loose(const Term& t) {
    static const std::vector<std::uint32_t> kNone;
    if (t.loose_bound() == 0) return kNone;
    if (auto it = loose_.find(t.id()); it != loose_.end()) return it->second.second;
    std::vector<std::uint32_t> out;
    switch (t.kind()) {
      case kernel::TermKind::kBound:
        out.push_back(t.index());
        break;
      case kernel::TermKind::kProd:
      case kernel::TermKind::kAbs: {
        out = Loose(t.domain());
        for (std::uint32_t j : Loose(t.body())) {
          if (j > 0) out.push_back(j - 1);
        }
        break;
      }
      case kernel::TermKind::kApp: {
        out = Loose(t.fn());
        const auto& b = Loose(t.arg());
        out.insert(out.end(), b.begin(), b.end());
        break;
      }
      default:
        break;
    }
    // First occurrence order, left to right.
    std::vector<std::uint32_t> unique;
    for (std::uint32_t j : out) {
      if (std::find(unique.begin(), unique.end(), j) == unique.end()) unique.push_back(j);
    }
    out = std::move(unique);
    return loose_.emplace(t.id(), std::make_pair(t, std::move(out))).first->second.second;
  }

  // Renumbers the loose indices of `t`, which lives under `old_depth`
  // binders, for a context of `new_depth` binders; `pos` maps old binder
  // positions (outermost = 0) to new ones.
  Term Reindex(const Term& t, std::size_t old_depth, std::size_t new_depth,
               const std::unordered_map<std::size_t, std::size_t>& pos, std::uint32_t k,
               std::map<std::pair<const void*, std::uint32_t>, Term>& memo) {
    if (t.loose_bound() <= k) return t;
    auto mk = std::make_pair(t.id(), k);
    if (auto it = memo.find(mk); it != memo.end()) return it->second;
    Term out;
    switch (t.kind()) {
      case kernel::TermKind::kBound: {
        const std::size_t old_pos = old_depth - 1 - (t.index() - k);
        out = Term::Bound(static_cast<std::uint32_t>(k + (new_depth - 1 - pos.at(old_pos))));
        break;
      }
      case kernel::TermKind::kProd:
      case kernel::TermKind::kAbs: {
        Term d = Reindex(t.domain(), old_depth, new_depth, pos, k, memo);
        Term b = Reindex(t.body(), old_depth, new_depth, pos, k + 1, memo);
        out = t.is_prod() ? Term::Prod(t.name(), d, b) : Term::Abs(t.name(), d, b);
        break;
      }
      case kernel::TermKind::kApp:
        out = Term::App(Reindex(t.fn(), old_depth, new_depth, pos, k, memo),
                        Reindex(t.arg(), old_depth, new_depth, pos, k, memo));
        break;
      default:
        out = t;
    }
    memo.emplace(mk, out);
    return out;
  }

  // The occurrence abstracted over the binders it depends on.
  const Key& KeyOf(const Term& t, std::size_t ctx) {
    const Occurrence occ{t.id(), ctx};
    if (auto it = keys_.find(occ); it != keys_.end()) return it->second.second;
    Key key;
    const auto& loose = Loose(t);
    if (loose.empty()) {
      key.closed = t;
    } else {
      const auto binders = contexts_.Binders(ctx);
      const std::size_t depth = binders.size();
      // Binders in order of first occurrence, each after the binders its
      // type mentions, so that the key does not depend on the order of
      // unrelated binders in the context.
      std::vector<bool> placed(depth, false);
      std::unordered_map<std::size_t, std::size_t> pos;
      std::vector<std::pair<std::size_t, std::size_t>> work;  // binder, next dependency
      for (std::uint32_t i : loose) {
        work.emplace_back(depth - 1 - i, 0);
        while (!work.empty()) {
          auto& [p, next] = work.back();
          if (placed[p]) {
            work.pop_back();
            continue;
          }
          const auto& deps = Loose(binders[p].second);
          if (next < deps.size()) {
            const std::size_t dep = p - 1 - deps[next++];
            if (!placed[dep]) work.emplace_back(dep, 0);
            continue;
          }
          placed[p] = true;
          pos.emplace(p, key.positions.size());
          key.positions.push_back(p);
          work.pop_back();
        }
      }
      std::vector<Term> domains;
      for (std::size_t k = 0; k < key.positions.size(); ++k) {
        std::map<std::pair<const void*, std::uint32_t>, Term> memo;
        domains.push_back(Reindex(binders[key.positions[k]].second, key.positions[k], k, pos,
                                  0, memo));
      }
      std::map<std::pair<const void*, std::uint32_t>, Term> memo;
      Term body = Reindex(t, depth, key.positions.size(), pos, 0, memo);
      for (std::size_t k = key.positions.size(); k-- > 0;) {
        body = Term::Abs(binders[key.positions[k]].first, domains[k], body);
      }
      key.closed = body;
    }
    return keys_.emplace(occ, std::make_pair(t, std::move(key))).first->second.second;
  }

  // Terms below the size threshold have no candidate subterms.
  bool Visitable(const Term& t) const { return t.size() >= options_.min_size; }

  bool Candidate(const Term& t) const { return Visitable(t) && !t.has_sort(); }

  void Count() {
    std::vector<Term> roots;
    for (const dkfile::Item& item : doc_.items) {
      if (auto* d = std::get_if<dkfile::Defn>(&item)) {
        roots.push_back(d->type);
        roots.push_back(d->body);
      }
    }
    Tally(roots, [this](const Term& closed, std::uint64_t n) {
      Entry& e = entries_[closed];
      e.count = SatAdd(e.count, n);
    });
  }

  // Occurrence counts of every candidate below `roots` (closed terms), as in
  // the printed tree: shared nodes are visited once and their multiplicity
  // is propagated to their children.
  template <typename F>
  void Tally(const std::vector<Term>& root_terms, F&& add) {
    // An abstraction's body that mentions the bound variable has the same
    // key as the abstraction itself; the edge to it is an alias and its
    // multiplicity must not be counted twice.
    struct Edge {
      std::size_t to;
      bool alias;
    };
    struct Node {
      Term term;
      std::size_t ctx;
      std::uint64_t mult = 0;
      std::uint64_t alias_mult = 0;
      std::size_t indegree = 0;
      std::vector<Edge> children;
    };
    std::vector<Node> nodes;
    std::unordered_map<Occurrence, std::size_t, PairHash> index;
    std::vector<std::size_t> roots;
    auto visit = [&](const Term& t, std::size_t ctx) -> std::size_t {
      auto [it, inserted] = index.emplace(Occurrence{t.id(), ctx}, nodes.size());
      if (inserted) nodes.push_back(Node{t, ctx, 0, 0, 0, {}});
      return it->second;
    };
    std::vector<std::size_t> stack;
    auto root = [&](const Term& t) {
      if (!Visitable(t)) return;
      const std::size_t before = nodes.size();
      const std::size_t id = visit(t, 0);
      roots.push_back(id);
      if (id == before) stack.push_back(id);
    };
    for (const Term& t : root_terms) root(t);
    while (!stack.empty()) {
      const std::size_t n = stack.back();
      stack.pop_back();
      const Term t = nodes[n].term;
      const std::size_t ctx = nodes[n].ctx;
      std::vector<std::tuple<Term, std::size_t, bool>> kids;
      if (t.is_prod() || t.is_abs()) {
        kids.emplace_back(t.domain(), ctx, false);
        const auto& loose = Loose(t.body());
        const bool alias =
            t.is_abs() && std::find(loose.begin(), loose.end(), 0u) != loose.end();
        kids.emplace_back(t.body(), contexts_.Push(ctx, t.name(), t.domain()), alias);
      } else if (t.is_app()) {
        kids.emplace_back(t.fn(), ctx, false);
        kids.emplace_back(t.arg(), ctx, false);
      }
      for (const auto& [kt, kc, alias] : kids) {
        if (!Visitable(kt)) continue;
        const std::size_t before = nodes.size();
        const std::size_t k = visit(kt, kc);
        nodes[n].children.push_back(Edge{k, alias});
        ++nodes[k].indegree;
        if (k == before) stack.push_back(k);
      }
    }
    // Kahn's algorithm from the roots.
    std::deque<std::size_t> ready;
    for (std::size_t r : roots) nodes[r].mult = SatAdd(nodes[r].mult, 1);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].indegree == 0) ready.push_back(i);
    }
    while (!ready.empty()) {
      const std::size_t n = ready.front();
      ready.pop_front();
      if (!Candidate(nodes[n].term)) {
        for (const Edge& edge : nodes[n].children) {
          Node& kid = nodes[edge.to];
          kid.mult = SatAdd(kid.mult, nodes[n].mult);
          if (edge.alias) kid.alias_mult = SatAdd(kid.alias_mult, nodes[n].mult);
          if (--kid.indegree == 0) ready.push_back(edge.to);
        }
        continue;
      }
      const Key& key = KeyOf(nodes[n].term, nodes[n].ctx);
      const std::uint64_t own = nodes[n].mult - std::min(nodes[n].mult, nodes[n].alias_mult);
      if (own > 0) add(key.closed, own);
      for (const Edge& edge : nodes[n].children) {
        Node& kid = nodes[edge.to];
        kid.mult = SatAdd(kid.mult, nodes[n].mult);
        if (edge.alias) kid.alias_mult = SatAdd(kid.alias_mult, nodes[n].mult);
        if (--kid.indegree == 0) ready.push_back(edge.to);
      }
    }
  }

  std::string Fresh() {
    if (options_.fresh_name) {
      std::string name = options_.fresh_name("s");
      names_.insert(name);
      return name;
    }
    std::string name = "s";
    for (int n = 1; names_.contains(name); ++n) name = "s_" + std::to_string(n);
    names_.insert(name);
    return name;
  }

  // Decides, once, whether the closed term is worth a definition, and
  // emits the definition if so.
  const std::string& Decide(const Key& key, const Term& occurrence) {
    Entry& e = entries_[key.closed];
    if (e.decided) return e.name;
    e.decided = true;
    if (e.count < options_.min_count) return e.name;
    Term type;
    try {
      kernel::Context empty;
      kernel::TypeChecker tc(sig_, empty, options_.kernel);
      type = tc.Infer(key.closed);
      if (tc.reducer().Whnf(type).is_kind()) return e.name;
      // The type of a hoisted term must itself be typable.
      tc.InferSort(type);
    } catch (const kernel::KernelError&) {
      return e.name;
    }
    // The definition's type is output text too; share inside it first.
    // Definitions this triggers are worth having on their own counts.
    type = Rewrite(type, 0, nullptr);
    const std::uint64_t args = key.positions.size();
    const std::uint64_t before = SatMul(e.count, occurrence.size());
    const std::uint64_t after =
        SatAdd(SatAdd(key.closed.size(), type.size()), SatMul(e.count, 2 * args + 1));
    if (after >= before) return e.name;
    std::string name = Fresh();
    const Term closed = key.closed;
    // From now on the subterms of `closed` occur once for all its uses.
    const std::uint64_t uses = e.count;
    Tally({closed}, [&](const Term& sub, std::uint64_t n) {
      if (sub == closed) return;
      Entry& s = entries_[sub];
      s.count -= std::min(s.count, SatMul(uses - 1, n));
    });
    Term body = Rewrite(closed, 0, &closed);
    Emit(dkfile::Defn{name, type, body});
    defined_.push_back(name);
    // `e` may have been invalidated by nested definitions.
    Entry& again = entries_[closed];
    again.name = std::move(name);
    return again.name;
  }

  Term Rewrite(const Term& t, std::size_t ctx, const Term* self) {
    if (!Visitable(t)) return t;
    const Occurrence occ{t.id(), ctx};
    auto& memo = self == nullptr ? memo_ : self_memo_[self->id()];
    if (auto it = memo.find(occ); it != memo.end()) return it->second.second;
    Term out;
    Key key;
    const std::string* name = nullptr;
    if (Candidate(t)) {
      key = KeyOf(t, ctx);
      if (self == nullptr || !(key.closed == *self)) name = &Decide(key, t);
    }
    if (name != nullptr && !name->empty()) {
      ++hits_;
      const std::size_t depth = contexts_.depth(ctx);
      out = Term::Const(*name);
      for (std::size_t p : key.positions) {
        out = Term::App(out, Term::Bound(static_cast<std::uint32_t>(depth - 1 - p)));
      }
    } else if (t.is_prod() || t.is_abs()) {
      Term d = Rewrite(t.domain(), ctx, self);
      Term b = Rewrite(t.body(), contexts_.Push(ctx, t.name(), t.domain()), self);
      out = d.id() == t.domain().id() && b.id() == t.body().id()
                ? t
                : (t.is_prod() ? Term::Prod(t.name(), d, b) : Term::Abs(t.name(), d, b));
    } else if (t.is_app()) {
      Term f = Rewrite(t.fn(), ctx, self);
      Term x = Rewrite(t.arg(), ctx, self);
      out = f.id() == t.fn().id() && x.id() == t.arg().id() ? t : Term::App(f, x);
    } else {
      out = t;
    }
    // Re-fetch: nested definitions may have added memo tables.
    auto& memo2 = self == nullptr ? memo_ : self_memo_[self->id()];
    memo2.emplace(occ, std::make_pair(t, out));
    return out;
  }

  kernel::Signature sig_;
  const dkfile::DkDocument& doc_;
  const ShareOptions& options_;
  dkfile::DkDocument* out_ = nullptr;
  std::unordered_set<std::string> names_;
  Contexts contexts_;
  std::unordered_map<const void*, std::pair<Term, std::vector<std::uint32_t>>> loose_;
  std::unordered_map<Occurrence, std::pair<Term, Key>, PairHash> keys_;
  std::unordered_map<Term, Entry, kernel::TermHash> entries_;
  std::unordered_map<Occurrence, std::pair<Term, Term>, PairHash> memo_;
  std::unordered_map<const void*, std::unordered_map<Occurrence, std::pair<Term, Term>, PairHash>>
      self_memo_;
  std::vector<std::string> defined_;
  std::size_t hits_ = 0;
};

Term ReplaceConsts(const Term& t, const std::unordered_map<std::string, Term>& bodies,
                   std::unordered_map<const void*, std::pair<Term, Term>>& memo) {
  if (auto it = memo.find(t.id()); it != memo.end()) return it->second.second;
  Term out = t;
  switch (t.kind()) {
    case kernel::TermKind::kConst:
      if (auto it = bodies.find(t.name()); it != bodies.end()) out = it->second;
      break;
    case kernel::TermKind::kProd:
    case kernel::TermKind::kAbs: {
      Term d = ReplaceConsts(t.domain(), bodies, memo);
      Term b = ReplaceConsts(t.body(), bodies, memo);
      out = t.is_prod() ? Term::Prod(t.name(), d, b) : Term::Abs(t.name(), d, b);
      break;
    }
    case kernel::TermKind::kApp:
      out = Term::App(ReplaceConsts(t.fn(), bodies, memo), ReplaceConsts(t.arg(), bodies, memo));
      break;
    default:
      break;
  }
  memo.emplace(t.id(), std::make_pair(t, out));
  return out;
}

}  // namespace

ShareResult Share(const kernel::Signature& prefix, const dkfile::DkDocument& doc,
                  const ShareOptions& options) {
  Sharer sharer(prefix, doc, options);
  return sharer.Run();
}

dkfile::DkDocument InlineDefinitions(const dkfile::DkDocument& doc,
                                     const std::unordered_set<std::string>& names) {
  dkfile::DkDocument out;
  out.module = doc.module;
  std::unordered_map<std::string, Term> bodies;
  for (const dkfile::Item& item : doc.items) {
    // Bodies are closed, so one memo serves every item until a new body
    // is recorded.
    std::unordered_map<const void*, std::pair<Term, Term>> memo;
    if (auto* d = std::get_if<dkfile::Defn>(&item)) {
      Term type = ReplaceConsts(d->type, bodies, memo);
      Term body = ReplaceConsts(d->body, bodies, memo);
      if (names.contains(d->name)) {
        bodies.emplace(d->name, body);
      } else {
        out.items.emplace_back(dkfile::Defn{d->name, type, body});
      }
    } else if (auto* d = std::get_if<dkfile::Decl>(&item)) {
      out.items.emplace_back(dkfile::Decl{d->name, ReplaceConsts(d->type, bodies, memo)});
    } else {
      out.items.push_back(item);
    }
  }
  return out;
}

}  // namespace holtrans::translate
