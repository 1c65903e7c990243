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

#include "holtrans/translate/base_signature.h"

namespace holtrans::translate {

namespace {

constexpr std::string_view kQ0Text = R"(#NAME hol.
(; HOL types ;)
type : Type.
bool : type.
ind : type.
arrow : type -> type -> type.
(; HOL terms ;)
term : type -> Type.
[a : type, b : type] term (arrow a b) --> term a -> term b.
proof : term bool -> Type.
eq : a : type -> term (arrow a (arrow a bool)).
select : a : type -> term (arrow (arrow a bool) a).
(; Equality proofs ;)
Refl : a : type -> x : term a -> proof (eq a x x).
FunExt : a : type -> b : type -> f : term (arrow a b) -> g : term (arrow a b) -> (x : term a -> proof (eq b (f x) (g x))) -> proof (eq (arrow a b) f g).
AppThm : a : type -> b : type -> f : term (arrow a b) -> g : term (arrow a b) -> x : term a -> y : term a -> proof (eq (arrow a b) f g) -> proof (eq a x y) -> proof (eq b (f x) (g y)).
(; Boolean proofs ;)
PropExt : p : term bool -> q : term bool -> (proof q -> proof p) -> (proof p -> proof q) -> proof (eq bool p q).
EqMp : p : term bool -> q : term bool -> proof (eq bool p q) -> proof p -> proof q.
)";

constexpr std::string_view kPtsText = R"(#NAME hol.
(; HOL types ;)
type : Type.
bool : type.
ind : type.
arrow : type -> type -> type.
(; HOL terms ;)
term : type -> Type.
[a : type, b : type] term (arrow a b) --> term a -> term b.
proof : term bool -> Type.
(; Connectives, with provability defined by rewriting ;)
imp : term (arrow bool (arrow bool bool)).
forall : a : type -> term (arrow (arrow a bool) bool).
[p : term bool, q : term bool] proof (imp p q) --> proof p -> proof q.
[a : type, p : term (arrow a bool)] proof (forall a p) --> x : term a -> proof (p x).
(; Leibniz equality ;)
def eq : a : type -> term (arrow a (arrow a bool)) := a : type => x : term a => y : term a => forall (arrow a bool) (p : term (arrow a bool) => imp (p x) (p y)).
select : a : type -> term (arrow (arrow a bool) a).
(; Equality proofs ;)
def Refl : a : type -> x : term a -> proof (eq a x x) := a : type => x : term a => p : term (arrow a bool) => h : proof (p x) => h.
FunExt : a : type -> b : type -> f : term (arrow a b) -> g : term (arrow a b) -> (x : term a -> proof (eq b (f x) (g x))) -> proof (eq (arrow a b) f g).
def AppThm : a : type -> b : type -> f : term (arrow a b) -> g : term (arrow a b) -> x : term a -> y : term a -> proof (eq (arrow a b) f g) -> proof (eq a x y) -> proof (eq b (f x) (g y)) := a : type => b : type => f : term (arrow a b) => g : term (arrow a b) => x : term a => y : term a => h1 : proof (eq (arrow a b) f g) => h2 : proof (eq a x y) => Q : term (arrow b bool) => hq : proof (Q (f x)) => h2 (z : term a => Q (g z)) (h1 (k : term (arrow a b) => Q (k x)) hq).
(; Boolean proofs ;)
PropExt : p : term bool -> q : term bool -> (proof q -> proof p) -> (proof p -> proof q) -> proof (eq bool p q).
def EqMp : p : term bool -> q : term bool -> proof (eq bool p q) -> proof p -> proof q := p : term bool => q : term bool => h : proof (eq bool p q) => hp : proof p => h (b : term bool => b) hp.
(; Derived rules for implication ;)
def imp_intro : p : term bool -> q : term bool -> (proof p -> proof q) -> proof (imp p q) := p : term bool => q : term bool => h : (proof p -> proof q) => h.
def imp_elim : p : term bool -> q : term bool -> proof (imp p q) -> proof p -> proof q := p : term bool => q : term bool => h : proof (imp p q) => x : proof p => h x.
)";

}  // namespace

std::string_view ModeName(Mode mode) { return mode == Mode::kQ0 ? "q0" : "pts"; }

std::optional<Mode> ParseMode(std::string_view name) {
  if (name == "q0") return Mode::kQ0;
  if (name == "pts") return Mode::kPts;
  return std::nullopt;
}

std::string_view BaseText(Mode mode) { return mode == Mode::kQ0 ? kQ0Text : kPtsText; }

dkfile::DkDocument BaseDocument(Mode mode) { return dkfile::Parse(BaseText(mode)); }

kernel::Signature BaseSignature(Mode mode, const kernel::Options& options) {
  kernel::Signature sig;
  dkfile::Check(sig, BaseDocument(mode), options);
  return sig;
}

const std::vector<std::string>& ReservedNames() {
  static const std::vector<std::string> names = {
      "Type",  "Kind",   "def",    "type",   "bool",    "ind",     "arrow",
      "term",  "proof",  "eq",     "select", "Refl",    "FunExt",  "AppThm",
      "PropExt", "EqMp", "imp",    "forall", "imp_intro", "imp_elim", "hol",
  };
  return names;
}

}  // namespace holtrans::translate
