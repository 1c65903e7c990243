#!/usr/bin/env python3
# Copyright 2026 The holtrans Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the article corpus in tests/data/corpus.

Each article is spelled out below as a proof tree together with the sequent
it is meant to prove; the article VM rejects the file if the two disagree.
Run from anywhere: python3 tests/data/make_corpus.py
"""

import pathlib


class Ty:
    def __init__(self, kind, name, args=()):
        self.kind, self.name, self.args = kind, name, tuple(args)

    def key(self):
        return ("ty", self.kind, self.name, tuple(a.key() for a in self.args))

    def __eq__(self, other):
        return self.key() == other.key()


def tvar(name):
    return Ty("var", name)


def top(name, *args):
    return Ty("op", name, args)


BOOL = top("bool")


def fn(a, *rest):
    if not rest:
        return a
    return top("->", a, fn(*rest))


class Tm:
    def __init__(self, kind, name=None, ty=None, f=None, x=None):
        self.kind, self.name, self._ty, self.f, self.x = kind, name, ty, f, x

    @property
    def ty(self):
        if self.kind in ("var", "const"):
            return self._ty
        if self.kind == "app":
            return self.f.ty.args[1]
        return fn(self.f.ty, self.x.ty)

    def key(self):
        if self.kind in ("var", "const"):
            return ("tm", self.kind, self.name, self._ty.key())
        return ("tm", self.kind, self.f.key(), self.x.key())

    def __call__(self, *args):
        t = self
        for a in args:
            t = Tm("app", f=t, x=a)
        return t


def var(name, ty):
    return Tm("var", name, ty)


def const(name, ty):
    return Tm("const", name, ty)


def lam(v, body):
    return Tm("abs", f=v, x=body)


def eq(a, b):
    return const("=", fn(a.ty, a.ty, BOOL))(a, b)


class Article:
    def __init__(self, header):
        self.lines = ["# " + line for line in header.strip().splitlines()]
        self.lines += ["6", "version"]
        self.memo = {}
        self.next_key = 0

    def emit(self, *cmds):
        self.lines.extend(str(c) for c in cmds)

    def name(self, s):
        self.emit('"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"')

    def cached(self, key, build):
        # Repeated types and terms go through the dictionary.
        if key in self.memo:
            self.emit(self.memo[key], "ref")
            return
        build()
        k = self.next_key
        self.next_key += 1
        self.memo[key] = k
        self.emit(k, "def")

    def ty(self, t):
        def build():
            if t.kind == "var":
                self.name(t.name)
                self.emit("varType")
            else:
                self.name(t.name)
                self.emit("typeOp")
                self.list([lambda a=a: self.ty(a) for a in t.args])
                self.emit("opType")

        self.cached(t.key(), build)

    def list(self, pushers):
        # cons pops the tail, then the head below it.
        for p in pushers:
            p()
        self.emit("nil")
        for _ in pushers:
            self.emit("cons")

    def var(self, v):
        def build():
            self.name(v.name)
            self.ty(v._ty)
            self.emit("var")

        self.cached(("v",) + v.key(), build)

    def term(self, t):
        def build():
            if t.kind == "var":
                self.var(t)
                self.emit("varTerm")
            elif t.kind == "const":
                self.name(t.name)
                self.emit("const")
                self.ty(t._ty)
                self.emit("constTerm")
            elif t.kind == "app":
                self.term(t.f)
                self.term(t.x)
                self.emit("appTerm")
            else:
                self.var(t.f)
                self.term(t.x)
                self.emit("absTerm")

        self.cached(t.key(), build)

    def proof(self, p):
        op, *a = p
        if op == "refl":
            self.term(a[0])
            self.emit("refl")
        elif op == "assume":
            self.term(a[0])
            self.emit("assume")
        elif op == "beta":
            self.term(a[0])
            self.emit("betaConv")
        elif op == "appThm":
            self.proof(a[0])
            self.proof(a[1])
            self.emit("appThm")
        elif op == "absThm":
            self.var(a[0])
            self.proof(a[1])
            self.emit("absThm")
        elif op == "eqMp":
            self.proof(a[0])
            self.proof(a[1])
            self.emit("eqMp")
        elif op == "das":
            self.proof(a[0])
            self.proof(a[1])
            self.emit("deductAntisym")
        elif op == "sym":
            self.proof(a[0])
            self.emit("sym")
        elif op == "trans":
            self.proof(a[0])
            self.proof(a[1])
            self.emit("trans")
        elif op == "proveHyp":
            self.proof(a[0])
            self.proof(a[1])
            self.emit("proveHyp")
        elif op == "subst":
            theta, sigma, inner = a
            self.list([
                lambda: self.list([
                    lambda n=n, t=t: self.list([lambda: self.name(n), lambda: self.ty(t)])
                    for n, t in theta
                ]),
                lambda: self.list([
                    lambda v=v, t=t: self.list([lambda: self.var(v), lambda: self.term(t)])
                    for v, t in sigma
                ]),
            ])
            self.proof(inner)
            self.emit("subst")
        elif op == "axiom":
            hyps, concl = a
            self.list([lambda h=h: self.term(h) for h in hyps])
            self.term(concl)
            self.emit("axiom")
        elif op == "saved":
            self.emit(a[0], "ref")
        elif op == "removed":
            self.emit(a[0], "remove")
        else:
            raise ValueError(op)

    def export(self, p, hyps, concl):
        self.proof(p)
        self.list([lambda h=h: self.term(h) for h in hyps])
        self.term(concl)
        self.emit("thm")

    def text(self):
        return "\n".join(self.lines) + "\n"


A, B, C = tvar("A"), tvar("B"), tvar("C")
x, y, z = var("x", A), var("y", A), var("z", A)
p, q = var("p", BOOL), var("q", BOOL)
ident = lam(x, x)


def identity():
    a = Article("The identity function is equal to itself.\nRefl.")
    a.export(("refl", ident), [], eq(ident, ident))
    return a


def beta_app():
    a = Article("Beta and AppThm: f ((\\x. x) y) = f y.")
    f = var("f", fn(A, B))
    redex = ident(y)
    a.export(("beta", redex), [], eq(redex, y))
    a.export(("appThm", ("refl", f), ("beta", redex)), [], eq(f(redex), f(y)))
    return a


def conversion():
    a = Article(
        "A congruence proof built from Refl, AppThm and Beta only:\n"
        "f (g ((\\x. x) x)) = f (g x)."
    )
    g = var("g", fn(A, B))
    f = var("f", fn(B, C))
    redex = ident(x)
    proof = ("appThm", ("refl", f), ("appThm", ("refl", g), ("beta", redex)))
    a.export(proof, [], eq(f(g(redex)), f(g(x))))
    return a


def abs_thm():
    a = Article("AbsThm under a binder: (\\x. (\\y. y) x) = (\\x. x).")
    inner = lam(y, y)(x)
    a.export(("absThm", x, ("beta", inner)), [], eq(lam(x, inner), lam(x, x)))
    return a


def assume_eqmp():
    a = Article("Assume and EqMp: {p = q, p} |- q.")
    a.export(("assume", p), [p], p)
    a.export(("eqMp", ("assume", eq(p, q)), ("assume", p)), [eq(p, q), p], q)
    return a


def deduct_antisym():
    a = Article("DeductAntisym: {p, q} |- p = q, and |- p = p.")
    a.export(("das", ("assume", p), ("assume", q)), [p, q], eq(p, q))
    a.export(("das", ("assume", p), ("assume", p)), [], eq(p, p))
    return a


def sym_trans():
    a = Article("Trans and Sym, expanded by the VM into primitive steps.")
    xy, yz = eq(x, y), eq(y, z)
    a.export(("trans", ("assume", xy), ("assume", yz)), [xy, yz], eq(x, z))
    a.export(("sym", ("assume", xy)), [xy], eq(y, x))
    return a


def prove_hyp():
    a = Article("ProveHyp discharges a hypothesis with a theorem.")
    # lower: |- x = x; top: {x = x} |- x = x. Result: |- x = x.
    a.export(("proveHyp", ("refl", x), ("assume", eq(x, x))), [], eq(x, x))
    # lower: {p} |- p; top: {p, q} |- p = q. Result: {p, q} |- p = q.
    a.export(
        ("proveHyp", ("assume", p), ("das", ("assume", p), ("assume", q))),
        [p, q],
        eq(p, q),
    )
    return a


def subst():
    a = Article("Subst: type instantiation and term substitution, also in hypotheses.")
    # |- x = x at A, instantiated to A := B -> B and x := \b. b.
    b = var("b", B)
    xbb = var("x", fn(B, B))
    a.export(
        ("subst", [("A", fn(B, B))], [(xbb, lam(b, b))], ("refl", x)),
        [],
        eq(lam(b, b), lam(b, b)),
    )
    # {x = y} |- x = y with x := y.
    a.export(("subst", [], [(x, y)], ("assume", eq(x, y))), [eq(y, y)], eq(y, y))
    # {p} |- p with p := (q = q), type variables untouched.
    a.export(("subst", [], [(p, eq(q, q))], ("assume", p)), [eq(q, q)], eq(q, q))
    return a


def axioms():
    a = Article("Axioms: an eta instance, a closed axiom, one with a hypothesis.")
    f = var("f", fn(A, B))
    eta = eq(lam(x, f(x)), f)
    a.export(("axiom", [], eta), [], eta)
    c = const("c", A)
    d = const("d", A)
    a.export(("sym", ("axiom", [], eq(c, d))), [], eq(d, c))
    a.export(("axiom", [p], eq(p, p)), [p], eq(p, p))
    return a


def define_const():
    a = Article("DefineConst: truth as (\\p. p) = (\\p. p), then |- T.")
    idb = lam(p, p)
    body = eq(idb, idb)
    t = const("T", BOOL)
    a.name("T")
    a.term(body)
    # Keep the theorem in the dictionary and clear the stack.
    a.emit("defineConst", 101, "def", "pop", "pop")
    a.export(("saved", 101), [], eq(t, body))
    a.export(("eqMp", ("sym", ("saved", 101)), ("refl", idb)), [], t)
    return a


def define_const_poly():
    a = Article("DefineConst with a type variable: K = \\x y. x.")
    k_body = lam(x, lam(var("y", B), x))
    a.name("K")
    a.term(k_body)
    a.emit("defineConst", 201, "def", "pop", "pop")
    k = const("K", fn(A, B, A))
    a.export(("saved", 201), [], eq(k, k_body))
    kb = const("K", fn(BOOL, BOOL, BOOL))
    k_body_b = lam(var("x", BOOL), lam(var("y", BOOL), var("x", BOOL)))
    a.export(
        ("subst", [("A", BOOL), ("B", BOOL)], [], ("removed", 201)), [], eq(kb, k_body_b)
    )
    return a


def define_type_op():
    a = Article(
        "DefineTypeOp: a one-element type carved out of bool -> bool by\n"
        "P = \\f. f = (\\p. p), witnessed by \\p. p."
    )
    bb = fn(BOOL, BOOL)
    f = var("f", bb)
    idb = lam(p, p)
    pred = lam(f, eq(f, idb))
    # |- P idb, from beta and refl.
    beta = ("beta", pred(idb))
    witness = ("eqMp", ("sym", beta), ("refl", idb))
    a.name("unit1")
    a.name("abs1")
    a.name("rep1")
    a.list([])
    a.proof(witness)
    a.emit("defineTypeOp")
    # Stack: typeOp, abs, rep, |- abs (rep a) = a, |- (P r) = (rep (abs r) = r).
    a.emit(300, "def", "pop", 301, "def", "pop", "pop", "pop", "pop")
    u = top("unit1")
    abs_c = const("abs1", fn(bb, u))
    rep_c = const("rep1", fn(u, bb))
    av = var("a", u)
    rv = var("r", bb)
    a.export(("saved", 301), [], eq(lam(av, abs_c(rep_c(av))), lam(av, av)))
    a.export(("saved", 300), [], eq(lam(rv, eq(rep_c(abs_c(rv)), rv)), lam(rv, pred(rv))))
    return a


def define_const_list():
    a = Article("DefineConstList and the stack commands hdTl, pop and pragma.")
    v = var("v", BOOL)
    idb = lam(p, p)
    body = eq(idb, idb)
    # {v = body} |- v = body becomes |- c = body.
    a.list([lambda: a.list([lambda: a.name("c1"), lambda: a.var(v)])])
    a.proof(("assume", eq(v, body)))
    a.emit("defineConstList")
    # Stack: [c], |- c = body.
    a.emit(400, "def", "pop", "hdTl", "pop", "pop")
    a.name("ignored")
    a.emit("pragma")
    c = const("c1", BOOL)
    a.export(("saved", 400), [], eq(c, body))
    return a


def example_trans():
    a = Article("Transitivity of equality with hypotheses x = y and y = z.")
    xy, yz = eq(x, y), eq(y, z)
    # eqMp (appThm (refl (= x)) (assume y = z)) (assume x = y)
    eqx = const("=", fn(A, A, BOOL))(x)
    step = ("appThm", ("refl", eqx), ("assume", yz))
    a.export(("eqMp", step, ("assume", xy)), [xy, yz], eq(x, z))
    return a


def shared():
    a = Article(
        "Several theorems about the same large term, so that output sharing\n"
        "has something to factor."
    )
    f = var("f", fn(A, A, A))
    big = f(f(f(x, y), f(y, x)), f(f(x, x), f(y, y)))
    big2 = f(big, big)
    a.export(("refl", big2), [], eq(big2, big2))
    a.export(("assume", eq(big2, x)), [eq(big2, x)], eq(big2, x))
    a.export(("sym", ("assume", eq(big2, x))), [eq(big2, x)], eq(x, big2))
    return a


CORPUS = {
    "identity": identity,
    "beta_app": beta_app,
    "conversion": conversion,
    "abs_thm": abs_thm,
    "assume_eqmp": assume_eqmp,
    "deduct_antisym": deduct_antisym,
    "sym_trans": sym_trans,
    "prove_hyp": prove_hyp,
    "subst": subst,
    "axioms": axioms,
    "define_const": define_const,
    "define_const_poly": define_const_poly,
    "define_type_op": define_type_op,
    "define_const_list": define_const_list,
    "example_trans": example_trans,
    "shared": shared,
}


def main():
    out = pathlib.Path(__file__).resolve().parent / "corpus"
    out.mkdir(exist_ok=True)
    for name, make in CORPUS.items():
        (out / f"{name}.art").write_text(make().text())


if __name__ == "__main__":
    main()
