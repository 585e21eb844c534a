"""Finite categories, transport categories, Grothendieck constructions, nerves
and truncated equivariant simplex categories.

Morphism ids are tuples whose first two entries are the source and target
objects, so a morphism carries its own typing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .sset import DeltaOperator, FiniteSimplicialSet, SimplicialSet, ValidationReport

Obj = Hashable
Mor = tuple


class FinCategory:
    """A category with finitely many objects and finite hom-sets.

    ``homs(a, b)`` lists morphism ids; ``compose(f, g)`` is ``f ∘ g``.  Hom-sets
    are enumerated lazily and cached.
    """

    def __init__(self, objects: Sequence[Obj], homs: Callable[[Obj, Obj], Sequence[Mor]],
                 compose: Callable[[Mor, Mor], Mor], identity: Callable[[Obj], Mor], name: str = ""):
        self.objects = tuple(objects)
        self._homs = homs
        self._compose = compose
        self._identity = identity
        self._cache: dict = {}
        self.name = name

    @staticmethod
    def src(f: Mor) -> Obj:
        return f[0]

    @staticmethod
    def dst(f: Mor) -> Obj:
        return f[1]

    def homs(self, a: Obj, b: Obj) -> tuple:
        key = (a, b)
        if key not in self._cache:
            self._cache[key] = tuple(self._homs(a, b))
        return self._cache[key]

    def identity(self, a: Obj) -> Mor:
        return self._identity(a)

    def compose(self, f: Mor, g: Mor) -> Mor:
        if self.src(f) != self.dst(g):
            raise ValueError(f"cannot compose {f!r} after {g!r}")
        return self._compose(f, g)

    def morphisms(self) -> Iterable[Mor]:
        for a in self.objects:
            for b in self.objects:
                yield from self.homs(a, b)

    def morphism_count(self) -> int:
        return sum(len(self.homs(a, b)) for a in self.objects for b in self.objects)

    def check(self, triples_limit: int = 200_000) -> ValidationReport:
        """Identities, closure and associativity, exhaustively up to a budget."""
        checked = 0
        for a in self.objects:
            ida = self.identity(a)
            if ida not in self.homs(a, a):
                return ValidationReport(False, f"identity of {a!r} missing", checked)
        for f in self.morphisms():
            a, b = self.src(f), self.dst(f)
            checked += 2
            if self.compose(self.identity(b), f) != f or self.compose(f, self.identity(a)) != f:
                return ValidationReport(False, f"identity law fails at {f!r}", checked)
        for a, b, c in itertools.product(self.objects, repeat=3):
            for g in self.homs(a, b):
                for f in self.homs(b, c):
                    fg = self.compose(f, g)
                    if fg not in self.homs(a, c):
                        return ValidationReport(False, f"{f!r}∘{g!r} not in hom({a!r},{c!r})", checked)
                    for d in self.objects:
                        for h in self.homs(c, d):
                            checked += 1
                            if checked > triples_limit:
                                return ValidationReport(True, None, checked)
                            if self.compose(h, fg) != self.compose(self.compose(h, f), g):
                                return ValidationReport(False, f"associativity fails at {h!r},{f!r},{g!r}", checked)
        return ValidationReport(True, None, checked)


def discrete_category(S: Sequence[Obj]) -> FinCategory:
    return FinCategory(S, lambda a, b: [(a, a, "id")] if a == b else [],
                       lambda f, g: g, lambda a: (a, a, "id"), name="disc")


def one_object_category(monoid) -> FinCategory:
    """The one-object category of a finite monoid (composition is multiplication)."""
    return transport_category(["*"], lambda s, h: s, monoid)


# ---------------------------------------------------------------------------
# transport categories


def transport_category(S: Sequence[Obj], act: Callable[[Obj, Hashable], Obj] | Mapping, H,
                       name: str = "") -> FinCategory:
    """``Tr_H(S)``: objects ``S``; morphisms ``s -> t`` are ``h`` with ``s = t·h``.

    Composition ``k ∘ h = k·h``.  The action must be a right monoid action.
    """
    if isinstance(act, Mapping):
        table = dict(act)
        act = lambda s, h: table[(s, h)]
    S = tuple(S)
    members = set(S)
    for s in S:
        if act(s, H.identity) != s:
            raise ValueError(f"unit does not act trivially on {s!r}")
        for h in H.elements:
            if act(s, h) not in members:
                raise ValueError(f"{s!r}·{h!r} leaves the set")
            for k in H.elements:
                if act(act(s, h), k) != act(s, H.mul(h, k)):
                    raise ValueError(f"action not associative at {s!r}, {h!r}, {k!r}")

    def homs(s, t):
        return [(s, t, h) for h in H.elements if act(t, h) == s]

    def compose(f, g):
        return (g[0], f[1], H.mul(f[2], g[2]))

    return FinCategory(S, homs, compose, lambda s: (s, s, H.identity), name=name or f"Tr({H.name})")


# ---------------------------------------------------------------------------
# functors and the Grothendieck construction


@dataclass
class Functor:
    """A functor between finite categories given by object and morphism maps."""

    source: FinCategory
    target: FinCategory
    on_objects: Callable[[Obj], Obj]
    on_morphisms: Callable[[Mor], Mor]

    def __call__(self, x):
        return self.on_objects(x)

    def mor(self, f: Mor) -> Mor:
        return self.on_morphisms(f)

    def check(self) -> ValidationReport:
        S, T = self.source, self.target
        checked = 0
        for a in S.objects:
            checked += 1
            if self.mor(S.identity(a)) != T.identity(self(a)):
                return ValidationReport(False, f"identity of {a!r} not preserved", checked)
        for a, b, c in itertools.product(S.objects, repeat=3):
            for g in S.homs(a, b):
                for f in S.homs(b, c):
                    checked += 1
                    if self.mor(S.compose(f, g)) != T.compose(self.mor(f), self.mor(g)):
                        return ValidationReport(False, f"composition of {f!r},{g!r} not preserved", checked)
        return ValidationReport(True, None, checked)


class CatValuedPresheaf:
    """A functor ``F: C^op -> Cat`` given by a category per object and a functor per morphism.

    ``restrict(f)`` for ``f: c -> d`` is the functor ``F(d) -> F(c)``.
    """

    def __init__(self, base: FinCategory, value: Callable[[Obj], FinCategory],
                 restrict: Callable[[Mor], Functor]):
        self.base = base
        self._value = value
        self._restrict = restrict
        self._vcache: dict = {}
        self._rcache: dict = {}

    def value(self, c: Obj) -> FinCategory:
        if c not in self._vcache:
            self._vcache[c] = self._value(c)
        return self._vcache[c]

    def restrict(self, f: Mor) -> Functor:
        if f not in self._rcache:
            self._rcache[f] = self._restrict(f)
        return self._rcache[f]

    def check(self) -> ValidationReport:
        """Functoriality: ``F(id) = id`` and ``F(f ∘ g) = F(g) ∘ F(f)`` on objects and morphisms."""
        B = self.base
        checked = 0
        for c in B.objects:
            Fc = self.value(c)
            Fid = self.restrict(B.identity(c))
            for x in Fc.objects:
                checked += 1
                if Fid(x) != x:
                    return ValidationReport(False, f"F(id_{c!r}) moves {x!r}", checked)
        for a, b, c in itertools.product(B.objects, repeat=3):
            for g in B.homs(a, b):
                for f in B.homs(b, c):
                    Ffg = self.restrict(B.compose(f, g))
                    Ff, Fg = self.restrict(f), self.restrict(g)
                    for x in self.value(c).objects:
                        checked += 1
                        if Ffg(x) != Fg(Ff(x)):
                            return ValidationReport(False, f"F not functorial on {f!r}∘{g!r}", checked)
                    Fc = self.value(c)
                    for x in Fc.objects:
                        for y in Fc.objects:
                            for m in Fc.homs(x, y):
                                checked += 1
                                if Ffg.mor(m) != Fg.mor(Ff.mor(m)):
                                    return ValidationReport(False, f"F not functorial on {f!r}∘{g!r}", checked)
        return ValidationReport(True, None, checked)


def grothendieck(F: CatValuedPresheaf, validate: bool = True) -> FinCategory:
    """``Gr(F)``: objects ``(c, x)``; morphisms ``(c,x) -> (d,y)`` are ``(f, α)``
    with ``f: c -> d`` and ``α: x -> F(f)(y)``.  Composition
    ``(f, α) ∘ (g, β) = (f ∘ g, F(g)(α) ∘ β)``.
    """
    if validate:
        rep = F.check()
        if not rep:
            raise ValueError(f"not a functor: {rep.violation}")
    B = F.base
    objects = [(c, x) for c in B.objects for x in F.value(c).objects]

    def homs(s, t):
        (c, x), (d, y) = s, t
        out = []
        for f in B.homs(c, d):
            Fc = F.value(c)
            for a in Fc.homs(x, F.restrict(f)(y)):
                out.append((s, t, f, a))
        return out

    def compose(m1, m2):
        (_, t, f, a), (s, _, g, b) = m1, m2
        c = s[0]
        return (s, t, B.compose(f, g), F.value(c).compose(F.restrict(g).mor(a), b))

    def ident(s):
        c, x = s
        return (s, s, B.identity(c), F.value(c).identity(x))

    return FinCategory(objects, homs, compose, ident, name="Gr")


# ---------------------------------------------------------------------------
# the simplex category and its equivariant version


def delta_category(d: int) -> FinCategory:
    """``Δ_{≤d}``: objects ``0..d``, morphisms monotone maps."""
    if d < 0:
        raise ValueError("dimension bound must be nonnegative")

    def homs(m, n):
        return [(m, n, op) for op in DeltaOperator.all(m, n)]

    return FinCategory(range(d + 1), homs, lambda f, g: (g[0], f[1], f[2] @ g[2]),
                       lambda n: (n, n, DeltaOperator.identity(n)), name=f"Δ≤{d}")


class SimplexCatTrunc(FinCategory):
    """``Simp_G(W)`` truncated to objects of degree ``≤ d``.

    Objects are pairs ``(n, w)``; a morphism ``(m, v) -> (n, w)`` is
    ``(src, dst, α, g)`` with ``v = W(α)(w)·g``.  For constant ``G``,
    ``(β, h) ∘ (α, g) = (β∘α, h·g)``.
    """

    def __init__(self, W: SimplicialSet, G, act: Callable, d: int):
        if d < 0:
            raise ValueError("dimension bound must be nonnegative")
        self.W, self.G, self.act, self.dim_bound = W, G, act, d
        objects = [(n, w) for n in range(d + 1) for w in W.simplices(n)]

        def homs(s, t):
            (m, v), (n, w) = s, t
            out = []
            for alpha in DeltaOperator.all(m, n):
                u = W.apply(alpha, w)
                for g in G.elements:
                    if act(u, g) == v:
                        out.append((s, t, alpha, g))
            return out

        def compose(f, g):
            return (g[0], f[1], f[2] @ g[2], G.mul(f[3], g[3]))

        super().__init__(objects, homs, compose, lambda s: (s, s, DeltaOperator.identity(s[0]), G.identity),
                         name=f"Simp_{G.name}({W.name})≤{d}")

    def label(self, obj) -> str:
        """Canonical string id of an object."""
        n, w = obj
        return f"{n}:{w!r}"

    def generators(self) -> list[Mor]:
        """``(δ_i, e)``, ``(σ_j, e)`` and ``(id, g)`` between objects of the truncation."""
        out = []
        W, G, d = self.W, self.G, self.dim_bound
        for n, w in self.objects:
            for i in range(n + 1 if n > 0 else 0):
                op = DeltaOperator.coface(n, i)
                out.append(((n - 1, W.face(i, w)), (n, w), op, G.identity))
            for g in G.elements:
                out.append(((n, self.act(w, g)), (n, w), DeltaOperator.identity(n), g))
        for n, v in self.objects:
            if n + 1 <= d:
                for j in range(n + 1):
                    op = DeltaOperator.codegeneracy(n, j)
                    out.append(((n + 1, W.degeneracy(j, v)), (n, v), op, G.identity))
        return out


def simplex_category_trunc(W: SimplicialSet, G, act: Callable, d: int) -> SimplexCatTrunc:
    return SimplexCatTrunc(W, G, act, d)


def transport_functor(W: SimplicialSet, G, act: Callable, d: int) -> CatValuedPresheaf:
    """``[n] ↦ Tr_G(W_n)`` on ``Δ_{≤d}``, with ``α`` acting through ``W(α)``."""
    base = delta_category(d)
    G_const = G

    def value(n):
        return transport_category(W.simplices(n), act, G_const, name=f"Tr(W_{n})")

    def restrict(f):
        m, n, alpha = f
        Fm, Fn = value(m), value(n)
        return Functor(Fn, Fm, lambda w: W.apply(alpha, w),
                       lambda mor: (W.apply(alpha, mor[0]), W.apply(alpha, mor[1]), mor[2]))

    return CatValuedPresheaf(base, value, restrict)


@dataclass
class IsoReport:
    ok: bool
    violation: str | None = None
    objects: int = 0
    morphisms: int = 0
    checked_compositions: int = 0

    def __bool__(self) -> bool:
        return self.ok


def compare_with_grothendieck(S: SimplexCatTrunc, Gr: FinCategory) -> IsoReport:
    """Check the label bijection ``(n,w) ↔ (n,w)``, ``(α,g) ↔ (α,g)`` is an isomorphism.

    Hom-sets are compared exactly; composition is compared on every pair
    (morphism, generating morphism), which determines it.
    """
    obj_map = {o: o for o in S.objects}
    if sorted(map(repr, S.objects)) != sorted(map(repr, Gr.objects)):
        return IsoReport(False, "object sets differ")

    def to_gr(m):
        s, t, alpha, g = m
        return (s, t, (s[0], t[0], alpha), (s[1], S.W.apply(alpha, t[1]), g))

    def from_gr(m):
        s, t, f, a = m
        return (s, t, f[2], a[2])

    nmor = 0
    for a in S.objects:
        for b in S.objects:
            hs, hg = S.homs(a, b), Gr.homs(obj_map[a], obj_map[b])
            nmor += len(hs)
            if sorted(map(repr, (to_gr(m) for m in hs))) != sorted(map(repr, hg)):
                return IsoReport(False, f"hom-sets differ at {a!r} -> {b!r}")
            if any(to_gr(from_gr(m)) != m for m in hg):
                return IsoReport(False, "label translation is not inverse")
    checked = 0
    gens = S.generators()
    for gen in gens:
        a = gen[1]
        for c in S.objects:
            for f in S.homs(a, c):
                checked += 1
                if to_gr(S.compose(f, gen)) != Gr.compose(to_gr(f), to_gr(gen)):
                    return IsoReport(False, f"composition differs at {f!r} ∘ {gen!r}", len(S.objects), nmor, checked)
    return IsoReport(True, None, len(S.objects), nmor, checked)


# ---------------------------------------------------------------------------
# nerves


def nerve(C: FinCategory, d: int, name: str = "") -> FiniteSimplicialSet:
    """Nerve through degree ``d + 1``.

    A ``k``-simplex is ``(k, c_0, (f_1, …, f_k))`` with ``f_i: c_{i-1} -> c_i``;
    ``d_0`` drops ``f_1``, ``d_k`` drops ``f_k``, inner faces compose and
    degeneracies insert identities.
    """
    top = d + 1

    def chains(k):
        if k == 0:
            return [(0, c, ()) for c in C.objects]
        out = []
        for ch in chains(k - 1):
            last = ch[1] if k == 1 else C.dst(ch[2][-1])
            for c in C.objects:
                for f in C.homs(last, c):
                    out.append((k, ch[1], ch[2] + (f,)))
        return out

    levels = {}
    prev = [(0, c, ()) for c in C.objects]
    levels[0] = prev
    for k in range(1, top + 1):
        nxt = []
        for ch in prev:
            last = ch[1] if k == 1 else C.dst(ch[2][-1])
            for c in C.objects:
                for f in C.homs(last, c):
                    nxt.append((k, ch[1], ch[2] + (f,)))
        levels[k] = nxt
        prev = nxt

    def face(i, x):
        k, c0, fs = x
        if i == 0:
            return (k - 1, C.dst(fs[0]), fs[1:])
        if i == k:
            return (k - 1, c0, fs[:-1])
        return (k - 1, c0, fs[: i - 1] + (C.compose(fs[i], fs[i - 1]),) + fs[i + 1:])

    def degeneracy(j, x):
        k, c0, fs = x
        cj = c0 if j == 0 else C.dst(fs[j - 1])
        return (k + 1, c0, fs[:j] + (C.identity(cj),) + fs[j:])

    return FiniteSimplicialSet.build(lambda k: levels[k], face, degeneracy, top, name=name or f"N({C.name})")


def simplex_category_nerve(W: SimplicialSet, G, act: Callable, d: int) -> FiniteSimplicialSet:
    """Exploratory: nerve of the degree-``≤ d`` truncation of ``Simp_G(W)``.

    Truncation changes the homotopy type; never use this for verification.
    """
    N = nerve(simplex_category_trunc(W, G, act, d), d, name=f"N(Simp≤{d}) [approximate]")
    N.approximate = True
    return N
