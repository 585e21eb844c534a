"""Equivariant retractive spaces ``(Y, r, s)`` over ``(W, G)`` for a constant
finite group ``G``: the presheaf view, cells, tensors, collapse, pullback,
induction, homotopy orbits and exact hom-set counting.

Totals are stored as degreewise tables through a bound; labels are chosen so
that the section image is recognisable (``("b", w)``) in every construction
built here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .sgrp import FiniteGroup, GroupAction, trivial_group
from .sset import (DEFAULT_BOUND, DeltaOperator, FiniteSimplicialSet, GeneratedSimplicialSet, Pushout,
                   SimplicialMap, SimplicialSet, ValidationReport, point, quotient)

Simplex = Hashable


def _base_bound(W: SimplicialSet, bound: int | None) -> int:
    if bound is None:
        bound = DEFAULT_BOUND
    if W.dim_bound is not None:
        bound = min(bound, W.dim_bound)
    return bound


class Base:
    """The pair ``(W, G)``: a simplicial set with a right action of a finite group."""

    def __init__(self, W: SimplicialSet, G: FiniteGroup | None = None, act: Callable | None = None,
                 bound: int | None = None):
        self.W = W
        self.G = G if G is not None else trivial_group()
        self.act = act if act is not None else (lambda x, g: x)
        self.bound = _base_bound(W, bound)

    @classmethod
    def of(cls, W, G=None, act=None, bound=None) -> "Base":
        return W if isinstance(W, Base) else cls(W, G, act, bound)

    def simplices(self, n: int):
        return self.W.simplices(n)

    def apply(self, alpha: DeltaOperator, w):
        return self.W.apply(alpha, w)

    def objects(self, d: int | None = None) -> list[tuple[int, Simplex]]:
        d = self.bound if d is None else d
        return [(n, w) for n in range(d + 1) for w in self.W.simplices(n)]

    def action(self) -> GroupAction:
        return GroupAction(self.G, self.W, self.act)

    def with_bound(self, bound: int) -> "Base":
        return Base(self.W, self.G, self.act, bound)

    def __repr__(self) -> str:
        return f"Base({self.W.name}, {self.G.name}, ≤{self.bound})"


class RetractiveObject:
    """``(Y, r, s)`` over ``(W, G)`` with ``Y`` stored through ``bound``.

    ``act(y, g)`` is the right action on ``Y``; ``r`` and ``s`` are functions on
    simplices.  ``gen_dim`` is the largest dimension of a nondegenerate simplex
    outside ``s(W)`` when known (``None`` if only the truncation is known).
    """

    def __init__(self, base: Base, total: FiniteSimplicialSet, act: Callable, r: Callable, s: Callable,
                 gen_dim: int | None = None, name: str = ""):
        self.base = base
        self.total = total
        self._act = act
        self._r = r
        self._s = s
        self.gen_dim = gen_dim
        self.name = name or total.name

    @classmethod
    def build(cls, base: Base, simplices: Callable[[int], Iterable], face: Callable, degeneracy: Callable,
              act: Callable, r: Callable, s: Callable, bound: int | None = None, gen_dim: int | None = None,
              name: str = "") -> "RetractiveObject":
        b = base.bound if bound is None else min(bound, base.bound)
        total = FiniteSimplicialSet.build(simplices, face, degeneracy, b, name=name)
        return cls(base, total, act, r, s, gen_dim, name)

    # structure ----------------------------------------------------------------

    @property
    def bound(self) -> int:
        return self.total.dim_bound

    @property
    def G(self) -> FiniteGroup:
        return self.base.G

    @property
    def W(self) -> SimplicialSet:
        return self.base.W

    def act(self, y, g):
        return self._act(y, g)

    def r(self, y):
        return self._r(y)

    def s(self, w):
        return self._s(w)

    def face(self, i, y):
        return self.total.face(i, y)

    def degeneracy(self, j, y):
        return self.total.degeneracy(j, y)

    def apply(self, alpha: DeltaOperator, y):
        return self.total.apply(alpha, y)

    def simplices(self, n: int):
        return self.total.simplices(n)

    @cached_property
    def _fibres(self) -> dict:
        out = {}
        for n in range(self.bound + 1):
            for w in self.W.simplices(n):
                out[(n, w)] = []
            for y in self.total.simplices(n):
                out[(n, self.r(y))].append(y)
        return out

    def fibre(self, n: int, w) -> list:
        """``r⁻¹(w)``, basepoint ``s(w)`` included."""
        return self._fibres[(n, w)]

    @cached_property
    def _section_image(self) -> frozenset:
        return frozenset(self.s(w) for n in range(self.bound + 1) for w in self.W.simplices(n))

    def is_base(self, y) -> bool:
        return y in self._section_image

    def relative(self, n: int) -> list:
        """Simplices of ``Y_n`` outside ``s(W_n)``."""
        return [y for y in self.total.simplices(n) if y not in self._section_image]

    def relative_nondegenerate(self, n: int) -> list:
        return [y for y in self.total.nondegenerate(n) if y not in self._section_image]

    def stabilizer(self, y) -> frozenset:
        return frozenset(g for g in self.G.elements if self.act(y, g) == y)

    def orbit_representatives(self, n: int) -> list[tuple[Simplex, dict]]:
        """Orbit representatives of relative nondegenerate ``n``-simplices with their orbit maps ``rep·g``."""
        seen, out = {}, []
        for y in self.relative_nondegenerate(n):
            if y in seen:
                continue
            orbit = {}
            for g in self.G.elements:
                z = self.act(y, g)
                if z not in orbit:
                    orbit[z] = g
                    seen[z] = (y, g)
            out.append((y, orbit))
        return out

    def cell_count(self) -> list[int]:
        """Relative nondegenerate orbits per degree through the bound."""
        return [len(self.orbit_representatives(n)) for n in range(self.bound + 1)]

    def check(self) -> ValidationReport:
        """Simplicial identities, action axioms, ``r ∘ s = id`` and compatibility of ``r``, ``s``."""
        rep = self.total.validate()
        if not rep:
            return rep
        W, G, b = self.W, self.G, self.bound
        checked = rep.checked
        for n in range(b + 1):
            for w in W.simplices(n):
                checked += 1
                if self.r(self.s(w)) != w:
                    return ValidationReport(False, f"r s ≠ id at {w!r}", checked)
                for g in G.elements:
                    checked += 1
                    if self.s(self.base.act(w, g)) != self.act(self.s(w), g):
                        return ValidationReport(False, f"s not equivariant at {w!r}", checked)
                for i in range(n + 1 if n else 0):
                    checked += 1
                    if self.face(i, self.s(w)) != self.s(W.face(i, w)):
                        return ValidationReport(False, f"s does not commute with d_{i} at {w!r}", checked)
            for y in self.total.simplices(n):
                w = self.r(y)
                if W.dim(w) != n:
                    return ValidationReport(False, f"r changes the degree of {y!r}", checked)
                for i in range(n + 1 if n else 0):
                    checked += 1
                    if self.r(self.face(i, y)) != W.face(i, w):
                        return ValidationReport(False, f"r does not commute with d_{i} at {y!r}", checked)
                if n < b:
                    for j in range(n + 1):
                        checked += 1
                        if self.r(self.degeneracy(j, y)) != W.degeneracy(j, w):
                            return ValidationReport(False, f"r does not commute with s_{j} at {y!r}", checked)
                if self.act(y, G.identity) != y:
                    return ValidationReport(False, f"unit moves {y!r}", checked)
                for g in G.elements:
                    z = self.act(y, g)
                    checked += 1
                    if self.r(z) != self.base.act(w, g):
                        return ValidationReport(False, f"r not equivariant at {y!r}", checked)
                    for h in G.elements:
                        if self.act(z, h) != self.act(y, G.mul(g, h)):
                            return ValidationReport(False, f"action not associative at {y!r}", checked)
                    for i in range(n + 1 if n else 0):
                        checked += 1
                        if self.face(i, z) != self.act(self.face(i, y), g):
                            return ValidationReport(False, f"action does not commute with d_{i} at {y!r}", checked)
                    if n < b:
                        for j in range(n + 1):
                            checked += 1
                            if self.degeneracy(j, z) != self.act(self.degeneracy(j, y), g):
                                return ValidationReport(False, f"action does not commute with s_{j} at {y!r}",
                                                        checked)
        return ValidationReport(True, None, checked)

    def __repr__(self) -> str:
        return f"<RetractiveObject {self.name!r} over {self.base!r} counts={[self.total.count(n) for n in range(self.bound + 1)]}>"


# ---------------------------------------------------------------------------
# maps


class RetractiveMap:
    """A morphism in ``R(W, G)``: equivariant, commuting with ``r`` and ``s``."""

    def __init__(self, source: RetractiveObject, target: RetractiveObject, fn: Callable | Mapping, name: str = ""):
        self.source, self.target = source, target
        self._fn = fn.__getitem__ if isinstance(fn, Mapping) else fn
        self.name = name

    def __call__(self, y):
        return self._fn(y)

    def simplicial(self) -> SimplicialMap:
        return SimplicialMap(self.source.total, self.target.total, self._fn, name=self.name)

    def check(self, bijective: bool = False) -> ValidationReport:
        A, B = self.source, self.target
        rep = self.simplicial().check(min(A.bound, B.bound))
        if not rep:
            return rep
        checked = rep.checked
        for n in range(min(A.bound, B.bound) + 1):
            for w in A.W.simplices(n):
                checked += 1
                if self(A.s(w)) != B.s(w):
                    return ValidationReport(False, f"section not preserved at {w!r}", checked)
            images = set()
            for y in A.total.simplices(n):
                z = self(y)
                images.add(z)
                checked += 1
                if B.r(z) != A.r(y):
                    return ValidationReport(False, f"retraction not preserved at {y!r}", checked)
                for g in A.G.elements:
                    checked += 1
                    if self(A.act(y, g)) != B.act(z, g):
                        return ValidationReport(False, f"not equivariant at {y!r}", checked)
            if bijective and (len(images) != A.total.count(n) or len(images) != B.total.count(n)):
                return ValidationReport(False, f"not a bijection in degree {n}", checked)
        return ValidationReport(True, None, checked)


def identity_morphism(Y: RetractiveObject) -> RetractiveMap:
    return RetractiveMap(Y, Y, lambda y: y, name="id")


# ---------------------------------------------------------------------------
# elementary objects


def terminal(base: Base, bound: int | None = None) -> RetractiveObject:
    """``(W, id, id)``; also the initial object."""
    W = base.W
    return RetractiveObject.build(
        base, lambda n: [("b", w) for w in W.simplices(n)],
        lambda i, y: ("b", W.face(i, y[1])), lambda j, y: ("b", W.degeneracy(j, y[1])),
        lambda y, g: ("b", base.act(y[1], g)), lambda y: y[1], lambda w: ("b", w),
        bound=bound, gen_dim=-1, name=f"{W.name}")


def section_map(Y: RetractiveObject, T: RetractiveObject | None = None) -> RetractiveMap:
    """The unique map from the initial object ``(W, id, id)``."""
    T = T or terminal(Y.base, Y.bound)
    return RetractiveMap(T, Y, lambda y: Y.s(y[1]), name="section")


def retraction_map(Y: RetractiveObject, T: RetractiveObject | None = None) -> RetractiveMap:
    T = T or terminal(Y.base, Y.bound)
    return RetractiveMap(Y, T, lambda y: ("b", Y.r(y)), name="retraction")


def _theta_kept(kind: str, n: int, i: int | None) -> Callable[[tuple], bool]:
    full = set(range(n + 1))
    if kind == "cell":
        return lambda th: True
    if kind == "boundary":
        return lambda th: set(th) != full
    if kind == "horn":
        return lambda th: (set(th) | {i}) != full
    raise ValueError(kind)


def _cell(base: Base, n: int, w, kind: str = "cell", i: int | None = None, bound: int | None = None,
          name: str = "") -> RetractiveObject:
    W, G = base.W, base.G
    if n < 0 or w not in set(W.simplices(n)):
        raise ValueError(f"{w!r} is not a {n}-simplex of {W.name or 'the base'}")
    if kind == "horn" and not 0 <= i <= n:
        raise ValueError(f"horn index {i} out of range for n = {n}")
    keep = _theta_kept(kind, n, i)
    cache = {}

    def chi(theta):
        if theta not in cache:
            cache[theta] = W.apply(DeltaOperator(theta, n), w)
        return cache[theta]

    def simplices(k):
        cells = [("c", th, g) for th in itertools.combinations_with_replacement(range(n + 1), k + 1) if keep(th)
                 for g in G.elements]
        return cells + [("b", x) for x in W.simplices(k)]

    def face(j, y):
        if y[0] == "b":
            return ("b", W.face(j, y[1]))
        return ("c", y[1][:j] + y[1][j + 1:], y[2])

    def degeneracy(j, y):
        if y[0] == "b":
            return ("b", W.degeneracy(j, y[1]))
        return ("c", y[1][: j + 1] + y[1][j:], y[2])

    def act(y, h):
        if y[0] == "b":
            return ("b", base.act(y[1], h))
        return ("c", y[1], G.mul(y[2], h))

    def r(y):
        if y[0] == "b":
            return y[1]
        return base.act(chi(y[1]), y[2])

    gen_dim = n if kind == "cell" else n - 1
    label = {"cell": f"Δ[{n},{w!r}]", "boundary": f"∂Δ[{n},{w!r}]", "horn": f"Λ{i}[{n},{w!r}]"}[kind]
    Y = RetractiveObject.build(base, simplices, face, degeneracy, act, r, lambda x: ("b", x), bound=bound,
                               gen_dim=gen_dim, name=name or label)
    Y.cell_data = (kind, n, w, i)
    return Y


def cell(base: Base, n: int, w, bound: int | None = None) -> RetractiveObject:
    """``Δ[n, w] = (Δⁿ × G) ⨿ W`` with retraction ``(θ, g) ↦ W(θ)(w)·g``."""
    return _cell(Base.of(base), n, w, "cell", None, bound)


def boundary_cell(base: Base, n: int, w, bound: int | None = None) -> RetractiveObject:
    return _cell(Base.of(base), n, w, "boundary", None, bound)


def horn_cell(base: Base, n: int, w, i: int, bound: int | None = None) -> RetractiveObject:
    return _cell(Base.of(base), n, w, "horn", i, bound)


def cell_inclusion(source: RetractiveObject, target: RetractiveObject) -> RetractiveMap:
    """Inclusion of a boundary or horn into the cell on the same ``(n, w)`` (labels are shared)."""
    return RetractiveMap(source, target, lambda y: y, name="inclusion")


def cell_map(Y: RetractiveObject, n: int, w, y, bound: int | None = None) -> RetractiveMap:
    """The map ``Δ[n, w] -> Y`` classifying ``y`` in the fibre over ``(n, w)`` (Yoneda)."""
    if Y.r(y) != w:
        raise ValueError(f"{y!r} is not in the fibre over {w!r}")
    C = cell(Y.base, n, w, bound if bound is not None else Y.bound)

    def fn(z):
        if z[0] == "b":
            return Y.s(z[1])
        return Y.act(Y.apply(DeltaOperator(z[1], n), y), z[2])

    return RetractiveMap(C, Y, fn, name=f"χ_{y!r}")


# ---------------------------------------------------------------------------
# the presheaf view


class PointedPresheaf:
    """A pointed-set valued presheaf on ``Simp_G(W)`` through degree ``bound``.

    ``restrict(α, g, w, y)`` evaluates ``F(α, g): F(n, w) -> F(m, W(α)(w)·g)``.
    """

    def __init__(self, base: Base, values: Mapping[tuple, Sequence], basepoints: Mapping[tuple, Hashable],
                 restrict: Callable, bound: int):
        self.base = base
        self.values = {k: tuple(v) for k, v in values.items()}
        self.basepoints = dict(basepoints)
        self._restrict = restrict
        self.bound = bound

    def restrict(self, alpha: DeltaOperator, g, w, y):
        return self._restrict(alpha, g, w, y)

    def value(self, n: int, w) -> tuple:
        return self.values[(n, w)]

    def generating_operators(self, n: int) -> list[DeltaOperator]:
        """Cofaces ``[n-1] -> [n]`` and codegeneracies ``[n+1] -> [n]`` within the bound."""
        ops = [DeltaOperator.coface(n, i) for i in range(n + 1)] if n > 0 else []
        if n < self.bound:
            ops += [DeltaOperator.codegeneracy(n, j) for j in range(n + 1)]
        return ops

    def check(self) -> ValidationReport:
        """Values land in the right fibres, basepoints are preserved and
        ``F((α,g)∘γ) = F(γ)∘F(α,g)`` for every ``(α, g)`` and generator ``γ``.

        Together with ``F(id, e) = id`` this gives functoriality on all composites.
        """
        base, G, W = self.base, self.base.G, self.base.W
        checked = 0
        objects = base.objects(self.bound)
        for n, w in objects:
            ident = DeltaOperator.identity(n)
            for y in self.value(n, w):
                checked += 1
                if self.restrict(ident, G.identity, w, y) != y:
                    return ValidationReport(False, f"F(id, e) moves {y!r}", checked)
        for n, w in objects:
            vals = self.value(n, w)
            for m in range(self.bound + 1):
                for alpha in DeltaOperator.all(m, n):
                    u = W.apply(alpha, w)
                    for g in G.elements:
                        v = base.act(u, g)
                        target = set(self.value(m, v))
                        if self.restrict(alpha, g, w, self.basepoints[(n, w)]) != self.basepoints[(m, v)]:
                            return ValidationReport(False, f"basepoint not preserved by {alpha!r},{g!r}", checked)
                        gens = [(gamma, G.identity) for gamma in self.generating_operators(m)]
                        gens += [(DeltaOperator.identity(m), h) for h in G.elements]
                        for y in vals:
                            z = self.restrict(alpha, g, w, y)
                            if z not in target:
                                return ValidationReport(False, f"F({alpha!r},{g!r}) leaves the fibre", checked)
                            for gamma, h in gens:
                                checked += 1
                                lhs = self.restrict(gamma, h, v, z)
                                rhs = self.restrict(alpha @ gamma, G.mul(g, h), w, y)
                                if lhs != rhs:
                                    return ValidationReport(False, f"not functorial at {alpha!r},{g!r} then "
                                                                   f"{gamma!r},{h!r} on {y!r}", checked)
        return ValidationReport(True, None, checked)

    def total_size(self, n: int) -> int:
        return sum(len(self.value(n, w)) for w in self.base.W.simplices(n))


def to_presheaf(Y: RetractiveObject, d: int | None = None) -> PointedPresheaf:
    """Fibres ``r⁻¹(w)`` with basepoints ``s(w)``; ``F(α, g)(y) = Y(α)(y)·g``."""
    d = Y.bound if d is None else min(d, Y.bound)
    objects = Y.base.objects(d)
    values = {(n, w): Y.fibre(n, w) for n, w in objects}
    basepoints = {(n, w): Y.s(w) for n, w in objects}
    return PointedPresheaf(Y.base, values, basepoints, lambda a, g, w, y: Y.act(Y.apply(a, y), g), d)


def from_presheaf(F: PointedPresheaf, validate: bool = True) -> RetractiveObject:
    """The total space ``⨿_w F(n, w)`` with simplices ``(w, y)``.

    Faces and degeneracies come from ``(δ_i, e)`` and ``(σ_j, e)``, the action from
    ``(id, g)``; ``r`` forgets ``y`` and ``s`` picks basepoints.
    """
    if validate:
        rep = F.check()
        if not rep:
            raise ValueError(f"presheaf is not functorial: {rep.violation}")
    base, W = F.base, F.base.W

    def face(i, p):
        w, y = p
        n = W.dim(w)
        return (W.face(i, w), F.restrict(DeltaOperator.coface(n, i), base.G.identity, w, y))

    def degeneracy(j, p):
        w, y = p
        n = W.dim(w)
        return (W.degeneracy(j, w), F.restrict(DeltaOperator.codegeneracy(n, j), base.G.identity, w, y))

    def act(p, g):
        w, y = p
        return (base.act(w, g), F.restrict(DeltaOperator.identity(W.dim(w)), g, w, y))

    return RetractiveObject.build(
        base, lambda n: [(w, y) for w in W.simplices(n) for y in F.value(n, w)], face, degeneracy, act,
        lambda p: p[0], lambda w: (w, F.basepoints[(W.dim(w), w)]), bound=F.bound, name="∐F")


def presheaf_iso_report(F1: PointedPresheaf, F2: PointedPresheaf, phi: Callable) -> ValidationReport:
    """``phi(n, w, y)`` is a natural bijection ``F1 -> F2`` preserving basepoints."""
    base, G, W = F1.base, F1.base.G, F1.base.W
    checked = 0
    for n, w in base.objects(min(F1.bound, F2.bound)):
        v1, v2 = F1.value(n, w), F2.value(n, w)
        images = {phi(n, w, y) for y in v1}
        if len(images) != len(v1) or images != set(v2):
            return ValidationReport(False, f"not a bijection at {(n, w)!r}", checked)
        if phi(n, w, F1.basepoints[(n, w)]) != F2.basepoints[(n, w)]:
            return ValidationReport(False, f"basepoint not preserved at {(n, w)!r}", checked)
        ops = [DeltaOperator.coface(n, i) for i in range(n + 1)] if n > 0 else []
        if n < min(F1.bound, F2.bound):
            ops += [DeltaOperator.codegeneracy(n, j) for j in range(n + 1)]
        gens = [(o, G.identity) for o in ops] + [(DeltaOperator.identity(n), g) for g in G.elements]
        for alpha, g in gens:
            m = alpha.domain
            v = base.act(W.apply(alpha, w), g)
            for y in v1:
                checked += 1
                if phi(m, v, F1.restrict(alpha, g, w, y)) != F2.restrict(alpha, g, w, phi(n, w, y)):
                    return ValidationReport(False, f"not natural along {alpha!r},{g!r} at {(n, w)!r}", checked)
    return ValidationReport(True, None, checked)


def roundtrip_reports(Y: RetractiveObject) -> tuple[ValidationReport, ValidationReport]:
    """Both round trips of the presheaf equivalence, as explicit isomorphisms.

    ``from_presheaf(to_presheaf(Y)) -> Y`` is ``(w, y) ↦ y``;
    ``F -> to_presheaf(from_presheaf(F))`` is ``y ↦ (w, y)``.
    """
    F = to_presheaf(Y)
    Y2 = from_presheaf(F)
    first = RetractiveMap(Y2, Y, lambda p: p[1]).check(bijective=True)
    F2 = to_presheaf(Y2)
    second = presheaf_iso_report(F, F2, lambda n, w, y: (w, y))
    return first, second


def representable(base: Base, n: int, w, bound: int | None = None) -> PointedPresheaf:
    """``Simp_G(W)(-, (n, w))₊``: morphisms into ``(n, w)`` plus a basepoint."""
    base = Base.of(base)
    d = base.bound if bound is None else min(bound, base.bound)
    W, G = base.W, base.G
    values, basepoints = {}, {}
    for m, v in base.objects(d):
        vals = [("+",)]
        for alpha in DeltaOperator.all(m, n):
            u = W.apply(alpha, w)
            for g in G.elements:
                if base.act(u, g) == v:
                    vals.append((alpha.values, g))
        values[(m, v)] = vals
        basepoints[(m, v)] = ("+",)

    def restrict(alpha, g, v, y):
        if y == ("+",):
            return y
        beta, h = y
        return (tuple(beta[k] for k in alpha.values), G.mul(h, g))

    return PointedPresheaf(base, values, basepoints, restrict, d)


# ---------------------------------------------------------------------------
# colimits


def pushout(f: RetractiveMap, g: RetractiveMap, name: str = "") -> tuple[RetractiveObject, RetractiveMap,
                                                                          RetractiveMap, Pushout]:
    """Pushout in ``R(W, G)``, computed on totals; returns ``(P, inl, inr, raw)``."""
    A, B, C = f.source, f.target, g.target
    b = min(A.bound, B.bound, C.bound)
    raw = Pushout(f.simplicial(), g.simplicial(), b)
    Q = raw.space
    rep_of = {}
    for n in range(b + 1):
        for x in B.total.simplices(n):
            rep_of.setdefault(raw.inl(x), ("B", x))
        for x in C.total.simplices(n):
            rep_of.setdefault(raw.inr(x), ("C", x))

    def act(q, h):
        tag, x = rep_of[q]
        return raw.inl(B.act(x, h)) if tag == "B" else raw.inr(C.act(x, h))

    def r(q):
        tag, x = rep_of[q]
        return B.r(x) if tag == "B" else C.r(x)

    dims = [d for d in (B.gen_dim, C.gen_dim) if d is not None]
    P = RetractiveObject(B.base, Q, act, r, lambda w: raw.inl(B.s(w)),
                         gen_dim=max(dims) if len(dims) == 2 else None, name=name or f"{B.name}⊔{C.name}")
    return P, RetractiveMap(B, P, raw.inl, name="inl"), RetractiveMap(C, P, raw.inr, name="inr"), raw


def wedge(*objects: RetractiveObject) -> RetractiveObject:
    """Fibrewise coproduct ``Y_1 ∪_W Y_2 ∪_W …``."""
    Y = objects[0]
    for Z in objects[1:]:
        T = terminal(Y.base, min(Y.bound, Z.bound))
        Y, _, _, _ = pushout(section_map(Y, T), section_map(Z, T), name=f"{Y.name}∨{Z.name}")
    return Y


def fibrewise_pushout_report(f: RetractiveMap, g: RetractiveMap) -> ValidationReport:
    """Compare the pushout of totals with the valuewise pushout of fibres.

    For every ``(n, w)`` the pointed-set pushout of ``F_B(n,w) <- F_A(n,w) -> F_C(n,w)``
    maps bijectively onto the fibre of the total pushout over ``w``.
    """
    P, inl, inr, _ = pushout(f, g)
    A, B, C = f.source, f.target, g.target
    checked = 0
    for n, w in P.base.objects(P.bound):
        parent = {}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for y in B.fibre(n, w):
            parent[("B", y)] = ("B", y)
        for y in C.fibre(n, w):
            parent[("C", y)] = ("C", y)
        for a in A.fibre(n, w):
            ra, rb = find(("B", f(a))), find(("C", g(a)))
            if ra != rb:
                parent[ra] = rb
        classes = {}
        for x in parent:
            classes.setdefault(find(x), []).append(x)
        images = set()
        for members in classes.values():
            imgs = {inl(x[1]) if x[0] == "B" else inr(x[1]) for x in members}
            checked += 1
            if len(imgs) != 1:
                return ValidationReport(False, f"valuewise class splits in the total pushout at {(n, w)!r}", checked)
            images |= imgs
        if len(images) != len(classes) or images != set(P.fibre(n, w)):
            return ValidationReport(False, f"fibre of the pushout differs from the valuewise pushout at {(n, w)!r}",
                                    checked)
    return ValidationReport(True, None, checked)


# ---------------------------------------------------------------------------
# tensor with a simplicial set


def tensor(Y: RetractiveObject, K: SimplicialSet, bound: int | None = None) -> RetractiveObject:
    """``(Y × K) ∪_{W × K} W``: pairs ``(y, k)`` with ``y ∉ s(W)``, the rest collapsed onto ``W``."""
    b = Y.bound if bound is None else min(bound, Y.bound)
    if K.dim_bound is not None:
        b = min(b, K.dim_bound)

    def simplices(n):
        return [("t", y, k) for y in Y.relative(n) for k in K.simplices(n)] + [("b", w) for w in Y.W.simplices(n)]

    def wrap(y, k):
        return ("b", Y.r(y)) if Y.is_base(y) else ("t", y, k)

    def face(i, p):
        if p[0] == "b":
            return ("b", Y.W.face(i, p[1]))
        return wrap(Y.face(i, p[1]), K.face(i, p[2]))

    def degeneracy(j, p):
        if p[0] == "b":
            return ("b", Y.W.degeneracy(j, p[1]))
        return ("t", Y.degeneracy(j, p[1]), K.degeneracy(j, p[2]))

    def act(p, g):
        if p[0] == "b":
            return ("b", Y.base.act(p[1], g))
        return ("t", Y.act(p[1], g), p[2])

    def r(p):
        return p[1] if p[0] == "b" else Y.r(p[1])

    kdim = None
    if isinstance(K, GeneratedSimplicialSet):
        kdim = K.max_generator_dim()
    gen_dim = Y.gen_dim + kdim if Y.gen_dim is not None and kdim is not None else None
    return RetractiveObject.build(Y.base, simplices, face, degeneracy, act, r, lambda w: ("b", w), bound=b,
                                  gen_dim=gen_dim, name=f"{Y.name}⊗{K.name}")


# ---------------------------------------------------------------------------
# change of base


def point_base(G: FiniteGroup, bound: int = DEFAULT_BOUND) -> Base:
    return Base(point(), G, lambda x, g: x, bound)


def collapse(Y: RetractiveObject) -> RetractiveObject:
    """``Y ↦ Y/s(P)`` as an object over ``(*, G)``."""
    pt = point_base(Y.G, Y.bound)
    star = {n: pt.W.simplices(n)[0] for n in range(Y.bound + 1)}

    def wrap(y):
        return ("b", star[Y.total.dim(y)]) if Y.is_base(y) else ("q", y)

    def simplices(n):
        return [("q", y) for y in Y.relative(n)] + [("b", star[n])]

    def face(i, p):
        return ("b", star[pt.W.dim(p[1]) - 1]) if p[0] == "b" else wrap(Y.face(i, p[1]))

    def degeneracy(j, p):
        return ("b", star[pt.W.dim(p[1]) + 1]) if p[0] == "b" else ("q", Y.degeneracy(j, p[1]))

    def act(p, g):
        return p if p[0] == "b" else ("q", Y.act(p[1], g))

    def r(p):
        return p[1] if p[0] == "b" else star[Y.total.dim(p[1])]

    return RetractiveObject.build(pt, simplices, face, degeneracy, act, r, lambda w: ("b", w), bound=Y.bound,
                                  gen_dim=Y.gen_dim, name=f"{Y.name}/{Y.W.name}")


@dataclass
class BundleMap:
    """A projection ``ξ: P -> X`` constant on the orbits of a free action on ``P``."""

    P: SimplicialSet
    action: GroupAction
    X: SimplicialSet
    xi: Callable

    def base_P(self, bound: int) -> Base:
        return Base(self.P, self.action.group, self.action, bound)

    def base_X(self, bound: int) -> Base:
        return Base(self.X, trivial_group(), None, bound)

    def check(self, bound: int) -> ValidationReport:
        rep = SimplicialMap(self.P, self.X, self.xi).check(bound)
        if not rep:
            return rep
        for n in range(bound + 1):
            for p in self.P.simplices(n):
                for g in self.action.group.elements:
                    if self.xi(self.action(p, g)) != self.xi(p):
                        return ValidationReport(False, f"projection not constant on the orbit of {p!r}")
        if not self.action.is_free(bound):
            return ValidationReport(False, "action is not free")
        return ValidationReport(True, None, rep.checked)


def pullback(Y: RetractiveObject, bundle: BundleMap) -> RetractiveObject:
    """``Y ↦ Y ×_X P`` over ``(P, G)``: simplices ``(y, p)`` with ``r(y) = ξ(p)``."""
    b = Y.bound
    base = bundle.base_P(b)
    P, xi = bundle.P, bundle.xi

    def simplices(n):
        return [("p", y, p) for p in P.simplices(n) for y in Y.fibre(n, xi(p))]

    return RetractiveObject.build(
        base, simplices,
        lambda i, t: ("p", Y.face(i, t[1]), P.face(i, t[2])),
        lambda j, t: ("p", Y.degeneracy(j, t[1]), P.degeneracy(j, t[2])),
        lambda t, g: ("p", t[1], bundle.action(t[2], g)),
        lambda t: t[2], lambda p: ("p", Y.s(xi(p)), p),
        bound=b, gen_dim=Y.gen_dim, name=f"Ξ*{Y.name}")


def induce(Y: RetractiveObject, G: FiniteGroup, act: Callable) -> RetractiveObject:
    """``(Y × G) ∪_{W × G} W`` along the action map ``W × G -> W``."""
    if not Y.G.is_trivial:
        raise ValueError("induction starts from an object with trivial group")
    base = Base(Y.W, G, act, Y.bound)

    def wrap(y, g):
        return ("b", act(Y.r(y), g)) if Y.is_base(y) else ("i", y, g)

    def simplices(n):
        return [("i", y, g) for y in Y.relative(n) for g in G.elements] + [("b", w) for w in Y.W.simplices(n)]

    def face(i, t):
        return ("b", Y.W.face(i, t[1])) if t[0] == "b" else wrap(Y.face(i, t[1]), t[2])

    def degeneracy(j, t):
        return ("b", Y.W.degeneracy(j, t[1])) if t[0] == "b" else ("i", Y.degeneracy(j, t[1]), t[2])

    def r(t):
        return t[1] if t[0] == "b" else act(Y.r(t[1]), t[2])

    def act_t(t, h):
        return ("b", act(t[1], h)) if t[0] == "b" else ("i", t[1], G.mul(t[2], h))

    return RetractiveObject.build(base, simplices, face, degeneracy, act_t, r, lambda w: ("b", w), bound=Y.bound,
                                  gen_dim=Y.gen_dim, name=f"G*{Y.name}")


def forget_group(Y: RetractiveObject) -> RetractiveObject:
    """The same triple viewed over ``(W, 1)``."""
    return RetractiveObject(Base(Y.W, trivial_group(), None, Y.bound), Y.total, lambda y, g: y, Y.r, Y.s,
                            Y.gen_dim, Y.name)


# ---------------------------------------------------------------------------
# homotopy orbits


def homotopy_orbits(Y: SimplicialSet, action: GroupAction, bound: int | None = None) -> FiniteSimplicialSet:
    """Diagonal of ``[p] ↦ N(Tr_G(Y_p))``.

    An ``n``-simplex is ``(y, (h_1, …, h_n))`` with ``y ∈ Y_n`` the first object of
    the chain ``c_0 -> … -> c_n``, ``c_{i-1} = c_i·h_i``.  Faces apply ``d_i`` of
    ``Y`` to every object and then the nerve face ``d_i``.
    """
    G = action.group
    b = Y.bound(bound)

    def simplices(n):
        return [(y, hs) for y in Y.simplices(n) for hs in itertools.product(G.elements, repeat=n)]

    def face(i, x):
        y, hs = x
        n = len(hs)
        c0 = Y.face(i, y)
        if i == 0:
            return (action(c0, G.inv(hs[0])), hs[1:])
        if i == n:
            return (c0, hs[:-1])
        return (c0, hs[: i - 1] + (G.mul(hs[i], hs[i - 1]),) + hs[i + 1:])

    def degeneracy(j, x):
        y, hs = x
        return (Y.degeneracy(j, y), hs[:j] + (G.identity,) + hs[j:])

    return FiniteSimplicialSet.build(simplices, face, degeneracy, b, name=f"{Y.name}_h{G.name}")


# ---------------------------------------------------------------------------
# hom-sets


class HomSizeError(OverflowError):
    pass


def _generator_data(A: RetractiveObject, d: int):
    if A.gen_dim is None:
        raise ValueError("source has no known generator dimension")
    if A.gen_dim > d or d > A.bound:
        raise ValueError(f"degree bound {d} does not cover the source generators (dimension {A.gen_dim}, "
                         f"stored through {A.bound})")
    reps, orbit_of = [], {}
    for n in range(A.gen_dim + 1):
        for y, orbit in A.orbit_representatives(n):
            reps.append(y)
            for z, g in orbit.items():
                orbit_of[z] = (y, g)
    return reps, orbit_of


def _extend(A: RetractiveObject, B: RetractiveObject, images: dict, orbit_of: dict):
    def fn(z):
        word, z0 = A.total.decompose(z)
        if A.is_base(z0):
            return B.s(A.r(z))
        rep, g = orbit_of[z0]
        val = B.act(images[rep], g)
        for j in reversed(word):
            val = B.degeneracy(j, val)
        return val
    return fn


def hom_enumerate(A: RetractiveObject, B: RetractiveObject, d: int | None = None, limit: int = 10**6,
                  verify: bool = False):
    """Yield every morphism ``A -> B`` as a dict of generator images.

    Generators are orbit representatives of the nondegenerate simplices of ``A``
    outside ``s(W)``; images must lie over the same base simplex, have a larger
    stabiliser and match on faces.
    """
    d = A.bound if d is None else d
    if B.bound < d:
        raise ValueError(f"target is stored only through degree {B.bound}")
    reps, orbit_of = _generator_data(A, d)
    candidates = []
    total = 1
    for x in reps:
        n = A.total.dim(x)
        stab = A.stabilizer(x)
        cands = [y for y in B.fibre(n, A.r(x)) if stab <= B.stabilizer(y)]
        candidates.append(cands)
        total *= max(1, len(cands))
        if total > limit:
            raise HomSizeError(f"more than {limit} candidate assignments")
    images: dict = {}
    ext = _extend(A, B, images, orbit_of)

    def rec(k):
        if k == len(reps):
            if verify:
                rep = RetractiveMap(A, B, ext).check()
                if not rep:
                    raise AssertionError(f"enumerated assignment is not a morphism: {rep.violation}")
            yield dict(images)
            return
        x = reps[k]
        n = A.total.dim(x)
        for y in candidates[k]:
            images[x] = y
            if all(ext(A.face(i, x)) == B.face(i, y) for i in range(n + 1 if n else 0)):
                yield from rec(k + 1)
        images.pop(x, None)

    yield from rec(0)


def hom_count(A: RetractiveObject, B: RetractiveObject, d: int | None = None, limit: int = 10**6) -> int:
    """Exact number of morphisms ``A -> B`` in ``R(W, G)``."""
    return sum(1 for _ in hom_enumerate(A, B, d, limit))


def morphism_from_images(A: RetractiveObject, B: RetractiveObject, images: Mapping) -> RetractiveMap:
    _, orbit_of = _generator_data(A, A.bound)
    return RetractiveMap(A, B, _extend(A, B, dict(images), orbit_of))
