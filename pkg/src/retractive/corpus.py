"""Standard small spaces, bundles and random instances used by the suites."""

from __future__ import annotations

import itertools
import random
from typing import Hashable

from .retract import Base, BundleMap, RetractiveObject, boundary_cell, cell, horn_cell, point_base, wedge
from .sgrp import Bundle, FiniteGroup, GroupAction, cyclic_group, eg_bundle, trivial_group
from .sset import GeneratedSimplicialSet, NormalSimplex, SimplicialSet, ns, point, standard_simplex


def circle() -> GeneratedSimplicialSet:
    return GeneratedSimplicialSet({"v": 0, "e": 1}, {"e": (ns("v", 0), ns("v", 0))}, name="S1")


def wedge_of_circles() -> GeneratedSimplicialSet:
    v = ns("v", 0)
    return GeneratedSimplicialSet({"v": 0, "a": 1, "b": 1}, {"a": (v, v), "b": (v, v)}, name="S1vS1")


def projective_plane() -> GeneratedSimplicialSet:
    v, a = ns("v", 0), ns("a", 1)
    return GeneratedSimplicialSet({"v": 0, "a": 1, "s": 2},
                                  {"a": (v, v), "s": (a, ns("v", 0, 0), a)}, name="RP2")


def torus() -> GeneratedSimplicialSet:
    """One vertex, edges ``a, b, c`` (``c`` the diagonal), triangles ``s, t``."""
    v = ns("v", 0)
    a, b, c = ns("a", 1), ns("b", 1), ns("c", 1)
    return GeneratedSimplicialSet({"v": 0, "a": 1, "b": 1, "c": 1, "s": 2, "t": 2},
                                  {"a": (v, v), "b": (v, v), "c": (v, v), "s": (b, c, a), "t": (a, c, b)},
                                  name="T2")


def sphere2() -> GeneratedSimplicialSet:
    """``Δ² / ∂Δ²``."""
    return GeneratedSimplicialSet({"v": 0, "s": 2}, {"s": (ns("v", 0, 0),) * 3}, name="S2")


def _relabel(x: NormalSimplex, table: dict) -> NormalSimplex:
    return NormalSimplex(x.degeneracies, table[x.generator], x.gen_dim)


def circle_double_cover() -> BundleMap:
    """The connected double cover of ``S1`` (a 2-gon), ``Z/2`` swapping the sheets."""
    v0, v1 = ns("v0", 0), ns("v1", 0)
    P = GeneratedSimplicialSet({"v0": 0, "v1": 0, "a": 1, "b": 1}, {"a": (v1, v0), "b": (v0, v1)}, name="S1~")
    swap = {"v0": "v1", "v1": "v0", "a": "b", "b": "a"}
    down = {"v0": "v", "v1": "v", "a": "e", "b": "e"}
    act = GroupAction(cyclic_group(2), P, lambda x, g: _relabel(x, swap) if g else x, free=True)
    return BundleMap(P, act, circle(), lambda x: _relabel(x, down))


def sphere_double_cover(tamper: bool = False) -> BundleMap:
    """``S2 -> RP2`` with two triangles; ``tamper`` breaks one face to exercise validation."""
    v0, v1, a, b = ns("v0", 0), ns("v1", 0), ns("a", 1), ns("b", 1)
    faces = {"a": (v1, v0), "b": (v0, v1), "t0": (b, ns("v0", 0, 0), a), "t1": (a, ns("v1", 0, 0), b)}
    if tamper:
        faces["t1"] = (a, ns("v0", 0, 0), b)
    P = GeneratedSimplicialSet({"v0": 0, "v1": 0, "a": 1, "b": 1, "t0": 2, "t1": 2}, faces, name="S2~")
    swap = {"v0": "v1", "v1": "v0", "a": "b", "b": "a", "t0": "t1", "t1": "t0"}
    down = {"v0": "v", "v1": "v", "a": "a", "b": "a", "t0": "s", "t1": "s"}
    act = GroupAction(cyclic_group(2), P, lambda x, g: _relabel(x, swap) if g else x, free=True)
    return BundleMap(P, act, projective_plane(), lambda x: _relabel(x, down))


def bundle_map(bundle: Bundle) -> BundleMap:
    return BundleMap(bundle.total, bundle.action, bundle.base, bundle.projection)


def eg_bundle_map(H: FiniteGroup | None = None, bound: int = 4) -> BundleMap:
    return bundle_map(eg_bundle(H if H is not None else cyclic_group(2), bound))


def named_spaces() -> dict[str, SimplicialSet]:
    return {"S1": circle(), "S1vS1": wedge_of_circles(), "RP2": projective_plane(), "T2": torus(),
            "S2": sphere2()}


# reduced spaces with their first homology
PI1_TABLE = {"S1": [0], "S1vS1": [0, 0], "RP2": [2], "T2": [0, 0]}


def pointed(X: SimplicialSet, basepoint: Hashable, bound: int = 4) -> RetractiveObject:
    """``X`` as a retractive object over the point, section at the basepoint vertex."""
    base = point_base(trivial_group(), bound)
    P = point()
    x0 = X.gen(basepoint)
    b = min(bound, X.dim_bound) if X.dim_bound is not None else bound
    return RetractiveObject.build(base, lambda n: list(X.simplices(n)), X.face, X.degeneracy, lambda y, g: y,
                                  lambda y: _star(P, X.dim(y)), lambda w: _fill(X, x0, w.degree),
                                  bound=b, gen_dim=max(X.generators.values()), name=f"{X.name}₊")


def _star(P: SimplicialSet, n: int):
    return P.simplices(n)[0]


def _fill(X: SimplicialSet, x0, n: int):
    """``s_0^n x0``."""
    y = x0
    for _ in range(n):
        y = X.degeneracy(0, y)
    return y


def smash_with_group(X: SimplicialSet, basepoint: Hashable, G: FiniteGroup, bound: int = 4) -> RetractiveObject:
    """``X ∧ G₊ = (X × G) / (x0 × G)`` over ``(*, G)``, ``G`` acting on the second factor."""
    base = point_base(G, bound)
    x0 = X.gen(basepoint)
    P = point()
    b = min(bound, X.dim_bound) if X.dim_bound is not None else bound

    def is_base(x):
        return x == _fill(X, x0, x.degree)

    def wrap(x, g):
        return ("b", _star(P, x.degree)) if is_base(x) else ("q", x, g)

    def simplices(n):
        return [("q", x, g) for x in X.simplices(n) if not is_base(x) for g in G.elements] + [("b", _star(P, n))]

    def face(i, t):
        return ("b", P.face(i, t[1])) if t[0] == "b" else wrap(X.face(i, t[1]), t[2])

    def degeneracy(j, t):
        return ("b", P.degeneracy(j, t[1])) if t[0] == "b" else ("q", X.degeneracy(j, t[1]), t[2])

    def act(t, h):
        return t if t[0] == "b" else ("q", t[1], G.mul(t[2], h))

    def r(t):
        return t[1] if t[0] == "b" else _star(P, t[1].degree)

    return RetractiveObject.build(base, simplices, face, degeneracy, act, r, lambda w: ("b", w), bound=b,
                                  gen_dim=max(X.generators.values()), name=f"{X.name}∧{G.name}₊")


# ---------------------------------------------------------------------------
# random instances


def complex_space(faces: list[tuple[int, ...]], copies: int = 1, name: str = "") -> GeneratedSimplicialSet:
    """An ordered simplicial complex (closed under faces), ``copies`` times; generators ``(c, vertices)``."""
    gens, face_data = {}, {}
    for c in range(copies):
        for s in faces:
            g = (c, s)
            gens[g] = len(s) - 1
            if len(s) > 1:
                face_data[g] = tuple(ns((c, s[:i] + s[i + 1:]), len(s) - 2) for i in range(len(s)))
    return GeneratedSimplicialSet(gens, face_data, name=name or f"K{len(faces)}x{copies}")


def _random_complex(rng: random.Random, budget: int) -> list[tuple[int, ...]]:
    nv = rng.randint(1, min(3, budget))
    faces = [(v,) for v in range(nv)]
    edges = [e for e in itertools.combinations(range(nv), 2) if rng.random() < 0.6]
    for e in edges:
        if len(faces) < budget:
            faces.append(e)
    if nv == 3 and len(faces) == 6 and budget >= 7:
        faces.append((0, 1, 2))
    return faces


def random_base(rng: random.Random, bound: int = 3, max_nondeg: int = 6, max_group: int = 3) -> Base:
    """A random ``(W, G)``: ``|G| ≤ max_group``, at most ``max_nondeg`` nondegenerate simplices.

    ``G`` acts either trivially or by cycling ``|G|`` copies of a complex.
    """
    k = rng.randint(1, max_group)
    G = cyclic_group(k)
    if k > 1 and rng.random() < 0.5:
        faces = _random_complex(rng, max_nondeg // k)
        W = complex_space(faces, k)

        def act(x, g):
            c, s = x.generator
            return NormalSimplex(x.degeneracies, ((c + g) % k, s), x.gen_dim)
        return Base(W, G, act, bound)
    W = complex_space(_random_complex(rng, max_nondeg))
    return Base(W, G, None, bound)


def random_object(rng: random.Random, base: Base, pieces: int = 2, max_cell_dim: int = 1) -> RetractiveObject:
    """A wedge of random cells, boundary cells and horns over ``base``."""
    parts = []
    for _ in range(pieces):
        n = rng.randint(0, max_cell_dim)
        ws = [w for w in base.W.simplices(n)]
        w = rng.choice(ws)
        kind = rng.choice(["cell", "boundary", "horn"] if n > 0 else ["cell", "boundary"])
        if kind == "cell":
            parts.append(cell(base, n, w))
        elif kind == "boundary":
            parts.append(boundary_cell(base, n, w))
        else:
            parts.append(horn_cell(base, n, w, rng.randint(0, n)))
    return wedge(*parts)


def random_instances(seed: int = 0, count: int = 20, bound: int = 3) -> list[tuple[Base, RetractiveObject]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        base = random_base(rng, bound)
        out.append((base, random_object(rng, base)))
    return out


def simplex_base(n: int = 1, G: FiniteGroup | None = None, bound: int = 3) -> Base:
    return Base(standard_simplex(n), G, None, bound)
