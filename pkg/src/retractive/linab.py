"""Abelian group objects over ``(W, G)``: presheaves of finitely generated
abelian groups on ``Simp_G(W)`` given by cyclic orders and integer matrices.

Covers linearisation, abelian cells, fibrewise tensors, ``⊕_W``, the
collapse/coinduction adjunction ``(C, T)``, pullback along a bundle, the
homology coefficient functor and exact hom groups out of linearised objects.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Hashable, Mapping, Sequence

from .homalg import (Lattice, Matrix, SimplicialAbelianGroup, Subquotient, block_matrix, identity,
                     induced_is_isomorphism, kronecker, matmul, moore_map_verdicts, reduce_mod, tensor_orders,
                     transpose, zeros)
from .retract import Base, BundleMap, RetractiveObject, cell, collapse, point_base, pullback
from .sgrp import FiniteGroup
from .sset import DeltaOperator, SimplicialSet, ValidationReport


def _mm(A: Matrix, B: Matrix, inner: int, cols: int) -> Matrix:
    return matmul(A, B, inner=inner, cols=cols)


def _congruent(A: Matrix, B: Matrix, orders: Sequence[int]) -> bool:
    for ra, rb, d in zip(A, B, orders):
        for x, y in zip(ra, rb):
            if (x - y) % d if d else x != y:
                return False
    return True


class AbelianObject:
    """A functor ``Simp_G(W)^op -> Ab`` evaluated lazily.

    ``orders(n, w)`` describes ``Y(n, w) = ⊕ Z/orders[i]``; ``map(α, g, w)`` is
    the matrix of ``Y(α, g): Y(n, w) -> Y(m, W(α)(w)·g)``.
    """

    def __init__(self, base: Base, orders: Callable[[int, Hashable], Sequence[int]],
                 restrict: Callable[[DeltaOperator, Hashable, Hashable], Matrix], bound: int, name: str = ""):
        self.base = base
        self._orders = orders
        self._restrict = restrict
        self.bound = min(bound, base.bound)
        self.name = name
        self._ocache: dict = {}
        self._mcache: dict = {}

    @property
    def G(self) -> FiniteGroup:
        return self.base.G

    @property
    def W(self) -> SimplicialSet:
        return self.base.W

    def orders(self, n: int, w) -> list[int]:
        key = (n, w)
        if key not in self._ocache:
            self._ocache[key] = list(self._orders(n, w))
        return self._ocache[key]

    def rank(self, n: int, w) -> int:
        return len(self.orders(n, w))

    def target(self, alpha: DeltaOperator, g, w) -> tuple[int, Hashable]:
        return alpha.domain, self.base.act(self.W.apply(alpha, w), g)

    def map(self, alpha: DeltaOperator, g, w) -> Matrix:
        key = (alpha, g, w)
        if key not in self._mcache:
            m, v = self.target(alpha, g, w)
            M = self._restrict(alpha, g, w)
            self._mcache[key] = reduce_mod(M, self.orders(m, v)) if M else zeros(0, self.rank(alpha.codomain, w))
        return self._mcache[key]

    def invariants(self, n: int, w) -> list[int]:
        from .homalg import normalise_orders
        return normalise_orders(self.orders(n, w))

    def relations(self, n: int, w) -> Lattice:
        return Lattice.diagonal(self.orders(n, w))

    def generating(self, n: int, w=None) -> list[tuple[DeltaOperator, Hashable]]:
        ops = [DeltaOperator.coface(n, i) for i in range(n + 1)] if n > 0 else []
        if n < self.bound:
            ops += [DeltaOperator.codegeneracy(n, j) for j in range(n + 1)]
        return [(o, self.G.identity) for o in ops] + [(DeltaOperator.identity(n), g) for g in self.G.elements]

    def check(self, exhaustive: bool = True) -> ValidationReport:
        """Well-definedness modulo relations and functoriality against generators.

        For every ``(α, g)`` into ``(n, w)`` and generator ``γ`` at its source,
        ``Y(γ) Y(α, g) = Y((α, g) ∘ γ)``; with ``Y(id, e) = id`` this is full
        functoriality.
        """
        base, G, W = self.base, self.G, self.W
        checked = 0
        for n, w in base.objects(self.bound):
            k = self.rank(n, w)
            if not _congruent(self.map(DeltaOperator.identity(n), G.identity, w), identity(k), self.orders(n, w)):
                return ValidationReport(False, f"Y(id, e) ≠ id at {(n, w)!r}", checked)
            rels = self.relations(n, w).basis
            ms = range(self.bound + 1) if exhaustive else [n]
            for m in ms:
                for alpha in DeltaOperator.all(m, n):
                    for g in G.elements:
                        m_, v = self.target(alpha, g, w)
                        M = self.map(alpha, g, w)
                        for r in rels:
                            img = [sum(a * b for a, b in zip(row, r)) for row in M]
                            checked += 1
                            if img not in self.relations(m_, v):
                                return ValidationReport(False, f"Y({alpha!r},{g!r}) not well defined at {(n, w)!r}",
                                                        checked)
                        for gamma, h in self.generating(m):
                            checked += 1
                            lhs = _mm(self.map(gamma, h, v), M, self.rank(m, v), k)
                            rhs = self.map(alpha @ gamma, G.mul(g, h), w)
                            l_, u = self.target(gamma, h, v)
                            if not _congruent(lhs, rhs, self.orders(l_, u)):
                                return ValidationReport(False, f"not functorial at {(n, w)!r}: {alpha!r},{g!r} "
                                                               f"then {gamma!r},{h!r}", checked)
        return ValidationReport(True, None, checked)

    def __repr__(self) -> str:
        return f"<AbelianObject {self.name!r} over {self.base!r}>"


@dataclass
class NatTrans:
    """Components ``component(n, w): Y(n, w) -> Z(n, w)``."""

    source: AbelianObject
    target: AbelianObject
    component: Callable[[int, Hashable], Matrix]

    def check(self, iso: bool = False) -> ValidationReport:
        """Naturality along generating morphisms (and componentwise bijectivity if ``iso``)."""
        Y, Z = self.source, self.target
        checked = 0
        for n, w in Y.base.objects(min(Y.bound, Z.bound)):
            phi = self.component(n, w)
            if iso:
                full_y, full_z = Lattice.full(Y.rank(n, w)), Lattice.full(Z.rank(n, w))
                checked += 1
                if not induced_is_isomorphism(phi or zeros(Z.rank(n, w), Y.rank(n, w)), full_y,
                                              Y.relations(n, w), full_z, Z.relations(n, w)):
                    return ValidationReport(False, f"component at {(n, w)!r} is not an isomorphism", checked)
            for gamma, h in Y.generating(n, w):
                m, v = Y.target(gamma, h, w)
                checked += 1
                lhs = _mm(self.component(m, v), Y.map(gamma, h, w), Y.rank(m, v), Y.rank(n, w))
                rhs = _mm(Z.map(gamma, h, w), phi, Z.rank(n, w), Y.rank(n, w))
                if not _congruent(lhs, rhs, Z.orders(m, v)):
                    return ValidationReport(False, f"not natural along {gamma!r},{h!r} at {(n, w)!r}", checked)
        return ValidationReport(True, None, checked)


def identity_nat(Y: AbelianObject) -> NatTrans:
    return NatTrans(Y, Y, lambda n, w: identity(Y.rank(n, w)))


def compose_nat(f: NatTrans, g: NatTrans) -> NatTrans:
    """``f ∘ g``."""
    return NatTrans(g.source, f.target, lambda n, w: _mm(f.component(n, w), g.component(n, w),
                                                       g.target.rank(n, w), g.source.rank(n, w)))


def is_identity_nat(f: NatTrans) -> bool:
    Y = f.source
    return all(_congruent(f.component(n, w), identity(Y.rank(n, w)), Y.orders(n, w))
               for n, w in Y.base.objects(Y.bound))


# ---------------------------------------------------------------------------
# linearisation


class Linearised(AbelianObject):
    """``Z̃_W(Y)``: free on each fibre minus its basepoint."""

    def __init__(self, Y: RetractiveObject, bound: int | None = None):
        self.source = Y
        b = Y.bound if bound is None else min(bound, Y.bound)
        self._basis: dict = {}
        super().__init__(Y.base, lambda n, w: [0] * len(self.basis(n, w)), self._restrict_fn, b,
                         name=f"Z̃{Y.name}")

    def basis(self, n: int, w) -> list:
        key = (n, w)
        if key not in self._basis:
            bp = self.source.s(w)
            self._basis[key] = [y for y in self.source.fibre(n, w) if y != bp]
        return self._basis[key]

    def index(self, n: int, w) -> dict:
        return {y: i for i, y in enumerate(self.basis(n, w))}

    def _restrict_fn(self, alpha, g, w):
        Y = self.source
        n = alpha.codomain
        m, v = self.target(alpha, g, w)
        idx = self.index(m, v)
        M = zeros(len(idx), len(self.basis(n, w)))
        for c, y in enumerate(self.basis(n, w)):
            z = Y.act(Y.apply(alpha, y), g)
            r = idx.get(z)
            if r is not None:
                M[r][c] = 1
        return M

    def vector(self, n: int, w, y) -> list[int]:
        """``y`` as an element of ``Z̃(n, w)`` (basepoint ↦ 0)."""
        v = [0] * len(self.basis(n, w))
        i = self.index(n, w).get(y)
        if i is not None:
            v[i] = 1
        return v


def linearise(Y: RetractiveObject, bound: int | None = None) -> Linearised:
    return Linearised(Y, bound)


def ab_cell(base: Base, n: int, w, bound: int | None = None) -> Linearised:
    return linearise(cell(base, n, w, bound))


def ab_boundary(base: Base, n: int, w, bound: int | None = None) -> Linearised:
    from .retract import boundary_cell
    return linearise(boundary_cell(base, n, w, bound))


def ab_horn(base: Base, n: int, w, i: int, bound: int | None = None) -> Linearised:
    from .retract import horn_cell
    return linearise(horn_cell(base, n, w, i, bound))


def zero_object(base: Base, bound: int | None = None) -> AbelianObject:
    b = base.bound if bound is None else bound
    return AbelianObject(base, lambda n, w: [], lambda a, g, w: [], b, name="0")


def constant_ab(base: Base, orders: Sequence[int], bound: int | None = None) -> AbelianObject:
    """Every value ``⊕ Z/orders``, every structure map the identity."""
    b = base.bound if bound is None else bound
    k = len(orders)
    return AbelianObject(base, lambda n, w: list(orders), lambda a, g, w: identity(k), b,
                         name=f"const{list(orders)}")


def group_ring_module(base: Base, bound: int | None = None) -> AbelianObject:
    """``Z[G]`` with ``G`` acting by right multiplication, constant in the simplicial direction."""
    G = base.G
    els = list(G.elements)
    idx = {g: i for i, g in enumerate(els)}
    b = base.bound if bound is None else bound

    def restrict(alpha, g, w):
        M = zeros(len(els), len(els))
        for c, x in enumerate(els):
            M[idx[G.mul(x, g)]][c] = 1
        return M

    return AbelianObject(base, lambda n, w: [0] * len(els), restrict, b, name=f"Z[{G.name}]")


# ---------------------------------------------------------------------------
# tensors


def tensor_ab(Y: AbelianObject, Z: AbelianObject) -> AbelianObject:
    """Fibrewise ``Y(n, w) ⊗ Z(n, w)``; generators are pairs in lexicographic order."""
    def restrict(alpha, g, w):
        n = alpha.codomain
        m, v = Y.target(alpha, g, w)
        return kronecker(Y.map(alpha, g, w), Z.map(alpha, g, w), (Y.rank(m, v), Y.rank(n, w)),
                         (Z.rank(m, v), Z.rank(n, w)))

    return AbelianObject(Y.base, lambda n, w: tensor_orders(Y.orders(n, w), Z.orders(n, w)), restrict,
                         min(Y.bound, Z.bound), name=f"{Y.name}⊗{Z.name}")


def space_object(base: Base, K: SimplicialSet, bound: int | None = None) -> RetractiveObject:
    """``(W × K) ⨿ W`` over ``W`` with ``G`` acting on the ``W`` factor."""
    W = base.W

    def simplices(n):
        return [("k", w, k) for w in W.simplices(n) for k in K.simplices(n)] + [("b", w) for w in W.simplices(n)]

    def face(i, p):
        return ("b", W.face(i, p[1])) if p[0] == "b" else ("k", W.face(i, p[1]), K.face(i, p[2]))

    def degeneracy(j, p):
        return ("b", W.degeneracy(j, p[1])) if p[0] == "b" else ("k", W.degeneracy(j, p[1]), K.degeneracy(j, p[2]))

    def act(p, g):
        return ("b", base.act(p[1], g)) if p[0] == "b" else ("k", base.act(p[1], g), p[2])

    b = base.bound if bound is None else min(bound, base.bound)
    if K.dim_bound is not None:
        b = min(b, K.dim_bound)
    return RetractiveObject.build(base, simplices, face, degeneracy, act, lambda p: p[1], lambda w: ("b", w),
                                  bound=b, name=f"({W.name}×{K.name})₊")


def tensor_space_ab(Y: AbelianObject, K: SimplicialSet) -> AbelianObject:
    """``Y ⊗ K := Y ⊗ Z̃_W((W × K) ⨿ W)``."""
    return tensor_ab(Y, linearise(space_object(Y.base, K, Y.bound)))


def tensor_linearisation_iso(YK: RetractiveObject, Y: RetractiveObject, K: SimplicialSet) -> NatTrans:
    """``Z̃_W(Y ⊗ K) -> Z̃_W(Y) ⊗ K`` sending ``(y, k)`` to ``e_y ⊗ e_(w, k)``.

    ``YK`` must be ``retract.tensor(Y, K)``.
    """
    A = linearise(YK)
    LY = linearise(Y, YK.bound)
    LK = linearise(space_object(Y.base, K, YK.bound))
    B = tensor_ab(LY, LK)

    def component(n, w):
        iy, ik = LY.index(n, w), LK.index(n, w)
        width = len(ik)
        M = zeros(B.rank(n, w), A.rank(n, w))
        for c, (_, y, k) in enumerate(A.basis(n, w)):
            M[iy[y] * width + ik[("k", w, k)]][c] = 1
        return M

    return NatTrans(A, B, component)


# ---------------------------------------------------------------------------
# sums over W


def sum_over_W(Y: AbelianObject, bound: int | None = None) -> SimplicialAbelianGroup:
    """``(⊕_W Y)_n = ⊕_{w ∈ W_n} Y(n, w)`` with operators from ``(δ_i, e)`` and ``(σ_j, e)``."""
    b = Y.bound if bound is None else min(bound, Y.bound)
    W, e = Y.W, Y.G.identity
    levels = [list(W.simplices(n)) for n in range(b + 1)]
    pos = [{w: i for i, w in enumerate(level)} for level in levels]
    sizes = [[Y.rank(n, w) for w in levels[n]] for n in range(b + 1)]
    orders = [[d for w in levels[n] for d in Y.orders(n, w)] for n in range(b + 1)]
    faces, degs = {}, {}
    for n in range(b + 1):
        if n > 0:
            for i in range(n + 1):
                op = DeltaOperator.coface(n, i)
                blocks = {}
                for c, w in enumerate(levels[n]):
                    blocks[(pos[n - 1][W.face(i, w)], c)] = Y.map(op, e, w)
                faces[(n, i)] = block_matrix(blocks, sizes[n - 1], sizes[n])
        if n < b:
            for j in range(n + 1):
                op = DeltaOperator.codegeneracy(n, j)
                blocks = {}
                for c, w in enumerate(levels[n]):
                    blocks[(pos[n + 1][W.degeneracy(j, w)], c)] = Y.map(op, e, w)
                degs[(n, j)] = block_matrix(blocks, sizes[n + 1], sizes[n])
    return SimplicialAbelianGroup(orders, faces, degs, name=f"⊕{Y.name}")


def sum_map(f: NatTrans, bound: int | None = None) -> dict[int, Matrix]:
    """``⊕_W f`` degreewise as block-diagonal matrices."""
    Y, Z = f.source, f.target
    b = min(Y.bound, Z.bound) if bound is None else bound
    out = {}
    for n in range(b + 1):
        level = list(Y.W.simplices(n))
        blocks = {(c, c): f.component(n, w) for c, w in enumerate(level)}
        out[n] = block_matrix(blocks, [Z.rank(n, w) for w in level], [Y.rank(n, w) for w in level])
    return out


# ---------------------------------------------------------------------------
# collapse C and coinduction T


def collapse_ab(Y: AbelianObject) -> AbelianObject:
    """``C(Y)_n = ⊕_{p ∈ P_n} Y(n, p)`` as an object over ``(*, G)``.

    Summands are ordered as ``P_n`` is enumerated.
    """
    pt = point_base(Y.G, Y.bound)
    P = Y.W
    levels = {n: list(P.simplices(n)) for n in range(Y.bound + 1)}
    pos = {n: {p: i for i, p in enumerate(levels[n])} for n in levels}

    def orders(n, star):
        return [d for p in levels[n] for d in Y.orders(n, p)]

    def restrict(alpha, g, star):
        n, m = alpha.codomain, alpha.domain
        blocks = {}
        for c, p in enumerate(levels[n]):
            _, q = Y.target(alpha, g, p)
            key = (pos[m][q], c)
            M = Y.map(alpha, g, p)
            if key in blocks:
                old = blocks[key]
                blocks[key] = [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(old, M)]
            else:
                blocks[key] = M
        return block_matrix(blocks, [Y.rank(m, q) for q in levels[m]], [Y.rank(n, p) for p in levels[n]])

    C = AbelianObject(pt, orders, restrict, Y.bound, name=f"C{Y.name}")
    C.summands = levels
    C.source_object = Y
    return C


def coinduce_T(M: AbelianObject, base: Base) -> AbelianObject:
    """``T(M)(n, p) = M_n``: precomposition with ``Simp_G(P) -> Simp_G(*)``."""
    star = {n: M.W.simplices(n)[0] for n in range(M.bound + 1)}
    b = min(M.bound, base.bound)
    return AbelianObject(base, lambda n, p: M.orders(n, star[n]),
                         lambda alpha, g, p: M.map(alpha, g, star[alpha.codomain]), b, name=f"T{M.name}")


def unit_CT(Y: AbelianObject) -> tuple[NatTrans, AbelianObject, AbelianObject]:
    """``η_Y : Y -> T C Y``, the inclusion of the ``p``-summand."""
    C = collapse_ab(Y)
    TC = coinduce_T(C, Y.base)

    return NatTrans(Y, TC, lambda n, p: _inclusion(Y, C.summands[n], n, p)), C, TC


def _inclusion(Y: AbelianObject, level: list, n: int, p) -> Matrix:
    sizes = [Y.rank(n, q) for q in level]
    total = sum(sizes)
    off = sum(sizes[: level.index(p)])
    M = zeros(total, sizes[level.index(p)])
    for i in range(sizes[level.index(p)]):
        M[off + i][i] = 1
    return M


def counit_CT(M: AbelianObject, base: Base) -> tuple[NatTrans, AbelianObject, AbelianObject]:
    """``ε_M : C T M -> M``, folding the summands."""
    T = coinduce_T(M, base)
    CT = collapse_ab(T)

    def component(n, star):
        k = M.rank(n, star)
        copies = len(CT.summands[n])
        out = zeros(k, k * copies)
        for c in range(copies):
            for i in range(k):
                out[i][c * k + i] = 1
        return out

    return NatTrans(CT, M, component), T, CT


def C_on_maps(f: NatTrans, C_src: AbelianObject, C_tgt: AbelianObject) -> NatTrans:
    """``C(f)``: block diagonal over ``P_n``."""
    Y, Z = f.source, f.target

    def component(n, star):
        level = list(Y.W.simplices(n))
        blocks = {(c, c): f.component(n, p) for c, p in enumerate(level)}
        return block_matrix(blocks, [Z.rank(n, p) for p in level], [Y.rank(n, p) for p in level])

    return NatTrans(C_src, C_tgt, component)


def T_on_maps(f: NatTrans, T_src: AbelianObject, T_tgt: AbelianObject) -> NatTrans:
    star = {n: f.source.W.simplices(n)[0] for n in range(f.source.bound + 1)}
    return NatTrans(T_src, T_tgt, lambda n, p: f.component(n, star[n]))


def triangle_identities_CT(Y: AbelianObject, M: AbelianObject) -> tuple[bool, bool]:
    """``ε_{CY} ∘ C(η_Y) = id_{CY}`` and ``T(ε_M) ∘ η_{TM} = id_{TM}`` as matrices."""
    eta, CY, TCY = unit_CT(Y)
    eps_CY, T_CY, CTCY = counit_CT(CY, Y.base)
    C_eta = C_on_maps(eta, CY, CTCY)
    first = is_identity_nat(compose_nat(eps_CY, C_eta))

    eps_M, TM, CTM = counit_CT(M, Y.base)
    eta_TM, _, TCTM = unit_CT(TM)
    T_eps = T_on_maps(eps_M, TCTM, TM)
    second = is_identity_nat(compose_nat(T_eps, eta_TM))
    return first, second


def counit_homology_verdicts(M: AbelianObject, base: Base, max_degree: int) -> dict[int, bool]:
    """Whether ``ε_M : C T M -> M`` induces isomorphisms on ``π_n`` of ``⊕`` (over the point)."""
    eps, _, CT = counit_CT(M, base)
    A, B = sum_over_W(CT), sum_over_W(M)
    return moore_map_verdicts(sum_map(eps, max_degree + 1), A, B, max_degree)


def unit_homology_verdicts(Y: AbelianObject, max_degree: int) -> dict[int, bool]:
    """``η_Y`` on ``π_*`` of ``⊕_P``; the target is ``⊕_P T C Y = Z[P] ⊗ C Y``."""
    eta, _, TC = unit_CT(Y)
    return moore_map_verdicts(sum_map(eta, max_degree + 1), sum_over_W(Y), sum_over_W(TC), max_degree)


# ---------------------------------------------------------------------------
# pullback along a bundle


def pullback_ab(Y: AbelianObject, bundle: BundleMap) -> AbelianObject:
    """``Ξ*(Y)(n, p) = Y(n, ξ(p))``; ``(α, g)`` acts as ``(α, e)`` downstairs."""
    base = bundle.base_P(Y.bound)
    e = Y.G.identity
    return AbelianObject(base, lambda n, p: Y.orders(n, bundle.xi(p)),
                         lambda alpha, g, p: Y.map(alpha, e, bundle.xi(p)), Y.bound, name=f"Ξ*{Y.name}")


def square_pullback(Y: RetractiveObject, bundle: BundleMap) -> NatTrans:
    """``Ξ* Z̃_X(Y) -> Z̃_P Ξ̄*(Y)``, ``e_y ↦ e_(y, p)`` at ``(n, p)``."""
    A = pullback_ab(linearise(Y), bundle)
    LY = linearise(Y)
    B = linearise(pullback(Y, bundle))

    def component(n, p):
        x = bundle.xi(p)
        idx = B.index(n, p)
        M = zeros(B.rank(n, p), A.rank(n, p))
        for c, y in enumerate(LY.basis(n, x)):
            M[idx[("p", y, p)]][c] = 1
        return M

    return NatTrans(A, B, component)


def square_collapse(Y: RetractiveObject) -> NatTrans:
    """``C Z̃_P(Y) -> Z̃_* C̄(Y)``, ``e_y ↦ e_[y]``."""
    LY = linearise(Y)
    A = collapse_ab(LY)
    Q = collapse(Y)
    B = linearise(Q)

    def component(n, star):
        idx = B.index(n, star)
        M = zeros(B.rank(n, star), A.rank(n, star))
        c = 0
        for p in A.summands[n]:
            for y in LY.basis(n, p):
                M[idx[("q", y)]][c] = 1
                c += 1
        return M

    return NatTrans(A, B, component)


# ---------------------------------------------------------------------------
# homology with coefficients


def homology_coefficients(K: RetractiveObject, Y: AbelianObject, max_degree: int) -> dict[int, list[int]]:
    """``H̃_n(K; Y) = π_n ⊕_W (Z̃_W K ⊗ Y)`` for ``n ≤ max_degree``."""
    bound = min(K.bound, Y.bound)
    if max_degree > bound - 1:
        raise ValueError(f"degree {max_degree} exceeds the bound {bound} minus one")
    A = sum_over_W(tensor_ab(linearise(K, bound), Y), bound=max_degree + 1)
    return A.moore_homotopy(max_degree)


def homology_coefficients_map(K: RetractiveObject, f: NatTrans, max_degree: int) -> dict[int, bool]:
    """Per degree, whether ``H̃_n(K; f)`` is an isomorphism."""
    Y, Z = f.source, f.target
    bound = min(K.bound, Y.bound, Z.bound)
    if max_degree > bound - 1:
        raise ValueError(f"degree {max_degree} exceeds the bound {bound} minus one")
    LK = linearise(K, bound)
    A, B = tensor_ab(LK, Y), tensor_ab(LK, Z)

    def component(n, w):
        k = LK.rank(n, w)
        return kronecker(identity(k), f.component(n, w), (k, k), (Z.rank(n, w), Y.rank(n, w)))

    g = NatTrans(A, B, component)
    return moore_map_verdicts(sum_map(g, max_degree + 1), sum_over_W(A, max_degree + 1),
                              sum_over_W(B, max_degree + 1), max_degree)


# ---------------------------------------------------------------------------
# hom groups out of linearised objects


@dataclass
class HomGroup:
    """``Hom(Z̃ Y, Z)`` as the kernel lattice of the constraint system modulo relations."""

    invariants: list[int]
    kernel: Lattice
    relations: Lattice
    blocks: dict  # generator -> (offset, size, (n, w))

    @property
    def order(self) -> int | None:
        if any(d == 0 for d in self.invariants):
            return None
        out = 1
        for d in self.invariants:
            out *= d
        return out


def ab_hom_group(Y: RetractiveObject, Z: AbelianObject) -> HomGroup:
    """Natural maps ``Z̃_W(Y) -> Z`` by linear algebra.

    Unknowns are the images ``φ_x ∈ Z(n, r(x))`` of orbit representatives of
    relative nondegenerate simplices.  Constraints: stabilisers fix ``φ_x``,
    and ``Z(δ_i) φ_x`` equals the value forced on ``d_i x``.
    """
    if Y.gen_dim is None or Y.gen_dim > Z.bound:
        raise ValueError("source generators exceed the bound of the target")
    G, e = Y.G, Y.G.identity
    reps, orbit_of = [], {}
    for n in range(Y.gen_dim + 1):
        for x, orbit in Y.orbit_representatives(n):
            reps.append(x)
            for z, g in orbit.items():
                orbit_of[z] = (x, g)
    blocks, off = {}, 0
    dom_orders: list[int] = []
    for x in reps:
        n = Y.total.dim(x)
        w = Y.r(x)
        k = Z.rank(n, w)
        blocks[x] = (off, k, (n, w))
        dom_orders += Z.orders(n, w)
        off += k
    D = off

    def value_matrix(y):
        """Matrix expressing the image of ``y`` in terms of the unknowns."""
        n = Y.total.dim(y)
        w_y = Y.r(y)
        word, z0 = Y.total.decompose(y)
        if Y.is_base(z0):
            return zeros(Z.rank(n, w_y), D)
        rep, g = orbit_of[z0]
        o, k, (m, w_rep) = blocks[rep]
        M = Z.map(DeltaOperator.identity(m), g, w_rep)
        cur_dim, cur_w = m, Y.base.act(w_rep, g)
        for j in reversed(word):
            S = Z.map(DeltaOperator.codegeneracy(cur_dim, j), e, cur_w)
            M = _mm(S, M, Z.rank(cur_dim, cur_w), k)
            cur_w = Y.W.degeneracy(j, cur_w)
            cur_dim += 1
        out = zeros(len(M), D)
        for r, row in enumerate(M):
            out[r][o:o + k] = row
        return out

    rows: list[list[int]] = []
    tgt_orders: list[int] = []
    for x in reps:
        o, k, (n, w) = blocks[x]
        for g in Y.stabilizer(x):
            if g == e:
                continue
            A = Z.map(DeltaOperator.identity(n), g, w)
            for r in range(k):
                row = [0] * D
                for c in range(k):
                    row[o + c] = A[r][c] - (1 if r == c else 0)
                rows.append(row)
            tgt_orders += Z.orders(n, w)
        for i in range(n + 1 if n else 0):
            F = Z.map(DeltaOperator.coface(n, i), e, w)
            V = value_matrix(Y.face(i, x))
            for r in range(len(F)):
                row = list(V[r]) if V else [0] * D
                row = [-a for a in row]
                for c in range(k):
                    row[o + c] += F[r][c]
                rows.append(row)
            tgt_orders += Z.orders(n - 1, Y.W.face(i, w))
    rel_dom = Lattice.diagonal(dom_orders)
    full = Lattice.full(D)
    if rows:
        K = full.preimage(rows, Lattice.diagonal(tgt_orders))
    else:
        K = full
    K = K + rel_dom
    sq = Subquotient.of(K, rel_dom)
    return HomGroup(sq.invariants, K, rel_dom, blocks)


def representability_report(Z: AbelianObject, n: int, w) -> ValidationReport:
    """``Hom(Δ^ab[n, w], Z) ≅ Z(n, w)``: equal invariants and evaluation at the
    generating simplex is an isomorphism of groups."""
    C = cell(Z.base, n, w, Z.bound)
    H = ab_hom_group(C, Z)
    if H.invariants != Z.invariants(n, w):
        return ValidationReport(False, f"invariants {H.invariants} vs {Z.invariants(n, w)}")
    x = ("c", tuple(range(n + 1)), Z.G.identity)
    o, k, _ = H.blocks[x]
    D = H.relations.dim
    proj = [[1 if c == o + r else 0 for c in range(D)] for r in range(k)]
    ok = induced_is_isomorphism(proj, H.kernel, H.relations, Lattice.full(k), Z.relations(n, w))
    return ValidationReport(ok, None if ok else "evaluation is not an isomorphism", 1)


def underlying_presheaf(Z: AbelianObject):
    """``U Z`` as a pointed presheaf of finite sets (all orders must be positive)."""
    from .retract import PointedPresheaf
    values, basepoints = {}, {}
    for n, w in Z.base.objects(Z.bound):
        orders = Z.orders(n, w)
        if any(d == 0 for d in orders):
            raise ValueError("underlying set is infinite")
        values[(n, w)] = list(itertools.product(*[range(d) for d in orders]))
        basepoints[(n, w)] = tuple(0 for _ in orders)

    def restrict(alpha, g, w, v):
        M = Z.map(alpha, g, w)
        m, u = Z.target(alpha, g, w)
        return tuple((sum(a * b for a, b in zip(row, v))) % d for row, d in zip(M, Z.orders(m, u)))

    return PointedPresheaf(Z.base, values, basepoints, restrict, Z.bound)


def adjunction_triangles(Y: RetractiveObject, Z: AbelianObject) -> tuple[bool, bool]:
    """Triangle identities for ``Z̃_W ⊣ U`` evaluated on every basis element.

    ``ε_{Z̃Y} ∘ Z̃(η_Y) = id`` on ``Z̃ Y`` and ``U(ε_Z) ∘ η_{UZ} = id`` on ``U Z``.
    """
    LY = linearise(Y)

    def eta_Y(n, w, y):
        return tuple(LY.vector(n, w, y))

    def Z_tilde_of_set_map(f, n, w, y, basepoint_image):
        img = f(n, w, y)
        return None if img == basepoint_image else img

    def eps(vec_label):
        return list(vec_label)

    first = True
    for n, w in Y.base.objects(Y.bound):
        zero = tuple(0 for _ in range(LY.rank(n, w)))
        for i, y in enumerate(LY.basis(n, w)):
            lab = Z_tilde_of_set_map(eta_Y, n, w, y, zero)
            out = eps(lab) if lab is not None else [0] * LY.rank(n, w)
            if out != [1 if j == i else 0 for j in range(LY.rank(n, w))]:
                first = False
    U = underlying_presheaf(Z)
    second = True
    for (n, w), vals in U.values.items():
        zero = U.basepoints[(n, w)]
        for v in vals:
            lab = None if v == zero else v  # η_{UZ}(v) = e_v, basepoint ↦ 0
            back = tuple(eps(lab)) if lab is not None else zero
            if back != v:
                second = False
    return first, second
