"""Finite cell filtrations: attaching generating cells, replaying filtrations,
and explicit finiteness certificates for retractive objects."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable

from .homalg import Lattice, block_matrix, induced_is_isomorphism, matmul, reduce_presentation, zeros
from .linab import AbelianObject, NatTrans, ab_boundary, ab_cell, linearise
from .retract import (Base, RetractiveMap, RetractiveObject, boundary_cell, cell, cell_inclusion, cell_map, collapse,
                      induce, pullback, pushout, tensor, terminal)
from .sset import DeltaOperator, SimplicialSet, ValidationReport, chains_poset_count


class UndecidableError(ValueError):
    """Raised when an object carries no generator data to bound its cells."""


@dataclass
class Attachment:
    n: int
    w: Hashable
    attach: RetractiveMap          # ∂Δ[n, w] -> Z_k
    inclusion: RetractiveMap       # Z_k -> Z_{k+1}
    characteristic: RetractiveMap  # Δ[n, w] -> Z_{k+1}

    def table(self) -> dict:
        """The attaching map on nondegenerate cell simplices."""
        A = self.attach.source
        return {y: self.attach(y) for k in range(self.n) for y in A.relative_nondegenerate(k)}


@dataclass
class Filtration:
    stages: list[RetractiveObject]
    attachments: list[Attachment] = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.attachments)

    @property
    def final(self) -> RetractiveObject:
        return self.stages[-1]

    def serialise(self) -> list[dict]:
        return [{"dim": a.n, "base": repr(a.w), "attach": {repr(k): repr(v) for k, v in a.table().items()}}
                for a in self.attachments]


@dataclass
class FiltrationVerdict:
    ok: bool
    length: int
    failing_step: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def initial_filtration(base: Base, bound: int | None = None) -> Filtration:
    return Filtration([terminal(base, bound)])


def attach_cell(Z: RetractiveObject, attach: RetractiveMap) -> tuple[RetractiveObject, Attachment]:
    """Pushout of ``∂Δ[n, w] -> Δ[n, w]`` along ``attach: ∂Δ[n, w] -> Z``."""
    data = getattr(attach.source, "cell_data", None)
    if data is None or data[0] != "boundary":
        raise ValueError("attaching maps start at a boundary cell")
    if attach.target is not Z:
        raise ValueError("attaching map does not land in the current stage")
    rep = attach.check()
    if not rep:
        raise ValueError(f"invalid attaching map: {rep.violation}")
    _, n, w, _ = data
    D = cell(Z.base, n, w, attach.source.bound)
    P, inl, inr, _ = pushout(cell_inclusion(attach.source, D), attach, name=f"{Z.name}+e{n}")
    return P, Attachment(n, w, attach, inr, inl)


def extend(F: Filtration, n: int, w, fn: Callable) -> Filtration:
    """Attach one more cell; ``fn`` maps the simplices of ``∂Δ[n, w]`` into the last stage."""
    Z = F.final
    A = boundary_cell(Z.base, n, w, Z.bound)
    P, att = attach_cell(Z, RetractiveMap(A, Z, fn, name="attach"))
    return Filtration(F.stages + [P], F.attachments + [att])


def _is_initial(Z: RetractiveObject) -> bool:
    return all(not Z.relative(n) for n in range(Z.bound + 1))


def verify_filtration(F: Filtration) -> FiltrationVerdict:
    """Replay each pushout and compare it with the recorded stage.

    A step passes when the recorded maps form a commuting square and the
    induced map from the replayed pushout to the stage is an isomorphism.
    """
    if not F.stages or not _is_initial(F.stages[0]):
        return FiltrationVerdict(False, F.length, 0, "first stage is not the initial object")
    if len(F.stages) != F.length + 1:
        return FiltrationVerdict(False, F.length, 0, "stage and attachment counts disagree")
    for k, a in enumerate(F.attachments):
        Z, Z1 = F.stages[k], F.stages[k + 1]
        if a.attach.target is not Z or a.inclusion.source is not Z or a.inclusion.target is not Z1 \
                or a.characteristic.target is not Z1:
            return FiltrationVerdict(False, F.length, k, "maps do not connect consecutive stages")
        for m in (a.attach, a.inclusion, a.characteristic):
            rep = m.check()
            if not rep:
                return FiltrationVerdict(False, F.length, k, f"{m.name or 'map'}: {rep.violation}")
        B = a.characteristic.source
        P, inl, inr, raw = pushout(cell_inclusion(a.attach.source, B), a.attach)
        try:
            med = raw.mediate(a.characteristic.simplicial(), a.inclusion.simplicial())
        except ValueError as exc:
            return FiltrationVerdict(False, F.length, k, str(exc))
        rep = RetractiveMap(P, Z1, med).check(bijective=True)
        if not rep:
            return FiltrationVerdict(False, F.length, k, f"replayed pushout differs from stage: {rep.violation}")
    return FiltrationVerdict(True, F.length)


# ---------------------------------------------------------------------------
# certificates


def _subobject(Y: RetractiveObject, allowed: set, name: str) -> RetractiveObject:
    """Simplices whose nondegenerate root is in ``s(W)`` or in ``allowed``."""
    def keep(y):
        _, z = Y.total.decompose(y)
        return Y.is_base(z) or z in allowed

    return RetractiveObject.build(Y.base, lambda n: [y for y in Y.total.simplices(n) if keep(y)], Y.face,
                                  Y.degeneracy, Y.act, Y.r, Y.s, bound=Y.bound, gen_dim=Y.gen_dim, name=name)


@dataclass
class FinitenessVerdict:
    finite: bool
    certificate: Filtration | None
    verified: FiltrationVerdict | None
    cells: list[tuple[int, Hashable]]

    @property
    def length(self) -> int:
        return len(self.cells)

    def __bool__(self) -> bool:
        return self.finite and bool(self.verified)


def is_categorically_finite(Y: RetractiveObject) -> FinitenessVerdict:
    """Certificate rebuilding ``Y`` by attaching its relative nondegenerate
    simplices in dimension order (one cell per ``G``-orbit), then replayed.

    Every relative nondegenerate simplex lies in degree ``≤ gen_dim``, so the
    count is exhaustive.  For nontrivial ``G`` the replay fails when an orbit
    is not free.
    """
    if Y.gen_dim is None:
        raise UndecidableError("undecidable with this representation: no generator data")
    if Y.gen_dim > Y.bound:
        raise UndecidableError(f"generators reach degree {Y.gen_dim} beyond the bound {Y.bound}")
    reps = []
    for n in range(Y.gen_dim + 1):
        reps += [(n, x, orbit) for x, orbit in Y.orbit_representatives(n)]
    stages = [_subobject(Y, set(), f"{Y.name}[0]")]
    atts = []
    allowed: set = set()
    for k, (n, x, orbit) in enumerate(reps):
        allowed |= set(orbit)
        prev = stages[-1]
        nxt = _subobject(Y, set(allowed), f"{Y.name}[{k + 1}]")
        w = Y.r(x)
        A = boundary_cell(Y.base, n, w, Y.bound)
        D = cell(Y.base, n, w, Y.bound)
        chi = cell_map(Y, n, w, x, Y.bound)
        atts.append(Attachment(n, w, RetractiveMap(A, prev, chi, name="attach"),
                               RetractiveMap(prev, nxt, lambda y: y, name="inclusion"),
                               RetractiveMap(D, nxt, chi, name="characteristic")))
        stages.append(nxt)
    F = Filtration(stages, atts)
    verdict = verify_filtration(F)
    if verdict.ok:
        final = RetractiveMap(F.final, Y, lambda y: y).check(bijective=True)
        if not final:
            verdict = FiltrationVerdict(False, F.length, F.length, "last stage is not the object")
    return FinitenessVerdict(True, F, verdict, [(n, x) for n, x, _ in reps])


# ---------------------------------------------------------------------------
# abelian variant


@dataclass
class AbAttachment:
    n: int
    w: Hashable
    attach: NatTrans
    inclusion: NatTrans
    characteristic: NatTrans


def ab_pushout(i: NatTrans, a: NatTrans) -> tuple[AbelianObject, NatTrans, NatTrans]:
    """Pushout of ``B <- A -> C`` valuewise: ``(B ⊕ C) / {(i x, -a x)}``, re-presented cyclically."""
    A, B, C = i.source, i.target, a.target
    base = A.base
    cache: dict = {}

    def pres(n, w):
        if (n, w) not in cache:
            kb, kc, ka = B.rank(n, w), C.rank(n, w), A.rank(n, w)
            rels = []
            for r, d in enumerate(B.orders(n, w)):
                if d:
                    v = [0] * (kb + kc)
                    v[r] = d
                    rels.append(v)
            for r, d in enumerate(C.orders(n, w)):
                if d:
                    v = [0] * (kb + kc)
                    v[kb + r] = d
                    rels.append(v)
            I, J = i.component(n, w), a.component(n, w)
            for c in range(ka):
                rels.append([I[r][c] for r in range(kb)] + [-J[r][c] for r in range(kc)])
            cache[(n, w)] = reduce_presentation(kb + kc, rels)
        return cache[(n, w)]

    def restrict(alpha, g, w):
        n = alpha.codomain
        m, v = B.target(alpha, g, w)
        M = block_matrix({(0, 0): B.map(alpha, g, w), (1, 1): C.map(alpha, g, w)},
                         [B.rank(m, v), C.rank(m, v)], [B.rank(n, w), C.rank(n, w)])
        src, tgt = pres(n, w), pres(m, v)
        k_old = B.rank(m, v) + C.rank(m, v)
        return matmul(matmul(tgt.to_new, M, inner=k_old, cols=len(src.from_new)), src.from_new,
                      inner=len(src.from_new), cols=len(src.orders))

    bound = min(A.bound, B.bound, C.bound)
    P = AbelianObject(base, lambda n, w: pres(n, w).orders, restrict, bound, name=f"{B.name}⊔{C.name}")
    P.presentation = pres

    def inclusion(offset_b: bool):
        def component(n, w):
            p = pres(n, w)
            kb, kc = B.rank(n, w), C.rank(n, w)
            cols = kb if offset_b else kc
            emb = zeros(kb + kc, cols)
            for c in range(cols):
                emb[c if offset_b else kb + c][c] = 1
            return matmul(p.to_new, emb, inner=kb + kc, cols=cols)
        return component

    return P, NatTrans(B, P, inclusion(True)), NatTrans(C, P, inclusion(False))


def ab_attach_cell(Z: AbelianObject, attach: NatTrans, n: int, w) -> tuple[AbelianObject, AbAttachment]:
    """Pushout of ``∂Δ^ab[n, w] -> Δ^ab[n, w]`` along ``attach``."""
    rep = attach.check()
    if not rep:
        raise ValueError(f"invalid attaching map: {rep.violation}")
    A, D = attach.source, ab_cell(Z.base, n, w, Z.bound)
    i = linearised_inclusion(A, D)
    P, inl, inr = ab_pushout(i, attach)
    return P, AbAttachment(n, w, attach, inr, inl)


def linearise_map(f: RetractiveMap, source: AbelianObject | None = None,
                  target: AbelianObject | None = None) -> NatTrans:
    """``Z̃(f)``: ``e_y ↦ e_{f(y)}``, zero when ``f(y)`` is a basepoint."""
    A = source if source is not None else linearise(f.source)
    B = target if target is not None else linearise(f.target)

    def component(n, w):
        idx = B.index(n, w)
        M = zeros(B.rank(n, w), A.rank(n, w))
        for c, y in enumerate(A.basis(n, w)):
            r = idx.get(f(y))
            if r is not None:
                M[r][c] = 1
        return M

    return NatTrans(A, B, component)


def linearised_inclusion(A, D) -> NatTrans:
    return linearise_map(RetractiveMap(A.source, D.source, lambda y: y), A, D)


def verify_ab_step(att: Attachment, lin_prev: AbelianObject | None = None) -> ValidationReport:
    """Linearise one retractive attachment and check that the abelian pushout
    maps isomorphically onto ``Z̃`` of the next stage."""
    Zk = lin_prev if lin_prev is not None else linearise(att.attach.target)
    Zk1 = linearise(att.inclusion.target)
    A = linearise(att.attach.source)
    D = linearise(att.characteristic.source)
    P, inl, inr = ab_pushout(linearised_inclusion(A, D), linearise_map(att.attach, A, Zk))
    chi = linearise_map(att.characteristic, D, Zk1)
    inc = linearise_map(att.inclusion, Zk, Zk1)

    # the mediating map is [χ | inc] on the old generators of D ⊕ Z_k
    def component(n, w):
        M = block_matrix({(0, 0): chi.component(n, w), (0, 1): inc.component(n, w)}, [Zk1.rank(n, w)],
                         [D.rank(n, w), Zk.rank(n, w)])
        p_from = P.presentation(n, w).from_new
        return matmul(M, p_from, inner=D.rank(n, w) + Zk.rank(n, w), cols=P.rank(n, w))

    return NatTrans(P, Zk1, component).check(iso=True)


def ab_certificate(Y: RetractiveObject) -> tuple[int, ValidationReport]:
    """Certify ``Z̃(Y)`` as a finite abelian CW object by linearising the
    certificate of ``Y`` step by step."""
    v = is_categorically_finite(Y)
    if not v:
        return v.length, ValidationReport(False, (v.verified.reason if v.verified else "not finite"))
    for k, att in enumerate(v.certificate.attachments):
        rep = verify_ab_step(att)
        if not rep:
            return v.length, ValidationReport(False, f"step {k}: {rep.violation}")
    return v.length, ValidationReport(True, None, v.length)


# ---------------------------------------------------------------------------
# predicted counts


def tensor_cell_count(Y: RetractiveObject, k: int) -> int:
    """Cells of ``Y ⊗ Δ^k``: for each orbit of relative nondegenerate
    ``m``-simplices, the nondegenerate simplices of ``Δ^m × Δ^k`` that project
    onto the top cell of ``Δ^m``."""
    total = 0
    for m in range(Y.gen_dim + 1):
        per = sum(chains_poset_count(m, k, length, surjective_first=True) for length in range(m, m + k + 1))
        total += per * len(Y.orbit_representatives(m))
    return total


def functor_preservation(Y: RetractiveObject, bundle=None, G=None, G_act=None) -> dict[str, tuple[int, int, bool]]:
    """Certificate lengths of ``F(Y)`` against the cells-to-cells prediction.

    Each entry is ``(predicted, observed, verified)``.  ``bundle`` enables
    the pullback and collapse along ``Ξ``; ``G``/``G_act`` enable induction.
    """
    base_len = is_categorically_finite(Y).length
    out = {}
    ab_len, ab_rep = ab_certificate(Y)
    out["linearise"] = (base_len, ab_len, bool(ab_rep))
    if bundle is not None:
        PY = pullback(Y, bundle)
        v = is_categorically_finite(PY)
        out["pullback"] = (base_len, v.length, bool(v))
        CY = collapse(PY)
        v = is_categorically_finite(CY)
        out["collapse"] = (base_len, v.length, bool(v))
        ab_len, ab_rep = ab_certificate(CY)
        out["collapse_ab"] = (base_len, ab_len, bool(ab_rep))
    if G is not None:
        IY = induce(Y, G, G_act)
        v = is_categorically_finite(IY)
        out["induce"] = (base_len, v.length, bool(v))
    return out


def tensor_report(Y: RetractiveObject, k: int, K: SimplicialSet) -> tuple[int, int, bool]:
    """``(predicted, observed, verified)`` for ``Y ⊗ Δ^k``."""
    T = tensor(Y, K)
    v = is_categorically_finite(T)
    return tensor_cell_count(Y, k), v.length, bool(v)
