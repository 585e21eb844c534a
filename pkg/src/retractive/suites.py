"""Named property suites.  Each returns a list of ``Result`` lines; a suite
passes when every line does."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import corpus
from .cw import (extend, functor_preservation, initial_filtration, is_categorically_finite, tensor_report,
                 verify_filtration)
from .fincat import compare_with_grothendieck, grothendieck, simplex_category_trunc, transport_functor
from .homalg import (determinant, matmul, normalise_orders, simplicial_homology, smith_form)
from .linab import (ab_hom_group, adjunction_triangles, constant_ab, counit_homology_verdicts, group_ring_module,
                    linearise, representability_report, square_collapse, square_pullback, sum_over_W,
                    tensor_ab, tensor_linearisation_iso, tensor_space_ab, triangle_identities_CT, underlying_presheaf)
from .retract import (Base, boundary_cell, cell, cell_map, collapse, from_presheaf, hom_count, homotopy_orbits,
                      horn_cell, point_base, pullback, roundtrip_reports, tensor, wedge)
from .sgrp import GroupAction, cyclic_group, fundamental_group, loop_group, twisted_bundle, verify_twisting
from .sset import FiniteSimplicialSet, point, standard_simplex


@dataclass
class Result:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (f" ({self.detail})" if self.detail else "")


def _run(name: str, fn: Callable[[], tuple[bool, str] | bool]) -> Result:
    try:
        out = fn()
    except Exception as exc:  # a crash is a failed property, reported with its message
        return Result(name, False, f"{type(exc).__name__}: {exc}")
    if isinstance(out, tuple):
        return Result(name, bool(out[0]), out[1])
    return Result(name, bool(out))


# ---------------------------------------------------------------------------
# shared corpus


def yoneda_corpus() -> list[tuple[str, object]]:
    """Retractive objects over a few bases, all with cells through degree 2."""
    D1 = standard_simplex(1)
    B1 = Base(D1, bound=3)
    e = D1.gen((0, 1))
    Z2 = cyclic_group(2)
    cov = corpus.circle_double_cover()
    BP = cov.base_P(3)
    BX = cov.base_X(3)
    items = [
        ("cells over Δ1", wedge(cell(B1, 1, e), boundary_cell(B1, 1, e), horn_cell(B1, 1, e, 0))),
        ("S1∧Z/2₊", corpus.smash_with_group(corpus.circle(), "v", Z2, 3)),
        ("pulled-back cell", pullback(cell(BX, 1, cov.X.gen("e")), cov)),
        ("2-cell over S1~", cell(BP, 2, cov.P.degeneracy(0, cov.P.gen("a")))),
    ]
    return items


# ---------------------------------------------------------------------------
# suites


def presheaf_roundtrip(seed: int = 0, count: int = 20) -> list[Result]:
    out = []
    for k, (base, Y) in enumerate(corpus.random_instances(seed, count, bound=3)):
        def prop(Y=Y):
            a, b = roundtrip_reports(Y)
            return a.ok and b.ok, f"|G|={len(Y.G)}, cells={Y.cell_count()}"
        out.append(_run(f"instance {k}: object -> presheaf -> object and back", prop))
    return out


def grothendieck_suite(seed: int = 0, count: int = 20) -> list[Result]:
    out = []
    for k, (base, _) in enumerate(corpus.random_instances(seed, count, bound=3)):
        def prop(base=base):
            S = simplex_category_trunc(base.W, base.G, base.act, 3)
            Gr = grothendieck(transport_functor(base.W, base.G, base.act, 3), validate=False)
            rep = compare_with_grothendieck(S, Gr)
            return rep.ok, rep.violation or f"{rep.objects} objects, {rep.morphisms} morphisms"
        out.append(_run(f"instance {k}: simplex category equals Grothendieck construction", prop))
    return out


def yoneda() -> list[Result]:
    out = []
    for name, Y in yoneda_corpus():
        def prop(Y=Y):
            for n in range(3):
                for w in Y.W.simplices(n):
                    if hom_count(cell(Y.base, n, w, Y.bound), Y) != len(Y.fibre(n, w)):
                        return False, f"mismatch at {(n, w)!r}"
            return True, ""
        out.append(_run(f"{name}: maps from cells count the fibres", prop))
        for Zname, Z in [("Z̃Y", linearise(Y)), ("Z/2", constant_ab(Y.base, [2], Y.bound)),
                         ("Z[G]", group_ring_module(Y.base, Y.bound))]:
            def prop_ab(Z=Z):
                for n in range(3):
                    for w in Z.W.simplices(n):
                        rep = representability_report(Z, n, w)
                        if not rep:
                            return False, f"{(n, w)!r}: {rep.violation}"
                return True, ""
            out.append(_run(f"{name}: abelian maps from cells into {Zname}", prop_ab))
    return out


def hocolim() -> list[Result]:
    Z2 = cyclic_group(2)
    out = []
    E = FiniteSimplicialSet.build(lambda n: [(n, g) for g in Z2.elements], lambda i, x: (x[0] - 1, x[1]),
                                  lambda j, x: (x[0] + 1, x[1]), 4, name="Z/2")
    free = [("Z/2 on itself", E, GroupAction(Z2, E, lambda x, g: (x[0], Z2.mul(x[1], g)), free=True), point())]
    cov = corpus.circle_double_cover()
    free.append(("double cover of S1", cov.P, cov.action, cov.X))
    sph = corpus.sphere_double_cover()
    free.append(("double cover of RP2", sph.P, sph.action, sph.X))
    for name, Y, action, quotient in free:
        def prop(Y=Y, action=action, quotient=quotient):
            h = simplicial_homology(homotopy_orbits(Y, action, 4), 3)
            q = simplicial_homology(quotient, 3)
            return h == q, f"{h}"
        out.append(_run(f"{name}: homotopy orbits have the homology of the quotient", prop))
    P0 = point().truncate(4)

    def bg():
        h = simplicial_homology(homotopy_orbits(P0, GroupAction(Z2, P0, lambda x, g: x), 4), 3)
        return h == {0: [0], 1: [2], 2: [], 3: [2]}, f"{h}"
    out.append(_run("trivial Z/2 action on a point gives Z, Z/2, 0, Z/2", bg))
    return out


def linearisation() -> list[Result]:
    out = []
    for name, Y in yoneda_corpus():
        def tri(Y=Y):
            a, b = adjunction_triangles(Y, constant_ab(Y.base, [2], Y.bound))
            return a and b, ""
        out.append(_run(f"{name}: triangle identities", tri))

        def bij(Y=Y):
            Z = constant_ab(Y.base, [2], Y.bound)
            H = ab_hom_group(Y, Z)
            n = hom_count(Y, from_presheaf(underlying_presheaf(Z)))
            return H.order == n, f"|Hom(Z̃Y, Z)| = {H.order}, |Hom(Y, UZ)| = {n}"
        out.append(_run(f"{name}: hom groups match maps into the underlying object", bij))
        for K in [standard_simplex(1), corpus.circle()]:
            def iso(Y=Y, K=K):
                rep = tensor_linearisation_iso(tensor(Y, K), Y, K).check(iso=True)
                return rep.ok, rep.violation or ""
            out.append(_run(f"{name}: Z̃(Y ⊗ {K.name}) ≅ Z̃(Y) ⊗ {K.name}", iso))
    return out


def _dagger_objects(bundle) -> list:
    BX = bundle.base_X(3)
    X = bundle.X
    edges = [x for x in X.simplices(1) if not X.is_degenerate(x)]
    tris = [x for x in X.simplices(2) if not X.is_degenerate(x)]
    objs = [cell(BX, 1, edges[0]), wedge(boundary_cell(BX, 1, edges[0]), cell(BX, 0, X.simplices(0)[0]))]
    if tris:
        objs.append(horn_cell(BX, 2, tris[0], 1))
    return objs


def dagger() -> list[Result]:
    out = []
    for bname, bundle in [("S1 double cover", corpus.circle_double_cover()),
                          ("EZ/2 -> BZ/2", corpus.eg_bundle_map(cyclic_group(2), 4))]:
        for k, Y in enumerate(_dagger_objects(bundle)):
            def sq1(Y=Y, bundle=bundle):
                rep = square_pullback(Y, bundle).check(iso=True)
                return rep.ok, rep.violation or ""

            def sq2(Y=Y, bundle=bundle):
                rep = square_collapse(pullback(Y, bundle)).check(iso=True)
                return rep.ok, rep.violation or ""
            out.append(_run(f"{bname}, object {k}: pullback square", sq1))
            out.append(_run(f"{bname}, object {k}: collapse square", sq2))
    return out


def ct_adjunction() -> list[Result]:
    Z2 = cyclic_group(2)
    eg = corpus.eg_bundle_map(Z2, 4)
    PB = eg.base_P(4)
    pt = point_base(Z2, 4)
    modules = [("Z[G]", group_ring_module(pt)), ("Z̃[S1∧G₊]", linearise(corpus.smash_with_group(corpus.circle(), "v", Z2, 4)))]
    Ys = [("Z̃Δ[0]", linearise(cell(PB, 0, PB.W.simplices(0)[0]))),
          ("Z̃Δ[1]", linearise(cell(PB, 1, PB.W.simplices(1)[1])))]
    out = []
    for mname, M in modules:
        for yname, Y in Ys:
            def tri(Y=Y, M=M):
                a, b = triangle_identities_CT(Y, M)
                return a and b, ""
            out.append(_run(f"triangle identities for {yname}, {mname}", tri))

        def counit(M=M):
            v = counit_homology_verdicts(M, PB, 3)
            return all(v.values()), f"{v}"
        out.append(_run(f"counit on {mname} is a homology isomorphism in degrees ≤ 3", counit))
    return out


def pi1() -> list[Result]:
    out = []
    spaces = corpus.named_spaces()
    for name, want in corpus.PI1_TABLE.items():
        X = spaces[name]

        def prop(X=X, want=want):
            got = fundamental_group(X).abelianised()
            h1 = simplicial_homology(X, 1)[1]
            return got == want == h1, f"π1^ab = {got}, H1 = {h1}"
        out.append(_run(f"{name}: abelianised loop-group π0 equals H1", prop))
    return out


def loop_group_suite() -> list[Result]:
    out = []
    for name, X in corpus.named_spaces().items():
        def simp(X=X):
            rep = loop_group(X, 3).check()
            return rep.ok, rep.violation or ""

        def twist(X=X):
            rep = verify_twisting(loop_group(X, 3))
            return rep.ok, rep.violation or ""

        def bundle(X=X):
            T = twisted_bundle(X, 3, 2)
            rep = T.check()
            counts = [T.orbit_count(n) for n in range(3)]
            want = [len(X.simplices(n)) for n in range(3)]
            return rep.ok and counts == want, rep.violation or f"orbits {counts}"
        out.append(_run(f"{name}: loop group simplicial identities through degree 3", simp))
        out.append(_run(f"{name}: twisting function identities", twist))
        out.append(_run(f"{name}: twisted product bundle", bundle))
    return out


def finiteness() -> list[Result]:
    out = []
    pt = point()
    B = Base(pt, bound=4)
    for n in range(4):
        def cellcert(n=n):
            v = is_categorically_finite(cell(B, n, pt.simplices(n)[0]))
            return bool(v) and v.length == 2 ** (n + 1) - 1, f"length {v.length}"
        out.append(_run(f"Δ[{n}] over a point certifies with {2 ** (n + 1) - 1} cells", cellcert))

    def built():
        F = initial_filtration(B)
        star0 = pt.simplices(0)[0]
        Z0 = F.final
        F = extend(F, 0, star0, lambda y: Z0.s(y[1]))
        Z1 = F.final
        v0 = [y for y in Z1.relative(0)][0]
        chi = cell_map(Z1, 0, star0, v0)
        F = extend(F, 1, pt.simplices(1)[0],
                   lambda y: Z1.s(y[1]) if y[0] == "b" else chi(("c", (0,) * len(y[1]), y[2])))
        Z2_ = F.final
        chi2 = cell_map(Z2_, 0, star0, [y for y in Z2_.relative(0)][0])
        F = extend(F, 1, pt.simplices(1)[0],
                   lambda y: Z2_.s(y[1]) if y[0] == "b" else chi2(("c", (0,) * len(y[1]), y[2])))
        v = is_categorically_finite(F.final)
        return bool(verify_filtration(F)) and bool(v) and v.length == F.length == 3, f"length {v.length}"
    out.append(_run("three attachments certify with length 3", built))

    for m in range(2):
        for k in range(3):
            def tens(m=m, k=k):
                pred, got, ok = tensor_report(cell(B, m, pt.simplices(m)[0]), k, standard_simplex(k))
                return ok and pred == got, f"predicted {pred}, certified {got}"
            out.append(_run(f"Δ[{m}] ⊗ Δ{k} re-certifies with the chain count", tens))

    cov = corpus.circle_double_cover()
    BX = cov.base_X(3)
    for name, Y in [("cell", cell(BX, 1, cov.X.gen("e"))),
                    ("boundary ∨ vertex", wedge(boundary_cell(BX, 1, cov.X.gen("e")), cell(BX, 0, cov.X.gen("v"))))]:
        def functors(Y=Y):
            rep = functor_preservation(Y, bundle=cov, G=cyclic_group(2), G_act=lambda x, g: x)
            ok = all(p == o and v for p, o, v in rep.values())
            return ok, ", ".join(f"{k}={o}" for k, (p, o, v) in sorted(rep.items()))
        out.append(_run(f"functors preserve certified {name} over S1", functors))
    return out


def _random_matrix(rng: random.Random) -> list[list[int]]:
    m, n = rng.randint(1, 8), rng.randint(1, 8)
    return [[rng.randint(-100, 100) for _ in range(n)] for _ in range(m)]


def snf_property(A: list[list[int]]) -> tuple[bool, str]:
    m, n = len(A), len(A[0])
    sf = smith_form(A)
    if matmul(matmul(sf.U, sf.D, inner=m, cols=n), sf.V, inner=n, cols=n) != A:
        return False, "U D V ≠ A"
    if abs(determinant(sf.U)) != 1 or abs(determinant(sf.V)) != 1:
        return False, "not unimodular"
    for i in range(m):
        for j in range(n):
            if i != j and sf.D[i][j]:
                return False, "D not diagonal"
    diag = sf.diagonal
    if any(d <= 0 for d in diag) or any(diag[i + 1] % diag[i] for i in range(len(diag) - 1)):
        return False, f"diagonal {diag} not a divisibility chain"
    if any(sf.D[i][i] for i in range(sf.rank, min(m, n))):
        return False, "rank mismatch"
    return True, ""


def sag_corpus() -> list[tuple[str, object]]:
    items = []
    for name, Y in yoneda_corpus():
        items.append((f"⊕ Z̃({name})", sum_over_W(linearise(Y))))
        items.append((f"⊕ Z̃({name}) ⊗ Z/2", sum_over_W(tensor_ab(linearise(Y), constant_ab(Y.base, [2], Y.bound)))))
        items.append((f"⊕ Z̃({name}) ⊗ S1", sum_over_W(tensor_space_ab(linearise(Y), corpus.circle()))))
    S2 = corpus.pointed(corpus.sphere2(), "v", 4)
    items.append(("Z̃[S2]", sum_over_W(linearise(S2))))
    return items


def homological_core(seed: int = 0, count: int = 1000) -> list[Result]:
    rng = random.Random(seed)
    mats = [_random_matrix(rng) for _ in range(count)]

    def snf():
        for k, A in enumerate(mats):
            ok, why = snf_property(A)
            if not ok:
                return False, f"matrix {k}: {why}"
        return True, f"{count} matrices"
    out = [_run("Smith form reconstruction, unimodularity, divisibility", snf)]
    for name, A in sag_corpus():
        def agree(A=A):
            top = A.top - 1
            a, b = A.moore_homotopy(top), A.normalized_homology(top)
            return a == b, f"{a}"
        out.append(_run(f"{name}: Moore complex agrees with normalized chains", agree))

    for name, Y in yoneda_corpus():
        if len(Y.G) != 1:
            continue

        def reduced(Y=Y):
            a = sum_over_W(linearise(Y)).moore_homotopy(2)
            h = simplicial_homology(collapse(Y).total, 2)
            return {0: a[0] + [0], 1: a[1], 2: a[2]} == h, f"{a} vs {h}"
        out.append(_run(f"{name}: linearised homotopy is reduced homology", reduced))
    S2 = corpus.pointed(corpus.sphere2(), "v", 4)

    def s2():
        a = sum_over_W(linearise(S2)).moore_homotopy(3)
        return a == {0: [], 1: [], 2: [0], 3: []}, f"{a}"
    out.append(_run("Z̃[S2] has π2 = Z and nothing else", s2))
    return out


SUITES: dict[str, Callable[[], list[Result]]] = {
    "presheaf-roundtrip": presheaf_roundtrip,
    "grothendieck": grothendieck_suite,
    "yoneda": yoneda,
    "hocolim": hocolim,
    "linearisation": linearisation,
    "dagger": dagger,
    "ct-adjunction": ct_adjunction,
    "pi1": pi1,
    "loop-group": loop_group_suite,
    "finiteness": finiteness,
    "homological-core": homological_core,
}


def run_suite(name: str) -> list[Result]:
    if name == "all":
        return [Result(f"[{k}] {r.name}", r.ok, r.detail) for k, fn in SUITES.items() for r in fn()]
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name]()
