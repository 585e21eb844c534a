import pytest

from retractive import corpus
from retractive.cw import (Filtration, UndecidableError, ab_attach_cell, ab_certificate, attach_cell, extend,
                           functor_preservation, initial_filtration, is_categorically_finite, tensor_cell_count,
                           tensor_report, verify_filtration)
from retractive.homalg import simplicial_homology
from retractive.linab import NatTrans, ab_boundary, ab_cell, space_object, zero_object
from retractive.retract import (Base, RetractiveMap, RetractiveObject, boundary_cell, cell, cell_map, point_base,
                                pushout, section_map, terminal, wedge)
from retractive.sgrp import cyclic_group
from retractive.sset import point, standard_simplex

PT = point()
B = Base(PT, bound=4)
STAR = PT.simplices(0)[0]


def circle_filtration() -> Filtration:
    """One 0-cell, then a 1-cell with both ends on it."""
    F = initial_filtration(B)
    Z0 = F.final
    F = extend(F, 0, STAR, lambda y: Z0.s(y[1]))
    Z1 = F.final
    chi = cell_map(Z1, 0, STAR, Z1.relative(0)[0])
    return extend(F, 1, PT.simplices(1)[0],
                  lambda y: Z1.s(y[1]) if y[0] == "b" else chi(("c", (0,) * len(y[1]), y[2])))


def test_attaching_a_vertex_to_the_initial_object():
    F = initial_filtration(B)
    Z0 = F.final
    F = extend(F, 0, STAR, lambda y: Z0.s(y[1]))
    assert len(F.final.total.nondegenerate(0)) == len(Z0.total.nondegenerate(0)) + 1
    assert verify_filtration(F)


def test_circle_over_a_point():
    F = circle_filtration()
    v = verify_filtration(F)
    assert v and v.length == 2
    Y = F.final
    assert [len(Y.relative_nondegenerate(n)) for n in range(3)] == [1, 1, 0]
    h = simplicial_homology(Y.total, 2)
    assert h[1] == [0] and h[0] == [0, 0]
    cert = is_categorically_finite(Y)
    assert cert and cert.length == F.length


def test_empty_filtration():
    F = initial_filtration(B)
    v = verify_filtration(F)
    assert v and v.length == 0
    c = is_categorically_finite(terminal(B))
    assert c and c.length == 0


@pytest.mark.parametrize("n", range(4))
def test_cells_over_a_point(n):
    v = is_categorically_finite(cell(B, n, PT.simplices(n)[0]))
    assert v and v.length == 2 ** (n + 1) - 1


def test_three_attachments():
    F = circle_filtration()
    Z2 = F.final
    chi = cell_map(Z2, 0, STAR, Z2.relative(0)[0])
    F = extend(F, 1, PT.simplices(1)[0],
               lambda y: Z2.s(y[1]) if y[0] == "b" else chi(("c", (0,) * len(y[1]), y[2])))
    assert verify_filtration(F) and F.length == 3
    v = is_categorically_finite(F.final)
    assert v and v.length == 3
    assert [c[0] for c in v.cells] == [0, 1, 1]


def test_tampered_stage_is_rejected_at_its_step():
    F = circle_filtration()
    Z1, Z2 = F.stages[1], F.stages[2]
    extra = cell(B, 0, STAR)
    T = terminal(B, Z2.bound)
    bigger, inl, _, _ = pushout(section_map(Z2, T), section_map(extra, T))
    last = F.attachments[1]
    tampered = type(last)(last.n, last.w, last.attach,
                          RetractiveMap(Z1, bigger, lambda y: inl(last.inclusion(y))),
                          RetractiveMap(last.characteristic.source, bigger, lambda y: inl(last.characteristic(y))))
    G = Filtration(F.stages[:2] + [bigger], F.attachments[:1] + [tampered])
    v = verify_filtration(G)
    assert not v and v.failing_step == 1


def test_stage_that_does_not_start_initial_is_rejected():
    F = circle_filtration()
    G = Filtration(F.stages[1:], F.attachments[1:])
    v = verify_filtration(G)
    assert not v and v.failing_step == 0


def test_invalid_attaching_maps_are_rejected():
    F = circle_filtration()
    Z = F.final
    e = Z.relative_nondegenerate(1)[0]
    # a constant 1-simplex cannot be the image of the boundary vertices
    with pytest.raises(ValueError):
        extend(F, 1, PT.simplices(1)[0], lambda y: e)
    with pytest.raises(ValueError):
        attach_cell(Z, RetractiveMap(cell(B, 0, STAR), Z, lambda y: Z.s(y[1]) if y[0] == "b" else y))


def test_undecidable_without_generator_data():
    Y = space_object(point_base(cyclic_group(2), 3), corpus.circle(), 3)
    with pytest.raises(UndecidableError):
        is_categorically_finite(Y)


def test_non_free_orbits_fail_replay():
    Y = space_object(point_base(cyclic_group(2), 3), corpus.circle(), 3)
    Y = RetractiveObject(Y.base, Y.total, Y.act, Y.r, Y.s, gen_dim=1)
    v = is_categorically_finite(Y)
    assert v.finite and not v.verified and v.verified.failing_step == 0


def test_free_orbits_certify_one_cell_per_orbit():
    cover = corpus.circle_double_cover()
    PB = cover.base_P(3)
    Y = wedge(cell(PB, 1, cover.P.simplices(1)[-1]), cell(PB, 0, cover.P.simplices(0)[0]))
    v = is_categorically_finite(Y)
    assert v
    assert v.length == 4  # two vertices and an edge from the 1-cell, one vertex from the 0-cell


def test_certificate_serialisation():
    v = is_categorically_finite(circle_filtration().final)
    data = v.certificate.serialise()
    assert [d["dim"] for d in data] == [0, 1]
    assert all(isinstance(d["attach"], dict) for d in data)


@pytest.mark.parametrize("m,k", [(0, 0), (0, 2), (1, 1), (1, 2), (2, 1)])
def test_tensor_recertifies_with_chain_count(m, k):
    Y = cell(B, m, PT.simplices(m)[0])
    pred, got, ok = tensor_report(Y, k, standard_simplex(k))
    assert ok and pred == got == tensor_cell_count(Y, k)


def test_tensor_count_by_hand():
    # each vertex of Δ[1] gives 2 vertices and an edge, the edge gives 3 edges and 2 triangles;
    # together that is every nondegenerate simplex of the square Δ¹ × Δ¹
    Y = cell(B, 1, PT.simplices(1)[0])
    assert tensor_cell_count(Y, 1) == 2 * (2 + 1) + (3 + 2) == 4 + 5 + 2


def test_functors_preserve_certified_objects():
    cov = corpus.circle_double_cover()
    BX = cov.base_X(3)
    Y = wedge(boundary_cell(BX, 1, cov.X.gen("e")), cell(BX, 0, cov.X.gen("v")))
    rep = functor_preservation(Y, bundle=cov, G=cyclic_group(2), G_act=lambda x, g: x)
    assert set(rep) == {"linearise", "pullback", "collapse", "collapse_ab", "induce"}
    for pred, got, ok in rep.values():
        assert ok and pred == got


def test_abelian_certificate():
    length, rep = ab_certificate(cell(B, 2, PT.simplices(2)[0]))
    assert rep and length == 7


def test_abelian_zero_cell_on_zero_object():
    base = Base(standard_simplex(1), bound=3)
    w = base.W.simplices(0)[0]
    Z = zero_object(base, 3)
    A = ab_boundary(base, 0, w, 3)
    P, att = ab_attach_cell(Z, NatTrans(A, Z, lambda n, v: []), 0, w)
    C = ab_cell(base, 0, w, 3)
    for n, v in base.objects(3):
        assert P.invariants(n, v) == C.invariants(n, v)
    assert att.characteristic.check(iso=True)
