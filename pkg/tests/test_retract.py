import random

import pytest

from oracles import brute_force_maps
from retractive import corpus
from retractive.homalg import simplicial_homology
from retractive.retract import (Base, HomSizeError, boundary_cell, cell, cell_inclusion, collapse,
                                fibrewise_pushout_report, forget_group, from_presheaf, hom_count, hom_enumerate,
                                homotopy_orbits, horn_cell, identity_morphism, induce, morphism_from_images,
                                point_base, pullback, pushout, representable, roundtrip_reports, section_map,
                                tensor, terminal, to_presheaf, wedge)
from retractive.sgrp import GroupAction, cyclic_group, trivial_action, trivial_group
from retractive.sset import FiniteSimplicialSet, chains_poset_count, point, standard_simplex

INSTANCES = corpus.random_instances(seed=11, count=8, bound=3)


def test_boundary_into_cell_regression():
    B = Base(standard_simplex(1), bound=3)
    w = standard_simplex(1).gen((0, 1))
    A, C = boundary_cell(B, 1, w), cell(B, 1, w)
    assert brute_force_maps(A, C, 1) == 4
    assert hom_count(A, C) == 4


@pytest.mark.parametrize("k", range(len(INSTANCES)))
def test_random_objects_are_valid(k):
    _, Y = INSTANCES[k]
    assert Y.check()


@pytest.mark.parametrize("k", range(len(INSTANCES)))
def test_presheaf_roundtrip(k):
    _, Y = INSTANCES[k]
    F = to_presheaf(Y)
    assert F.check()
    a, b = roundtrip_reports(Y)
    assert a and b
    Z = from_presheaf(F)
    assert [len(Z.total.simplices(n)) for n in range(4)] == [len(Y.total.simplices(n)) for n in range(4)]


@pytest.mark.parametrize("k", range(len(INSTANCES)))
def test_yoneda_counts(k):
    base, Y = INSTANCES[k]
    for n, w in base.objects(2):
        assert hom_count(cell(base, n, w), Y) == len(Y.fibre(n, w))


@pytest.mark.parametrize("k", range(len(INSTANCES)))
def test_terminal_object(k):
    base, Y = INSTANCES[k]
    assert hom_count(Y, terminal(base, Y.bound)) == 1
    assert section_map(Y).check()


def test_hom_count_matches_brute_force():
    rng = random.Random(5)
    done = 0
    for base, Y in corpus.random_instances(seed=23, count=30, bound=2):
        if not base.G.is_trivial or Y.gen_dim is None or Y.gen_dim > 1:
            continue
        for n, w in base.objects(1):
            Z = cell(base, n, w, 2)
            if rng.random() < 0.5:
                Z = wedge(Z, boundary_cell(base, n, w, 2)) if n else Z
            assert hom_count(Y, Z, 2) == brute_force_maps(Y, Z, Y.gen_dim)
            done += 1
    assert done >= 5


def test_enumerated_maps_are_morphisms():
    base, Y = INSTANCES[0]
    n, w = base.objects(1)[-1]
    C = cell(base, n, w)
    for images in hom_enumerate(Y, wedge(C, C), verify=True):
        assert morphism_from_images(Y, wedge(C, C), images).check()


def test_degree_bound_too_small_is_rejected():
    B = Base(standard_simplex(2), bound=3)
    w = standard_simplex(2).gen((0, 1, 2))
    with pytest.raises(ValueError):
        hom_count(cell(B, 2, w), cell(B, 2, w), d=1)


def test_size_limit():
    B = Base(standard_simplex(1), bound=3)
    w = standard_simplex(1).gen((0, 1))
    big = wedge(*[cell(B, 1, w)] * 3)
    with pytest.raises(HomSizeError):
        hom_count(wedge(*[cell(B, 1, w)] * 4), big, limit=10)


def test_representable_presheaf_matches_cell():
    B = Base(standard_simplex(1), cyclic_group(2), None, 3)
    for n, w in B.objects(1):
        R = representable(B, n, w)
        assert R.check()
        C = to_presheaf(cell(B, n, w))
        for m, v in B.objects(3):
            assert len(R.value(m, v)) == len(C.value(m, v))


def test_cells_and_inclusions():
    B = Base(standard_simplex(2), bound=3)
    w = standard_simplex(2).gen((0, 1, 2))
    C, D, H = cell(B, 2, w), boundary_cell(B, 2, w), horn_cell(B, 2, w, 1)
    for Y in (C, D, H):
        assert Y.check()
    assert [len(C.relative_nondegenerate(n)) for n in range(3)] == [3, 3, 1]
    assert [len(D.relative_nondegenerate(n)) for n in range(3)] == [3, 3, 0]
    assert [len(H.relative_nondegenerate(n)) for n in range(3)] == [3, 2, 0]
    assert cell_inclusion(D, C).check()
    assert identity_morphism(C).check(bijective=True)


@pytest.mark.parametrize("k", range(4))
def test_pushouts_are_fibrewise(k):
    base, Y = INSTANCES[k]
    T = terminal(base, Y.bound)
    assert fibrewise_pushout_report(section_map(Y, T), section_map(Y, T))
    P, inl, inr, _ = pushout(section_map(Y, T), section_map(Y, T))
    assert P.check() and inl.check() and inr.check()
    for n in range(3):
        assert len(P.relative(n)) == 2 * len(Y.relative(n))


def test_tensor_and_collapse():
    Y = corpus.pointed(corpus.circle(), "v", 4)
    T = tensor(Y, standard_simplex(1), 3)
    assert T.check()
    # e × Δ¹: e×0, e×1 and the diagonal, then the two shuffles
    assert [len(T.relative_nondegenerate(n)) for n in range(3)] == [0, 3, 2]
    assert [chains_poset_count(1, 1, k, surjective_first=True) for k in (1, 2)] == [3, 2]
    C = collapse(corpus.smash_with_group(corpus.circle(), "v", cyclic_group(2), 4))
    assert C.check()
    assert simplicial_homology(C.total, 2) == {0: [0], 1: [0, 0], 2: []}


def test_pullback_along_double_cover():
    cover = corpus.circle_double_cover()
    C = cell(cover.base_X(3), 1, corpus.circle().gen("e"))
    P = pullback(C, cover)
    assert P.check()
    assert len(P.G) == 2
    assert [len(P.relative_nondegenerate(n)) for n in range(3)] == [2 * len(C.relative_nondegenerate(n))
                                                                     for n in range(3)]


def test_induce_and_forget():
    B = Base(point(), bound=3)
    Y = cell(B, 1, point().simplices(1)[0])
    Z2 = cyclic_group(2)
    I = induce(Y, Z2, lambda w, g: w)
    assert I.check()
    assert len(I.relative_nondegenerate(1)) == 2 * len(Y.relative_nondegenerate(1))
    assert forget_group(I).check()
    # induction is left adjoint to forgetting the group
    assert hom_count(I, I) == hom_count(Y, forget_group(I)) == 7


def _z2_on_itself():
    Z2 = cyclic_group(2)
    Y = FiniteSimplicialSet.build(lambda n: [(n, g) for g in (0, 1)], lambda i, x: (x[0] - 1, x[1]),
                                  lambda j, x: (x[0] + 1, x[1]), 4, name="Z/2")
    return Y, GroupAction(Z2, Y, lambda x, g: (x[0], x[1] ^ g), free=True)


def test_homotopy_orbits_of_free_and_trivial_actions():
    Y, action = _z2_on_itself()
    assert simplicial_homology(homotopy_orbits(Y, action, 4), 3) == {0: [0], 1: [], 2: [], 3: []}
    P0 = point().truncate(4)
    BZ2 = homotopy_orbits(P0, GroupAction(cyclic_group(2), P0, lambda x, g: x), 4)
    assert simplicial_homology(BZ2, 3) == {0: [0], 1: [2], 2: [], 3: [2]}


def test_homotopy_orbits_of_circle_cover():
    cover = corpus.circle_double_cover()
    hq = simplicial_homology(homotopy_orbits(cover.P, cover.action, 4), 3)
    assert hq == simplicial_homology(cover.X, 3) == {0: [0], 1: [0], 2: [], 3: []}


def test_trivial_group_orbits_are_the_space():
    X = corpus.circle().truncate(3)
    H = homotopy_orbits(X, trivial_action(trivial_group(), X), 3)
    assert [len(H.simplices(n)) for n in range(4)] == [len(X.simplices(n)) for n in range(4)]


def test_point_base():
    B = point_base(cyclic_group(3), 3)
    assert B.objects(1) == [(0, B.W.simplices(0)[0]), (1, B.W.simplices(1)[0])]
