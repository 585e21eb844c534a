import itertools
from math import comb

import pytest

from retractive import corpus
from retractive.fincat import (FinCategory, Functor, compare_with_grothendieck, delta_category, discrete_category,
                               grothendieck, nerve, one_object_category, simplex_category_trunc,
                               transport_category, transport_functor)
from retractive.sgrp import cyclic_group, trivial_group
from retractive.sset import standard_simplex, validate


def test_delta_category_counts():
    D = delta_category(3)
    assert D.check()
    assert D.morphism_count() == sum(comb(m + n + 1, m + 1) for m in range(4) for n in range(4))


def test_one_object_and_discrete():
    C = one_object_category(cyclic_group(4))
    assert C.check() and C.morphism_count() == 4
    assert discrete_category([1, 2, 3]).morphism_count() == 3


def test_transport_category_homs():
    Z2 = cyclic_group(2)
    swap = {("a", 0): "a", ("a", 1): "b", ("b", 0): "b", ("b", 1): "a"}
    T = transport_category(["a", "b"], swap, Z2)
    assert T.check()
    assert [len(T.homs(s, t)) for s in "ab" for t in "ab"] == [1, 1, 1, 1]
    fixed = transport_category(["p"], lambda s, h: s, Z2)
    assert len(fixed.homs("p", "p")) == 2


def test_transport_category_rejects_non_action():
    with pytest.raises(ValueError):
        transport_category(["a", "b"], lambda s, h: "a", cyclic_group(2))


def test_nerve_of_group_counts():
    H = cyclic_group(3)
    N = nerve(one_object_category(H), 3)
    assert [len(N.simplices(k)) for k in range(5)] == [3 ** k for k in range(5)]
    assert validate(N, 4)


@pytest.mark.parametrize("k", [1, 2])
def test_simplex_category_of_standard_simplex(k):
    """Homs ``(m, v) -> (n, w)`` in ``Simp(Δᵏ)`` are the ``α`` with ``w∘α = v`` on vertex maps."""
    W = standard_simplex(k)
    S = simplex_category_trunc(W, trivial_group(), lambda x, g: x, 2)
    assert S.check()
    theta = {(n, x): _vertices(W, x) for n in range(3) for x in W.simplices(n)}
    for a in S.objects:
        for b in S.objects:
            va, vb = theta[a], theta[b]
            expected = sum(1 for alpha in itertools.combinations_with_replacement(range(b[0] + 1), a[0] + 1)
                           if tuple(vb[i] for i in alpha) == va)
            assert len(S.homs(a, b)) == expected


def _vertices(W, x):
    """Vertex ``i`` of ``x`` by deleting the others with face maps."""
    n = W.dim(x)
    out = []
    for i in range(n + 1):
        y = x
        for j in range(n, i, -1):
            y = W.face(j, y)
        for _ in range(i):
            y = W.face(0, y)
        out.append(y.generator[0])
    return tuple(out)


def test_group_acts_on_hom_sets():
    cover = corpus.circle_double_cover()
    S = simplex_category_trunc(cover.P, cover.action.group, cover.action, 2)
    assert S.check()
    # a free action gives at most one group element per operator
    for a in S.objects:
        for b in S.objects:
            ops = [m[2] for m in S.homs(a, b)]
            assert len(ops) == len(set(ops))


@pytest.mark.parametrize("seed", range(4))
def test_grothendieck_comparison(seed):
    base, _ = corpus.random_instances(seed=seed, count=1, bound=3)[0]
    S = simplex_category_trunc(base.W, base.G, base.act, 2)
    F = transport_functor(base.W, base.G, base.act, 2)
    assert F.check()
    rep = compare_with_grothendieck(S, grothendieck(F))
    assert rep, rep.violation
    assert rep.morphisms == S.morphism_count()


def test_grothendieck_comparison_detects_wrong_composition():
    W, G = standard_simplex(1), cyclic_group(2)
    S = simplex_category_trunc(W, G, lambda x, g: x, 1)
    Gr = grothendieck(transport_functor(W, G, lambda x, g: x, 1))
    broken = FinCategory(Gr.objects, Gr.homs, lambda f, g: _twist(Gr, f, g), Gr.identity)
    assert not compare_with_grothendieck(S, broken)


def _twist(Gr, f, g):
    """Composition with the wrong group label when both factors carry the generator of Z/2."""
    h = Gr.compose(f, g)
    s, t, alpha, a = h
    if a[2] == 0 and f[3][2] == 1:
        return (s, t, alpha, (a[0], a[1], 1))
    return h


def test_functor_check_detects_non_functor():
    C = one_object_category(cyclic_group(2))
    bad = Functor(C, C, lambda x: x, lambda f: (f[0], f[1], 1))
    assert not bad.check()
    good = Functor(C, C, lambda x: x, lambda f: f)
    assert good.check()
