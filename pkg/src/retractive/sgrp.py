"""Groups acting on simplicial sets: finite groups and monoids, free-group
words, degreewise free simplicial groups, the Kan loop group, the universal
bundle of a finite group and the twisted cartesian product of a loop group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

from .homalg import cokernel_orders
from .sset import (DeltaOperator, FiniteSimplicialSet, GeneratedSimplicialSet, NormalSimplex, SimplicialMap,
                   SimplicialSet, ValidationReport, quotient)


# ---------------------------------------------------------------------------
# finite monoids and groups


class FiniteMonoid:
    """A finite monoid given by a multiplication table on ``elements``."""

    def __init__(self, elements: Sequence[Hashable], table: Mapping[tuple, Hashable], identity: Hashable,
                 name: str = ""):
        self.elements = tuple(elements)
        self.table = dict(table)
        self.identity = identity
        self.name = name
        members = set(self.elements)
        if identity not in members:
            raise ValueError("identity is not an element")
        for a in self.elements:
            for b in self.elements:
                if self.table.get((a, b)) not in members:
                    raise ValueError(f"product {a!r}·{b!r} missing or outside the set")
            if self.mul(a, identity) != a or self.mul(identity, a) != a:
                raise ValueError(f"{identity!r} is not a two-sided unit at {a!r}")
        for a, b, c in itertools.product(self.elements, repeat=3):
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise ValueError(f"multiplication not associative at {a!r}, {b!r}, {c!r}")

    def mul(self, a, b):
        return self.table[(a, b)]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name or self.elements!r}>"


class FiniteGroup(FiniteMonoid):
    def __init__(self, elements, table, identity, name: str = ""):
        super().__init__(elements, table, identity, name)
        self._inv = {}
        for a in self.elements:
            inv = [b for b in self.elements if self.mul(a, b) == identity]
            if not inv:
                raise ValueError(f"{a!r} has no inverse")
            self._inv[a] = inv[0]

    def inv(self, a):
        return self._inv[a]

    @property
    def is_trivial(self) -> bool:
        return len(self.elements) == 1


def cyclic_group(n: int) -> FiniteGroup:
    """``Z/n`` on ``0..n-1``."""
    if n < 1:
        raise ValueError("order must be positive")
    els = list(range(n))
    return FiniteGroup(els, {(a, b): (a + b) % n for a in els for b in els}, 0,
                       name="1" if n == 1 else f"Z/{n}")


def trivial_group() -> FiniteGroup:
    return cyclic_group(1)


def product_group(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    els = [(a, b) for a in G.elements for b in H.elements]
    return FiniteGroup(els, {(x, y): (G.mul(x[0], y[0]), H.mul(x[1], y[1])) for x in els for y in els},
                       (G.identity, H.identity), name=f"{G.name}×{H.name}")


def group_from_table(elements: Sequence, rows: Sequence[Sequence]) -> FiniteGroup:
    """Group from a square table ``rows[i][j] = elements[i]·elements[j]``; the unit is found."""
    table = {(a, b): rows[i][j] for i, a in enumerate(elements) for j, b in enumerate(elements)}
    units = [e for e in elements if all(table[(e, a)] == a and table[(a, e)] == a for a in elements)]
    if not units:
        raise ValueError("table has no unit")
    return FiniteGroup(elements, table, units[0])


# ---------------------------------------------------------------------------
# actions of constant finite groups


class GroupAction:
    """Right action of a constant finite group on a simplicial set."""

    def __init__(self, group: FiniteGroup, space: SimplicialSet, act: Callable[[Hashable, Hashable], Hashable],
                 free: bool = False):
        self.group = group
        self.space = space
        self._act = act
        self.free = free

    def __call__(self, x, g):
        return self._act(x, g)

    def check(self, bound: int | None = None) -> ValidationReport:
        X, G = self.space, self.group
        b = X.bound(bound)
        checked = 0
        for n in range(b + 1):
            for x in X.simplices(n):
                if self(x, G.identity) != x:
                    return ValidationReport(False, f"unit moves {x!r}", checked)
                for g in G.elements:
                    y = self(x, g)
                    for h in G.elements:
                        checked += 1
                        if self(y, h) != self(x, G.mul(g, h)):
                            return ValidationReport(False, f"action not associative at {x!r}", checked)
                    for i in range(n + 1 if n else 0):
                        checked += 1
                        if X.face(i, y) != self(X.face(i, x), g):
                            return ValidationReport(False, f"action does not commute with d_{i} at {x!r}", checked)
                    if n < b:
                        for j in range(n + 1):
                            checked += 1
                            if X.degeneracy(j, y) != self(X.degeneracy(j, x), g):
                                return ValidationReport(False, f"action does not commute with s_{j} at {x!r}",
                                                        checked)
                    if self.free and g != G.identity and y == x:
                        return ValidationReport(False, f"{x!r} is fixed by {g!r} but the action is flagged free",
                                                checked)
        return ValidationReport(True, None, checked)

    def is_free(self, bound: int | None = None) -> bool:
        X, G = self.space, self.group
        return all(self(x, g) != x for n in range(X.bound(bound) + 1) for x in X.simplices(n)
                   for g in G.elements if g != G.identity)

    def orbits(self, n: int) -> list[list]:
        seen, out = set(), []
        for x in self.space.simplices(n):
            if x not in seen:
                orb = []
                for g in self.group.elements:
                    y = self(x, g)
                    if y not in seen:
                        seen.add(y)
                        orb.append(y)
                out.append(orb)
        return out

    def stabilizer(self, x) -> list:
        return [g for g in self.group.elements if self(x, g) == x]

    def orbit_quotient(self, bound: int | None = None) -> tuple[FiniteSimplicialSet, SimplicialMap]:
        X, G = self.space, self.group
        b = X.bound(bound)
        pairs = [(x, self(x, g)) for n in range(b + 1) for x in X.simplices(n) for g in G.elements]
        return quotient(X, pairs, b, name=f"{X.name}/{G.name}")


def trivial_action(G: FiniteGroup, X: SimplicialSet) -> GroupAction:
    return GroupAction(G, X, lambda x, g: x, free=G.is_trivial)


# ---------------------------------------------------------------------------
# free groups

Letter = tuple  # (symbol, ±1)
Word = tuple  # tuple of letters


def reduce_word(w: Iterable[Letter]) -> Word:
    """Free reduction: cancel adjacent ``x x⁻¹`` pairs."""
    out: list = []
    for letter in w:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(tuple(letter))
    return tuple(out)


def letter(symbol: Hashable, power: int = 1) -> Word:
    sign = 1 if power > 0 else -1
    return tuple((symbol, sign) for _ in range(abs(power)))


def word_mul(*ws: Word) -> Word:
    return reduce_word(itertools.chain.from_iterable(ws))


def word_inv(w: Word) -> Word:
    return tuple((s, -e) for s, e in reversed(w))


def word_str(w: Word) -> str:
    if not w:
        return "e"
    return "·".join(f"{s}" if e == 1 else f"{s}⁻¹" for s, e in w)


def abelianised_invariants(generators: Sequence[Hashable], relators: Iterable[Word]) -> list[int]:
    """Invariant factors of the abelianisation of ``⟨generators | relators⟩``."""
    index = {g: i for i, g in enumerate(generators)}
    rows = []
    for r in relators:
        v = [0] * len(index)
        for s, e in r:
            v[index[s]] += e
        rows.append(v)
    return cokernel_orders(rows, len(index))


@dataclass
class GroupPresentation:
    generators: list
    relators: list

    def abelianised(self) -> list[int]:
        return abelianised_invariants(self.generators, self.relators)

    def count_homomorphisms(self, H: FiniteGroup) -> int:
        """Number of homomorphisms to a finite group (finite-quotient counting)."""
        count = 0
        for images in itertools.product(H.elements, repeat=len(self.generators)):
            assign = dict(zip(self.generators, images))
            if all(_evaluate(r, assign, H) == H.identity for r in self.relators):
                count += 1
        return count


def _evaluate(w: Word, assign: Mapping, H: FiniteGroup):
    out = H.identity
    for s, e in w:
        out = H.mul(out, assign[s] if e == 1 else H.inv(assign[s]))
    return out


class FreeSimplicialGroup:
    """Degreewise free simplicial group given by generator images.

    ``generators[n]`` lists degree-``n`` symbols; ``face_images[(x, i)]`` and
    ``degeneracy_images[(x, j)]`` are reduced words.  Operators extend
    homomorphically.
    """

    def __init__(self, generators: Mapping[int, Sequence], face_images: Mapping, degeneracy_images: Mapping,
                 name: str = ""):
        self.generators = {n: list(g) for n, g in generators.items()}
        self.face_images = dict(face_images)
        self.degeneracy_images = dict(degeneracy_images)
        self.name = name
        self.top = max(self.generators, default=0)

    def face(self, i: int, w: Word) -> Word:
        return reduce_word(itertools.chain.from_iterable(
            self.face_images[(s, i)] if e == 1 else word_inv(self.face_images[(s, i)]) for s, e in w))

    def degeneracy(self, j: int, w: Word) -> Word:
        return reduce_word(itertools.chain.from_iterable(
            self.degeneracy_images[(s, j)] if e == 1 else word_inv(self.degeneracy_images[(s, j)]) for s, e in w))

    def check(self, bound: int | None = None) -> ValidationReport:
        """Simplicial identities on generators; homomorphic extension makes this sufficient."""
        top = self.top if bound is None else min(bound, self.top)
        checked = 0
        for n in range(top + 1):
            for x in self.generators[n]:
                w = ((x, 1),)
                if n >= 2:
                    for j in range(n + 1):
                        for i in range(j):
                            checked += 1
                            if self.face(i, self.face(j, w)) != self.face(j - 1, self.face(i, w)):
                                return ValidationReport(False, f"d_{i} d_{j} fails on {x!r}", checked)
                if n + 1 <= top:
                    for j in range(n + 1):
                        s = self.degeneracy(j, w)
                        for i in range(n + 2):
                            if n == 0 and i not in (j, j + 1):
                                continue
                            got = self.face(i, s)
                            if i in (j, j + 1):
                                want = w
                            elif i < j:
                                want = self.degeneracy(j - 1, self.face(i, w))
                            else:
                                want = self.degeneracy(j, self.face(i - 1, w))
                            checked += 1
                            if got != want:
                                return ValidationReport(False, f"d_{i} s_{j} fails on {x!r}: {got} vs {want}",
                                                        checked)
                    if n + 2 <= top:
                        for j in range(n + 1):
                            for i in range(j + 1):
                                checked += 1
                                if self.degeneracy(i, self.degeneracy(j, w)) != \
                                        self.degeneracy(j + 1, self.degeneracy(i, w)):
                                    return ValidationReport(False, f"s_{i} s_{j} fails on {x!r}", checked)
        return ValidationReport(True, None, checked)

    def words(self, n: int, max_length: int) -> Iterator[Word]:
        """Every reduced degree-``n`` word of length ``≤ max_length``."""
        letters = [(s, e) for s in self.generators.get(n, []) for e in (1, -1)]
        yield ()
        frontier = [()]
        for _ in range(max_length):
            nxt = []
            for w in frontier:
                for l in letters:
                    if w and w[-1][0] == l[0] and w[-1][1] == -l[1]:
                        continue
                    nw = w + (l,)
                    nxt.append(nw)
                    yield nw
            frontier = nxt


def pi0_presentation(G: FreeSimplicialGroup) -> GroupPresentation:
    """``π₀`` as the coequaliser of ``d_0, d_1`` out of degree 1.

    Relators ``d_0(γ)·d_1(γ)⁻¹`` for the degree-1 generators ``γ``.
    """
    rels = []
    for g in G.generators.get(1, []):
        w = ((g, 1),)
        r = word_mul(G.face(0, w), word_inv(G.face(1, w)))
        if r:
            rels.append(r)
    return GroupPresentation(list(G.generators.get(0, [])), rels)


# ---------------------------------------------------------------------------
# the loop group


def _in_image_s0(X: SimplicialSet, x) -> bool:
    return X.dim(x) > 0 and X.degeneracy(0, X.face(0, x)) == x


class LoopGroup(FreeSimplicialGroup):
    """Kan's loop group of a reduced simplicial set.

    ``G_n`` is free on the ``x ∈ X_{n+1}`` not in the image of ``s_0``, with
    ``d_0⟨x⟩ = ⟨d_1 x⟩⟨d_0 x⟩⁻¹``, ``d_i⟨x⟩ = ⟨d_{i+1} x⟩`` (``i ≥ 1``),
    ``s_i⟨x⟩ = ⟨s_{i+1} x⟩`` and ``⟨s_0 y⟩ = e``.
    """

    def __init__(self, X: SimplicialSet, bound: int):
        vertices = X.simplices(0)
        if len(vertices) != 1:
            raise ValueError(f"{X.name or 'input'} is not reduced: vertices {list(vertices)!r}")
        if X.dim_bound is not None and X.dim_bound < bound + 2:
            raise ValueError(f"loop group through degree {bound} needs X through degree {bound + 2}")
        self.space = X
        self.top = bound
        gens = {n: [x for x in X.simplices(n + 1) if not _in_image_s0(X, x)] for n in range(bound + 1)}
        faces, degs = {}, {}
        for n in range(bound + 1):
            for x in gens[n]:
                if n > 0:
                    faces[(x, 0)] = word_mul(self.tau(X.face(1, x)), word_inv(self.tau(X.face(0, x))))
                    for i in range(1, n + 1):
                        faces[(x, i)] = self.tau(X.face(i + 1, x))
                if n < bound:
                    for j in range(n + 1):
                        degs[(x, j)] = self.tau(X.degeneracy(j + 1, x))
        super().__init__(gens, faces, degs, name=f"G({X.name})")

    def tau(self, x) -> Word:
        """The twisting function ``X_{n+1} -> G_n``: ``⟨x⟩``, trivial on ``im s_0``."""
        return () if _in_image_s0(self.space, x) else ((x, 1),)

    def generator_count(self, n: int) -> int:
        return len(self.generators[n])

    def nondegenerate_generators(self, n: int) -> list:
        X = self.space
        return [x for x in self.generators[n] if not X.is_degenerate(x)]


def loop_group(X: SimplicialSet, bound: int = 3) -> LoopGroup:
    return LoopGroup(X, bound)


def fundamental_group(X: SimplicialSet) -> GroupPresentation:
    return pi0_presentation(loop_group(X, 1))


# ---------------------------------------------------------------------------
# the universal bundle of a finite group


@dataclass
class Bundle:
    """A free ``G``-space ``P`` with its projection to the base."""

    total: SimplicialSet
    action: GroupAction
    base: SimplicialSet
    projection: SimplicialMap
    contraction: Callable | None = None


def eg_bundle(H: FiniteGroup, bound: int = 4) -> Bundle:
    """``EH -> BH``: ``P_n = H^{n+1}``, faces delete, degeneracies repeat, diagonal right action.

    The projection sends ``(h_0, …, h_n)`` to the chain ``f_i = h_i h_{i-1}⁻¹``
    in the nerve of the one-object category of ``H``.
    """
    from .fincat import one_object_category, nerve

    P = FiniteSimplicialSet.build(
        lambda n: list(itertools.product(H.elements, repeat=n + 1)),
        lambda i, x: x[:i] + x[i + 1:],
        lambda j, x: x[: j + 1] + x[j:],
        bound, name=f"E{H.name}")
    act = GroupAction(H, P, lambda x, g: tuple(H.mul(h, g) for h in x), free=True)
    B = nerve(one_object_category(H), bound - 1, name=f"B{H.name}")

    def proj(x):
        fs = tuple(("*", "*", H.mul(x[i], H.inv(x[i - 1]))) for i in range(1, len(x)))
        return (len(x) - 1, "*", fs)

    return Bundle(P, act, B, SimplicialMap(P, B, proj, name="quotient"),
                  contraction=lambda x: (H.identity,) + x)


def check_contraction(bundle: Bundle, bound: int | None = None) -> ValidationReport:
    """Extra-degeneracy identities ``d_0 s_{-1} = id``, ``d_{i+1} s_{-1} = s_{-1} d_i``,
    ``s_{j+1} s_{-1} = s_{-1} s_j`` that exhibit ``P`` as contractible."""
    P, c = bundle.total, bundle.contraction
    b = P.bound(bound)
    checked = 0
    for n in range(b):
        for x in P.simplices(n):
            y = c(x)
            checked += 1
            if P.face(0, y) != x:
                return ValidationReport(False, f"d_0 s_-1 moves {x!r}", checked)
            for i in range(n + 1 if n else 0):
                checked += 1
                if P.face(i + 1, y) != c(P.face(i, x)):
                    return ValidationReport(False, f"d_{i + 1} s_-1 fails at {x!r}", checked)
            if n + 1 < b:
                for j in range(n + 1):
                    checked += 1
                    if P.degeneracy(j + 1, y) != c(P.degeneracy(j, x)):
                        return ValidationReport(False, f"s_{j + 1} s_-1 fails at {x!r}", checked)
    return ValidationReport(True, None, checked)


# ---------------------------------------------------------------------------
# the twisted cartesian product G ×_τ X


class TwistedProduct(SimplicialSet):
    """``P = G(X) ×_τ X`` with simplices ``(g, x)``.

    ``d_0(g, x) = (d_0 g · τ(x), d_0 x)``, other operators act componentwise,
    and ``G`` acts on the right by ``(g, x)·h = (h⁻¹ g, x)``.
    """

    def __init__(self, G: LoopGroup, bound: int):
        self.G, self.X = G, G.space
        self.dim_bound = bound
        self.name = f"{G.name}×τ{self.X.name}"

    def simplices(self, n: int, max_length: int = 1) -> list:
        return [(w, x) for w in self.G.words(n, max_length) for x in self.X.simplices(n)]

    def face(self, i, p):
        w, x = p
        if i == 0:
            return (word_mul(self.G.face(0, w), self.G.tau(x)), self.X.face(0, x))
        return (self.G.face(i, w), self.X.face(i, x))

    def degeneracy(self, j, p):
        w, x = p
        return (self.G.degeneracy(j, w), self.X.degeneracy(j, x))

    def dim(self, p) -> int:
        return self.X.dim(p[1])

    def act(self, p, h: Word):
        return (word_mul(word_inv(h), p[0]), p[1])

    def project(self, p):
        return p[1]


def verify_twisting(G: LoopGroup, bound: int | None = None) -> ValidationReport:
    """The twisting identities for ``τ(x) = ⟨x⟩`` on every simplex through ``bound``:
    ``d_0 τ(x) = τ(d_1 x) τ(d_0 x)⁻¹``, ``d_i τ(x) = τ(d_{i+1} x)`` for ``i ≥ 1``,
    ``s_i τ(x) = τ(s_{i+1} x)`` and ``τ(s_0 x) = e``."""
    X = G.space
    top = G.top if bound is None else min(bound, G.top)
    checked = 0
    for n in range(1, top + 2):
        for x in X.simplices(n):
            t = G.tau(x)
            if n >= 2:
                checked += 1
                if G.face(0, t) != word_mul(G.tau(X.face(1, x)), word_inv(G.tau(X.face(0, x)))):
                    return ValidationReport(False, f"d_0 τ fails at {x!r}", checked)
                for i in range(1, n):
                    checked += 1
                    if G.face(i, t) != G.tau(X.face(i + 1, x)):
                        return ValidationReport(False, f"d_{i} τ fails at {x!r}", checked)
            if n - 1 < top:
                for i in range(n):
                    checked += 1
                    if G.degeneracy(i, t) != G.tau(X.degeneracy(i + 1, x)):
                        return ValidationReport(False, f"s_{i} τ fails at {x!r}", checked)
            if n < top + 1:
                checked += 1
                if G.tau(X.degeneracy(0, x)) != ():
                    return ValidationReport(False, f"τ s_0 nontrivial at {x!r}", checked)
    return ValidationReport(True, None, checked)


@dataclass
class TwistedBundle:
    group: LoopGroup
    total: TwistedProduct
    word_bound: int

    def check(self, bound: int | None = None) -> ValidationReport:
        """Simplicial identities on ``P`` over a word ball, equivariance and the orbit bijection ``P/G ≅ X``."""
        P, G, X = self.total, self.group, self.group.space
        top = G.top if bound is None else min(bound, G.top)
        checked = 0
        for n in range(top + 1):
            ball = list(G.words(n, self.word_bound))
            acting = list(G.words(n, 1))
            for w in ball:
                for x in X.simplices(n):
                    p = (w, x)
                    if n >= 2:
                        for j in range(n + 1):
                            for i in range(j):
                                checked += 1
                                if P.face(i, P.face(j, p)) != P.face(j - 1, P.face(i, p)):
                                    return ValidationReport(False, f"d_{i} d_{j} fails on {p!r}", checked)
                    if n < top:
                        for j in range(n + 1):
                            s = P.degeneracy(j, p)
                            for i in range(n + 2):
                                if i in (j, j + 1):
                                    want = p
                                elif i < j:
                                    want = P.degeneracy(j - 1, P.face(i, p))
                                else:
                                    want = P.degeneracy(j, P.face(i - 1, p))
                                checked += 1
                                if P.face(i, s) != want:
                                    return ValidationReport(False, f"d_{i} s_{j} fails on {p!r}", checked)
                    for h in acting:
                        q = P.act(p, h)
                        checked += 1
                        if P.project(q) != P.project(p):
                            return ValidationReport(False, "projection not constant on orbits", checked)
                        if h and q == p:
                            return ValidationReport(False, f"action not free at {p!r}", checked)
                        for i in range(n + 1 if n else 0):
                            checked += 1
                            if P.face(i, q) != P.act(P.face(i, p), G.face(i, h)):
                                return ValidationReport(False, f"action does not commute with d_{i}", checked)
                    # orbit representative (e, x) reached by acting with w itself
                    checked += 1
                    if P.act(p, w) != ((), x):
                        return ValidationReport(False, f"{p!r} not in the orbit of (e, {x!r})", checked)
        return ValidationReport(True, None, checked)

    def orbit_count(self, n: int) -> int:
        """Orbits of the word ball in ``P_n``; equals ``|X_n|`` for the exact bijection ``P/G ≅ X``."""
        P = self.total
        reps = set()
        for w, x in P.simplices(n, self.word_bound):
            reps.add(P.act((w, x), w))
        return len(reps)


def twisted_bundle(X: SimplicialSet, bound: int = 3, word_bound: int = 2) -> TwistedBundle:
    G = loop_group(X, bound)
    rep = G.check()
    if not rep:
        raise ValueError(f"loop group convention error: {rep.violation}")
    rep = verify_twisting(G)
    if not rep:
        raise ValueError(f"twisting identity failure (convention bug): {rep.violation}")
    return TwistedBundle(G, TwistedProduct(G, bound), word_bound)
