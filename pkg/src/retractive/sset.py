"""Simplicial sets: Δ-operators, Eilenberg–Zilber normal forms, two concrete
representations (finitely generated and degreewise tables), and the basic
constructions built on them.

Face convention: ``d_i`` omits vertex ``i``.  A simplex is any hashable value;
each representation knows the degree of its own simplices.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

DEFAULT_BOUND = 4

Simplex = Hashable


class BoundError(ValueError):
    """Raised when a computation needs simplices above a truncation bound."""


# ---------------------------------------------------------------------------
# the simplex category


@dataclass(frozen=True)
class DeltaOperator:
    """A monotone map ``[m] -> [n]`` stored by its values."""

    values: tuple[int, ...]
    codomain: int

    def __post_init__(self):
        v = self.values
        if not v:
            raise ValueError("domain [m] must be nonempty")
        if any(a > b for a, b in zip(v, v[1:])) or v[0] < 0 or v[-1] > self.codomain:
            raise ValueError(f"not a monotone map into [{self.codomain}]: {v}")

    @property
    def domain(self) -> int:
        return len(self.values) - 1

    @classmethod
    def identity(cls, n: int) -> "DeltaOperator":
        return cls(tuple(range(n + 1)), n)

    @classmethod
    def coface(cls, n: int, i: int) -> "DeltaOperator":
        """``δ_i : [n-1] -> [n]`` skipping ``i``."""
        if not 0 <= i <= n or n < 1:
            raise ValueError(f"no coface δ_{i} into [{n}]")
        return cls(tuple(k for k in range(n + 1) if k != i), n)

    @classmethod
    def codegeneracy(cls, n: int, j: int) -> "DeltaOperator":
        """``σ_j : [n+1] -> [n]`` hitting ``j`` twice."""
        if not 0 <= j <= n:
            raise ValueError(f"no codegeneracy σ_{j} onto [{n}]")
        return cls(tuple(k if k <= j else k - 1 for k in range(n + 2)), n)

    @classmethod
    def all(cls, m: int, n: int) -> list["DeltaOperator"]:
        """Every monotone map ``[m] -> [n]``; there are ``C(m+n+1, m+1)``."""
        return [cls(v, n) for v in itertools.combinations_with_replacement(range(n + 1), m + 1)]

    def __call__(self, k: int) -> int:
        return self.values[k]

    def compose(self, other: "DeltaOperator") -> "DeltaOperator":
        """``self ∘ other``."""
        if other.codomain != self.domain:
            raise ValueError("operators are not composable")
        return DeltaOperator(tuple(self.values[k] for k in other.values), self.codomain)

    __matmul__ = compose

    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.codomain + 1

    def missing(self) -> tuple[int, ...]:
        image = set(self.values)
        return tuple(k for k in range(self.codomain + 1) if k not in image)

    def repeats(self) -> tuple[int, ...]:
        v = self.values
        return tuple(j for j in range(len(v) - 1) if v[j] == v[j + 1])

    def factor(self) -> tuple["DeltaOperator", "DeltaOperator"]:
        """Epi–mono factorisation ``self = mono ∘ epi``."""
        image = sorted(set(self.values))
        pos = {x: i for i, x in enumerate(image)}
        epi = DeltaOperator(tuple(pos[x] for x in self.values), len(image) - 1)
        mono = DeltaOperator(tuple(image), self.codomain)
        return mono, epi

    def word(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Canonical word ``δ_{i_1}…δ_{i_k} σ_{j_1}…σ_{j_l}``.

        Returns the coface indices ``i_1 > … > i_k`` and the codegeneracy
        indices ``j_1 < … < j_l``.
        """
        return tuple(sorted(self.missing(), reverse=True)), self.repeats()

    @classmethod
    def from_word(cls, cofaces: Sequence[int], codegeneracies: Sequence[int], m: int) -> "DeltaOperator":
        """Compose ``δ_{i_1}…δ_{i_k} σ_{j_1}…σ_{j_l}`` acting on ``[m]``."""
        op = cls.identity(m)
        n = m
        for j in reversed(codegeneracies):
            op = cls.codegeneracy(n - 1, j).compose(op)
            n -= 1
        for i in reversed(cofaces):
            op = cls.coface(n + 1, i).compose(op)
            n += 1
        return op

    def __repr__(self) -> str:
        return f"Δ{list(self.values)}→[{self.codomain}]"


def _epi_from_word(word: Sequence[int], n: int) -> tuple[int, ...]:
    J = set(word)
    out, k = [], 0
    for i in range(n + 1):
        if i > 0 and (i - 1) in J:
            pass
        elif i > 0:
            k += 1
        out.append(k)
    return tuple(out)


def _word_from_epi(epi: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted((j for j in range(len(epi) - 1) if epi[j] == epi[j + 1]), reverse=True))


@dataclass(frozen=True, order=True)
class NormalSimplex:
    """Eilenberg–Zilber normal form ``s_{j_t} … s_{j_1} g`` with ``j_t > … > j_1``."""

    degeneracies: tuple[int, ...]
    generator: Hashable
    gen_dim: int

    @property
    def degree(self) -> int:
        return self.gen_dim + len(self.degeneracies)

    @property
    def is_degenerate(self) -> bool:
        return bool(self.degeneracies)

    @property
    def epi(self) -> tuple[int, ...]:
        return _epi_from_word(self.degeneracies, self.degree)

    @classmethod
    def from_epi(cls, epi: Sequence[int], generator: Hashable, gen_dim: int) -> "NormalSimplex":
        return cls(_word_from_epi(epi), generator, gen_dim)

    def __repr__(self) -> str:
        if not self.degeneracies:
            return f"{self.generator}"
        s = "".join(f"s{j}" for j in self.degeneracies)
        return f"{s}({self.generator})"


def ns(generator: Hashable, gen_dim: int, *degeneracies: int) -> NormalSimplex:
    """Shorthand for a normal simplex."""
    return NormalSimplex(tuple(sorted(degeneracies, reverse=True)), generator, gen_dim)


# ---------------------------------------------------------------------------
# the common interface


@dataclass
class ValidationReport:
    ok: bool
    violation: str | None = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.ok


class SimplicialSet(ABC):
    """Degreewise finite simplicial set.

    ``dim_bound`` is None for representations that can produce any degree,
    otherwise simplices exist only through that degree (degeneracies out of
    the top degree are undefined).
    """

    name: str = ""
    dim_bound: int | None = None

    @abstractmethod
    def simplices(self, n: int) -> Sequence[Simplex]:
        ...

    @abstractmethod
    def face(self, i: int, x: Simplex) -> Simplex:
        ...

    @abstractmethod
    def degeneracy(self, j: int, x: Simplex) -> Simplex:
        ...

    @abstractmethod
    def dim(self, x: Simplex) -> int:
        ...

    # derived structure ----------------------------------------------------

    def bound(self, requested: int | None = None) -> int:
        if requested is None:
            return self.dim_bound if self.dim_bound is not None else DEFAULT_BOUND
        if self.dim_bound is not None and requested > self.dim_bound:
            raise BoundError(f"{self.name or 'simplicial set'} is truncated at degree {self.dim_bound}")
        return requested

    def count(self, n: int) -> int:
        return len(self.simplices(n))

    def faces(self, x: Simplex) -> tuple:
        n = self.dim(x)
        return tuple(self.face(i, x) for i in range(n + 1)) if n > 0 else ()

    def decompose(self, x: Simplex) -> tuple[tuple[int, ...], Simplex]:
        """Eilenberg–Zilber decomposition: ``x = s_{word}(y)`` with ``y`` nondegenerate."""
        word: list[int] = []
        while True:
            n = self.dim(x)
            for j in range(n):
                y = self.face(j, x)
                if self.degeneracy(j, y) == x:
                    word.append(j)
                    x = y
                    break
            else:
                break
        # the letters were peeled off outermost-first; normalise
        return _normalise_word(word), x

    def is_degenerate(self, x: Simplex) -> bool:
        n = self.dim(x)
        return any(self.degeneracy(j, self.face(j, x)) == x for j in range(n))

    def nondegenerate(self, n: int) -> list[Simplex]:
        return [x for x in self.simplices(n) if not self.is_degenerate(x)]

    def apply(self, alpha: DeltaOperator, x: Simplex) -> Simplex:
        """``X(α)(x)`` for ``α: [m] -> [n]`` and ``x ∈ X_n``."""
        if self.dim(x) != alpha.codomain:
            raise ValueError(f"operator into [{alpha.codomain}] applied to a {self.dim(x)}-simplex")
        mono, epi = alpha.factor()
        for c in sorted(mono.missing(), reverse=True):
            x = self.face(c, x)
        for j in epi.repeats():
            x = self.degeneracy(j, x)
        return x

    def iter_simplices(self, bound: int | None = None) -> Iterator[Simplex]:
        for n in range(self.bound(bound) + 1):
            yield from self.simplices(n)

    def validate(self, bound: int | None = None) -> ValidationReport:
        return validate(self, bound)

    def truncate(self, bound: int | None = None) -> "FiniteSimplicialSet":
        b = self.bound(bound)
        return FiniteSimplicialSet.build(self.simplices, self.face, self.degeneracy, b, name=self.name)

    def __repr__(self) -> str:
        counts = [self.count(n) for n in range(min(self.bound(), 3) + 1)]
        return f"<{type(self).__name__} {self.name!r} counts={counts}…>"


def _normalise_word(word: Sequence[int]) -> tuple[int, ...]:
    """Rewrite ``s_{w_0} s_{w_1} …`` (outermost first) into decreasing canonical form."""
    # the word applied innermost-last: x = s_{w_0}( s_{w_1}( … y))
    epi = None
    letters = list(word)
    # build the epi [n] -> [m] as a composite of codegeneracies and read its repeats
    m = 0
    ops = []
    for j in reversed(letters):
        ops.append(j)
    # innermost first: start at degree m and go up
    n = m = 0  # degree bookkeeping is relative; use large enough base
    base = len(letters) + max(letters, default=0) + 1
    epi_vals = list(range(base + 1))
    degree = base
    for j in ops:
        # apply s_j on top: precompose the epi with σ_j : [degree+1] -> [degree]
        sigma = [k if k <= j else k - 1 for k in range(degree + 2)]
        epi_vals = [epi_vals[k] for k in sigma]
        degree += 1
    rep = [j for j in range(len(epi_vals) - 1) if epi_vals[j] == epi_vals[j + 1]]
    return tuple(sorted(rep, reverse=True))


def validate(X: SimplicialSet, bound: int | None = None) -> ValidationReport:
    """Check every simplicial identity on every simplex through ``bound``."""
    b = X.bound(bound)
    checked = 0
    for n in range(b + 1):
        for x in X.simplices(n):
            if X.dim(x) != n:
                return ValidationReport(False, f"{x!r} listed in degree {n} has degree {X.dim(x)}", checked)
            if n >= 1:
                fs = [X.face(i, x) for i in range(n + 1)]
                for i, f in enumerate(fs):
                    if X.dim(f) != n - 1:
                        return ValidationReport(False, f"d_{i}{x!r} = {f!r} has wrong degree", checked)
                if n >= 2:
                    for j in range(n + 1):
                        for i in range(j):
                            lhs = X.face(i, fs[j])
                            rhs = X.face(j - 1, fs[i])
                            checked += 1
                            if lhs != rhs:
                                return ValidationReport(
                                    False, f"d_{i} d_{j} ≠ d_{j - 1} d_{i} on {x!r}: {lhs!r} vs {rhs!r}", checked)
            if n < b:
                ss = [X.degeneracy(j, x) for j in range(n + 1)]
                for j, s in enumerate(ss):
                    for i in range(n + 2):
                        got = X.face(i, s)
                        if i < j:
                            want = X.degeneracy(j - 1, X.face(i, x)) if n >= 1 else None
                        elif i in (j, j + 1):
                            want = x
                        else:
                            want = X.degeneracy(j, X.face(i - 1, x)) if n >= 1 else None
                        checked += 1
                        if want is not None and got != want:
                            return ValidationReport(False, f"d_{i} s_{j} identity fails on {x!r}", checked)
                if n + 1 < b:
                    for j in range(n + 1):
                        for i in range(j + 1):
                            checked += 1
                            if X.degeneracy(i, ss[j]) != X.degeneracy(j + 1, ss[i]):
                                return ValidationReport(False, f"s_{i} s_{j} ≠ s_{j + 1} s_{i} on {x!r}", checked)
    return ValidationReport(True, None, checked)


# ---------------------------------------------------------------------------
# finitely generated representation


class GeneratedSimplicialSet(SimplicialSet):
    """Simplicial set presented by nondegenerate generators and their faces.

    ``generators`` maps id -> dimension (insertion order is kept);
    ``faces`` maps each positive-dimensional id to the tuple ``(d_0 g, …, d_n g)``
    of normal simplices.
    """

    def __init__(self, generators: Mapping[Hashable, int], faces: Mapping[Hashable, Sequence[NormalSimplex]],
                 name: str = ""):
        self.generators = dict(generators)
        self.face_table = {g: tuple(fs) for g, fs in faces.items()}
        self.name = name
        self.dim_bound = None
        for g, d in self.generators.items():
            fs = self.face_table.get(g, ())
            if d > 0 and len(fs) != d + 1:
                raise ValueError(f"generator {g!r} of dimension {d} needs {d + 1} faces, got {len(fs)}")
            for f in fs:
                if f.generator not in self.generators or self.generators[f.generator] != f.gen_dim:
                    raise ValueError(f"face {f!r} of {g!r} names an unknown generator")
                if f.degree != d - 1:
                    raise ValueError(f"face {f!r} of {g!r} has degree {f.degree}, expected {d - 1}")
        self._levels: dict[int, tuple[NormalSimplex, ...]] = {}

    def gen(self, g: Hashable) -> NormalSimplex:
        return NormalSimplex((), g, self.generators[g])

    def simplices(self, n: int) -> tuple[NormalSimplex, ...]:
        if n not in self._levels:
            out = []
            for g, m in self.generators.items():
                if m <= n:
                    for J in itertools.combinations(range(n - 1, -1, -1), n - m):
                        out.append(NormalSimplex(tuple(J), g, m))
            self._levels[n] = tuple(out)
        return self._levels[n]

    def dim(self, x: NormalSimplex) -> int:
        return x.degree

    def _apply_epi(self, epi: Sequence[int], g: Hashable, m: int) -> NormalSimplex:
        """``X(epi')(g)`` where ``epi`` is any monotone map into ``[m]``."""
        image = sorted(set(epi))
        if len(image) == m + 1:
            return NormalSimplex.from_epi(epi, g, m)
        missing = [c for c in range(m + 1) if c not in set(image)]
        c = missing[-1]
        f = self.face_table[g][c]
        # epi = δ_c ∘ epi2, so X(epi)(g) = X(epi2)(d_c g)
        epi2 = [v if v < c else v - 1 for v in epi]
        inner = f.epi
        return self._apply_epi([inner[v] for v in epi2], f.generator, f.gen_dim)

    def face(self, i: int, x: NormalSimplex) -> NormalSimplex:
        n = x.degree
        if not 0 <= i <= n or n == 0:
            raise ValueError(f"no face d_{i} on a {n}-simplex")
        epi = x.epi
        return self._apply_epi(epi[:i] + epi[i + 1:], x.generator, x.gen_dim)

    def degeneracy(self, j: int, x: NormalSimplex) -> NormalSimplex:
        n = x.degree
        if not 0 <= j <= n:
            raise ValueError(f"no degeneracy s_{j} on a {n}-simplex")
        epi = x.epi
        return NormalSimplex.from_epi(epi[: j + 1] + epi[j:], x.generator, x.gen_dim)

    def decompose(self, x: NormalSimplex) -> tuple[tuple[int, ...], NormalSimplex]:
        return x.degeneracies, NormalSimplex((), x.generator, x.gen_dim)

    def is_degenerate(self, x: NormalSimplex) -> bool:
        return x.is_degenerate

    def nondegenerate(self, n: int) -> list[NormalSimplex]:
        return [self.gen(g) for g, d in self.generators.items() if d == n]

    def apply(self, alpha: DeltaOperator, x: NormalSimplex) -> NormalSimplex:
        if x.degree != alpha.codomain:
            raise ValueError(f"operator into [{alpha.codomain}] applied to a {x.degree}-simplex")
        epi = x.epi
        return self._apply_epi([epi[k] for k in alpha.values], x.generator, x.gen_dim)

    def validate_generators(self) -> ValidationReport:
        """Simplicial identities ``d_i d_j = d_{j-1} d_i`` on generators only."""
        checked = 0
        for g, n in self.generators.items():
            if n < 2:
                continue
            fs = self.face_table[g]
            for j in range(n + 1):
                for i in range(j):
                    checked += 1
                    lhs, rhs = self.face(i, fs[j]), self.face(j - 1, fs[i])
                    if lhs != rhs:
                        return ValidationReport(False, f"d_{i} d_{j} ≠ d_{j - 1} d_{i} on {g!r}: {lhs!r} vs {rhs!r}",
                                                checked)
        return ValidationReport(True, None, checked)

    def max_generator_dim(self) -> int:
        return max(self.generators.values(), default=0)


# ---------------------------------------------------------------------------
# explicit tables through a bound


class FiniteSimplicialSet(SimplicialSet):
    """Simplicial set truncated at ``dim_bound`` with explicit face/degeneracy tables."""

    def __init__(self, levels: Sequence[Sequence[Simplex]], face_table: Mapping[Simplex, tuple],
                 degeneracy_table: Mapping[Simplex, tuple], name: str = ""):
        self.levels = [tuple(l) for l in levels]
        self.face_table = dict(face_table)
        self.degeneracy_table = dict(degeneracy_table)
        self.dim_bound = len(self.levels) - 1
        self.name = name
        self._dim: dict[Simplex, int] = {}
        for n, level in enumerate(self.levels):
            for x in level:
                if x in self._dim:
                    raise ValueError(f"simplex label {x!r} occurs twice")
                self._dim[x] = n

    @classmethod
    def build(cls, simplices: Callable[[int], Iterable[Simplex]], face: Callable[[int, Simplex], Simplex],
              degeneracy: Callable[[int, Simplex], Simplex], bound: int, name: str = "") -> "FiniteSimplicialSet":
        levels = [tuple(simplices(n)) for n in range(bound + 1)]
        faces, degens = {}, {}
        for n, level in enumerate(levels):
            for x in level:
                if n > 0:
                    faces[x] = tuple(face(i, x) for i in range(n + 1))
                if n < bound:
                    degens[x] = tuple(degeneracy(j, x) for j in range(n + 1))
        out = cls(levels, faces, degens, name=name)
        known = out._dim
        for x, fs in faces.items():
            for f in fs:
                if known.get(f) != known[x] - 1:
                    raise ValueError(f"face {f!r} of {x!r} is not a listed simplex of the right degree")
        for x, ss in degens.items():
            for s in ss:
                if known.get(s) != known[x] + 1:
                    raise ValueError(f"degeneracy {s!r} of {x!r} is not a listed simplex of the right degree")
        return out

    def simplices(self, n: int) -> tuple:
        if n > self.dim_bound:
            raise BoundError(f"{self.name or 'simplicial set'} is truncated at degree {self.dim_bound}")
        return self.levels[n]

    def face(self, i: int, x: Simplex) -> Simplex:
        return self.face_table[x][i]

    def degeneracy(self, j: int, x: Simplex) -> Simplex:
        try:
            return self.degeneracy_table[x][j]
        except KeyError:
            raise BoundError(f"s_{j} of {x!r} exceeds the truncation bound {self.dim_bound}") from None

    def dim(self, x: Simplex) -> int:
        return self._dim[x]

    def __contains__(self, x: Simplex) -> bool:
        return x in self._dim

    @cached_property
    def _degenerate(self) -> frozenset:
        out = set()
        for n in range(self.dim_bound):
            for x in self.levels[n]:
                out.update(self.degeneracy_table[x])
        return frozenset(out)

    def is_degenerate(self, x: Simplex) -> bool:
        return x in self._degenerate

    def nondegenerate(self, n: int) -> list:
        return [x for x in self.simplices(n) if x not in self._degenerate]

    def truncate(self, bound: int | None = None) -> "FiniteSimplicialSet":
        b = self.bound(bound)
        if b == self.dim_bound:
            return self
        return super().truncate(b)


# ---------------------------------------------------------------------------
# simplicial maps


class SimplicialMap:
    """A map of simplicial sets given by a function on simplices."""

    def __init__(self, source: SimplicialSet, target: SimplicialSet, fn: Callable[[Simplex], Simplex] | Mapping,
                 name: str = ""):
        self.source = source
        self.target = target
        self._fn = fn.__getitem__ if isinstance(fn, Mapping) else fn
        self.name = name

    def __call__(self, x: Simplex) -> Simplex:
        return self._fn(x)

    def check(self, bound: int | None = None) -> ValidationReport:
        """Commutation with every face and degeneracy through ``bound``."""
        b = self.source.bound(bound)
        S, T = self.source, self.target
        checked = 0
        for n in range(b + 1):
            for x in S.simplices(n):
                y = self(x)
                if T.dim(y) != n:
                    return ValidationReport(False, f"{x!r} ↦ {y!r} changes degree", checked)
                for i in range(n + 1 if n > 0 else 0):
                    checked += 1
                    if self(S.face(i, x)) != T.face(i, y):
                        return ValidationReport(False, f"map does not commute with d_{i} at {x!r}", checked)
                if n < b:
                    for j in range(n + 1):
                        checked += 1
                        if self(S.degeneracy(j, x)) != T.degeneracy(j, y):
                            return ValidationReport(False, f"map does not commute with s_{j} at {x!r}", checked)
        return ValidationReport(True, None, checked)

    def compose(self, other: "SimplicialMap") -> "SimplicialMap":
        """``self ∘ other``."""
        return SimplicialMap(other.source, self.target, lambda x: self(other(x)))

    def table(self, bound: int | None = None) -> dict:
        b = self.source.bound(bound)
        return {x: self(x) for n in range(b + 1) for x in self.source.simplices(n)}


def map_from_generators(source: GeneratedSimplicialSet, target: SimplicialSet,
                        images: Mapping[Hashable, Simplex]) -> SimplicialMap:
    """Extend generator images by ``f(s_J g) = s_J f(g)``; faces are checked."""
    for g, d in source.generators.items():
        y = images[g]
        if target.dim(y) != d:
            raise ValueError(f"image of {g!r} has the wrong degree")
        for i, f in enumerate(source.face_table.get(g, ())):
            fy = target.face(i, y)
            word, h = f.degeneracies, f.generator
            want = images[h]
            for j in reversed(word):
                want = target.degeneracy(j, want)
            if fy != want:
                raise ValueError(f"generator images do not commute with d_{i} at {g!r}")

    def fn(x: NormalSimplex) -> Simplex:
        y = images[x.generator]
        for j in reversed(x.degeneracies):
            y = target.degeneracy(j, y)
        return y

    return SimplicialMap(source, target, fn)


def identity_map(X: SimplicialSet) -> SimplicialMap:
    return SimplicialMap(X, X, lambda x: x, name="id")


def count_maps(source: GeneratedSimplicialSet, target: SimplicialSet, limit: int = 10**6) -> int:
    """Number of simplicial maps, by backtracking over generator images."""
    gens = sorted(source.generators.items(), key=lambda kv: kv[1])
    total = 1
    for _, d in gens:
        total *= max(1, target.count(d))
        if total > limit:
            raise OverflowError(f"more than {limit} candidate assignments")
    images: dict = {}

    def consistent(g, d, y) -> bool:
        for i, f in enumerate(source.face_table.get(g, ())):
            want = images[f.generator]
            for j in reversed(f.degeneracies):
                want = target.degeneracy(j, want)
            if target.face(i, y) != want:
                return False
        return True

    def rec(k: int) -> int:
        if k == len(gens):
            return 1
        g, d = gens[k]
        n = 0
        for y in target.simplices(d):
            if consistent(g, d, y):
                images[g] = y
                n += rec(k + 1)
        images.pop(g, None)
        return n

    return rec(0)


# ---------------------------------------------------------------------------
# standard shapes


def _vertex_sets_generators(n: int, keep: Callable[[tuple], bool]) -> GeneratedSimplicialSet:
    gens, faces = {}, {}
    for k in range(n + 1):
        for verts in itertools.combinations(range(n + 1), k + 1):
            if not keep(verts):
                continue
            gens[verts] = k
            if k > 0:
                faces[verts] = tuple(NormalSimplex((), verts[:i] + verts[i + 1:], k - 1) for i in range(k + 1))
    return gens, faces


def standard_simplex(n: int) -> GeneratedSimplicialSet:
    """``Δⁿ``: generators are the nonempty vertex subsets."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    gens, faces = _vertex_sets_generators(n, lambda v: True)
    return GeneratedSimplicialSet(gens, faces, name=f"Δ{n}")


def boundary(n: int) -> GeneratedSimplicialSet:
    """``∂Δⁿ``: ``Δⁿ`` without its top cell."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    top = tuple(range(n + 1))
    gens, faces = _vertex_sets_generators(n, lambda v: v != top)
    return GeneratedSimplicialSet(gens, faces, name=f"∂Δ{n}")


def horn(n: int, i: int) -> GeneratedSimplicialSet:
    """``Λ_i[n]``: ``Δⁿ`` without the top cell and its ``i``-th face."""
    if not 0 <= i <= n:
        raise ValueError(f"horn index {i} out of range for n = {n}")
    top = tuple(range(n + 1))
    face_i = top[:i] + top[i + 1:]
    gens, faces = _vertex_sets_generators(n, lambda v: v not in (top, face_i))
    return GeneratedSimplicialSet(gens, faces, name=f"Λ{i}[{n}]")


def point() -> GeneratedSimplicialSet:
    return GeneratedSimplicialSet({"*": 0}, {}, name="Δ0")


def delta_maps(k: int, n: int) -> list[tuple[int, ...]]:
    """All monotone maps ``[k] -> [n]`` as value tuples (the ``k``-simplices of ``Δⁿ``)."""
    return list(itertools.combinations_with_replacement(range(n + 1), k + 1))


def theta_face(theta: tuple, i: int) -> tuple:
    return theta[:i] + theta[i + 1:]


def theta_degeneracy(theta: tuple, j: int) -> tuple:
    return theta[: j + 1] + theta[j:]


def surjection_count(n: int, m: int) -> int:
    """Monotone surjections ``[n] ->> [m]``."""
    return comb(n, m) if 0 <= m <= n else 0


# ---------------------------------------------------------------------------
# constructions


class Product(FiniteSimplicialSet):
    def __init__(self, X: SimplicialSet, Y: SimplicialSet, bound: int | None = None):
        b = min(X.bound(bound if X.dim_bound is None or bound is None else min(bound, X.dim_bound)),
                Y.bound(bound if Y.dim_bound is None or bound is None else min(bound, Y.dim_bound)))
        built = FiniteSimplicialSet.build(
            lambda n: [(x, y) for x in X.simplices(n) for y in Y.simplices(n)],
            lambda i, p: (X.face(i, p[0]), Y.face(i, p[1])),
            lambda j, p: (X.degeneracy(j, p[0]), Y.degeneracy(j, p[1])),
            b, name=f"{X.name}×{Y.name}")
        self.__dict__.update(built.__dict__)
        self.left, self.right = X, Y

    def projections(self) -> tuple[SimplicialMap, SimplicialMap]:
        return (SimplicialMap(self, self.left, lambda p: p[0], name="pr1"),
                SimplicialMap(self, self.right, lambda p: p[1], name="pr2"))

    def pair(self, f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
        """The mediating map ``(f, g): T -> X × Y``."""
        return SimplicialMap(f.source, self, lambda t: (f(t), g(t)))


def product(X: SimplicialSet, Y: SimplicialSet, bound: int | None = None) -> Product:
    return Product(X, Y, bound)


def disjoint_union(parts: Mapping[Hashable, SimplicialSet], bound: int | None = None) -> FiniteSimplicialSet:
    """Coproduct with simplices tagged ``(key, x)``."""
    b = min(X.bound(bound) if X.dim_bound is None or bound is None else min(bound, X.dim_bound)
            for X in parts.values())
    return FiniteSimplicialSet.build(
        lambda n: [(k, x) for k, X in parts.items() for x in X.simplices(n)],
        lambda i, p: (p[0], parts[p[0]].face(i, p[1])),
        lambda j, p: (p[0], parts[p[0]].degeneracy(j, p[1])),
        b, name="⊔".join(X.name for X in parts.values()))


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the earlier-registered representative
            if self._order[ra] <= self._order[rb]:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb

    @property
    def _order(self):
        if not hasattr(self, "_ord") or len(self._ord) != len(self.parent):
            self._ord = {x: i for i, x in enumerate(self.parent)}
        return self._ord


def quotient(X: SimplicialSet, pairs: Iterable[tuple[Simplex, Simplex]], bound: int | None = None,
             name: str = "") -> tuple[FiniteSimplicialSet, SimplicialMap]:
    """Quotient by the simplicial equivalence relation generated by ``pairs``.

    The relation is closed under faces and degeneracies before classes are
    formed; class labels are the earliest member in enumeration order.
    """
    b = X.bound(bound)
    uf = _UnionFind()
    for n in range(b + 1):
        for x in X.simplices(n):
            uf.add(x)
    todo = list(pairs)
    while todo:
        a, c = todo.pop()
        if uf.find(a) == uf.find(c):
            continue
        uf.union(a, c)
        n = X.dim(a)
        if n > 0:
            todo.extend((X.face(i, a), X.face(i, c)) for i in range(n + 1))
        if n < b:
            todo.extend((X.degeneracy(j, a), X.degeneracy(j, c)) for j in range(n + 1))
    levels = []
    for n in range(b + 1):
        seen, level = set(), []
        for x in X.simplices(n):
            r = uf.find(x)
            if r not in seen:
                seen.add(r)
                level.append(r)
        levels.append(level)
    Q = FiniteSimplicialSet.build(lambda n: levels[n],
                                  lambda i, x: uf.find(X.face(i, x)),
                                  lambda j, x: uf.find(X.degeneracy(j, x)),
                                  b, name=name or f"{X.name}/~")
    return Q, SimplicialMap(X, Q, uf.find, name="quotient")


class Pushout:
    """``B ⊔_A C`` for simplicial maps ``f: A -> B`` and ``g: A -> C``."""

    def __init__(self, f: SimplicialMap, g: SimplicialMap, bound: int | None = None):
        if f.source is not g.source:
            raise ValueError("pushout maps must share their source")
        A = f.source
        b = min(S.bound() if S.dim_bound is not None else (bound if bound is not None else DEFAULT_BOUND)
                for S in (A, f.target, g.target))
        if bound is not None:
            b = min(b, bound)
        for m in (f, g):
            rep = m.check(b)
            if not rep:
                raise ValueError(f"pushout input is not simplicial: {rep.violation}")
        self.f, self.g = f, g
        U = disjoint_union({"B": f.target, "C": g.target}, b)
        pairs = [(("B", f(a)), ("C", g(a))) for n in range(b + 1) for a in A.simplices(n)]
        self.space, self._q = quotient(U, pairs, b, name=f"{f.target.name}⊔{g.target.name}")
        self.inl = SimplicialMap(f.target, self.space, lambda x: self._q(("B", x)), name="inl")
        self.inr = SimplicialMap(g.target, self.space, lambda x: self._q(("C", x)), name="inr")
        self.bound = b

    def mediate(self, hB: SimplicialMap, hC: SimplicialMap) -> SimplicialMap:
        """The unique map out of the pushout restricting to ``hB`` and ``hC``."""
        for n in range(self.bound + 1):
            for a in self.f.source.simplices(n):
                if hB(self.f(a)) != hC(self.g(a)):
                    raise ValueError("cone does not commute over the span")
        table = {}
        for n in range(self.bound + 1):
            for x in self.f.target.simplices(n):
                table[self.inl(x)] = hB(x)
            for x in self.g.target.simplices(n):
                table[self.inr(x)] = hC(x)
        return SimplicialMap(self.space, hB.target, table)


def pushout(f: SimplicialMap, g: SimplicialMap, bound: int | None = None) -> Pushout:
    return Pushout(f, g, bound)


def constant_map(X: SimplicialSet, P: SimplicialSet, target: Simplex = "*") -> SimplicialMap:
    """The map to a point whose ``n``-simplex is ``s_0^n(target)``."""
    cache = {}

    def fn(x):
        n = X.dim(x)
        if n not in cache:
            y = P.gen(target) if isinstance(P, GeneratedSimplicialSet) else target
            for _ in range(n):
                y = P.degeneracy(0, y)
            cache[n] = y
        return cache[n]

    return SimplicialMap(X, P, fn)


def chains_poset_count(p: int, q: int, length: int, surjective_first: bool = False) -> int:
    """Strict chains of ``length + 1`` elements in the poset ``[p] × [q]``.

    These are the nondegenerate ``length``-simplices of ``Δᵖ × Δ^q``; with
    ``surjective_first`` only chains whose first projection hits every vertex.
    """
    elems = [(a, b) for a in range(p + 1) for b in range(q + 1)]
    count = 0
    for chain in itertools.combinations(elems, length + 1):
        ok = all(x[0] <= y[0] and x[1] <= y[1] for x, y in zip(chain, chain[1:]))
        if ok and (not surjective_first or {c[0] for c in chain} == set(range(p + 1))):
            count += 1
    return count
