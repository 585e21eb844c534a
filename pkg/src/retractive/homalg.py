"""Exact integer homological algebra.

Matrices are plain lists of lists of Python ints, so arithmetic never
overflows.  The module provides Smith normal form with transforms, lattice
bases in echelon form, subquotients of lattices (the shape every homology
computation in this package takes), and chain complexes of free abelian
groups.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

Matrix = list[list[int]]
Vector = list[int]


# ---------------------------------------------------------------------------
# basic matrix helpers


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = 1
    return out


def shape(A: Matrix, cols: int | None = None) -> tuple[int, int]:
    if A:
        return len(A), len(A[0])
    return 0, cols or 0


def matmul(A: Matrix, B: Matrix, inner: int | None = None, cols: int | None = None) -> Matrix:
    """Product ``A @ B``.  ``inner``/``cols`` give shapes when a factor has no rows."""
    m = len(A)
    k = len(B) if B else (inner or 0)
    n = len(B[0]) if B else (cols or 0)
    out = zeros(m, n)
    for i in range(m):
        Ai = A[i]
        row = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(n):
                    b = Bt[j]
                    if b:
                        row[j] += a * b
    return out


def matvec(A: Matrix, v: Sequence[int]) -> Vector:
    return [sum(a * b for a, b in zip(row, v) if a and b) for row in A]


def transpose(A: Matrix, cols: int = 0) -> Matrix:
    if not A:
        return [[] for _ in range(cols)]
    return [list(col) for col in zip(*A)]


def is_zero(A: Matrix) -> bool:
    return all(x == 0 for row in A for x in row)


def determinant(A: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [row[:] for row in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass
class SmithForm:
    """``A == U @ D @ V`` with ``U``, ``V`` unimodular and ``D`` diagonal.

    ``L`` and ``R`` are the inverses of ``U`` and ``V`` (so ``L @ A @ R == D``).
    """

    U: Matrix
    D: Matrix
    V: Matrix
    L: Matrix
    R: Matrix
    rank: int

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(self.rank)]


def smith_form(A: Matrix, rows: int | None = None, cols: int | None = None) -> SmithForm:
    """Smith normal form with minimal-absolute-value pivoting."""
    m = len(A) if A else (rows or 0)
    n = len(A[0]) if A else (cols or 0)
    S = [row[:] for row in A] if A else zeros(m, n)
    U, L = identity(m), identity(m)
    V, R = identity(n), identity(n)

    def swap_rows(i: int, k: int) -> None:
        S[i], S[k] = S[k], S[i]
        L[i], L[k] = L[k], L[i]
        for row in U:
            row[i], row[k] = row[k], row[i]

    def add_row(i: int, k: int, c: int) -> None:
        # row_i += c * row_k
        Si, Sk = S[i], S[k]
        for j in range(n):
            if Sk[j]:
                Si[j] += c * Sk[j]
        Li, Lk = L[i], L[k]
        for j in range(m):
            if Lk[j]:
                Li[j] += c * Lk[j]
        for row in U:
            if row[i]:
                row[k] -= c * row[i]

    def negate_row(i: int) -> None:
        S[i] = [-x for x in S[i]]
        L[i] = [-x for x in L[i]]
        for row in U:
            row[i] = -row[i]

    def swap_cols(j: int, l: int) -> None:
        for row in S:
            row[j], row[l] = row[l], row[j]
        for row in R:
            row[j], row[l] = row[l], row[j]
        V[j], V[l] = V[l], V[j]

    def add_col(j: int, l: int, c: int) -> None:
        # col_j += c * col_l
        for row in S:
            if row[l]:
                row[j] += c * row[l]
        for row in R:
            if row[l]:
                row[j] += c * row[l]
        Vj, Vl = V[j], V[l]
        for k in range(n):
            if Vj[k]:
                Vl[k] -= c * Vj[k]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            Si = S[i]
            for j in range(t, n):
                x = Si[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        if i != t:
            swap_rows(i, t)
        if j != t:
            swap_cols(j, t)
        while True:
            p = S[t][t]
            clean = True
            for i in range(t + 1, m):
                if S[i][t]:
                    add_row(i, t, -(S[i][t] // p))
                    if S[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if S[t][j]:
                    add_col(j, t, -(S[t][j] // p))
                    if S[t][j]:
                        clean = False
            if not clean:
                # move the smallest leftover in row/column t onto the pivot
                cand = [(abs(S[i][t]), i, t) for i in range(t + 1, m) if S[i][t]]
                cand += [(abs(S[t][j]), t, j) for j in range(t + 1, n) if S[t][j]]
                _, i, j = min(cand)
                if i != t:
                    swap_rows(i, t)
                if j != t:
                    swap_cols(j, t)
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if S[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if S[t][t] < 0:
            negate_row(t)
        t += 1
    return SmithForm(U=U, D=S, V=V, L=L, R=R, rank=t)


def smith_normal_form(A: Matrix, rows: int | None = None, cols: int | None = None):
    """Return ``(U, D, V)`` with ``A == U D V``."""
    sf = smith_form(A, rows, cols)
    return sf.U, sf.D, sf.V


def invariant_factors(A: Matrix, rows: int | None = None, cols: int | None = None) -> list[int]:
    return smith_form(A, rows, cols).diagonal


def cokernel_orders(relations: Iterable[Sequence[int]], dim: int) -> list[int]:
    """Invariant factors of ``Z^dim / span(relations)``; 0 stands for Z, 1s dropped."""
    rels = [list(r) for r in relations if any(r)]
    if not rels:
        return [0] * dim
    M = transpose(rels)
    diag = invariant_factors(M)
    return normalise_orders([d for d in diag] + [0] * (dim - len(diag)))


def normalise_orders(orders: Iterable[int]) -> list[int]:
    """Canonical invariant-factor list of ``⊕ Z/d`` (0 meaning Z)."""
    orders = [abs(d) for d in orders if abs(d) != 1]
    free = sum(1 for d in orders if d == 0)
    torsion = [d for d in orders if d]
    if not torsion:
        return [0] * free
    diag = zeros(len(torsion), len(torsion))
    for i, d in enumerate(torsion):
        diag[i][i] = d
    factors = [d for d in invariant_factors(diag) if d != 1]
    return factors + [0] * free


# ---------------------------------------------------------------------------
# lattices


def echelon_basis(vectors: Iterable[Sequence[int]], dim: int) -> list[Vector]:
    """Row-echelon basis of the Z-span; pivots strictly increase, pivot entries positive."""
    rows = [list(v) for v in vectors if any(v)]
    basis: list[Vector] = []
    col = 0
    while rows and col < dim:
        active = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        if not active:
            col += 1
            continue
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            piv = active[0]
            nxt = [piv]
            for r in active[1:]:
                q = r[col] // piv[col]
                r2 = [a - q * b for a, b in zip(r, piv)]
                if r2[col]:
                    nxt.append(r2)
                elif any(r2):
                    rest.append(r2)
            active = nxt
        piv = active[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        basis.append(piv)
        rows = rest
        col += 1
    return basis


def _pivot(v: Sequence[int]) -> int:
    for i, a in enumerate(v):
        if a:
            return i
    return -1


class Lattice:
    """A subgroup of Z^dim, stored by an echelon basis."""

    def __init__(self, generators: Iterable[Sequence[int]], dim: int):
        self.dim = dim
        self.basis = echelon_basis(generators, dim)
        self._pivots = [_pivot(b) for b in self.basis]

    @classmethod
    def full(cls, dim: int) -> "Lattice":
        return cls(identity(dim), dim)

    @classmethod
    def diagonal(cls, orders: Sequence[int]) -> "Lattice":
        """Relation lattice of ``⊕ Z/orders[i]`` (order 0 contributes nothing)."""
        n = len(orders)
        gens = []
        for i, d in enumerate(orders):
            if d:
                v = [0] * n
                v[i] = d
                gens.append(v)
        return cls(gens, n)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self, v: Sequence[int]) -> list[int] | None:
        """Coefficients of ``v`` in the basis, or None if ``v`` is not in the lattice."""
        v = list(v)
        coeffs = []
        for b, p in zip(self.basis, self._pivots):
            if v[p] % b[p]:
                return None
            c = v[p] // b[p]
            coeffs.append(c)
            if c:
                v = [x - c * y for x, y in zip(v, b)]
        if any(v):
            return None
        return coeffs

    def __contains__(self, v: Sequence[int]) -> bool:
        return self.coordinates(v) is not None

    def contains_lattice(self, other: "Lattice") -> bool:
        return all(b in self for b in other.basis)

    def __add__(self, other: "Lattice") -> "Lattice":
        return Lattice(self.basis + other.basis, self.dim)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Lattice) and self.dim == other.dim and self.basis == other.basis

    def image(self, A: Matrix, target_dim: int) -> "Lattice":
        return Lattice([matvec(A, b) for b in self.basis], target_dim)

    def preimage(self, A: Matrix, target: "Lattice") -> "Lattice":
        """``{x in self : A x in target}``."""
        r = self.rank
        if r == 0:
            return Lattice([], self.dim)
        images = [matvec(A, b) for b in self.basis]
        if target.dim == 0 or all(not any(im) for im in images):
            return Lattice(self.basis, self.dim)
        cols = images + [[-x for x in c] for c in target.basis]
        ker = kernel_basis(transpose(cols), len(cols))
        gens = []
        for k in ker:
            a = k[:r]
            if any(a):
                gens.append([sum(a[i] * self.basis[i][j] for i in range(r) if a[i]) for j in range(self.dim)])
        return Lattice(gens, self.dim)

    def __repr__(self) -> str:
        return f"Lattice(rank={self.rank}, dim={self.dim})"


def kernel_basis(A: Matrix, cols: int | None = None) -> list[Vector]:
    """Basis of the integer kernel ``{x : A x = 0}`` (saturated)."""
    n = len(A[0]) if A else (cols or 0)
    m = len(A)
    # row-reduce [A^T | I]; rows whose A^T part vanishes give the kernel
    rows = [[A[i][j] for i in range(m)] + [1 if k == j else 0 for k in range(n)] for j in range(n)]
    done: list[Vector] = []
    for col in range(m):
        active = [r for r in rows if r[col]]
        rows = [r for r in rows if not r[col]]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            piv = active[0]
            nxt = [piv]
            for r in active[1:]:
                q = r[col] // piv[col]
                r2 = [a - q * b for a, b in zip(r, piv)]
                if r2[col]:
                    nxt.append(r2)
                else:
                    rows.append(r2)
            active = nxt
        done.extend(active)
    return [r[m:] for r in rows]


# ---------------------------------------------------------------------------
# subquotients


@dataclass
class Subquotient:
    """The group ``cycles / boundaries`` for lattices ``boundaries ⊆ cycles ⊆ Z^dim``.

    ``generators[i]`` generates the cyclic summand of order ``orders[i]``
    (0 means infinite cyclic); ``coordinates`` maps a cycle to its class.
    """

    orders: list[int]
    generators: list[Vector]
    _transform: Matrix = field(repr=False)
    _keep: list[int] = field(repr=False)
    _cycles: Lattice = field(repr=False)

    @classmethod
    def of(cls, cycles: Lattice, boundaries: Lattice) -> "Subquotient":
        r = cycles.rank
        coords = []
        for b in boundaries.basis:
            c = cycles.coordinates(b)
            if c is None:
                raise ValueError("boundaries are not contained in cycles")
            coords.append(c)
        if r == 0:
            return cls([], [], [], [], cycles)
        C = transpose(coords, cols=r) if coords else zeros(r, 0)
        sf = smith_form(C, rows=r, cols=len(coords))
        diag = [sf.D[i][i] if i < sf.rank else 0 for i in range(r)]
        keep = [i for i in range(r) if diag[i] != 1]
        gens = []
        for i in keep:
            gens.append([sum(sf.U[k][i] * cycles.basis[k][j] for k in range(r) if sf.U[k][i]) for j in range(cycles.dim)])
        return cls([diag[i] for i in keep], gens, sf.L, keep, cycles)

    @property
    def invariants(self) -> list[int]:
        return normalise_orders(self.orders)

    def coordinates(self, v: Sequence[int]) -> list[int]:
        c = self._cycles.coordinates(v)
        if c is None:
            raise ValueError("vector is not a cycle")
        out = []
        for i in self._keep:
            x = sum(a * b for a, b in zip(self._transform[i], c))
            d = self.orders[len(out)]
            out.append(x % d if d else x)
        return out

    def is_zero_class(self, v: Sequence[int]) -> bool:
        return not any(self.coordinates(v))


def induced_map(A: Matrix, source: Subquotient, target: Subquotient) -> Matrix:
    """Matrix of the map of subquotients induced by ``A`` (columns = source generators)."""
    cols = [target.coordinates(matvec(A, g)) for g in source.generators]
    return transpose(cols, cols=len(target.orders)) if cols else zeros(len(target.orders), 0)


def induced_is_isomorphism(A: Matrix, src_cycles: Lattice, src_bdry: Lattice,
                           tgt_cycles: Lattice, tgt_bdry: Lattice) -> bool:
    """Whether ``A`` induces an isomorphism ``src_cycles/src_bdry -> tgt_cycles/tgt_bdry``."""
    # injective: A^{-1}(tgt_bdry) ∩ cycles ⊆ src_bdry
    pre = src_cycles.preimage(A, tgt_bdry)
    if not src_bdry.contains_lattice(pre):
        return False
    # surjective: A(cycles) + tgt_bdry ⊇ tgt_cycles
    img = src_cycles.image(A, tgt_cycles.dim) + tgt_bdry
    return img.contains_lattice(tgt_cycles)


# ---------------------------------------------------------------------------
# chain complexes


class ChainComplex:
    """Bounded complex of free abelian groups.

    ``ranks[n]`` is the rank in degree ``n``; ``boundaries[n]`` is the matrix of
    ``d_n`` from degree ``n`` to ``n - 1`` (shape ``ranks[n-1] x ranks[n]``).
    """

    def __init__(self, ranks: Sequence[int], boundaries: dict[int, Matrix] | None = None):
        self.ranks = list(ranks)
        self.boundaries = dict(boundaries or {})
        for n in range(1, len(self.ranks)):
            self.boundaries.setdefault(n, zeros(self.ranks[n - 1], self.ranks[n]))

    @property
    def top(self) -> int:
        return len(self.ranks) - 1

    def boundary(self, n: int) -> Matrix:
        if n <= 0 or n > self.top:
            rows = self.ranks[n - 1] if 0 < n <= self.top + 1 and n - 1 <= self.top else 0
            cols = self.ranks[n] if 0 <= n <= self.top else 0
            return zeros(rows, cols)
        return self.boundaries[n]

    def check(self) -> None:
        for n in range(2, self.top + 1):
            prod = matmul(self.boundaries[n - 1], self.boundaries[n], inner=self.ranks[n - 1], cols=self.ranks[n])
            if not is_zero(prod):
                raise ValueError(f"d_{n - 1} d_{n} != 0")

    def homology(self, max_degree: int | None = None) -> dict[int, list[int]]:
        """Invariant factors of ``H_n`` for ``0 <= n <= max_degree``.

        ``H_n`` needs degree ``n + 1``, so ``max_degree`` defaults to ``top - 1``.
        """
        self.check()
        if max_degree is None:
            max_degree = self.top - 1
        if max_degree > self.top - 1:
            raise ValueError(f"homology through degree {max_degree} needs chains through {max_degree + 1}")
        ranks_of = {}
        factors_of = {}
        for n in range(1, max_degree + 2):
            diag = invariant_factors(self.boundaries[n], rows=self.ranks[n - 1], cols=self.ranks[n])
            ranks_of[n] = len(diag)
            factors_of[n] = diag
        out = {}
        for n in range(max_degree + 1):
            cycles = self.ranks[n] - ranks_of.get(n, 0)
            free = cycles - ranks_of[n + 1]
            torsion = [d for d in factors_of[n + 1] if d > 1]
            out[n] = torsion + [0] * free
        return out


def free_subquotient(boundary_out: Matrix | None, boundary_in: Matrix | None, rank: int) -> Subquotient:
    """Homology at a free term with explicit generators: ``ker(out) / im(in)``."""
    cycles = Lattice(kernel_basis(boundary_out, rank), rank) if boundary_out else Lattice.full(rank)
    if boundary_in and boundary_in[0]:
        bd = Lattice(transpose(boundary_in), rank)
    else:
        bd = Lattice([], rank)
    return Subquotient.of(cycles, bd)


# ---------------------------------------------------------------------------
# presentations


@dataclass
class ReducedPresentation:
    """``Z^k / relations`` rewritten as ``⊕ Z/orders[i]``.

    ``to_new`` (``len(orders) x k``) sends old coordinates to new ones and
    ``from_new`` (``k x len(orders)``) sends new generators back to old
    coordinates; ``to_new @ from_new`` is the identity modulo ``orders``.
    """

    orders: list[int]
    to_new: Matrix
    from_new: Matrix


def reduce_presentation(k: int, relations: Iterable[Sequence[int]]) -> ReducedPresentation:
    rels = [list(r) for r in relations if any(r)]
    if not rels:
        return ReducedPresentation([0] * k, identity(k), identity(k))
    sf = smith_form(transpose(rels), rows=k, cols=len(rels))
    diag = [sf.D[i][i] if i < sf.rank else 0 for i in range(k)]
    keep = [i for i in range(k) if abs(diag[i]) != 1]
    to_new = [list(sf.L[i]) for i in keep]
    from_new = [[sf.U[r][i] for i in keep] for r in range(k)]
    orders = [abs(diag[i]) for i in keep]
    to_new = [[x % d if d else x for x in row] for row, d in zip(to_new, orders)]
    return ReducedPresentation(orders, to_new, from_new)


def reduce_mod(A: Matrix, orders: Sequence[int]) -> Matrix:
    """Reduce the rows of ``A`` modulo the target orders."""
    return [[x % d if d else x for x in row] for row, d in zip(A, orders)]


def tensor_orders(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Cyclic orders of ``(⊕ Z/a_i) ⊗ (⊕ Z/b_j)`` in lexicographic generator order."""
    return [gcd(x, y) for x in a for y in b]


def kronecker(A: Matrix, B: Matrix, a_shape: tuple[int, int], b_shape: tuple[int, int]) -> Matrix:
    (ra, ca), (rb, cb) = a_shape, b_shape
    out = zeros(ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            x = A[i][j]
            if x:
                for k in range(rb):
                    for l in range(cb):
                        y = B[k][l]
                        if y:
                            out[i * rb + k][j * cb + l] = x * y
    return out


def block_matrix(blocks: dict[tuple[int, int], Matrix], row_sizes: Sequence[int],
                 col_sizes: Sequence[int]) -> Matrix:
    """Assemble a matrix from blocks keyed by (row block, column block)."""
    roff = [0]
    for s in row_sizes:
        roff.append(roff[-1] + s)
    coff = [0]
    for s in col_sizes:
        coff.append(coff[-1] + s)
    out = zeros(roff[-1], coff[-1])
    for (bi, bj), M in blocks.items():
        for i, row in enumerate(M):
            target = out[roff[bi] + i]
            for j, x in enumerate(row):
                if x:
                    target[coff[bj] + j] += x
    return out


# ---------------------------------------------------------------------------
# simplicial abelian groups


class SimplicialAbelianGroup:
    """Degreewise ``⊕ Z/orders[n][i]`` with integer face and degeneracy matrices.

    ``face(n, i)`` is the matrix of ``d_i : A_n -> A_{n-1}``; ``degeneracy(n, j)``
    the matrix of ``s_j : A_n -> A_{n+1}``.  Data exists through degree ``top``.
    """

    def __init__(self, orders: Sequence[Sequence[int]], faces: dict[tuple[int, int], Matrix],
                 degeneracies: dict[tuple[int, int], Matrix], name: str = ""):
        self.orders = [list(o) for o in orders]
        self.faces = faces
        self.degeneracies = degeneracies
        self.name = name

    @property
    def top(self) -> int:
        return len(self.orders) - 1

    def rank(self, n: int) -> int:
        return len(self.orders[n])

    def face(self, n: int, i: int) -> Matrix:
        return self.faces[(n, i)]

    def degeneracy(self, n: int, j: int) -> Matrix:
        return self.degeneracies[(n, j)]

    def relations(self, n: int) -> Lattice:
        return Lattice.diagonal(self.orders[n])

    def check(self) -> None:
        """Simplicial identities as matrix identities modulo relations."""
        def eq(A, B, n):
            R = self.relations(n)
            k = self.rank(n)
            cols = len(A[0]) if A and A[0] else 0
            for j in range(cols):
                diff = [A[r][j] - B[r][j] for r in range(k)]
                if diff not in R:
                    return False
            return True

        def mm(A, B, n_mid, n_cols):
            return matmul(A, B, inner=self.rank(n_mid), cols=self.rank(n_cols))

        for n in range(2, self.top + 1):
            for j in range(n + 1):
                for i in range(j):
                    if not eq(mm(self.face(n - 1, i), self.face(n, j), n - 1, n),
                              mm(self.face(n - 1, j - 1), self.face(n, i), n - 1, n), n - 2):
                        raise ValueError(f"d_{i} d_{j} != d_{j - 1} d_{i} in degree {n}")
        for n in range(self.top):
            for j in range(n + 1):
                s = self.degeneracy(n, j)
                for i in range(n + 2):
                    lhs = mm(self.face(n + 1, i), s, n + 1, n)
                    if i in (j, j + 1):
                        rhs = identity(self.rank(n))
                    elif i < j:
                        rhs = mm(self.degeneracy(n - 1, j - 1), self.face(n, i), n - 1, n)
                    else:
                        rhs = mm(self.degeneracy(n - 1, j), self.face(n, i - 1), n - 1, n)
                    if not eq(lhs, rhs, n):
                        raise ValueError(f"d_{i} s_{j} identity fails in degree {n}")

    # Moore complex -----------------------------------------------------------

    def _normal_lattice(self, n: int) -> Lattice:
        L = Lattice.full(self.rank(n))
        for i in range(1, n + 1):
            L = L.preimage(self.face(n, i), self.relations(n - 1))
        return L

    def moore_pieces(self, n: int) -> tuple[Lattice, Lattice]:
        """Cycle and boundary lattices of the Moore complex in degree ``n``.

        Both contain the relation lattice, so their quotient is ``π_n``.
        """
        if n + 1 > self.top:
            raise ValueError(f"π_{n} needs data through degree {n + 1}")
        L = self._normal_lattice(n)
        Z = L.preimage(self.face(n, 0), self.relations(n - 1)) if n > 0 else L
        B = self._normal_lattice(n + 1).image(self.face(n + 1, 0), self.rank(n)) + self.relations(n)
        return Z, B

    def moore_homotopy(self, max_degree: int | None = None) -> dict[int, list[int]]:
        if max_degree is None:
            max_degree = self.top - 1
        out = {}
        for n in range(max_degree + 1):
            Z, B = self.moore_pieces(n)
            out[n] = Subquotient.of(Z, B).invariants
        return out

    # normalized quotient route -------------------------------------------------

    def _alternating(self, n: int) -> Matrix:
        k, k0 = self.rank(n - 1), self.rank(n)
        out = zeros(k, k0)
        for i in range(n + 1):
            F = self.face(n, i)
            sign = -1 if i % 2 else 1
            for r in range(k):
                for c in range(k0):
                    if F[r][c]:
                        out[r][c] += sign * F[r][c]
        return out

    def _degenerate_lattice(self, n: int) -> Lattice:
        gens = list(self.relations(n).basis)
        if n > 0:
            for j in range(n):
                S = self.degeneracy(n - 1, j)
                gens.extend(transpose(S, cols=self.rank(n - 1)) if S else [])
        return Lattice(gens, self.rank(n))

    def normalized_pieces(self, n: int) -> tuple[Lattice, Lattice]:
        if n + 1 > self.top:
            raise ValueError(f"H_{n} needs data through degree {n + 1}")
        D = self._degenerate_lattice(n)
        if n > 0:
            Z = Lattice.full(self.rank(n)).preimage(self._alternating(n), self._degenerate_lattice(n - 1))
        else:
            Z = Lattice.full(self.rank(0))
        B = Lattice.full(self.rank(n + 1)).image(self._alternating(n + 1), self.rank(n)) + D
        return Z, B

    def normalized_homology(self, max_degree: int | None = None) -> dict[int, list[int]]:
        if max_degree is None:
            max_degree = self.top - 1
        out = {}
        for n in range(max_degree + 1):
            Z, B = self.normalized_pieces(n)
            out[n] = Subquotient.of(Z, B).invariants
        return out


def constant_group(orders: Sequence[int], top: int) -> SimplicialAbelianGroup:
    """The constant simplicial abelian group on ``⊕ Z/orders``."""
    k = len(orders)
    faces = {(n, i): identity(k) for n in range(1, top + 1) for i in range(n + 1)}
    degs = {(n, j): identity(k) for n in range(top) for j in range(n + 1)}
    return SimplicialAbelianGroup([list(orders)] * (top + 1), faces, degs, name="const")


def moore_map_verdicts(f: dict[int, Matrix], A: SimplicialAbelianGroup, B: SimplicialAbelianGroup,
                       max_degree: int) -> dict[int, bool]:
    """Whether the degreewise maps ``f[n]: A_n -> B_n`` induce isomorphisms on ``π_n``."""
    out = {}
    for n in range(max_degree + 1):
        Za, Ba = A.moore_pieces(n)
        Zb, Bb = B.moore_pieces(n)
        out[n] = induced_is_isomorphism(f[n], Za, Ba, Zb, Bb)
    return out


def normalized_chains(X, max_degree: int) -> ChainComplex:
    """Normalized chains of a simplicial set through ``max_degree``.

    Degree ``n`` is free on the nondegenerate ``n``-simplices; the boundary is
    the alternating face sum with degenerate faces dropped.
    """
    bases = [X.nondegenerate(n) for n in range(max_degree + 1)]
    index = [{x: i for i, x in enumerate(b)} for b in bases]
    ranks = [len(b) for b in bases]
    bd = {}
    for n in range(1, max_degree + 1):
        M = zeros(ranks[n - 1], ranks[n])
        for c, x in enumerate(bases[n]):
            for i in range(n + 1):
                r = index[n - 1].get(X.face(i, x))
                if r is not None:
                    M[r][c] += -1 if i % 2 else 1
        bd[n] = M
    return ChainComplex(ranks, bd)


def simplicial_homology(X, max_degree: int = 3) -> dict[int, list[int]]:
    return normalized_chains(X, max_degree + 1).homology(max_degree)
