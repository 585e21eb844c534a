"""Slow reference computations that share no code with the package."""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd


def det(M):
    """Laplace expansion; fine for the small matrices used here."""
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j]:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            total += (-1) ** j * M[0][j] * det(minor)
    return total


def invariant_factors(A):
    """Invariant factors via determinantal divisors ``d_k = gcd of k×k minors``."""
    m = len(A)
    n = len(A[0]) if m else 0
    ds = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                g = gcd(g, det([[A[r][c] for c in cols] for r in rows]))
        if g == 0:
            break
        ds.append(g)
    return [ds[k] // ds[k - 1] for k in range(1, len(ds))]


def rational_rank(A):
    rows = [[Fraction(x) for x in r] for r in A]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def betti_numbers(X, top):
    """Ranks of rational homology from all simplices (unnormalised chains)."""
    cells = [list(X.simplices(n)) for n in range(top + 2)]
    idx = [{x: i for i, x in enumerate(c)} for c in cells]
    ranks = [0]
    for n in range(1, top + 2):
        D = [[0] * len(cells[n]) for _ in cells[n - 1]]
        for c, x in enumerate(cells[n]):
            for i in range(n + 1):
                D[idx[n - 1][X.face(i, x)]][c] += (-1) ** i
        ranks.append(rational_rank(D) if D and D[0] else 0)
    return [len(cells[n]) - ranks[n] - ranks[n + 1] for n in range(top + 1)]


def brute_force_maps(Y, Z, degree_top):
    """Count maps of retractive objects by trying every assignment on nondegenerate
    relative simplices of ``Y`` (trivial group only) and checking all faces."""
    gens = [y for n in range(degree_top + 1) for y in Y.relative_nondegenerate(n)]
    choices = [Z.fibre(Y.total.dim(y), Y.r(y)) for y in gens]
    count = 0
    for images in itertools.product(*choices):
        table = dict(zip(gens, images))

        def f(y):
            word, z = Y.total.decompose(y)
            if Y.is_base(z):
                return Z.s(Y.r(y))
            out = table[z]
            for j in reversed(word):
                out = Z.degeneracy(j, out)
            return out
        ok = True
        for y in gens:
            n = Y.total.dim(y)
            for i in range(n + 1 if n else 0):
                if Z.face(i, table[y]) != f(Y.face(i, y)):
                    ok = False
                    break
            if not ok:
                break
        count += ok
    return count
