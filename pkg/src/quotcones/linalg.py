"""Exact linear algebra over the package fields, plus a division-free ring determinant.

Prime-field elimination is vectorized with numpy int64; all intermediate
products stay far below 2**63 for any modulus under ~3 * 10**9.  Rational
elimination clears denominators row by row and then runs fraction-free
(Bareiss) on Python integers, so intermediate entries are minors of the
scaled matrix and never explode the way naive Fraction pivoting can.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .errors import Inconsistent, ShapeError, Underdetermined
from .fields import ModInt, PrimeField, RationalField


def _as_mod_array(rows, p: int) -> np.ndarray:
    data = [[e.value if isinstance(e, ModInt) else e % p for e in row] for row in rows]
    return np.array(data, dtype=np.int64) % p


def _rank_mod(a: np.ndarray, p: int) -> int:
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = (a[r, c:] * inv) % p
        below = a[r + 1 :, c]
        if below.size and below.any():
            a[r + 1 :, c:] = (a[r + 1 :, c:] - np.outer(below, a[r, c:])) % p
        r += 1
    return r


def _det_mod(a: np.ndarray, p: int) -> int:
    n = a.shape[0]
    det = 1
    for c in range(n):
        nz = np.nonzero(a[c:, c])[0]
        if nz.size == 0:
            return 0
        i = c + int(nz[0])
        if i != c:
            a[[c, i]] = a[[i, c]]
            det = -det
        pivot = int(a[c, c])
        det = det * pivot % p
        below = a[c + 1 :, c]
        if below.size and below.any():
            factors = (below * pow(pivot, p - 2, p)) % p
            a[c + 1 :, c:] = (a[c + 1 :, c:] - np.outer(factors, a[c, c:])) % p
    return det % p


def _int_rows(rows):
    """Scale Fraction rows to integers; returns (int rows, row multipliers)."""
    out, mults = [], []
    for row in rows:
        scale = math.lcm(*(f.denominator for f in row)) if row else 1
        out.append([f.numerator * (scale // f.denominator) for f in row])
        mults.append(scale)
    return out, mults


def _rank_bareiss(m) -> int:
    rows = [list(r) for r in m]
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    r, prev = 0, 1
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        rrc = rows[r][c]
        for i in range(r + 1, nr):
            ric = rows[i][c]
            ri, rr = rows[i], rows[r]
            for j in range(c + 1, nc):
                ri[j] = (ri[j] * rrc - ric * rr[j]) // prev
            ri[c] = 0
        prev = rrc
        r += 1
    return r


def _det_bareiss(m) -> int:
    rows = [list(r) for r in m]
    n = len(rows)
    sign = 1
    prev = 1
    for c in range(n - 1):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            sign = -sign
        rcc = rows[c][c]
        for i in range(c + 1, n):
            ric = rows[i][c]
            ri, rc = rows[i], rows[c]
            for j in range(c + 1, n):
                ri[j] = (ri[j] * rcc - ric * rc[j]) // prev
            ri[c] = 0
        prev = rcc
    return sign * rows[n - 1][n - 1]


def rank(field, rows) -> int:
    """Exact rank of a rectangular matrix of field elements."""
    if not rows or not rows[0]:
        return 0
    if isinstance(field, PrimeField):
        return _rank_mod(_as_mod_array(rows, field.p), field.p)
    ints, _ = _int_rows([[field.coerce(e) for e in row] for row in rows])
    return _rank_bareiss(ints)


def nullity(field, rows) -> int:
    """Dimension of the right kernel: #columns - rank."""
    if not rows:
        return 0
    return len(rows[0]) - rank(field, rows)


def det(field, rows):
    """Exact determinant of a square matrix of field elements."""
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ShapeError("determinant needs a nonempty square matrix")
    if isinstance(field, PrimeField):
        return ModInt(_det_mod(_as_mod_array(rows, field.p), field.p), field.p)
    ints, mults = _int_rows([[field.coerce(e) for e in row] for row in rows])
    return Fraction(_det_bareiss(ints), math.prod(mults))


def solve_unique(field, a_rows, rhs):
    """Solve A x = rhs exactly; the solution must be unique.

    Raises Underdetermined when rank(A) < #unknowns and Inconsistent when the
    (possibly overdetermined) system has no solution.
    """
    if not a_rows:
        raise Underdetermined("no equations")
    ncols = len(a_rows[0])
    aug = [[field.coerce(e) for e in row] + [field.coerce(b)] for row, b in zip(a_rows, rhs)]
    nrows = len(aug)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        lead = aug[r][c]
        aug[r] = [e / lead for e in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [e - f * pe for e, pe in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, nrows):
        if aug[i][ncols]:
            raise Inconsistent("system has no solution")
    if len(pivots) < ncols:
        raise Underdetermined(f"rank {len(pivots)} < {ncols} unknowns")
    sol = [field.zero()] * ncols
    for i, c in enumerate(pivots):
        sol[c] = aug[i][ncols]
    return sol


def ring_det(rows):
    """Division-free determinant over any commutative ring (memoized Laplace).

    Entries need only +, *, unary - and truthiness for a zero test.  Returns
    None when every expansion term vanishes identically, so callers can
    materialize a correctly graded zero themselves.  Cost is O(n * 2^n) ring
    operations: meant for the desk-scale graded matrices of this package.
    """
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ShapeError("ring determinant needs a nonempty square matrix")
    level = {1 << i: rows[i][0] for i in range(n) if rows[i][0]}
    for col in range(1, n):
        nxt = {}
        for mask, val in level.items():
            for i in range(n):
                bit = 1 << i
                if mask & bit:
                    continue
                entry = rows[i][col]
                if not entry:
                    continue
                below = bin(mask & (bit - 1)).count("1")
                term = entry * val
                # Laplace along column `col` of the submatrix on rows mask|bit:
                # sign is (-1)^(position of i + col).
                if (below + col) % 2:
                    term = -term
                new = mask | bit
                acc = nxt.get(new)
                nxt[new] = term if acc is None else acc + term
        level = {m: v for m, v in nxt.items() if v}
    return level.get((1 << n) - 1)
