"""Exact integer quadratic-form utilities for hyperbolic lattices.

Everything here works over plain Python integers and ``fractions.Fraction``,
so results are exact at any magnitude.  The central object is the degree
slice of a hyperbolic form: for a lattice of signature (1, n-1) with a
polarization H of positive square, the set of integer vectors x with
x.H = e and x^2 >= m is a lattice translate of an ellipsoid (the form is
negative definite on the orthogonal complement of H) and can be enumerated
completely.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

Matrix = tuple[tuple[int, ...], ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def gram_product(gram: Matrix, x: tuple[int, ...], y: tuple[int, ...]) -> int:
    """The bilinear pairing x^T * gram * y."""
    return sum(x[i] * gram[i][j] * y[j] for i in range(len(x)) for j in range(len(y)))


def signature(gram: Matrix) -> tuple[int, int, int]:
    """Inertia (positive, negative, zero) of a symmetric matrix.

    Computed by congruence diagonalization over the rationals, so the result
    is exact.  Zero pivots with a non-zero off-diagonal partner are repaired
    by the standard row+column addition trick.
    """
    n = len(gram)
    m = [[Fraction(v) for v in row] for row in gram]
    pos = neg = zero = 0
    for k in range(n):
        if m[k][k] == 0:
            swap = next((j for j in range(k + 1, n) if m[j][j] != 0), None)
            if swap is not None:
                m[k], m[swap] = m[swap], m[k]
                for row in m:
                    row[k], row[swap] = row[swap], row[k]
            else:
                partner = next((j for j in range(k + 1, n) if m[k][j] != 0), None)
                if partner is None:
                    zero += 1
                    continue
                for j in range(n):
                    m[k][j] += m[partner][j]
                for i in range(n):
                    m[i][k] += m[i][partner]
        pivot = m[k][k]
        if pivot > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            f = m[i][k] / pivot
            if f == 0:
                continue
            for j in range(n):
                m[i][j] -= f * m[k][j]
            for j in range(n):
                m[j][i] -= f * m[j][k]
    return pos, neg, zero


def _solve(p: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve p*t = rhs by Gauss-Jordan elimination; p must be invertible."""
    n = len(rhs)
    a = [row[:] + [rhs[i]] for i, row in enumerate(p)]
    for col in range(n):
        pivot_row = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot_row] = a[pivot_row], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def _inverse_diagonal(p: list[list[Fraction]]) -> list[Fraction]:
    """Diagonal entries of p^{-1} for an invertible matrix p."""
    n = len(p)
    cols = []
    for j in range(n):
        e = [Fraction(int(i == j)) for i in range(n)]
        cols.append(_solve(p, e))
    return [cols[j][j] for j in range(n)]


def _integer_interval(center: Fraction, radius_sq: Fraction) -> range:
    """Integers u with (u - center)^2 <= radius_sq, as a range."""
    if radius_sq < 0:
        return range(0)
    num, den = center.numerator, center.denominator
    # |u*den - num| <= sqrt(radius_sq * den^2); the left side is an integer.
    bound = radius_sq * den * den
    m = math.isqrt(bound.numerator // bound.denominator)
    lo = -((m - num) // den)  # ceil((num - m) / den)
    hi = (num + m) // den
    return range(lo, hi + 1)


class SliceEnumerator:
    """Complete enumeration of fixed-degree slices of a hyperbolic lattice.

    Built from a Gram matrix and the pairing vector h = gram * H.  A change of
    basis x = U*z with h^T*U = (g, 0, ..., 0) turns the degree constraint into
    fixing z_1; the form restricted to the remaining coordinates must be
    negative definite (true exactly when the lattice has signature (1, n-1)
    and H^2 > 0), which makes every query finite.
    """

    def __init__(self, gram: Matrix, h: tuple[int, ...]):
        n = len(h)
        if n == 0 or all(v == 0 for v in h):
            raise ValueError("degenerate pairing vector")
        u = [[int(i == j) for j in range(n)] for i in range(n)]
        v = list(h)
        for i in range(1, n):
            if v[i] == 0:
                continue
            g, s, t = xgcd(v[0], v[i])
            p, q = v[0] // g, v[i] // g
            for r in range(n):
                c0, ci = u[r][0], u[r][i]
                u[r][0] = s * c0 + t * ci
                u[r][i] = -q * c0 + p * ci
            v[0], v[i] = g, 0
        if v[0] < 0:
            v[0] = -v[0]
            for r in range(n):
                u[r][0] = -u[r][0]
        self.gram = gram
        self.rank = n
        self.g = v[0]
        self.basis = tuple(tuple(u[r][j] for r in range(n)) for j in range(n))
        # a[i][j] = basis_i . basis_j
        self.form = tuple(
            tuple(gram_product(gram, self.basis[i], self.basis[j]) for j in range(n))
            for i in range(n)
        )
        block = [[Fraction(-self.form[i][j]) for j in range(1, n)] for i in range(1, n)]
        if n > 1:
            sig = signature(tuple(tuple(int(x) for x in row) for row in block))
            if sig != (n - 1, 0, 0):
                raise ValueError(
                    "form is not negative definite transverse to the polarization; "
                    "lattice is not of hyperbolic polarized type"
                )
            self._inv_diag = _inverse_diagonal(block)
        else:
            self._inv_diag = []

    def classes(self, degree: int, min_square: int) -> list[tuple[int, ...]]:
        """All integer x with x.h = degree and x^T*gram*x >= min_square."""
        if degree % self.g != 0:
            return []
        z1 = degree // self.g
        n = self.rank
        a = self.form
        if n == 1:
            x = tuple(z1 * c for c in self.basis[0])
            return [x] if a[0][0] * z1 * z1 >= min_square else []

        const = a[0][0] * z1 * z1
        lin = [z1 * a[0][j] for j in range(1, n)]  # f = const + 2*lin.t + t.block.t
        block = [[a[i][j] for j in range(1, n)] for i in range(1, n)]
        p = [[Fraction(-v) for v in row] for row in block]
        center = _solve(p, [Fraction(c) for c in lin])  # maximizer of f
        f_max = Fraction(const) + sum(Fraction(c) * t for c, t in zip(lin, center))
        slack = f_max - min_square
        if slack < 0:
            return []
        ranges = [
            _integer_interval(center[i], slack * self._inv_diag[i])
            for i in range(n - 1)
        ]
        out = []
        for t in itertools.product(*ranges):
            val = (
                const
                + 2 * sum(c * ti for c, ti in zip(lin, t))
                + sum(t[i] * block[i][j] * t[j] for i in range(n - 1) for j in range(n - 1))
            )
            if val >= min_square:
                x = tuple(
                    z1 * self.basis[0][r] + sum(t[j] * self.basis[j + 1][r] for j in range(n - 1))
                    for r in range(n)
                )
                out.append(x)
        out.sort()
        return out
