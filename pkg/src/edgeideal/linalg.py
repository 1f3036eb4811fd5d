"""Exact rank and null-space computations over the rationals or GF(p).

A field is named by its characteristic: ``0`` for the rationals, a prime
``p`` for GF(p).  Matrices are lists of integer rows.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

Matrix = list[list[int]]

RATIONALS = 0


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_field(field: int) -> int:
    if field != RATIONALS and not is_prime(field):
        raise ValueError(f"field characteristic must be 0 or a prime, got {field}")
    return field


def field_name(field: int) -> str:
    return "QQ" if field == RATIONALS else f"GF({field})"


def _rank_rational(rows: Matrix) -> int:
    # Bareiss fraction-free elimination: every division is exact.
    a = [list(r) for r in rows if any(r)]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(n):
        piv = next((r for r in range(rank, m) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        prow = a[rank]
        for r in range(rank + 1, m):
            row = a[r]
            f = row[col]
            if f == 0:
                for c in range(col + 1, n):
                    row[c] = row[c] * p // prev
            else:
                for c in range(col + 1, n):
                    num = row[c] * p - f * prow[c]
                    q, rem = divmod(num, prev)
                    if rem:
                        raise ArithmeticError("inexact Bareiss division")
                    row[c] = q
            row[col] = 0
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def _rank_mod(rows: Matrix, p: int) -> int:
    a = [[x % p for x in r] for r in rows]
    a = [r for r in a if any(r)]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, m) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, p)
        prow = [x * inv % p for x in a[rank]]
        a[rank] = prow
        for r in range(rank + 1, m):
            f = a[r][col]
            if f:
                row = a[r]
                for c in range(col, n):
                    row[c] = (row[c] - f * prow[c]) % p
        rank += 1
        if rank == m:
            break
    return rank


def rank(rows: Matrix, field: int = RATIONALS) -> int:
    if not rows or not rows[0]:
        return 0
    if field == RATIONALS:
        return _rank_rational(rows)
    return _rank_mod(rows, field)


def nullspace(rows: Matrix, ncols: int, field: int = RATIONALS) -> Matrix:
    """Basis of ``{v : A v = 0}`` as integer vectors.

    Over the rationals each basis vector is scaled to clear denominators,
    which leaves the span unchanged.
    """
    if field == RATIONALS:
        a = [[Fraction(x) for x in r] for r in rows]
        inv = lambda x: 1 / x  # noqa: E731
        norm = lambda x: x  # noqa: E731
    else:
        a = [[x % field for x in r] for r in rows]
        inv = lambda x: pow(x, -1, field)  # noqa: E731
        norm = lambda x: x % field  # noqa: E731
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        s = inv(a[r][col])
        a[r] = [norm(x * s) for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [norm(x - f * y) for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = norm(-a[i][fc])
        if field == RATIONALS:
            den = lcm(*(Fraction(x).denominator for x in v))
            v = [int(Fraction(x) * den) for x in v]
        basis.append(v)
    return basis
