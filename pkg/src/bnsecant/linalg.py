"""Exact rank and determinant by fraction-free (Bareiss) elimination."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Sequence


def _integer_rows(rows: Sequence[Sequence]) -> List[List[int]]:
    out = []
    for row in rows:
        fr = [Fraction(v) for v in row]
        den = math.lcm(*(v.denominator for v in fr)) if fr else 1
        out.append([int(v * den) for v in fr])
    return out


def _bareiss(m: List[List[int]]):
    """In-place fraction-free elimination; returns (rank, sign, last pivot)."""
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    prev = 1
    sign = 1
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        piv = next((i for i in range(rank, n_rows) if m[i][col] != 0), None)
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
            sign = -sign
        p = m[rank][col]
        for i in range(rank + 1, n_rows):
            mi = m[i]
            a = mi[col]
            for j in range(col + 1, n_cols):
                # exact: Sylvester's identity guarantees divisibility by prev
                mi[j] = (p * mi[j] - a * m[rank][j]) // prev
            mi[col] = 0
        prev = p
        rank += 1
    return rank, sign, prev


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank of a matrix with rational (or integer) entries."""
    if not rows:
        return 0
    return _bareiss(_integer_rows(rows))[0]


def det(rows: Sequence[Sequence]) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    scale = Fraction(1)
    ints = []
    for row in rows:
        fr = [Fraction(v) for v in row]
        den = math.lcm(*(v.denominator for v in fr))
        scale /= den
        ints.append([int(v * den) for v in fr])
    r, sign, last = _bareiss(ints)
    if r < n:
        return Fraction(0)
    return sign * last * scale
