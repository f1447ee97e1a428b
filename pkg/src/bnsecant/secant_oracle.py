"""Secant-variety membership on P^1, in exact rational arithmetic.

A linear series on P^1 is the span of ``r+1`` polynomials of degree at
most ``d``.  A divisor ``D = sum a_i p_i`` lies in ``V_e^{e-f}(l)`` iff the
matrix of Taylor coefficients of the basis at the points of ``D`` has rank
at most ``e - f``.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from . import linalg
from .bn_core import rho

Poly = Tuple[Fraction, ...]


def _poly(coeffs) -> Poly:
    c = [Fraction(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_degree(p: Poly) -> int:
    """Degree, with ``-1`` for the zero polynomial."""
    return len(p) - 1


def poly_eval(p: Poly, t) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * t + c
    return acc


def taylor_coefficient(p: Poly, at, k: int) -> Fraction:
    """Coefficient of ``(t - at)^k`` in ``p``, i.e. ``p^(k)(at) / k!``."""
    at = Fraction(at)
    return sum(
        (c * math.comb(m, k) * at ** (m - k) for m, c in enumerate(p) if m >= k),
        Fraction(0),
    )


def poly_derivative(p: Poly, k: int = 1) -> Poly:
    out = list(p)
    for _ in range(k):
        out = [m * c for m, c in enumerate(out)][1:]
    return _poly(out)


@dataclass(frozen=True)
class RationalSeries:
    d: int
    basis: Tuple[Poly, ...]

    def __post_init__(self):
        basis = tuple(_poly(p) for p in self.basis)
        object.__setattr__(self, "basis", basis)
        if not basis:
            raise ValueError("a linear series needs at least one section")
        if len(basis) > self.d + 1:
            raise ValueError(f"{len(basis)} sections exceed h^0(O(d)) = {self.d + 1}")
        for p in basis:
            if poly_degree(p) > self.d:
                raise ValueError(f"section of degree {poly_degree(p)} > d = {self.d}")
        if linalg.rank(self.coefficient_matrix()) != len(basis):
            raise ValueError("basis sections are linearly dependent")

    @property
    def r(self) -> int:
        return len(self.basis) - 1

    def coefficient_matrix(self) -> List[List[Fraction]]:
        return [list(p) + [Fraction(0)] * (self.d + 1 - len(p)) for p in self.basis]

    @classmethod
    def complete(cls, d: int) -> "RationalSeries":
        return cls(d, tuple(tuple([0] * i + [1]) for i in range(d + 1)))

    @classmethod
    def monomials(cls, d: int, exponents: Sequence[int]) -> "RationalSeries":
        return cls(d, tuple(tuple([0] * k + [1]) for k in exponents))


@dataclass(frozen=True)
class MultiDivisor:
    points: Tuple[Fraction, ...]
    multiplicities: Tuple[int, ...]

    def __post_init__(self):
        pts = tuple(Fraction(p) for p in self.points)
        mults = tuple(int(a) for a in self.multiplicities)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "multiplicities", mults)
        if len(pts) != len(mults):
            raise ValueError("points and multiplicities differ in length")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")
        if any(a <= 0 for a in mults):
            raise ValueError("multiplicities must be positive")

    @property
    def degree(self) -> int:
        return sum(self.multiplicities)

    @classmethod
    def of(cls, *pairs) -> "MultiDivisor":
        """``MultiDivisor.of((p1, a1), (p2, a2), ...)``."""
        return cls(tuple(p for p, _ in pairs), tuple(a for _, a in pairs))


def secant_matrix(l: RationalSeries, D: MultiDivisor) -> List[List[Fraction]]:
    rows = []
    for p, a in zip(D.points, D.multiplicities):
        for k in range(a):
            rows.append([taylor_coefficient(s, p, k) for s in l.basis])
    return rows


def is_secant_divisor(l: RationalSeries, D: MultiDivisor, f: int) -> bool:
    """Whether ``D`` imposes at most ``e - f`` conditions on ``l``."""
    e = D.degree
    if not (0 <= f < e):
        raise ValueError(f"need 0 <= f < e, got e={e}, f={f}")
    return linalg.rank(secant_matrix(l, D)) <= e - f


def flip_at_infinity(l: RationalSeries) -> RationalSeries:
    """Rewrite ``l`` in the coordinate ``u = 1/t``: ``s(t) -> u^d s(1/u)``.

    Points at infinity of the original chart become ``u = 0``.
    """
    flipped = []
    for p in l.basis:
        padded = list(p) + [Fraction(0)] * (l.d + 1 - len(p))
        flipped.append(tuple(reversed(padded)))
    return RationalSeries(l.d, tuple(flipped))


def _echelon_degrees(l: RationalSeries) -> List[int]:
    """Distinct degrees of a basis of ``l`` in echelon form."""
    rows = [list(r) for r in l.coefficient_matrix()]
    degs = []
    for col in range(l.d, -1, -1):
        piv = next((r for r in rows if r[col] != 0), None)
        if piv is None:
            continue
        rows.remove(piv)
        for r in rows:
            if r[col]:
                q = r[col] / piv[col]
                for j in range(col + 1):
                    r[j] -= q * piv[j]
        degs.append(col)
    return degs


def vanishing_orders_at(l: RationalSeries, p) -> List[int]:
    """Vanishing sequence of ``l`` at the finite point ``p``."""
    shifted = RationalSeries(
        l.d,
        tuple(tuple(taylor_coefficient(s, p, k) for k in range(l.d + 1)) for s in l.basis),
    )
    # lowest-order echelon form: flip so that low orders become high degrees
    return sorted(l.d - deg for deg in _echelon_degrees(flip_at_infinity(shifted)))


def vanishing_orders_at_infinity(l: RationalSeries) -> List[int]:
    return sorted(l.d - deg for deg in _echelon_degrees(l))


def _weight(orders: Sequence[int]) -> int:
    return sum(a - i for i, a in enumerate(sorted(orders)))


def ramification_weight_at(l: RationalSeries, p) -> int:
    return _weight(vanishing_orders_at(l, p))


def wronskian(l: RationalSeries) -> Poly:
    """``det(s_j^(i))`` as an exact polynomial.

    Evaluated at ``(r+1)(d-r)+1`` integer nodes and recovered by Newton
    interpolation, which is exact because the Wronskian has at most that
    degree.
    """
    r, d = l.r, l.d
    n = (r + 1) * (d - r) + 1
    derivs = [[poly_derivative(s, i) for s in l.basis] for i in range(r + 1)]
    xs = [Fraction(k) for k in range(n)]
    ys = [linalg.det([[poly_eval(q, x) for q in row] for row in derivs]) for x in xs]
    # divided differences
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # expand Newton form into monomial coefficients
    out = [Fraction(0)] * n
    basis = [Fraction(1)]
    for j in range(n):
        for k, b in enumerate(basis):
            out[k] += coef[j] * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for k, b in enumerate(basis):
            nxt[k + 1] += b
            nxt[k] -= xs[j] * b
        basis = nxt
    return _poly(out)


def ramification_weight_total(l: RationalSeries) -> int:
    """Total ramification weight of ``l`` over all of P^1.

    Finite points contribute the zeros of the Wronskian counted with
    multiplicity, which is its degree; infinity contributes the weight of
    its vanishing sequence.
    """
    w = wronskian(l)
    if not w:
        raise ArithmeticError("Wronskian vanishes identically for an independent basis")
    return poly_degree(w) + _weight(vanishing_orders_at_infinity(l))


def random_series(d: int, r: int, rng: random.Random, bound: int = 5) -> RationalSeries:
    """Series spanned by ``r+1`` polynomials with integer coefficients in ``[-bound, bound]``.

    Dependent draws are rejected and redrawn.
    """
    if not (0 <= r <= d):
        raise ValueError(f"need 0 <= r <= d, got r={r}, d={d}")
    while True:
        basis = tuple(
            tuple(rng.randint(-bound, bound) for _ in range(d + 1)) for _ in range(r + 1)
        )
        try:
            return RationalSeries(d, basis)
        except ValueError:
            continue


def grid_divisors(e: int, grid: Sequence) -> List[MultiDivisor]:
    """Every effective divisor of degree ``e`` supported on ``grid``."""
    pts = sorted({Fraction(p) for p in grid})
    out = []
    for combo in itertools.combinations_with_replacement(range(len(pts)), e):
        counts: dict = {}
        for i in combo:
            counts[i] = counts.get(i, 0) + 1
        out.append(MultiDivisor.of(*((pts[i], a) for i, a in sorted(counts.items()))))
    return out


def find_secant_divisor(l: RationalSeries, e: int, f: int, grid: Sequence):
    """First divisor on ``grid`` lying in ``V_e^{e-f}(l)``, or ``None``."""
    for D in grid_divisors(e, grid):
        if is_secant_divisor(l, D, f):
            return D
    return None


def existence_numerology(g: int, r: int, d: int, e: int, f: int) -> bool:
    """``rho(g, r-e+f, d-e) >= 0``, the existence criterion for complete series
    with ``g - d + r <= 1``."""
    return rho(g, r - e + f, d - e) >= 0


def default_grid(n: int = 7) -> List[Fraction]:
    """``n`` rationals centred on 0 with step 1/2."""
    half = n // 2
    return [Fraction(k, 2) for k in range(-half, n - half)]


def min_secant_rank(l: RationalSeries, e: int, grid: Sequence):
    """Smallest rank of the secant matrix over degree-``e`` divisors on ``grid``.

    ``V_e^{e-f}(l)`` meets the grid iff this is at most ``e - f``; returns
    ``(rank, divisor)`` with the first divisor attaining it.
    """
    best, best_d = None, None
    for D in grid_divisors(e, grid):
        rk = linalg.rank(secant_matrix(l, D))
        if best is None or rk < best:
            best, best_d = rk, D
            if rk == 0:
                break
    return best, best_d
