"""Expected counts for ``Gamma_e(l1) ∩ Gamma_e(l2)`` on a general curve.

Three independent routes are provided:

* coefficient extraction from ``(1+t1)^(d1-g-r1) (1+t2)^(d2-g-r2) (1+t1+t2)^g``,
* the closed forms of Severi (``l2`` a pencil) and of adjunction on P^1 x P^1,
* the product of the two incidence classes in the ring generated by ``x`` and
  ``theta`` on the symmetric product ``C_e``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from .bn_core import SeriesParams


class NonHomogeneous(ValueError):
    pass


class DegreeMismatch(ValueError):
    pass


class InternalNonInteger(ArithmeticError):
    """An intersection number came out non-integral; always a bug."""


def gen_binomial(n: int, k: int) -> int:
    """``n(n-1)...(n-k+1)/k!`` for any integer ``n`` and ``k >= 0``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if n >= 0:
        return math.comb(n, k)
    # (-1)^k C(k-n-1, k) for negative upper index
    sign = -1 if k % 2 else 1
    return sign * math.comb(k - n - 1, k)


def trinomial_coefficient(g: int, p: int, q: int) -> int:
    """Coefficient of ``t1^p t2^q`` in ``(1+t1+t2)^g``."""
    if p < 0 or q < 0 or p + q > g:
        return 0
    return math.factorial(g) // (
        math.factorial(p) * math.factorial(q) * math.factorial(g - p - q)
    )


@dataclass(frozen=True)
class CountInputs:
    g: int
    l1: SeriesParams
    l2: SeriesParams
    e: int

    def __post_init__(self):
        if self.l1.g != self.g or self.l2.g != self.g:
            raise ValueError("both series must live on a curve of genus g")
        if self.e != self.l1.r + self.l2.r:
            raise ValueError(f"e must equal r1 + r2 = {self.l1.r + self.l2.r}")
        if self.e > min(self.l1.d, self.l2.d):
            raise ValueError("e must not exceed min(d1, d2)")

    @classmethod
    def of(cls, g: int, r1: int, d1: int, r2: int, d2: int) -> "CountInputs":
        return cls(g, SeriesParams(g, r1, d1), SeriesParams(g, r2, d2), r1 + r2)


def incidence_count(c: CountInputs) -> int:
    g, e = c.g, c.e
    n1 = c.l1.d - g - c.l1.r
    n2 = c.l2.d - g - c.l2.r
    k1 = e - c.l1.r
    k2 = e - c.l2.r
    total = 0
    for p in range(k1 + 1):
        for q in range(k2 + 1):
            tri = trinomial_coefficient(g, p, q)
            if tri:
                total += tri * gen_binomial(n1, k1 - p) * gen_binomial(n2, k2 - q)
    return total


def adjunction_nodes(g: int, d1: int, d2: int) -> int:
    """Number of nodes of a genus ``g`` curve of bidegree ``(d1, d2)`` on P^1 x P^1."""
    return (d1 - 1) * (d2 - 1) - g


def severi_count(g: int, r1: int, d1: int, d2: int) -> int:
    """Divisors of degree ``r1+1`` common to a ``g^{r1}_{d1}`` and a pencil ``g^1_{d2}``."""
    if r1 < 1:
        raise ValueError("r1 must be at least 1")
    return (d1 - r1) * gen_binomial(d2 - 1, r1) - g * gen_binomial(d2 - 2, r1 - 1)


Monomial = Tuple[int, int]


class ChowClass:
    """Polynomial in ``x`` and ``theta`` with rational coefficients.

    Keys are ``(a, b)`` for the monomial ``x^a theta^b``.  Zero coefficients
    are never stored, so two classes are equal iff their term maps are.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, object]] = None):
        clean: Dict[Monomial, Fraction] = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in monomial {(a, b)}")
            c = Fraction(c)
            if c:
                clean[(a, b)] = clean.get((a, b), Fraction(0)) + c
                if not clean[(a, b)]:
                    del clean[(a, b)]
        self.terms = clean

    @classmethod
    def one(cls) -> "ChowClass":
        return cls({(0, 0): 1})

    @classmethod
    def x(cls) -> "ChowClass":
        return cls({(1, 0): 1})

    @classmethod
    def theta(cls) -> "ChowClass":
        return cls({(0, 1): 1})

    def __eq__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "ChowClass") -> "ChowClass":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return ChowClass(out)

    def __mul__(self, other):
        if not isinstance(other, ChowClass):
            s = Fraction(other)
            return ChowClass({m: c * s for m, c in self.terms.items()})
        out: Dict[Monomial, Fraction] = {}
        for (a, b), c in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                m = (a + a2, b + b2)
                out[m] = out.get(m, Fraction(0)) + c * c2
        return ChowClass(out)

    __rmul__ = __mul__

    def degrees(self):
        return {a + b for a, b in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> Optional[int]:
        """Common degree of a homogeneous class; ``None`` for the zero class."""
        degs = self.degrees()
        if len(degs) > 1:
            raise NonHomogeneous(f"class has terms in degrees {sorted(degs)}")
        return next(iter(degs), None)

    def __repr__(self):
        if not self.terms:
            return "ChowClass(0)"
        parts = []
        for (a, b), c in sorted(self.terms.items()):
            mon = "*".join(
                s for s in (
                    f"x^{a}" if a > 1 else ("x" if a else ""),
                    f"theta^{b}" if b > 1 else ("theta" if b else ""),
                ) if s
            ) or "1"
            parts.append(f"{c}*{mon}")
        return "ChowClass(" + " + ".join(parts) + ")"


def gamma_class(g: int, r: int, d: int, e: int) -> ChowClass:
    """Class of ``Gamma_e(l)`` in ``C_e`` for ``l`` of type ``g^r_d``.

    ``sum_j C(d-g-r, j) x^j theta^(e-r-j) / (e-r-j)!``, homogeneous of
    codimension ``e - r``.
    """
    if not (0 <= r <= e):
        raise ValueError(f"need 0 <= r <= e, got r={r}, e={e}")
    n = d - g - r
    k = e - r
    terms = {}
    for j in range(k + 1):
        terms[(j, k - j)] = Fraction(gen_binomial(n, j), math.factorial(k - j))
    return ChowClass(terms)


def integrate_monomial(a: int, b: int, g: int) -> int:
    """``∫ x^a theta^b`` over ``C_{a+b}``: ``g!/(g-b)!`` if ``b <= g`` else 0."""
    if b > g:
        return 0
    return math.factorial(g) // math.factorial(g - b)


def chow_product_evaluate(c1: ChowClass, c2: ChowClass, g: int, e: int) -> int:
    deg1, deg2 = c1.degree(), c2.degree()
    if deg1 is not None and deg2 is not None and deg1 + deg2 != e:
        raise DegreeMismatch(f"degrees {deg1} + {deg2} != e = {e}")
    prod = c1 * c2
    total = Fraction(0)
    for (a, b), c in prod.terms.items():
        if a + b != e:
            raise DegreeMismatch(f"monomial x^{a} theta^{b} not of degree {e}")
        total += c * integrate_monomial(a, b, g)
    if total.denominator != 1:
        raise InternalNonInteger(f"intersection number {total} is not an integer")
    return int(total)


def chow_count(c: CountInputs) -> int:
    """Count via the incidence-class product; same contract as :func:`incidence_count`."""
    g1 = gamma_class(c.g, c.l1.r, c.l1.d, c.e)
    g2 = gamma_class(c.g, c.l2.r, c.l2.d, c.e)
    return chow_product_evaluate(g1, g2, c.g, c.e)
