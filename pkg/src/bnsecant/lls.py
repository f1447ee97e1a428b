"""Vanishing and ramification sequences of (limit) linear series.

Only the numerical shadow of a limit linear series is modelled: the
sequence of vanishing orders at a point, its ramification sequence and the
Plücker count on a curve of compact type.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class VanishingSequence:
    """Strictly increasing vanishing orders ``a_0 < ... < a_r <= d``."""

    entries: Tuple[int, ...]
    d: int

    def __post_init__(self):
        a = tuple(self.entries)
        object.__setattr__(self, "entries", a)
        if not a:
            raise ValueError("a vanishing sequence has at least one entry")
        if a[0] < 0:
            raise ValueError(f"vanishing orders are nonnegative: {a}")
        if any(x >= y for x, y in zip(a, a[1:])):
            raise ValueError(f"vanishing orders must strictly increase: {a}")
        if a[-1] > self.d:
            raise ValueError(f"vanishing order {a[-1]} exceeds degree {self.d}")

    @property
    def r(self) -> int:
        return len(self.entries) - 1

    @property
    def weight(self) -> int:
        """Ramification weight ``sum a_i - r(r+1)/2``."""
        r = self.r
        return sum(self.entries) - r * (r + 1) // 2

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class RamificationSequence:
    entries: Tuple[int, ...]
    d: int

    def __post_init__(self):
        a = tuple(self.entries)
        object.__setattr__(self, "entries", a)
        r = len(a) - 1
        if any(x > y for x, y in zip(a, a[1:])):
            raise ValueError(f"ramification sequence must be nondecreasing: {a}")
        if a and (a[0] < 0 or a[-1] > self.d - r):
            raise ValueError(f"ramification entries must lie in [0, d-r]: {a}")

    @property
    def r(self) -> int:
        return len(self.entries) - 1

    @property
    def weight(self) -> int:
        return sum(self.entries)


def ramification_from_vanishing(a: VanishingSequence) -> RamificationSequence:
    return RamificationSequence(tuple(x - i for i, x in enumerate(a.entries)), a.d)


def refined_complement(a: VanishingSequence, d: int) -> VanishingSequence:
    """Sequence on the other side of a node of a refined limit series.

    ``a_i(Y) + a_{r-i}(Z) = d``, hence ``(d - a_r, ..., d - a_0)``.
    """
    return VanishingSequence(tuple(d - x for x in reversed(a.entries)), d)


def crude_compatible(a_y: VanishingSequence, a_z: VanishingSequence, d: int) -> bool:
    """``a_i(Y) + a_{r-i}(Z) >= d`` for every ``i``."""
    if len(a_y) != len(a_z):
        return False
    r = a_y.r
    return all(a_y.entries[i] + a_z.entries[r - i] >= d for i in range(r + 1))


def refined_compatible(a_y: VanishingSequence, a_z: VanishingSequence, d: int) -> bool:
    if len(a_y) != len(a_z):
        return False
    r = a_y.r
    return all(a_y.entries[i] + a_z.entries[r - i] == d for i in range(r + 1))


def plucker_total(g: int, r: int, d: int) -> int:
    """Total ramification weight ``(r+1)d + C(r+1, 2)(2g-2)`` of a ``g^r_d``."""
    return (r + 1) * d + (r + 1) * r // 2 * (2 * g - 2)


def ramification_budget_at_p(r: int, d: int, num_cusps: int) -> int:
    """Largest ramification weight left for one point of a rational spine.

    The spine carries ``num_cusps`` cusps, each absorbing weight at least
    ``r`` (ramification ``(0, 1, ..., 1)``), out of the genus-0 Plücker total.
    """
    if num_cusps < 0:
        raise ValueError("num_cusps must be nonnegative")
    return plucker_total(0, r, d) - num_cusps * r


def is_subsequence_values(a, b) -> bool:
    """Every entry of ``a`` occurs among the entries of ``b``."""
    return set(a).issubset(set(b))
