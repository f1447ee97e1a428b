"""Numerical type data of linear series on a general curve.

Everything here is integer arithmetic on the triple ``(g, r, d)`` of a
``g^r_d``; no curves or line bundles are represented.
"""

from __future__ import annotations

from dataclasses import dataclass


class ResidualNotEffective(ValueError):
    """The residual series ``K - l`` would have negative dimension or degree."""


@dataclass(frozen=True)
class SeriesParams:
    g: int
    r: int
    d: int

    def __post_init__(self):
        for name in ("g", "r", "d"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")
        if self.r > self.d:
            raise ValueError(f"a g^r_d needs r <= d, got r={self.r}, d={self.d}")

    @property
    def rho(self) -> int:
        return rho(self.g, self.r, self.d)

    @property
    def speciality(self) -> int:
        """Index of speciality ``g - d + r``."""
        return self.g - self.d + self.r


@dataclass(frozen=True)
class SecantParams:
    e: int
    f: int

    def __post_init__(self):
        if not (0 <= self.f < self.e):
            raise ValueError(f"need 0 <= f < e, got e={self.e}, f={self.f}")


def rho(g: int, r: int, d: int) -> int:
    """Brill-Noether number ``g - (r+1)(g-d+r)``."""
    return g - (r + 1) * (g - d + r)


def residual(l: SeriesParams) -> SeriesParams:
    """Type of ``K_C - l`` via Riemann-Roch: ``(g, g-d+r-1, 2g-2-d)``."""
    r2 = l.g - l.d + l.r - 1
    d2 = 2 * l.g - 2 - l.d
    if r2 < 0 or d2 < 0 or r2 > d2:
        raise ResidualNotEffective(
            f"residual of g^{l.r}_{l.d} in genus {l.g} has type r={r2}, d={d2}"
        )
    return SeriesParams(l.g, r2, d2)


def expected_dim_secant(e: int, f: int, r: int) -> int:
    """Expected dimension ``e - f(r+1-e+f)`` of ``V_e^{e-f}`` of a ``g^r_d``."""
    if not (0 <= f < e):
        raise ValueError(f"need 0 <= f < e, got e={e}, f={f}")
    return e - f * (r + 1 - e + f)


def incidence_dim(r: int) -> int:
    if r < 0:
        raise ValueError("r must be nonnegative")
    return r


def emptiness_condition_holds(g: int, r1: int, d1: int, e: int, f: int) -> bool:
    """Whether ``f(r2+1-e+f) >= r1+1+rho`` for the residual ``g^{r2}`` of ``l1``.

    This is the dimension count under which ``Gamma_e(l1)`` and the secant
    variety ``V_e^{e-f}(K - l1)`` are expected not to meet.
    """
    l1 = SeriesParams(g, r1, d1)
    p = l1.rho
    if p < 0:
        raise ValueError(f"rho({g},{r1},{d1}) = {p} < 0")
    r2 = residual(l1).r
    return f * (r2 + 1 - e + f) >= r1 + 1 + p
