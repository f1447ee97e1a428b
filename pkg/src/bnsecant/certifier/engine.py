"""Emptiness certificates for ``Gamma_e(l1) ∩ V_e^{e-f}(K - l1)``.

The search degenerates the general curve to a flag curve (a rational spine
with ``g`` elliptic tails, each attachment point a cusp), splits it at a
node ``p`` into a part ``Y`` carrying ``d1`` cusps and a part ``Z`` carrying
``g - d1``, and enumerates the vanishing sequences at ``p`` of ``l1`` and of
``|2D + E|``.  An instance is certified EMPTY when every candidate violates
one of the necessary conditions.
"""

from __future__ import annotations

import enum
import math
import os
import sys
from dataclasses import dataclass, field, replace
from typing import List, Optional, Tuple

from ..bn_core import (
    SecantParams,
    SeriesParams,
    emptiness_condition_holds,
    expected_dim_secant,
    residual,
    rho,
)
from ..lls import VanishingSequence, ramification_budget_at_p, refined_complement
from . import kernel

DEFAULT_SEARCH_CAP = 10**8
WITNESS_CAP = 1000

C_ZERO = "C-ZERO"
C_SUB = "C-SUB"
C_E = "C-E"
C_PLK_Y1 = "C-PLK-Y1"
C_PLK_Y2 = "C-PLK-Y2"
C_PLK_Z1 = "C-PLK-Z1"
C_PLK_Z2 = "C-PLK-Z2"
C_ZSUB = "C-ZSUB"
ALL_CONSTRAINTS = (C_ZERO, C_SUB, C_E, C_PLK_Y1, C_PLK_Y2, C_PLK_Z1, C_PLK_Z2, C_ZSUB)


class Status(str, enum.Enum):
    EMPTY = "EMPTY"
    INCONCLUSIVE = "INCONCLUSIVE"
    NOT_APPLICABLE = "NOT_APPLICABLE"


class NotApplicable(ValueError):
    pass


class InvalidInstance(ValueError):
    pass


class SearchSpaceTooLarge(RuntimeError):
    pass


class CertifierInternalError(AssertionError):
    """A derived inequality that must hold did not; indicates a bug."""


def search_cap() -> int:
    raw = os.environ.get("CERTIFIER_SEARCH_CAP")
    if raw is None or raw == "":
        return DEFAULT_SEARCH_CAP
    cap = int(raw)
    if cap < 0:
        raise ValueError("CERTIFIER_SEARCH_CAP must be nonnegative")
    return cap


@dataclass(frozen=True)
class CertifierInstance:
    g: int
    r1: int
    d1: int
    e: int
    f: int

    def __post_init__(self):
        l1 = SeriesParams(self.g, self.r1, self.d1)
        if l1.rho < 0:
            raise InvalidInstance(f"rho({self.g},{self.r1},{self.d1}) = {l1.rho} < 0")
        l2 = residual(l1)
        SecantParams(self.e, self.f)
        if self.e > min(self.d1, l2.d):
            raise InvalidInstance(
                f"e={self.e} exceeds min(d1, d2) = {min(self.d1, l2.d)}"
            )

    @property
    def l1(self) -> SeriesParams:
        return SeriesParams(self.g, self.r1, self.d1)

    @property
    def l2(self) -> SeriesParams:
        return residual(self.l1)

    @property
    def rho(self) -> int:
        return rho(self.g, self.r1, self.d1)

    def as_dict(self):
        return {"g": self.g, "r1": self.r1, "d1": self.d1, "e": self.e, "f": self.f}


@dataclass(frozen=True)
class ConstraintFlags:
    """Which necessary conditions the search enforces.

    ``e_value`` and ``zsub`` default to ``None``, meaning "on exactly when
    f = 1"; :meth:`resolved` turns them into booleans for a given ``f``.
    """

    zero: bool = True
    sub: bool = True
    e_value: Optional[bool] = None
    plk_y1: bool = True
    plk_y2: bool = True
    plk_z1: bool = True
    plk_z2: bool = True
    zsub: Optional[bool] = None

    def resolved(self, f: int) -> "ConstraintFlags":
        return replace(
            self,
            e_value=(f == 1) if self.e_value is None else self.e_value,
            zsub=(f == 1) if self.zsub is None else self.zsub,
        )

    def ids(self) -> List[str]:
        on = {
            C_ZERO: self.zero,
            C_SUB: self.sub,
            C_E: bool(self.e_value),
            C_PLK_Y1: self.plk_y1,
            C_PLK_Y2: self.plk_y2,
            C_PLK_Z1: self.plk_z1,
            C_PLK_Z2: self.plk_z2,
            C_ZSUB: bool(self.zsub),
        }
        return [c for c in ALL_CONSTRAINTS if on[c]]

    @classmethod
    def from_ids(cls, ids) -> "ConstraintFlags":
        ids = set(ids)
        unknown = ids - set(ALL_CONSTRAINTS)
        if unknown:
            raise ValueError(f"unknown constraint ids: {sorted(unknown)}")
        return cls(
            zero=C_ZERO in ids,
            sub=C_SUB in ids,
            e_value=C_E in ids,
            plk_y1=C_PLK_Y1 in ids,
            plk_y2=C_PLK_Y2 in ids,
            plk_z1=C_PLK_Z1 in ids,
            plk_z2=C_PLK_Z2 in ids,
            zsub=C_ZSUB in ids,
        )


@dataclass(frozen=True)
class SequencePair:
    """Vanishing sequences at the node on the ``Y`` side.

    ``a1_Y`` belongs to ``l1`` (degree ``d1``), ``at_Y`` to ``|2D+E|``
    (degree ``d1 + e``).  The ``Z`` side follows by refined compatibility.
    """

    a1_Y: VanishingSequence
    at_Y: VanishingSequence

    @property
    def a1_Z(self) -> VanishingSequence:
        return refined_complement(self.a1_Y, self.a1_Y.d)

    @property
    def at_Z(self) -> VanishingSequence:
        return refined_complement(self.at_Y, self.at_Y.d)

    @property
    def x_sum(self) -> int:
        return sum(self.a1_Y.entries[1:])

    def as_dict(self):
        return {"a1_Y": list(self.a1_Y.entries), "at_Y": list(self.at_Y.entries)}


@dataclass
class Certificate:
    instance: dict
    status: Status
    reasons: List[str] = field(default_factory=list)
    constraints_used: List[str] = field(default_factory=list)
    survivor_count: int = 0
    witnesses: List[SequencePair] = field(default_factory=list)

    def as_dict(self):
        return {
            "instance": dict(self.instance),
            "status": self.status.value,
            "reasons": list(self.reasons),
            "constraints_used": list(self.constraints_used),
            "survivor_count": self.survivor_count,
            "witnesses": [w.as_dict() for w in self.witnesses],
        }


@dataclass(frozen=True)
class SearchResult:
    survivor_count: int
    witnesses: Tuple[SequencePair, ...]
    constraints_used: Tuple[str, ...]
    space_size: int


def case_i_excluded(g: int, r1: int, d1: int) -> bool:
    """Whether all ``d1`` points colliding on the spine is ruled out.

    A point with ``a_{r1} = d1`` carries weight at least ``d1 - r1``; the
    ``g`` cusps carry at least ``g * r1``; both must fit in the genus-0
    Plücker total ``(r1+1)(d1-r1)``.  Equivalent to ``g > d1 - r1``.
    """
    return g * r1 + (d1 - r1) > (r1 + 1) * (d1 - r1)


def x_sum_bounds(g: int, r1: int, d1: int) -> Tuple[int, int]:
    """Range of ``x_1 + ... + x_{r1}`` allowed by the Plücker budgets of ``l1``."""
    p = rho(g, r1, d1)
    hi2 = 2 * d1 - r1 * (r1 + 1)
    lo2 = hi2 - 2 * p
    assert lo2 % 2 == 0 and hi2 % 2 == 0
    return lo2 // 2, hi2 // 2


def _budgets(inst: CertifierInstance):
    g, r1, d1, e, f = inst.g, inst.r1, inst.d1, inst.e, inst.f
    z_cusps = g - d1
    if z_cusps < 0:
        raise ValueError(f"the Z side needs g >= d1, got g={g}, d1={d1}")
    return (
        ramification_budget_at_p(r1, d1, d1),
        ramification_budget_at_p(r1 + f, d1 + e, d1),
        ramification_budget_at_p(r1, d1, z_cusps),
        ramification_budget_at_p(r1 + f, d1 + e, z_cusps),
    )


def search_space_size(inst: CertifierInstance, flags: ConstraintFlags) -> int:
    r1, d1, e, f = inst.r1, inst.d1, inst.e, inst.f
    top = d1 + e
    if flags.zero:
        n_a1 = math.comb(d1, r1)
    else:
        n_a1 = math.comb(d1 + 1, r1 + 1)
    if flags.sub:
        n_at = math.comb(top - r1, f)
    elif flags.zero:
        n_at = math.comb(top, r1 + f)
    else:
        n_at = math.comb(top + 1, r1 + f + 1)
    return n_a1 * n_at


def search(inst: CertifierInstance, flags: Optional[ConstraintFlags] = None,
           cap: Optional[int] = None, witness_cap: int = WITNESS_CAP,
           backend: Optional[str] = None) -> SearchResult:
    flags = (flags or ConstraintFlags()).resolved(inst.f)
    cap = search_cap() if cap is None else cap
    size = search_space_size(inst, flags)
    if size > cap:
        raise SearchSpaceTooLarge(f"{size} candidates exceed the cap of {cap}")
    y1, y2, z1, z2 = _budgets(inst)
    count, raw = kernel.scan(
        inst.d1, inst.e, inst.r1, inst.f,
        flags.zero, flags.sub, bool(flags.e_value),
        y1 if flags.plk_y1 else None,
        y2 if flags.plk_y2 else None,
        z1 if flags.plk_z1 else None,
        z2 if flags.plk_z2 else None,
        bool(flags.zsub), witness_cap,
        backend=backend,
    )
    witnesses = tuple(
        SequencePair(VanishingSequence(a, inst.d1), VanishingSequence(b, inst.d1 + inst.e))
        for a, b in raw
    )
    return SearchResult(count, witnesses, tuple(flags.ids()), size)


def enumerate_candidates(inst: CertifierInstance,
                         flags: Optional[ConstraintFlags] = None,
                         cap: Optional[int] = None,
                         backend: Optional[str] = None) -> List[SequencePair]:
    """Every candidate pair surviving the enabled constraints, in lexicographic order."""
    return list(search(inst, flags, cap, witness_cap=sys.maxsize, backend=backend).witnesses)


def certify_empty(inst: CertifierInstance, flags: Optional[ConstraintFlags] = None,
                  cap: Optional[int] = None,
                  backend: Optional[str] = None) -> Certificate:
    g, r1, d1, e, f = inst.g, inst.r1, inst.d1, inst.e, inst.f
    p = inst.rho
    cert = Certificate(inst.as_dict(), Status.INCONCLUSIVE)
    used = cert.constraints_used

    used.append("EMPTINESS_CONDITION")
    if not emptiness_condition_holds(g, r1, d1, e, f):
        cert.status = Status.NOT_APPLICABLE
        cert.reasons.append("GATE_FAILED")
        return cert

    used.append("TILDE_BN")
    if rho(g, r1 + f, d1 + e) < 0:
        cert.status = Status.EMPTY
        cert.reasons.append("TILDE_BN_NEGATIVE")
        return cert

    if r1 == 1 and p == 1 and f == 3 and e == d1:
        used.append("BPF_PENCIL_TRICK")
        cert.status = Status.EMPTY
        cert.reasons.append("SPECIAL_RULE_BPF_TRICK")
        return cert

    used.append("GENUS_GATE")
    if f == 1:
        if not (0 < e <= g - d1):
            raise CertifierInternalError(
                f"f=1 and the emptiness condition should force 0 < e <= g - d1, "
                f"got e={e}, g-d1={g - d1}"
            )
    elif g <= d1:
        cert.reasons.append("GENUS_GATE")
        return cert

    used.append("CASE_I_PLUCKER")
    if not case_i_excluded(g, r1, d1):
        cert.reasons.append("CASE_I_NOT_EXCLUDED")
        return cert
    cert.reasons.append("CASE_I_EXCLUDED")

    result = search(inst, flags, cap, backend=backend)
    used.extend(result.constraints_used)
    cert.survivor_count = result.survivor_count
    if result.survivor_count == 0:
        cert.status = Status.EMPTY
        cert.reasons.append("CASE_II_NO_SURVIVOR")
    else:
        cert.reasons.append("CASE_II_SURVIVORS")
        cert.witnesses = list(result.witnesses)
    return cert


def classify_incidence_zero(g: int, r1: int, d1: int, l2_base_point_free: bool,
                            d2: Optional[int] = None) -> Certificate:
    """Decide the zero count of ``Gamma_{r1+1}(l1) ∩ Gamma_{r1+1}(l2)``, ``l2`` a pencil.

    With ``rho(g, r1, d1) = 0`` and ``d2 = r1 + 2``, a general curve only
    admits the pencil when the index of speciality ``s1`` of ``l1`` is 1 or 2.
    ``s1 = 2`` always gives an empty intersection; ``s1 = 1`` means
    ``l1 = K_C``, empty iff the pencil is base point free and positive
    dimensional otherwise.
    """
    d2 = r1 + 2 if d2 is None else d2
    l1 = SeriesParams(g, r1, d1)
    if l1.rho != 0:
        raise NotApplicable(f"rho({g},{r1},{d1}) = {l1.rho}, need 0")
    if d2 != r1 + 2:
        raise NotApplicable(f"need d2 = r1 + 2 = {r1 + 2}, got {d2}")
    s1 = l1.speciality
    if s1 not in (1, 2):
        raise NotApplicable(f"index of speciality {s1} leaves no pencil g^1_{d2}")
    cert = Certificate(
        {"g": g, "r1": r1, "d1": d1, "d2": d2, "l2_base_point_free": l2_base_point_free},
        Status.EMPTY,
        constraints_used=["RHO_ZERO", "PENCIL_DEGREE", "SPECIALITY"],
    )
    if s1 == 2:
        cert.reasons.append("SPECIALITY_TWO_EMPTY")
    elif l2_base_point_free:
        cert.reasons.append("CANONICAL_BPF_PENCIL_EMPTY")
    else:
        cert.status = Status.INCONCLUSIVE
        cert.reasons.append("PENCIL_NOT_BASE_POINT_FREE")
    return cert


@dataclass(frozen=True)
class CounterexampleReport:
    d1: int
    e: int
    f: int
    r2: int
    expected_dim: int
    certified: Status
    contradiction: bool

    def as_dict(self):
        return {
            "d1": self.d1,
            "e": self.e,
            "f": self.f,
            "r2": self.r2,
            "expected_dim": self.expected_dim,
            "certified": self.certified.value,
            "contradiction": self.contradiction,
        }


def remark_counterexample_report(d1: int) -> CounterexampleReport:
    """Secant variety of ``K - l1`` (``l1`` a minimal pencil) that is empty in expected dimension 0.

    ``V_e^{e-f}(l2)`` with ``e = 2d1 - 8``, ``f = d1 - 4``, ``l2 = g^{d1-3}_{3d1-8}``
    would contain ``D'`` with ``l1 + D' = l2``; the incidence certificate
    for ``(2d1-3, 1, d1, d1, 3)`` shows no such ``D'`` exists.
    """
    if d1 < 6:
        raise ValueError(f"need d1 >= 6, got {d1}")
    e, f, r2 = 2 * d1 - 8, d1 - 4, d1 - 3
    exp_dim = expected_dim_secant(e, f, r2)
    cert = certify_empty(CertifierInstance(2 * d1 - 3, 1, d1, d1, 3))
    return CounterexampleReport(
        d1, e, f, r2, exp_dim, cert.status,
        contradiction=exp_dim >= 0 and cert.status is Status.EMPTY,
    )
