# engine/certificate.py
from __future__ import annotations
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Literal, Optional, Tuple

from theta import ThetaClass

Verdict = Literal["Good", "NotGood", "Unknown"]

GOOD: Verdict = "Good"
NOT_GOOD: Verdict = "NotGood"
UNKNOWN: Verdict = "Unknown"

# reason / filter codes (stable wire values)
R_THEOREM0 = "Theorem0-form"
R_THEOREM1 = "Theorem1-prime"
R_EX3 = "Ex3-filter"
R_EX6 = "Ex6-filter"
R_BETA = "Beta-not-3-square"

SCHEMA_VERSION = 1

Triple = Tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class Certificate:
    theta: ThetaClass
    verdict: Verdict
    reason: Optional[str] = None
    distances: Optional[Triple] = None          # (d_A, d_B, d_C)
    # degree 2
    rep: Optional[Tuple[int, int]] = None
    e: Optional[Fraction] = None
    r: Optional[Fraction] = None
    s: Optional[Fraction] = None
    prime: Optional[int] = None                 # cited prime for Theorem1-prime
    # degree 4
    triangle: Optional[Tuple[int, int, int]] = None
    lam: Optional[Fraction] = None
    sign: Optional[int] = None
    bound: Optional[int] = None                 # exhausted max_c for Unknown
    heronian_only: bool = False                 # beta/3 filter was allowed to decide
    failed_filters: Tuple[str, ...] = field(default_factory=tuple)
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def degree(self) -> int:
        return self.theta.degree

    def with_distances(self, distances: Triple) -> "Certificate":
        return replace(self, distances=tuple(Fraction(d) for d in distances))
