# engine/classify.py
from __future__ import annotations
from fractions import Fraction
from typing import List, Optional, Tuple
import logging

from exactnum import is_rational_square
from numtheory import bad_prime, represent_q, three_square_admissible
from theta import Biquadratic, NonBiquadratic, QuadSurd, RationalSide, ThetaClass
from triangles import PrimTriangle, search_by_kappa
from engine.config import ENGINE
from engine.certificate import (
    GOOD, NOT_GOOD, UNKNOWN, R_BETA, R_EX3, R_EX6, R_THEOREM0, R_THEOREM1, Certificate,
)
from engine.witness import construction_scalars, lemma2_witness, vertex_witness

log = logging.getLogger(__name__)


def biquadratic_filters(t: Biquadratic) -> Tuple[List[str], bool]:
    """
    Cheap necessary conditions, in reporting order. Returns (fired codes, beta/3 is a rational square).
    The beta/3 check is returned separately; whether it decides the verdict is up to the caller.
    """
    fired: List[str] = []
    beta3_square = is_rational_square(t.beta / 3) is not None
    if t.alpha * t.alpha <= t.beta:
        fired.append(R_EX3)
    if not three_square_admissible(2 * t.alpha):
        fired.append(R_EX6)
    return fired, beta3_square


def kappa_target(t: Biquadratic) -> Fraction:
    return 48 * t.alpha * t.alpha / t.beta


def match_triangle(t: Biquadratic, max_c: int) -> Optional[Tuple[PrimTriangle, Fraction]]:
    """First triangle (smallest c, then lexicographic) with kappa match and s1/(2 alpha) a rational square."""
    for tri in search_by_kappa(kappa_target(t), max_c):
        lam = is_rational_square(Fraction(tri.s1) / (2 * t.alpha))
        if lam is not None and lam > 0:
            return tri, lam
    return None


def classify(t: ThetaClass, max_c: Optional[int] = None,
             heronian_only: Optional[bool] = None, seed: Optional[int] = None) -> Certificate:
    """Decide goodness of theta; every outcome is a certificate, never an exception."""
    max_c = int(ENGINE["bound"] if max_c is None else max_c)
    heronian_only = bool(ENGINE["heronian_only"] if heronian_only is None else heronian_only)
    if max_c < 1:
        raise ValueError(f"bound must be >= 1, got {max_c}")

    if isinstance(t, RationalSide):
        _, ds = vertex_witness(t.lam)
        cert = Certificate(theta=t, verdict=GOOD, distances=ds)

    elif isinstance(t, QuadSurd):
        p = bad_prime(t.q, seed)
        if p is not None:
            cert = Certificate(theta=t, verdict=NOT_GOOD, reason=R_THEOREM1, prime=p,
                               failed_filters=(R_THEOREM1,))
        else:
            rep = represent_q(t.q, seed)
            e, r, s = construction_scalars(rep)
            _, ds = lemma2_witness(t.lam, t.q, rep)
            cert = Certificate(theta=t, verdict=GOOD, distances=ds,
                               rep=rep.as_pair(), e=e, r=r, s=s)

    elif isinstance(t, NonBiquadratic):
        cert = Certificate(theta=t, verdict=NOT_GOOD, reason=R_THEOREM0,
                           failed_filters=(R_THEOREM0,), notes=(t.reason,))

    elif isinstance(t, Biquadratic):
        cert = _classify_biquadratic(t, max_c, heronian_only)

    else:
        raise TypeError(f"not a theta class: {t!r}")

    log.info("classify %s -> %s%s", t, cert.verdict, f" ({cert.reason})" if cert.reason else "")
    return cert


def _classify_biquadratic(t: Biquadratic, max_c: int, heronian_only: bool) -> Certificate:
    fired, beta3_square = biquadratic_filters(t)
    notes: Tuple[str, ...] = ()
    if not beta3_square:
        if heronian_only:
            fired.insert(0, R_BETA)
        else:
            notes = (f"{R_BETA} (advisory: no rational-area witness triangle)",)
    log.debug("filters for %s: fired=%s beta/3 square=%s", t, fired, beta3_square)
    if fired:
        return Certificate(theta=t, verdict=NOT_GOOD, reason=fired[0], failed_filters=tuple(fired),
                           heronian_only=heronian_only, notes=notes)

    found = match_triangle(t, max_c)
    if found is None:
        return Certificate(theta=t, verdict=UNKNOWN, bound=max_c,
                           heronian_only=heronian_only, notes=notes)
    tri, lam = found
    ds = tuple(Fraction(x) / lam for x in tri.sides)
    return Certificate(theta=t, verdict=GOOD, distances=ds, triangle=tri.sides,
                       lam=lam, sign=t.sign, heronian_only=heronian_only, notes=notes)
