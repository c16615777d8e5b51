# theta/rescale.py
from __future__ import annotations
from fractions import Fraction

from theta.classes import (
    ALPHA_NONPOSITIVE, Biquadratic, NonBiquadratic, QuadSurd, RationalSide, ThetaClass,
)


def rescale(t: ThetaClass, lam: Fraction | int) -> ThetaClass:
    """Class of lam*theta; the variant tag never changes (theta^2 scales by lam²)."""
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError(f"rescale factor must be positive, got {lam}")
    if isinstance(t, RationalSide):
        return RationalSide(t.lam * lam)
    if isinstance(t, QuadSurd):
        return QuadSurd(t.lam * lam, t.q)
    if isinstance(t, Biquadratic):
        return Biquadratic(lam * lam * t.alpha, t.sign, lam ** 4 * t.beta)
    if isinstance(t, NonBiquadratic):
        if t.reason == ALPHA_NONPOSITIVE:
            return NonBiquadratic(t.reason, lam * lam * t.a, lam ** 4 * t.b)
        return NonBiquadratic(t.reason, lam * t.a, lam * t.b, t.r)
    raise TypeError(f"not a theta class: {t!r}")
