# engine/relation.py
from __future__ import annotations
from fractions import Fraction
from itertools import combinations
from typing import Tuple

from exactnum import QuadExt, quadext_sign
from triangles import hero_product


def fundamental_relation_holds(dA, dB, dC, theta_sq: QuadExt) -> bool:
    """3(a⁴+b⁴+c⁴+θ⁴) == (a²+b²+c²+θ²)², exactly in Q(sqrt(d))."""
    a2, b2, c2 = (Fraction(x) ** 2 for x in (dA, dB, dC))
    lhs = 3 * (theta_sq.square() + (a2 * a2 + b2 * b2 + c2 * c2))
    rhs = (theta_sq + (a2 + b2 + c2)).square()
    return lhs == rhs


def _theta_fits(x: Fraction, y: Fraction, theta_sq: QuadExt) -> bool:
    # x + y >= theta and theta >= |x - y|, compared through squares
    return (quadext_sign(QuadExt((x + y) ** 2) - theta_sq) >= 0
            and quadext_sign(theta_sq - (x - y) ** 2) >= 0)


def triangle_inequality_filter(dA, dB, dC, theta_sq: QuadExt) -> bool:
    """Every 3-subset of {dA, dB, dC, theta} satisfies the non-strict triangle inequality."""
    ds = [Fraction(x) for x in (dA, dB, dC)]
    x, y, z = sorted(ds)
    if z > x + y:
        return False
    return all(_theta_fits(p, q, theta_sq) for p, q in combinations(ds, 2))


def theta_from_distances(dA, dB, dC) -> Tuple[QuadExt, QuadExt]:
    """
    Both solutions theta² = (U ± sqrt(3P))/2 of the fundamental relation for a
    rational triple, U = a²+b²+c², P = (a+b+c)(-a+b+c)(a-b+c)(a+b-c).
    The minus root may be nonpositive; callers check its sign.
    """
    a, b, c = (Fraction(x) for x in (dA, dB, dC))
    P = hero_product(a, b, c)
    if P < 0:
        raise ValueError(f"({a}, {b}, {c}) violates the triangle inequality; no real side length")
    U = a * a + b * b + c * c
    rad = QuadExt.sqrt_of(3 * P)
    half = Fraction(1, 2)
    return (QuadExt(U) + rad) * half, (QuadExt(U) - rad) * half
