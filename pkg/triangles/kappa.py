# triangles/kappa.py
from __future__ import annotations
from fractions import Fraction
from math import gcd, isqrt
from typing import List
import logging

from triangles.prim import PrimTriangle, min_b, quartic_16_area_sq

log = logging.getLogger(__name__)

WEITZENBOCK_MIN = Fraction(48)


def kappa(t: PrimTriangle) -> Fraction:
    """Similarity invariant (a²+b²+c²)²/Δ² = 16*s1²/(16Δ²); >= 48, equality only for equilateral."""
    return Fraction(16 * t.s1 * t.s1, t.sixteen_delta_sq)


def _a_candidates(b: int, c: int, P: int, Q: int) -> List[int]:
    # kappa = P/Q  <=>  16Q(X+m)^2 = P(-X^2 + 2mX - n) with X = a², m = b²+c², n = (c²-b²)²
    m = b * b + c * c
    n = (c * c - b * b) ** 2
    qa = 16 * Q + P
    qb = 2 * m * (16 * Q - P)
    qc = 16 * Q * m * m + P * n
    disc = qb * qb - 4 * qa * qc
    if disc < 0:
        return []
    s = isqrt(disc)
    if s * s != disc:
        return []
    out = set()
    for num in (-qb - s, -qb + s):
        if num <= 0 or num % (2 * qa):
            continue
        X = num // (2 * qa)
        a = isqrt(X)
        if a * a == X and c - b < a <= b:
            out.add(a)
    return sorted(out)


def search_by_kappa(target: Fraction, max_c: int, min_c: int = 1) -> List[PrimTriangle]:
    """
    All primitive non-degenerate triangles with c in [min_c, max_c] and kappa == target,
    in enumeration order (c, b, a). Each (c, b) pair is settled by solving the
    quadratic in a² exactly, so the result equals a full scan.
    """
    target = Fraction(target)
    if target <= 0:
        raise ValueError(f"kappa target must be positive, got {target}")
    if target < WEITZENBOCK_MIN:
        return []
    P, Q = target.numerator, target.denominator
    found: List[PrimTriangle] = []
    for c in range(max(1, min_c), max_c + 1):
        for b in range(min_b(c), c + 1):
            for a in _a_candidates(b, c, P, Q):
                if gcd(gcd(a, b), c) != 1:
                    continue
                t = PrimTriangle(a=a, b=b, c=c, s1=a * a + b * b + c * c,
                                 sixteen_delta_sq=quartic_16_area_sq(a, b, c))
                if kappa(t) == target:
                    found.append(t)
    log.debug("search_by_kappa(%s, %d): %d match(es)", target, max_c, len(found))
    return found
