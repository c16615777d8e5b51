# engine/verify.py
"""
Independent re-check of certificates. Uses only exact arithmetic and the
defining equations, never the classifier's search path for Good verdicts.
"""
from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from exactnum import QuadExt, is_rational_square
from numtheory import FormRep, is_probable_prime, three_square_admissible
from theta import Biquadratic, NonBiquadratic, QuadSurd, RationalSide
from triangles import make_triangle, search_by_kappa
from engine.certificate import (
    GOOD, NOT_GOOD, UNKNOWN, R_BETA, R_EX3, R_EX6, R_THEOREM0, R_THEOREM1, Certificate,
)
from engine.classify import kappa_target
from engine.relation import fundamental_relation_holds, triangle_inequality_filter
from engine.witness import lemma2_witness


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    reason: str = "ok"

    def __bool__(self) -> bool:
        return self.ok


def _fail(reason: str) -> VerifyResult:
    return VerifyResult(False, reason)


OK = VerifyResult(True)


def verify_certificate(c: Certificate) -> VerifyResult:
    try:
        if c.verdict == GOOD:
            return _verify_good(c)
        if c.verdict == NOT_GOOD:
            return _verify_not_good(c)
        if c.verdict == UNKNOWN:
            return _verify_unknown(c)
        return _fail(f"unknown verdict {c.verdict!r}")
    except (ValueError, TypeError, ZeroDivisionError) as e:
        return _fail(f"malformed evidence: {e}")


# ---- Good ----

def _distances_ok(c: Certificate) -> Optional[VerifyResult]:
    if c.distances is None or len(c.distances) != 3:
        return _fail("missing distances")
    zeros = sum(1 for d in c.distances if d == 0)
    if any(d < 0 for d in c.distances) or zeros > (1 if c.degree == 1 else 0):
        return _fail("distances must be positive")
    if not fundamental_relation_holds(*c.distances, c.theta.theta_sq()):
        return _fail("fundamental relation failed")
    if not triangle_inequality_filter(*c.distances, c.theta.theta_sq()):
        return _fail("triangle inequality failed")
    return None


def _verify_good(c: Certificate) -> VerifyResult:
    t = c.theta
    if isinstance(t, NonBiquadratic):
        return _fail("Good verdict on a non-biquadratic side")
    bad = _distances_ok(c)
    if bad is not None:
        return bad
    if isinstance(t, RationalSide):
        if sorted(c.distances) != sorted((Fraction(0), t.lam, t.lam)):
            return _fail("vertex witness must be (0, theta, theta)")
        return OK
    if isinstance(t, QuadSurd):
        return _verify_degree2(c, t)
    if isinstance(t, Biquadratic):
        return _verify_degree4(c, t)
    return _fail("unsupported theta class")


def _verify_degree2(c: Certificate, t: QuadSurd) -> VerifyResult:
    if c.rep is None or None in (c.e, c.r, c.s):
        return _fail("missing representation or e, r, s")
    a, b = (Fraction(v) for v in c.rep)
    q, e, r, s = t.q, c.e, c.r, c.s
    if a * a + 3 * b * b != q:
        return _fail("a^2 + 3b^2 != q")
    if e == 0:
        return _fail("e must be nonzero")
    if (a + e) ** 2 + 3 * (b + e) ** 2 != q * r * r:
        return _fail("(a+e)^2 + 3(b+e)^2 != q r^2")
    if (a - e) ** 2 + 3 * (b + e) ** 2 != q * s * s:
        return _fail("(a-e)^2 + 3(b+e)^2 != q s^2")
    k = t.lam / 2
    expect = (q / abs(e) * k, q * abs(r) / abs(e) * k, q * abs(s) / abs(e) * k)
    if tuple(c.distances) != expect:
        return _fail("distances disagree with the e, r, s construction")
    return OK


def _verify_degree4(c: Certificate, t: Biquadratic) -> VerifyResult:
    if c.triangle is None or c.lam is None or c.sign is None:
        return _fail("missing triangle, lambda or sign")
    tri = make_triangle(*(int(v) for v in c.triangle))
    lam = Fraction(c.lam)
    if lam <= 0:
        return _fail("lambda must be positive")
    if c.sign != t.sign:
        return _fail("sign disagrees with theta")
    if not tri.radical_is_irrational:
        return _fail("4*area*sqrt(3) is rational")
    rhs = QuadExt(tri.s1) + c.sign * QuadExt.sqrt_of(3 * tri.sixteen_delta_sq)
    if 2 * lam * lam * t.theta_sq() != rhs:
        return _fail("2 lambda^2 theta^2 != s1 ± 4*area*sqrt(3)")
    if not fundamental_relation_holds(tri.a, tri.b, tri.c, lam * lam * t.theta_sq()):
        return _fail("fundamental relation failed for the rescaled triangle")
    if sorted(c.distances) != sorted(Fraction(x) / lam for x in tri.sides):
        return _fail("distances are not the triangle sides divided by lambda")
    return OK


# ---- NotGood / Unknown ----

def _verify_not_good(c: Certificate) -> VerifyResult:
    t = c.theta
    if c.reason not in (c.failed_filters or ()):
        return _fail("reason missing from failed filters")
    if c.reason == R_THEOREM0:
        if isinstance(t, NonBiquadratic):
            return OK
        return _fail("theta is biquadratic with positive alpha")
    if c.reason == R_THEOREM1:
        p = c.prime
        if not isinstance(t, QuadSurd) or p is None:
            return _fail("prime evidence needs a quadratic surd and a prime")
        if not is_probable_prime(p) or t.q % p != 0:
            return _fail(f"{p} is not a prime factor of {t.q}")
        if p != 2 and p % 6 != 5:
            return _fail(f"{p} is 3 or 1 mod 6")
        return OK
    if not isinstance(t, Biquadratic):
        return _fail(f"{c.reason} applies to biquadratic sides only")
    if c.reason == R_EX3:
        return OK if t.alpha * t.alpha <= t.beta else _fail("alpha^2 > beta")
    if c.reason == R_EX6:
        if not three_square_admissible(2 * t.alpha):
            return OK
        return _fail("2 alpha is a sum of three rational squares")
    if c.reason == R_BETA:
        if not c.heronian_only:
            return _fail("beta/3 filter decides only in heronian-only mode")
        return OK if is_rational_square(t.beta / 3) is None else _fail("beta/3 is a rational square")
    return _fail(f"unknown reason {c.reason!r}")


def _verify_unknown(c: Certificate) -> VerifyResult:
    t = c.theta
    if not isinstance(t, Biquadratic):
        return _fail("Unknown applies to biquadratic sides only")
    if c.bound is None or c.bound < 1:
        return _fail("Unknown needs a positive bound")
    if t.alpha * t.alpha <= t.beta or not three_square_admissible(2 * t.alpha):
        return _fail("a filter rejects this theta; Unknown is not allowed")
    for tri in search_by_kappa(kappa_target(t), c.bound):
        if is_rational_square(Fraction(tri.s1) / (2 * t.alpha)) is not None:
            return _fail(f"triangle {tri.sides} within the bound witnesses goodness")
    return OK
