# engine/witness.py
"""
Witness points in the frame B(-theta/2, 0), C(theta/2, 0), A(0, theta*sqrt(3)/2).

For theta = lam*sqrt(q) exact points are x = rho_x*sqrt(q), y = rho_y*sqrt(3q);
degree-4 sides get mpmath coordinates with a stated error bound.
"""
from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple
import logging

from mpmath import mp, mpf, sqrt as mp_sqrt, fabs, floor, log10, nstr

from exactnum import QuadExt, format_rat, is_rational_square, squarefree_decompose
from numtheory import FormRep
from engine.relation import fundamental_relation_holds

log = logging.getLogger(__name__)

Triple = Tuple[Fraction, Fraction, Fraction]


class WitnessError(ValueError):
    pass


@dataclass(frozen=True)
class WitnessPoint:
    exact: bool
    q: int = 1
    rho_x: Optional[Fraction] = None
    rho_y: Optional[Fraction] = None
    x: Optional[str] = None          # numeric rendering (degree 4)
    y: Optional[str] = None
    error_bound: Optional[str] = None

    def describe(self) -> str:
        if self.exact:
            return (f"x = {format_rat(self.rho_x)}*sqrt({self.q}), "
                    f"y = {format_rat(self.rho_y)}*sqrt({3 * self.q})")
        return f"x = {self.x}, y = {self.y} (|error| <= {self.error_bound})"

    def as_dict(self) -> dict:
        if self.exact:
            return {"exact": True, "q": self.q,
                    "rho_x": format_rat(self.rho_x), "rho_y": format_rat(self.rho_y)}
        return {"exact": False, "x": self.x, "y": self.y, "error_bound": self.error_bound}


def construction_scalars(rep: FormRep) -> Tuple[Fraction, Fraction, Fraction]:
    """e = -q/(4b), r = (a-b)/(2b), s = (a+b)/(2b) for a² + 3b² = q."""
    a, b, q = rep.x, rep.y, rep.q
    if b == 0:
        raise WitnessError(f"representation ({a}, {b}) of {q} has b = 0")
    return Fraction(-q, 4 * b), Fraction(a - b, 2 * b), Fraction(a + b, 2 * b)


def lemma2_witness(lam: Fraction, q: int, rep: FormRep) -> Tuple[WitnessPoint, Triple]:
    """
    Rational-distance point for theta = lam*sqrt(q). The construction lives on the
    reference side 2*sqrt(q); everything is scaled by lam/2 afterwards.
    """
    if rep.q != q:
        raise WitnessError(f"representation is for {rep.q}, not {q}")
    lam = Fraction(lam)
    e, r, s = construction_scalars(rep)
    k = lam / 2
    d_a = Fraction(q) / abs(e) * k
    d_b = q * abs(r) / abs(e) * k
    d_c = q * abs(s) / abs(e) * k
    rho_x = Fraction(rep.x) / e * k
    rho_y = (Fraction(rep.y) / e + 1) * k
    return WitnessPoint(exact=True, q=q, rho_x=rho_x, rho_y=rho_y), (d_a, d_b, d_c)


def lemma2_witnesses(lam: Fraction, q: int, rep: FormRep) -> List[Tuple[WitnessPoint, Triple]]:
    """All distinct points from the sign variants (±a, ±b) of the representation."""
    seen, out = set(), []
    for sx in (1, -1):
        for sy in (1, -1):
            pt, ds = lemma2_witness(lam, q, FormRep(sx * rep.x, sy * rep.y, q))
            key = (pt.rho_x, pt.rho_y)
            if key not in seen:
                seen.add(key)
                out.append((pt, ds))
    return out


def vertex_witness(lam: Fraction) -> Tuple[WitnessPoint, Triple]:
    """Vertex A of the triangle with rational side lam: distances (0, lam, lam)."""
    lam = Fraction(lam)
    return WitnessPoint(exact=True, q=1, rho_x=Fraction(0), rho_y=lam / 2), (Fraction(0), lam, lam)


# ---- point placement from a distance triple ----

@dataclass(frozen=True)
class Candidate:
    """One intersection of the circles around B and C, with its distance to A."""
    point: WitnessPoint
    dist_a: str


def _exact_candidates(dA, dB, dC, theta_sq: Fraction) -> Optional[List[Tuple[WitnessPoint, Fraction]]]:
    s, q = squarefree_decompose(theta_sq.numerator * theta_sq.denominator)
    lt = Fraction(s, theta_sq.denominator)          # theta = lt*sqrt(q)
    rho_x = (dB * dB - dC * dC) / (2 * lt * q)
    rho_y_sq = (dB * dB - (rho_x + lt / 2) ** 2 * q) / (3 * q)
    rho_y = is_rational_square(rho_y_sq)
    if rho_y is None:
        return None
    out = []
    for ry in ([rho_y] if rho_y == 0 else [rho_y, -rho_y]):
        da_sq = rho_x * rho_x * q + (ry - lt / 2) ** 2 * 3 * q
        out.append((WitnessPoint(exact=True, q=q, rho_x=rho_x, rho_y=ry), da_sq))
    return out


def _coord(v: mpf, precision: int) -> str:
    """Render with precision+5 digits after the decimal point, whatever the magnitude."""
    whole = int(floor(log10(fabs(v)))) + 1 if v != 0 else 0
    return nstr(v, precision + 5 + max(whole, 0))


def _numeric_candidates(dA, dB, dC, theta_sq: QuadExt, precision: int):
    work = 2 * precision + 10
    with mp.workdps(work):
        th = mp_sqrt(theta_sq.numeric(work))
        a, b, c = (mpf(x.numerator) / x.denominator for x in (dA, dB, dC))
        x = (b * b - c * c) / (2 * th)
        y_sq = b * b - (x + th / 2) ** 2
        y0 = mp_sqrt(y_sq) if y_sq > 0 else mpf(0)
        ay = th * mp_sqrt(3) / 2
        out = []
        for y in ([y0] if y0 == 0 else [y0, -y0]):
            ma = mp_sqrt(x * x + (y - ay) ** 2)
            mb = mp_sqrt((x + th / 2) ** 2 + y * y)
            mc = mp_sqrt((x - th / 2) ** 2 + y * y)
            resid = max(fabs(ma - a), fabs(mb - b), fabs(mc - c))
            out.append((x, y, ma, resid))
        return out


def lemma4_candidates(dA, dB, dC, theta_sq: QuadExt, precision: int = 50) -> List[Candidate]:
    """Both placements M1, M2 consistent with dB and dC, each with its distance to A."""
    dA, dB, dC = (Fraction(v) for v in (dA, dB, dC))
    if theta_sq.is_rational():
        ex = _exact_candidates(dA, dB, dC, theta_sq.a)
        if ex is not None:
            out = []
            for pt, da_sq in ex:
                root = is_rational_square(da_sq)
                out.append(Candidate(pt, format_rat(root) if root is not None else f"sqrt({format_rat(da_sq)})"))
            return out
    bound = f"1e-{precision}"
    return [Candidate(WitnessPoint(exact=False, x=_coord(x, precision), y=_coord(y, precision), error_bound=bound),
                      nstr(ma, precision))
            for x, y, ma, _ in _numeric_candidates(dA, dB, dC, theta_sq, precision)]


def lemma4_point(dA, dB, dC, theta_sq: QuadExt, precision: int = 50) -> WitnessPoint:
    """
    Point M with MA = dA, MB = dB, MC = dC: x from the B/C distances, the sign of y
    chosen so the distance to A matches. Exact when theta² is rational.
    """
    dA, dB, dC = (Fraction(v) for v in (dA, dB, dC))
    if min(dA, dB, dC) < 0:
        raise WitnessError("distances must be nonnegative")
    if not fundamental_relation_holds(dA, dB, dC, theta_sq):
        raise WitnessError("fundamental relation failed")
    if theta_sq.is_rational():
        ex = _exact_candidates(dA, dB, dC, theta_sq.a)
        if ex is not None:
            for pt, da_sq in ex:
                if da_sq == dA * dA:
                    return pt
            raise WitnessError("no placement matches the A-distance")
    tol = mpf(10) ** (-precision)
    with mp.workdps(2 * precision + 10):
        best = min(_numeric_candidates(dA, dB, dC, theta_sq, precision), key=lambda c: c[3])
        x, y, _, resid = best
        if resid > tol:
            raise WitnessError(f"placement residual {nstr(resid, 5)} exceeds 1e-{precision}")
        log.debug("lemma4_point residual %s", nstr(resid, 5))
        return WitnessPoint(exact=False, x=_coord(x, precision), y=_coord(y, precision),
                            error_bound=f"1e-{precision}")


def placement_residual(dA, dB, dC, theta_sq: QuadExt, pt: WitnessPoint, precision: int = 50) -> mpf:
    """max |MX - dX| over the three vertices, evaluated at 2*precision+10 digits."""
    work = 2 * precision + 10
    with mp.workdps(work):
        th = mp_sqrt(theta_sq.numeric(work))
        if pt.exact:
            x = (mpf(pt.rho_x.numerator) / pt.rho_x.denominator) * mp_sqrt(pt.q)
            y = (mpf(pt.rho_y.numerator) / pt.rho_y.denominator) * mp_sqrt(3 * pt.q)
        else:
            x, y = mpf(pt.x), mpf(pt.y)
        ay = th * mp_sqrt(3) / 2
        ds = [mpf(Fraction(v).numerator) / Fraction(v).denominator for v in (dA, dB, dC)]
        got = [mp_sqrt(x * x + (y - ay) ** 2),
               mp_sqrt((x + th / 2) ** 2 + y * y),
               mp_sqrt((x - th / 2) ** 2 + y * y)]
        return max(fabs(g - d) for g, d in zip(got, ds))
