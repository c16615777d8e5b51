# theta/classes.py
from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from exactnum import QuadExt, format_rat, is_rational_square, is_squarefree, quadext_sign


class NonPositiveTheta(ValueError):
    pass


def _coef_prefix(x: Fraction) -> str:
    return "" if x == 1 else f"{format_rat(x)}*"


@dataclass(frozen=True)
class RationalSide:
    lam: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))
        if self.lam <= 0:
            raise NonPositiveTheta(f"theta = {self.lam} is not positive")

    degree = 1
    tag = "rational"

    def theta_sq(self) -> QuadExt:
        return QuadExt(self.lam * self.lam)

    def __str__(self) -> str:
        return format_rat(self.lam)


@dataclass(frozen=True)
class QuadSurd:
    """theta = lam*sqrt(q), q square-free >= 2."""
    lam: Fraction
    q: int

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))
        if self.lam <= 0:
            raise NonPositiveTheta(f"coefficient {self.lam} is not positive")
        if self.q < 2 or not is_squarefree(self.q):
            raise ValueError(f"q must be square-free >= 2, got {self.q}")

    degree = 2
    tag = "quadratic"

    def theta_sq(self) -> QuadExt:
        return QuadExt(self.lam * self.lam * self.q)

    def __str__(self) -> str:
        return f"{_coef_prefix(self.lam)}sqrt({self.q})"


@dataclass(frozen=True)
class Biquadratic:
    """theta^2 = alpha + sign*sqrt(beta), alpha > 0, beta > 0 not a rational square, value > 0."""
    alpha: Fraction
    sign: int
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.alpha <= 0:
            raise ValueError(f"alpha = {format_rat(self.alpha)} is not positive; use NonBiquadratic")
        if self.beta <= 0 or is_rational_square(self.beta) is not None:
            raise ValueError(f"sqrt({format_rat(self.beta)}) must be irrational")
        if quadext_sign(self.theta_sq()) <= 0:
            raise NonPositiveTheta(f"theta^2 = {self.theta_sq()} is not positive")

    degree = 4
    tag = "biquadratic"

    def theta_sq(self) -> QuadExt:
        return QuadExt(self.alpha) + self.sign * QuadExt.sqrt_of(self.beta)

    def __str__(self) -> str:
        op = "+" if self.sign > 0 else "-"
        if self.alpha == 0:
            return f"sqrt(sqrt({format_rat(self.beta)}))"
        return f"sqrt({format_rat(self.alpha)} {op} sqrt({format_rat(self.beta)}))"


QUARTIC_FORM = "quartic-form"
ALPHA_NONPOSITIVE = "alpha-nonpositive"


@dataclass(frozen=True)
class NonBiquadratic:
    """
    Degree-4 forms that cannot be good.
      quartic-form:      theta = a + b*r^(1/4), ab != 0, r fourth-power-free with r^(1/4) of degree 4
      alpha-nonpositive: theta^2 = a + sqrt(b), a <= 0
    """
    reason: str
    a: Fraction
    b: Fraction
    r: int = 0

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.reason not in (QUARTIC_FORM, ALPHA_NONPOSITIVE):
            raise ValueError(f"unknown non-biquadratic reason {self.reason!r}")

    degree = 4
    tag = "non-biquadratic"

    def theta_sq(self) -> QuadExt | None:
        if self.reason == ALPHA_NONPOSITIVE:
            return QuadExt(self.a) + QuadExt.sqrt_of(self.b)
        return None   # lives in a degree-4 field

    def __str__(self) -> str:
        if self.reason == ALPHA_NONPOSITIVE:
            if self.a == 0:
                return f"sqrt(sqrt({format_rat(self.b)}))"
            return f"sqrt({format_rat(self.a)} + sqrt({format_rat(self.b)}))"
        op = "+" if self.b > 0 else "-"
        return f"{format_rat(self.a)} {op} {_coef_prefix(abs(self.b))}qroot({self.r})"


ThetaClass = Union[RationalSide, QuadSurd, Biquadratic, NonBiquadratic]
