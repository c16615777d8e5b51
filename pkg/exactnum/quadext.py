# exactnum/quadext.py
from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from typing import Union
import re

from mpmath import mp, mpf, sqrt as mp_sqrt

from exactnum.rat import format_rat, parse_rat, is_rational_square
from exactnum.squarefree import squarefree_decompose, is_squarefree

Operand = Union["QuadExt", Fraction, int]


class RadicandMismatch(ValueError):
    """Both operands carry an irrational part over different radicands."""


@dataclass(frozen=True)
class QuadExt:
    """
    Exact a + b*sqrt(d) in Q(sqrt(d)); d square-free >= 2 whenever b != 0.
    Pure rationals (b == 0) always carry d = 1 so they compare equal across code paths.
    """
    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 1

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.b == 0:
            object.__setattr__(self, "d", 1)
            return
        d = int(self.d)
        if d < 2 or not is_squarefree(d):
            raise ValueError(f"radicand must be square-free and >= 2, got {d}")
        object.__setattr__(self, "d", d)

    # ---- constructors ----
    @staticmethod
    def rational(x: Fraction | int) -> "QuadExt":
        return QuadExt(Fraction(x))

    @staticmethod
    def sqrt_of(x: Fraction | int) -> "QuadExt":
        """Canonical sqrt(x) for rational x >= 0: (s/m)*sqrt(q)."""
        x = Fraction(x)
        if x < 0:
            raise ValueError(f"sqrt of negative rational {x}")
        r = is_rational_square(x)
        if r is not None:
            return QuadExt(r)
        s, q = squarefree_decompose(x.numerator * x.denominator)
        return QuadExt(Fraction(0), Fraction(s, x.denominator), q)

    @staticmethod
    def parse(text: str) -> "QuadExt":
        return parse_quadext(text)

    # ---- arithmetic ----
    def _radicand_with(self, other: "QuadExt") -> int:
        if self.b == 0:
            return other.d
        if other.b == 0 or other.d == self.d:
            return self.d
        raise RadicandMismatch(f"radicands differ: sqrt({self.d}) vs sqrt({other.d})")

    @staticmethod
    def _lift(x: Operand) -> "QuadExt":
        return x if isinstance(x, QuadExt) else QuadExt(Fraction(x))

    def __add__(self, other: Operand) -> "QuadExt":
        o = self._lift(other)
        d = self._radicand_with(o)
        return QuadExt(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other: Operand) -> "QuadExt":
        return self + (-self._lift(other))

    def __rsub__(self, other: Operand) -> "QuadExt":
        return self._lift(other) - self

    def __mul__(self, other: Operand) -> "QuadExt":
        o = self._lift(other)
        d = self._radicand_with(o)
        return QuadExt(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def square(self) -> "QuadExt":
        return self * self

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    # ---- predicates ----
    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        return quadext_sign(self)

    def numeric(self, dps: int = 64) -> mpf:
        with mp.workdps(dps):
            val = mpf(self.a.numerator) / self.a.denominator
            if self.b != 0:
                val += (mpf(self.b.numerator) / self.b.denominator) * mp_sqrt(self.d)
            return +val

    def __str__(self) -> str:
        if self.b == 0:
            return format_rat(self.a)
        op = "+" if self.b > 0 else "-"
        return f"{format_rat(self.a)} {op} {format_rat(abs(self.b))}*sqrt({self.d})"


def quadext_sign(x: QuadExt) -> int:
    """Exact sign of a + b*sqrt(d) by comparing a^2 with b^2*d; no floating point."""
    sa = (x.a > 0) - (x.a < 0)
    sb = (x.b > 0) - (x.b < 0)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs; a^2 == b^2 d is impossible with sqrt(d) irrational
    return sa if x.a * x.a > x.b * x.b * x.d else sb


_QX_RE = re.compile(
    r"^\s*([+-]?\d+(?:\s*/\s*\d+)?)\s*(?:([+-])\s*(\d+(?:\s*/\s*\d+)?)\s*\*\s*sqrt\(\s*(\d+)\s*\))?\s*$"
)

def parse_quadext(text: str) -> QuadExt:
    """Inverse of str(QuadExt): "A" or "A + B*sqrt(D)"."""
    m = _QX_RE.match(text)
    if not m:
        raise ValueError(f"not a quadratic-extension literal: {text!r}")
    a = parse_rat(m.group(1).replace(" ", ""))
    if m.group(2) is None:
        return QuadExt(a)
    b = parse_rat(m.group(3).replace(" ", ""))
    if m.group(2) == "-":
        b = -b
    return QuadExt(a, b, int(m.group(4)))
