# exactnum/rat.py
from __future__ import annotations
from fractions import Fraction
from math import isqrt
from typing import Optional
import re

# Fraction keeps lowest terms with a positive denominator; 0 is 0/1.
Rat = Fraction

_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")

def parse_rat(text: str | int | Fraction) -> Fraction:
    """
    Accepts "p/q" or an integer literal (also passes through ints/Fractions).
    Denominator must be nonzero.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    m = _RAT_RE.match(str(text))
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)

def format_rat(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"

def _int_sqrt_exact(n: int) -> Optional[int]:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None

def is_rational_square(x: Fraction | int) -> Optional[Fraction]:
    """Nonnegative r with r*r == x, or None."""
    x = Fraction(x)
    if x < 0:
        return None
    rn = _int_sqrt_exact(x.numerator)
    if rn is None:
        return None
    rd = _int_sqrt_exact(x.denominator)
    if rd is None:
        return None
    return Fraction(rn, rd)
