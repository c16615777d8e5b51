# numtheory/squares.py
from __future__ import annotations
from fractions import Fraction
from typing import Optional, Tuple


def three_square_obstruction(x: Fraction | int) -> Optional[Tuple[int, int, int]]:
    """
    For x = m/n > 0 in lowest terms: (m*n, l, k) when m*n = 4^l (8k+7), else None.
    """
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"need x > 0, got {x}")
    mn = x.numerator * x.denominator
    t, l = mn, 0
    while t % 4 == 0:
        t //= 4
        l += 1
    if t % 8 == 7:
        return mn, l, (t - 7) // 8
    return None


def three_square_admissible(x: Fraction | int) -> bool:
    """True iff x is a sum of three rational squares."""
    return three_square_obstruction(x) is None
