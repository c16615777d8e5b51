# triangles/prim.py
from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterator, List, Tuple


class DegenerateTriangle(ValueError):
    pass


class NonPrimitiveTriangle(ValueError):
    pass


def quartic_16_area_sq(a: int, b: int, c: int) -> int:
    """16*area^2 as 2(a²b²+b²c²+c²a²) - (a⁴+b⁴+c⁴)."""
    a2, b2, c2 = a * a, b * b, c * c
    return 2 * (a2 * b2 + b2 * c2 + c2 * a2) - (a2 * a2 + b2 * b2 + c2 * c2)


def hero_product(a, b, c):
    """(a+b+c)(-a+b+c)(a-b+c)(a+b-c); equals 16*area^2 (works on ints and Fractions)."""
    return (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)


@dataclass(frozen=True)
class PrimTriangle:
    a: int
    b: int
    c: int
    s1: int                  # a²+b²+c²
    sixteen_delta_sq: int    # 16Δ²

    @property
    def sides(self) -> Tuple[int, int, int]:
        return self.a, self.b, self.c

    @property
    def radical_is_irrational(self) -> bool:
        """4Δ√3 = sqrt(3*16Δ²) is irrational."""
        n = 3 * self.sixteen_delta_sq
        r = isqrt(n)
        return r * r != n

    @property
    def has_rational_area(self) -> bool:
        r = isqrt(self.sixteen_delta_sq)
        return r * r == self.sixteen_delta_sq


def make_triangle(a: int, b: int, c: int) -> PrimTriangle:
    """Sorted, validated primitive non-degenerate triangle with cached invariants."""
    for v in (a, b, c):
        if not isinstance(v, int) or v <= 0:
            raise ValueError(f"sides must be positive integers, got {(a, b, c)}")
    a, b, c = sorted((a, b, c))
    if c >= a + b:
        raise DegenerateTriangle(f"degenerate triangle ({a}, {b}, {c}): {c} >= {a} + {b}")
    if gcd(gcd(a, b), c) != 1:
        raise NonPrimitiveTriangle(f"non-primitive triangle ({a}, {b}, {c}): gcd {gcd(gcd(a, b), c)}")
    k = quartic_16_area_sq(a, b, c)
    return PrimTriangle(a=a, b=b, c=c, s1=a * a + b * b + c * c, sixteen_delta_sq=k)


def min_b(c: int) -> int:
    """Smallest b with some a <= b and a + b > c."""
    return (c + 2) // 2


def enumerate_primitive(max_c: int, min_c: int = 1) -> Iterator[PrimTriangle]:
    """Every primitive non-degenerate a <= b <= c in [min_c, max_c], (c, b, a) order."""
    if max_c < 1:
        raise ValueError(f"max_c must be >= 1, got {max_c}")
    for c in range(max(1, min_c), max_c + 1):
        for b in range(min_b(c), c + 1):
            g_bc = gcd(b, c)
            for a in range(c - b + 1, b + 1):
                if gcd(g_bc, a) != 1:
                    continue
                yield PrimTriangle(a=a, b=b, c=c, s1=a * a + b * b + c * c,
                                   sixteen_delta_sq=quartic_16_area_sq(a, b, c))


def partitions(max_c: int, parts: int) -> List[Tuple[int, int]]:
    """Split 1..max_c into contiguous (lo, hi) c-ranges for independent enumeration."""
    parts = max(1, min(parts, max_c))
    step, extra = divmod(max_c, parts)
    out, lo = [], 1
    for i in range(parts):
        hi = lo + step - 1 + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi + 1
    return out


def primitive_scaling(dA, dB, dC) -> Tuple[PrimTriangle, Fraction]:
    """
    Positive rational triple -> (primitive triangle, λ) with (dA, dB, dC)*λ
    equal to the triangle's sides up to order.
    """
    ds = [Fraction(x) for x in (dA, dB, dC)]
    if any(x <= 0 for x in ds):
        raise ValueError(f"distances must be positive, got {ds}")
    n = lcm(*(x.denominator for x in ds))
    ints = [int(x * n) for x in ds]
    g = gcd(gcd(ints[0], ints[1]), ints[2])
    lam = Fraction(n, g)
    return make_triangle(*(v // g for v in ints)), lam
