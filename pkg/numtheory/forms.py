# numtheory/forms.py
"""
Representations by the binary form x^2 + 3y^2.

The form represents 3 and every prime p = 1 (mod 6) and is closed under
products; a square-free q >= 2 is represented iff all its prime factors are
3 or 1 mod 6.
"""
from __future__ import annotations
from dataclasses import dataclass
from math import isqrt
from typing import Optional
import logging

from numtheory.primes import factorize, is_probable_prime
from numtheory.residues import sqrt_mod

log = logging.getLogger(__name__)


class FormConditionError(ValueError):
    """Input is not of the kind the form x^2 + 3y^2 represents."""


class NotSquarefree(ValueError):
    pass


@dataclass(frozen=True)
class FormRep:
    x: int
    y: int
    q: int

    def __post_init__(self):
        if self.x * self.x + 3 * self.y * self.y != self.q:
            raise ValueError(f"{self.x}^2 + 3*{self.y}^2 != {self.q}")

    def normalized(self) -> "FormRep":
        return FormRep(abs(self.x), abs(self.y), self.q)

    def as_pair(self) -> tuple[int, int]:
        return self.x, self.y


def represent_prime(p: int) -> FormRep:
    """Cornacchia descent on (p, sqrt(-3) mod p); x, y >= 0."""
    if p == 3:
        return FormRep(0, 1, 3)
    if p % 6 != 1 or not is_probable_prime(p):
        raise FormConditionError(f"{p} is neither 3 nor a prime = 1 mod 6")
    x0 = sqrt_mod(-3, p)
    if 2 * x0 < p:
        x0 = p - x0
    a, b = p, x0
    while b * b > p:
        a, b = b, a % b
    rest = p - b * b
    y = isqrt(rest // 3)
    if rest % 3 != 0 or 3 * y * y != rest:
        raise ArithmeticError(f"descent failed for p={p}")  # unreachable for valid p
    return FormRep(b, y, p)


def compose_reps(r1: FormRep, r2: FormRep) -> FormRep:
    """(a^2+3b^2)(c^2+3d^2) = (ac+3bd)^2 + 3(ad-bc)^2, signs dropped."""
    a, b, c, d = r1.x, r1.y, r2.x, r2.y
    return FormRep(abs(a * c + 3 * b * d), abs(a * d - b * c), r1.q * r2.q)


def _squarefree_factors(q: int, seed: Optional[int] = None) -> list[int]:
    if q < 2:
        raise ValueError(f"need q >= 2, got {q}")
    f = factorize(q, seed=seed)
    if any(e > 1 for _, e in f.pairs):
        raise NotSquarefree(f"{q} is not square-free")
    return f.primes()


def bad_prime(q: int, seed: Optional[int] = None) -> Optional[int]:
    """
    Obstructing prime factor of q: the smallest one = 5 mod 6, else 2, else None.
    """
    primes = _squarefree_factors(q, seed)
    for p in primes:
        if p % 6 == 5:
            return p
    return 2 if 2 in primes else None


def good_squarefree(q: int, seed: Optional[int] = None) -> bool:
    return bad_prime(q, seed) is None


def represent_q(q: int, seed: Optional[int] = None) -> FormRep:
    """a^2 + 3b^2 = q with b != 0, composed prime by prime in increasing order."""
    primes = _squarefree_factors(q, seed)
    rep = FormRep(1, 0, 1)
    for p in primes:
        if p != 3 and p % 6 != 1:
            raise FormConditionError(f"{q} has prime factor {p} = {p % 6} mod 6")
        rep = compose_reps(rep, represent_prime(p))
    log.debug("represent_q(%d) = (%d, %d)", q, rep.x, rep.y)
    return rep
