# numtheory/residues.py
from __future__ import annotations

from numtheory.primes import is_probable_prime


class NotOddPrime(ValueError):
    pass


class NonResidue(ValueError):
    pass


def _check_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_probable_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) via Euler's criterion; returns -1, 0 or +1."""
    _check_odd_prime(p)
    ls = pow(a % p, (p - 1) // 2, p)
    return -1 if ls == p - 1 else ls


def sqrt_mod(a: int, p: int) -> int:
    """
    Tonelli-Shanks square root of a quadratic residue a mod an odd prime p.
    Returns the smaller root r, 0 < r < p.
    """
    if legendre(a, p) != 1:
        raise NonResidue(f"{a} is not a nonzero quadratic residue mod {p}")
    n = a % p
    if p % 4 == 3:
        r = pow(n, (p + 1) // 4, p)
        return min(r, p - r)

    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1

    m = s
    c = pow(z, q, p)
    t = pow(n, q, p)
    r = pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m = i
        c = b * b % p
        t = t * c % p
        r = r * b % p
    return min(r, p - r)
