# numtheory/primes.py
from __future__ import annotations
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Dict, List, Optional, Tuple
import logging, random

from numtheory.config import NT

log = logging.getLogger(__name__)

# First 13 primes as Miller-Rabin bases are deterministic below this bound.
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class FactoringBudgetExceeded(ValueError):
    """Composite cofactor larger than the configured bit budget."""


@dataclass(frozen=True)
class Factorization:
    n: int
    pairs: Tuple[Tuple[int, int], ...]   # (prime, exponent), sorted by prime

    def primes(self) -> List[int]:
        return [p for p, _ in self.pairs]

    def as_dict(self) -> Dict[int, int]:
        return dict(self.pairs)

    def value(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p ** e
        return out


@lru_cache(maxsize=4)
def _sieve(limit: int) -> Tuple[int, ...]:
    if limit < 2:
        return ()
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, int(limit ** 0.5) + 1):
        if flags[i]:
            flags[i * i::i] = bytearray(len(range(i * i, limit + 1, i)))
    return tuple(i for i, f in enumerate(flags) if f)


def _mr_round(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int, rng: Optional[random.Random] = None) -> bool:
    """
    Deterministic below ~3.3e24 (fixed bases); above that NT["mr_rounds"]
    random bases, error probability < 4^-rounds.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _MR_DETERMINISTIC_BOUND:
        return all(_mr_round(n, d, s, a) for a in _MR_BASES)
    rng = rng or random.Random(NT["seed"])
    for _ in range(int(NT["mr_rounds"])):
        if not _mr_round(n, d, s, rng.randrange(2, n - 1)):
            return False
    return True


def pollard_brent(n: int, rng: random.Random) -> int:
    """Nontrivial factor of an odd composite n (Brent's cycle variant of rho)."""
    if n % 2 == 0:
        return 2
    g = n
    while g == n:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), rng.randrange(1, n)
        g, r, q = 1, 1, 1
        x = ys = y
        while g == 1:
            x, k = y, 0
            for _ in range(r):
                y = (y * y + c) % n
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g, k = gcd(q, n), k + m
            r *= 2
        if g == n:
            while True:
                ys = (ys * ys + c) % n
                g = gcd(x - ys, n)
                if g > 1:
                    break
    return g


def _split(n: int, rng: random.Random, out: Dict[int, int]) -> None:
    if n == 1:
        return
    if is_probable_prime(n, rng):
        out[n] = out.get(n, 0) + 1
        return
    if n.bit_length() > int(NT["max_bits"]):
        raise FactoringBudgetExceeded(
            f"factoring budget exceeded: {n.bit_length()}-bit composite cofactor (max {NT['max_bits']} bits)")
    f = pollard_brent(n, rng)
    _split(f, rng, out)
    _split(n // f, rng, out)


def factorize(n: int, seed: Optional[int] = None) -> Factorization:
    """
    Trial division to NT["trial_limit"], then Miller-Rabin + Pollard-Brent on the cofactor.
    The seed makes the randomized stage reproducible.
    """
    if n < 2:
        raise ValueError(f"factorize needs n >= 2, got {n}")
    found: Dict[int, int] = {}
    m = n
    for p in _sieve(int(NT["trial_limit"])):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            found[p] = e
    if m > 1:
        limit = int(NT["trial_limit"])
        if m <= limit * limit:
            found[m] = found.get(m, 0) + 1   # no factor below sqrt(m)
        else:
            rng = random.Random(NT["seed"] if seed is None else seed)
            log.debug("factorize: %d-bit cofactor after trial division", m.bit_length())
            _split(m, rng, found)
    return Factorization(n=n, pairs=tuple(sorted(found.items())))
