# exactnum/squarefree.py
from __future__ import annotations
from functools import lru_cache
from typing import Tuple

def squarefree_decompose(n: int) -> Tuple[int, int]:
    """n = s*s*q with q square-free. n >= 1."""
    if n < 1:
        raise ValueError(f"squarefree_decompose needs n >= 1, got {n}")
    from numtheory.primes import factorize  # late import: numtheory sits on plain ints
    if n == 1:
        return 1, 1
    s, q = 1, 1
    for p, e in factorize(n).pairs:
        s *= p ** (e // 2)
        if e % 2:
            q *= p
    return s, q

@lru_cache(maxsize=4096)
def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    return squarefree_decompose(n)[0] == 1
