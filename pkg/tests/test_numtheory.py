from fractions import Fraction
from math import isqrt

import pytest

from numtheory import (
    FactoringBudgetExceeded, FormConditionError, FormRep, NonResidue, NotOddPrime, NotSquarefree,
    bad_prime, compose_reps, factorize, good_squarefree, is_probable_prime, legendre,
    represent_prime, represent_q, sqrt_mod, three_square_admissible, three_square_obstruction,
)
from exactnum import is_squarefree

M31 = 2 ** 31 - 1
M61 = 2 ** 61 - 1
M89 = 2 ** 89 - 1


def _small_primes(n):
    return [p for p in range(2, n) if all(p % d for d in range(2, isqrt(p) + 1))]


def test_is_probable_prime_small_range():
    primes = set(_small_primes(2000))
    for n in range(-3, 2000):
        assert is_probable_prime(n) == (n in primes)
    assert not is_probable_prime(561)            # Carmichael
    assert not is_probable_prime(3215031751)     # strong pseudoprime to 2, 3, 5, 7


def test_is_probable_prime_large(rng):
    assert is_probable_prime(M61)
    assert is_probable_prime(M89, rng)
    assert not is_probable_prime(M31 * M61, rng)


def test_factorize_trial_division():
    f = factorize(2 ** 4 * 3 * 7 ** 2 * 997)
    assert f.pairs == ((2, 4), (3, 1), (7, 2), (997, 1))
    assert f.value() == f.n
    assert f.primes() == [2, 3, 7, 997]
    with pytest.raises(ValueError):
        factorize(1)


def test_factorize_pollard_brent_is_reproducible():
    n = M31 * M61
    f1 = factorize(n, seed=7)
    f2 = factorize(n, seed=7)
    assert f1.pairs == ((M31, 1), (M61, 1)) == f2.pairs


def test_factorize_budget():
    with pytest.raises(FactoringBudgetExceeded):
        factorize(M61 * M89)


def test_legendre_and_sqrt_mod():
    for p in _small_primes(400)[1:]:
        residues = {x * x % p for x in range(1, p)}
        for a in range(1, p):
            assert legendre(a, p) == (1 if a in residues else -1)
            if a in residues:
                r = sqrt_mod(a, p)
                assert r * r % p == a and 0 < r <= p // 2
        assert legendre(p, p) == 0
    with pytest.raises(NonResidue):
        sqrt_mod(2, 5)
    with pytest.raises(NotOddPrime):
        legendre(1, 9)


def test_represent_prime():
    assert represent_prime(3) == FormRep(0, 1, 3)
    assert represent_prime(7) == FormRep(2, 1, 7)
    assert represent_prime(13).normalized() == FormRep(1, 2, 13)
    for p in _small_primes(5000):
        if p % 6 == 1:
            rep = represent_prime(p)
            assert rep.x >= 0 and rep.y > 0
    for bad in (2, 5, 11, 25):
        with pytest.raises(FormConditionError):
            represent_prime(bad)


def test_compose_reps():
    r = compose_reps(represent_prime(7), represent_prime(13))
    assert r.q == 91 and r.x ** 2 + 3 * r.y ** 2 == 91
    with pytest.raises(ValueError):
        FormRep(1, 1, 5)


def test_good_squarefree_against_brute_force():
    for q in range(2, 201):
        if not is_squarefree(q):
            continue
        brute = any(a * a + 3 * b * b == q for b in range(1, isqrt(q // 3) + 1) for a in range(isqrt(q) + 1))
        assert good_squarefree(q) == brute, q


def test_represent_q_up_to_2000():
    for q in range(2, 2001):
        if not is_squarefree(q) or not good_squarefree(q):
            continue
        rep = represent_q(q)
        assert rep.x ** 2 + 3 * rep.y ** 2 == q and rep.y != 0


def test_represent_q_refuses():
    with pytest.raises(FormConditionError):
        represent_q(35)
    with pytest.raises(NotSquarefree):
        represent_q(12)


def test_bad_prime_citation():
    assert bad_prime(10) == 5
    assert bad_prime(2) == 2
    assert bad_prime(6) == 2
    assert bad_prime(77) == 11
    assert bad_prime(21) is None


def test_three_squares():
    assert three_square_obstruction(7) == (7, 0, 0)
    assert three_square_obstruction(28) == (28, 1, 0)
    assert three_square_obstruction(Fraction(7, 4)) == (28, 1, 0)
    assert three_square_obstruction(15) == (15, 0, 1)
    assert not three_square_admissible(Fraction(1, 7))
    for x in (1, 2, 3, 6, 50, 29, Fraction(5, 2)):
        assert three_square_admissible(x)
    with pytest.raises(ValueError):
        three_square_obstruction(0)


def _random_odd_prime(rng, limit):
    while True:
        p = rng.randrange(3, limit + 1, 2)
        if is_probable_prime(p):
            return p


def test_sqrt_mod_random_large_primes(rng):
    for _ in range(500):
        p = _random_odd_prime(rng, 10 ** 6)
        a = pow(rng.randrange(1, p), 2, p)
        r = sqrt_mod(a, p)
        assert r * r % p == a and 0 < r <= p // 2, (a, p)
        assert legendre(a, p) == 1


def test_compose_reps_random(rng):
    primes = [p for p in _small_primes(3000) if p == 3 or p % 6 == 1]
    for _ in range(200):
        k = rng.randint(2, 4)
        ps = rng.sample(primes, k)
        rep = represent_prime(ps[0])
        for p in ps[1:]:
            rep = compose_reps(rep, represent_prime(p))
        q = 1
        for p in ps:
            q *= p
        assert rep.q == q and rep.x ** 2 + 3 * rep.y ** 2 == q


def test_three_square_admissible_ignores_rational_squares(rng):
    for i in range(500):
        if i % 3 == 0:
            # 4^l (8k+7) over an odd square
            x = Fraction(4 ** rng.randint(0, 3) * (8 * rng.randint(0, 50) + 7), rng.randrange(1, 30, 2) ** 2)
            assert not three_square_admissible(x)
        else:
            x = Fraction(rng.randint(1, 10 ** 4), rng.randint(1, 10 ** 3))
        s = Fraction(rng.randint(1, 200), rng.randint(1, 200))
        assert three_square_admissible(x * s * s) == three_square_admissible(x), (x, s)
