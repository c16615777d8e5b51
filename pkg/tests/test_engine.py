from fractions import Fraction
from math import gcd

import pytest
from mpmath import mpf

from exactnum import QuadExt, is_rational_square, is_squarefree
from numtheory import FormRep, good_squarefree, represent_q
from theta import Biquadratic, NonBiquadratic, QuadSurd, RationalSide, parse_theta, rescale
from triangles import enumerate_primitive
from engine import (
    GOOD, NOT_GOOD, UNKNOWN, R_BETA, R_EX3, R_EX6, R_THEOREM0, R_THEOREM1,
    WitnessError, biquadratic_filters, classify, construction_scalars, fundamental_relation_holds,
    kappa_target, lemma2_witness, lemma2_witnesses, lemma4_candidates, lemma4_point,
    match_triangle, placement_residual, theta_from_distances, triangle_inequality_filter,
    verify_certificate, vertex_witness,
)

T345 = Biquadratic(25, 1, 432)
T234 = Biquadratic(Fraction(29, 2), 1, Fraction(405, 4))


# ---- fundamental relation ----

def test_relation_on_known_points():
    assert fundamental_relation_holds(2, 1, 1, QuadExt(3))
    assert fundamental_relation_holds(2, 1, 3, QuadExt(7))
    assert fundamental_relation_holds(3, 4, 5, T345.theta_sq())
    assert fundamental_relation_holds(3, 4, 5, Biquadratic(25, -1, 432).theta_sq())
    assert not fundamental_relation_holds(2, 1, 4, QuadExt(7))


def test_theta_from_distances():
    plus, minus = theta_from_distances(3, 4, 5)
    assert plus == T345.theta_sq()
    assert minus == QuadExt(25, -12, 3)
    plus, _ = theta_from_distances(2, 3, 4)
    assert plus == T234.theta_sq()
    with pytest.raises(ValueError):
        theta_from_distances(1, 1, 5)


def test_triangle_inequality_filter():
    assert triangle_inequality_filter(2, 1, 3, QuadExt(7))
    assert triangle_inequality_filter(3, 4, 5, QuadExt(25, -12, 3))
    assert not triangle_inequality_filter(1, 1, 10, QuadExt(3))
    assert not triangle_inequality_filter(1, 1, 1, QuadExt(100))


# ---- degree 1 and 2 ----

def test_vertex_witness():
    pt, ds = vertex_witness(Fraction(5, 2))
    assert ds == (0, Fraction(5, 2), Fraction(5, 2))
    c = classify(RationalSide(Fraction(5, 2)), 10)
    assert c.verdict == GOOD and c.distances == ds
    assert verify_certificate(c)


def test_sqrt7_witness():
    rep = represent_q(7)
    assert rep.as_pair() == (2, 1)
    assert construction_scalars(rep) == (Fraction(-7, 4), Fraction(1, 2), Fraction(3, 2))
    pt, ds = lemma2_witness(Fraction(1), 7, rep)
    assert ds == (2, 1, 3)
    assert placement_residual(*ds, QuadExt(7), pt) < mpf(10) ** -40


def test_sqrt3_witness_point():
    pt, ds = lemma2_witness(Fraction(1), 3, FormRep(0, 1, 3))
    assert ds == (2, 1, 1)
    assert pt.rho_x == 0 and pt.rho_y == Fraction(-1, 6)
    assert pt.describe() == "x = 0*sqrt(3), y = -1/6*sqrt(9)"


def test_construction_rejects_b_zero():
    with pytest.raises(WitnessError):
        construction_scalars(FormRep(1, 0, 1))


def test_construction_equations_up_to_2000():
    for q in range(2, 2001):
        if not is_squarefree(q) or not good_squarefree(q):
            continue
        rep = represent_q(q)
        a, b = rep.x, rep.y
        e, r, s = construction_scalars(rep)
        assert a * a + 3 * b * b == q
        assert (a + e) ** 2 + 3 * (b + e) ** 2 == q * r * r
        assert (a - e) ** 2 + 3 * (b + e) ** 2 == q * s * s


@pytest.mark.slow
def test_degree2_witness_soundness_up_to_2000():
    for q in range(2, 2001):
        if not is_squarefree(q) or not good_squarefree(q):
            continue
        for pt, ds in lemma2_witnesses(Fraction(1), q, represent_q(q)):
            assert fundamental_relation_holds(*ds, QuadExt(q)), q
            assert triangle_inequality_filter(*ds, QuadExt(q)), q


def test_sign_variants_all_satisfy_relation():
    pts = lemma2_witnesses(Fraction(3, 2), 91, represent_q(91))
    assert 1 < len(pts) <= 4
    for _, ds in pts:
        assert fundamental_relation_holds(*ds, QuadExt(Fraction(9, 4) * 91))


# ---- classify ----

@pytest.mark.parametrize("text,verdict,reason", [
    ("sqrt(3)", GOOD, None),
    ("sqrt(7)", GOOD, None),
    ("sqrt(2)", NOT_GOOD, R_THEOREM1),
    ("sqrt(10)", NOT_GOOD, R_THEOREM1),
    ("2*sqrt(21)", GOOD, None),
    ("sqrt(25+12*sqrt(3))", GOOD, None),
    ("sqrt(25-12*sqrt(3))", GOOD, None),
    ("sqrt(1+sqrt(2))", NOT_GOOD, R_EX3),
    ("1 + qroot(2)", NOT_GOOD, R_THEOREM0),
    ("sqrt(-3+sqrt(20))", NOT_GOOD, R_THEOREM0),
    ("sqrt(7/2+sqrt(13/4))", NOT_GOOD, R_EX6),
])
def test_classify_examples(text, verdict, reason):
    c = classify(parse_theta(text), 60)
    assert c.verdict == verdict
    assert c.reason == reason
    assert verify_certificate(c), verify_certificate(c).reason


def test_classify_sqrt7_certificate():
    c = classify(parse_theta("sqrt(7)"), 10)
    assert c.distances == (2, 1, 3)
    assert c.rep == (2, 1) and c.e == Fraction(-7, 4)


def test_classify_sqrt10_cites_5():
    c = classify(parse_theta("sqrt(10)"), 10)
    assert c.prime == 5 and c.failed_filters == (R_THEOREM1,)


def test_classify_345():
    c = classify(T345, 20)
    assert c.triangle == (3, 4, 5) and c.lam == 1 and c.sign == 1
    assert c.distances == (3, 4, 5)


def test_irrational_area_triangle_is_good():
    c = classify(T234, 10)
    assert c.verdict == GOOD and c.triangle == (2, 3, 4) and c.lam == 1
    assert any(R_BETA in n for n in c.notes)
    assert verify_certificate(c)


def test_beta_filter_only_decides_in_heronian_mode():
    t = parse_theta("sqrt(4+sqrt(2))")
    c = classify(t, 40)
    assert c.verdict == UNKNOWN and c.bound == 40
    assert verify_certificate(c)
    h = classify(t, 40, heronian_only=True)
    assert h.verdict == NOT_GOOD and h.reason == R_BETA
    assert verify_certificate(h)
    assert classify(T234, 10, heronian_only=True).reason == R_BETA


def test_filter_order_in_heronian_mode():
    t = Biquadratic(1, 1, 2)
    fired, beta3 = biquadratic_filters(t)
    assert fired == [R_EX3] and not beta3
    c = classify(t, 10, heronian_only=True)
    assert c.failed_filters == (R_BETA, R_EX3) and c.reason == R_BETA


def test_exercise6_filter():
    t = Biquadratic(Fraction(7, 2), 1, Fraction(13, 4))
    fired, _ = biquadratic_filters(t)
    assert fired == [R_EX6]


def test_kappa_target_and_match():
    assert kappa_target(T345) == Fraction(625, 9)
    tri, lam = match_triangle(rescale(T345, Fraction(1, 3)), 10)
    assert tri.sides == (3, 4, 5) and lam == 3
    assert match_triangle(T345, 4) is None


def test_non_biquadratic_never_good():
    c = classify(NonBiquadratic("quartic-form", 1, 1, 2), 10)
    assert c.verdict == NOT_GOOD and c.reason == R_THEOREM0


def test_bound_must_be_positive():
    with pytest.raises(ValueError):
        classify(T345, 0)


@pytest.mark.parametrize("text", ["sqrt(7)", "sqrt(10)", "sqrt(25+12*sqrt(3))", "sqrt(1+sqrt(2))",
                                  "1 + qroot(2)", "5"])
def test_rescale_invariance(text):
    t = parse_theta(text)
    base = classify(t, 30)
    for lam in (Fraction(1, 2), 3, Fraction(5, 7)):
        c = classify(rescale(t, lam), 30)
        assert c.verdict == base.verdict and c.reason == base.reason
        if c.verdict == GOOD:
            assert verify_certificate(c)


def test_quadratic_soundness_up_to_300():
    for q in range(2, 301):
        if not is_squarefree(q):
            continue
        c = classify(QuadSurd(1, q), 10)
        assert c.verdict == (GOOD if good_squarefree(q) else NOT_GOOD)
        assert verify_certificate(c), (q, verify_certificate(c).reason)


@pytest.mark.slow
def test_every_triangle_gives_good_theta_both_signs():
    for tri in enumerate_primitive(40):
        if not tri.radical_is_irrational:
            continue
        for sign in (1, -1):
            t = Biquadratic(Fraction(tri.s1, 2), sign, Fraction(3 * tri.sixteen_delta_sq, 4))
            c = classify(t, tri.c)
            assert c.verdict == GOOD, (tri.sides, sign)
            assert verify_certificate(c), (tri.sides, sign)


# ---- degree-4 placement ----

def test_lemma4_point_exact_case():
    pt = lemma4_point(2, 1, 1, QuadExt(3))
    assert pt.exact and pt.rho_x == 0 and pt.rho_y == Fraction(-1, 6)


def test_lemma4_point_numeric_residual():
    for t in (T345, Biquadratic(25, -1, 432), T234):
        c = classify(t, 10)
        pt = lemma4_point(*c.distances, t.theta_sq(), precision=30)
        assert not pt.exact
        assert placement_residual(*c.distances, t.theta_sq(), pt, precision=30) <= mpf(10) ** -30


def test_lemma4_candidates_two_placements():
    cands = lemma4_candidates(3, 4, 5, T345.theta_sq(), precision=20)
    assert len(cands) == 2
    assert any(c.dist_a.startswith("3.0") or c.dist_a == "3.0" for c in cands)
    ex = lemma4_candidates(2, 1, 1, QuadExt(3))
    assert sorted(c.dist_a for c in ex) == ["1", "2"]


def test_lemma4_point_rejects_bad_triples():
    with pytest.raises(WitnessError, match="fundamental relation failed"):
        lemma4_point(3, 4, 6, T345.theta_sq())
    with pytest.raises(WitnessError):
        lemma4_point(-3, 4, 5, T345.theta_sq())


# ---- verification of tampered certificates ----

def test_tampered_distances_fail():
    c = classify(parse_theta("sqrt(7)"), 10).with_distances((2, 1, 4))
    res = verify_certificate(c)
    assert not res and res.reason == "fundamental relation failed"


def test_tampered_prime_fails():
    from dataclasses import replace
    c = classify(parse_theta("sqrt(10)"), 10)
    assert not verify_certificate(replace(c, prime=3))
    assert not verify_certificate(replace(c, prime=7))


def test_unknown_with_witness_in_range_fails():
    from dataclasses import replace
    c = classify(T345, 10)
    fake = replace(c, verdict=UNKNOWN, distances=None, triangle=None, lam=None, sign=None, bound=10)
    assert not verify_certificate(fake)


def test_tampered_triangle_fails():
    from dataclasses import replace
    c = classify(T345, 10)
    assert not verify_certificate(replace(c, triangle=(2, 3, 4)))
    assert not verify_certificate(replace(c, lam=Fraction(2)))


def test_beta_not_good_needs_heronian_flag():
    from dataclasses import replace
    from engine import Certificate
    assert verify_certificate(classify(T234, 10))
    forged = Certificate(theta=T234, verdict=NOT_GOOD, reason=R_BETA, failed_filters=(R_BETA,))
    res = verify_certificate(forged)
    assert not res and "heronian-only" in res.reason
    assert verify_certificate(replace(forged, heronian_only=True))


def test_distance_checks_run_before_class_checks():
    from dataclasses import replace
    c = classify(parse_theta("sqrt(7)"), 10)
    res = verify_certificate(replace(c, distances=(Fraction(-2), Fraction(1), Fraction(3))))
    assert not res and res.reason == "distances must be positive"
    res = verify_certificate(replace(c, distances=None))
    assert not res and res.reason == "missing distances"


# ---- random families ----

def test_verdict_invariant_under_random_rescaling(rng):
    cases = [T345, T234, parse_theta("sqrt(1+sqrt(2))"), parse_theta("sqrt(4+sqrt(2))"),
             parse_theta("sqrt(7/2+sqrt(13/4))")]
    base = {t: classify(t, 20) for t in cases}
    for _ in range(100):
        lam = Fraction(rng.randint(1, 60), rng.randint(1, 60))
        for t in cases:
            c = classify(rescale(t, lam), 20)
            assert (c.verdict, c.reason) == (base[t].verdict, base[t].reason), (t, lam)


def test_alpha_squared_below_beta_never_good(rng):
    seen = 0
    while seen < 100:
        alpha = Fraction(rng.randint(1, 60), rng.randint(1, 9))
        beta = alpha * alpha + Fraction(rng.randint(1, 400), rng.randint(1, 9))
        if is_rational_square(beta) is not None:
            continue
        seen += 1
        c = classify(Biquadratic(alpha, 1, beta), 20)
        assert c.verdict == NOT_GOOD and R_EX3 in c.failed_filters
        assert verify_certificate(c)


def test_quartic_forms_never_good(rng):
    qs = [q for q in range(2, 500) if is_squarefree(q)]
    for _ in range(50):
        b = rng.randint(1, 20)
        a = rng.choice([x for x in range(1 - b, 31) if x != 0])
        c = classify(parse_theta(f"{a} + {b}*qroot({rng.choice(qs)})"), 10)
        assert c.verdict == NOT_GOOD and c.reason == R_THEOREM0
        assert verify_certificate(c)


def test_three_square_obstructed_alpha_never_good(rng):
    seen = 0
    while seen < 20:
        m, n = rng.randrange(1, 400, 2), rng.randrange(1, 40, 2)
        beta = Fraction(rng.randint(1, 200), rng.randint(1, 9))
        if (m * n) % 8 != 7 or gcd(m, n) != 1 or is_rational_square(beta) is not None:
            continue
        seen += 1
        c = classify(Biquadratic(Fraction(m, 2 * n), 1, beta), 20)
        assert c.verdict == NOT_GOOD and R_EX6 in c.failed_filters
        assert verify_certificate(c)


def test_witness_triples_satisfy_triangle_inequality(rng):
    qs = [q for q in range(2, 2001) if is_squarefree(q) and good_squarefree(q)]
    tris = [t for t in enumerate_primitive(40) if t.radical_is_irrational]
    for _ in range(1000):
        lam = Fraction(rng.randint(1, 40), rng.randint(1, 40))
        if rng.random() < 0.5:
            q = rng.choice(qs)
            _, ds = rng.choice(lemma2_witnesses(lam, q, represent_q(q)))
            theta_sq = QuadExt(lam * lam * q)
        else:
            tri = rng.choice(tris)
            ds = tuple(Fraction(x) / lam for x in tri.sides)
            rad = QuadExt.sqrt_of(3 * tri.sixteen_delta_sq)
            theta_sq = (QuadExt(tri.s1) + rng.choice((1, -1)) * rad) * (1 / (2 * lam * lam))
        ds = list(ds)
        rng.shuffle(ds)
        assert fundamental_relation_holds(*ds, theta_sq)
        assert triangle_inequality_filter(*ds, theta_sq), (ds, theta_sq)


# ---- degree-4 residuals ----

def test_lemma4_point_large_coordinates_keep_absolute_bound():
    lam = 10 ** 6
    t = rescale(T345, lam)
    ds = (Fraction(3 * lam), Fraction(4 * lam), Fraction(5 * lam))
    pt = lemma4_point(*ds, t.theta_sq(), precision=30)
    assert max(abs(mpf(pt.x)), abs(mpf(pt.y))) > 10 ** 5
    assert placement_residual(*ds, t.theta_sq(), pt, precision=30) <= mpf(10) ** -30


@pytest.mark.slow
def test_degree4_residuals_for_every_small_triangle():
    for tri in enumerate_primitive(40):
        if not tri.radical_is_irrational:
            continue
        for sign in (1, -1):
            t = Biquadratic(Fraction(tri.s1, 2), sign, Fraction(3 * tri.sixteen_delta_sq, 4))
            c = classify(t, tri.c)
            pt = lemma4_point(*c.distances, t.theta_sq(), precision=50)
            assert placement_residual(*c.distances, t.theta_sq(), pt, precision=50) <= mpf(10) ** -30, tri.sides
