from fractions import Fraction

import pytest

from exactnum import QuadExt
from theta import (
    ALPHA_NONPOSITIVE, QUARTIC_FORM, Biquadratic, NestingTooDeep, NonBiquadratic,
    NonPositiveTheta, QuadSurd, RationalSide, ThetaParseError, parse_theta, rescale,
)


@pytest.mark.parametrize("text,expected", [
    ("3/2", RationalSide(Fraction(3, 2))),
    ("sqrt(9/4)", RationalSide(Fraction(3, 2))),
    ("sqrt(7)", QuadSurd(1, 7)),
    ("sqrt(28)", QuadSurd(2, 7)),
    ("2*sqrt(7)", QuadSurd(2, 7)),
    ("1/2 * sqrt(12)", QuadSurd(1, 3)),
    ("sqrt(1/3)", QuadSurd(Fraction(1, 3), 3)),
    ("sqrt(25+12*sqrt(3))", Biquadratic(25, 1, 432)),
    ("sqrt(25 - sqrt(432))", Biquadratic(25, -1, 432)),
    ("2*sqrt(1+sqrt(2))", Biquadratic(4, 1, 32)),
    ("1 + sqrt(2)", Biquadratic(3, 1, 8)),
    ("sqrt(4+sqrt(2))", Biquadratic(4, 1, 2)),
    ("qroot(16)", RationalSide(2)),
    ("qroot(4)", QuadSurd(1, 2)),
    ("2 + sqrt(9)", RationalSide(5)),
])
def test_parse_canonical_classes(text, expected):
    assert parse_theta(text) == expected


@pytest.mark.parametrize("text,reason", [
    ("1 + qroot(2)", QUARTIC_FORM),
    ("3 - qroot(5)", QUARTIC_FORM),
    ("1/2 + 2*qroot(3)", QUARTIC_FORM),
    ("-1 + qroot(7)", QUARTIC_FORM),
    ("sqrt(sqrt(5))", ALPHA_NONPOSITIVE),
    ("qroot(5)", ALPHA_NONPOSITIVE),
    ("sqrt(-3+sqrt(20))", ALPHA_NONPOSITIVE),
])
def test_parse_non_biquadratic(text, reason):
    t = parse_theta(text)
    assert isinstance(t, NonBiquadratic) and t.reason == reason
    assert t.degree == 4


def test_canonical_strings():
    assert str(QuadSurd(1, 7)) == "sqrt(7)"
    assert str(QuadSurd(Fraction(2, 3), 7)) == "2/3*sqrt(7)"
    assert str(Biquadratic(25, 1, 432)) == "sqrt(25 + sqrt(432))"
    assert str(Biquadratic(Fraction(7, 2), -1, Fraction(13, 4))) == "sqrt(7/2 - sqrt(13/4))"
    assert str(parse_theta("1+qroot(2)")) == "1 + qroot(2)"
    assert str(parse_theta("qroot(5)")) == "sqrt(sqrt(5))"


@pytest.mark.parametrize("text", [
    "5", "sqrt(7)", "3/2*sqrt(10)", "sqrt(25 + sqrt(432))", "sqrt(7/2 - sqrt(13/4))",
    "1 + qroot(2)", "3 - 2*qroot(5)", "sqrt(sqrt(5))", "sqrt(-3 + sqrt(20))",
])
def test_canonical_string_reparses_to_itself(text):
    t = parse_theta(text)
    assert str(t) == text
    assert parse_theta(str(t)) == t


@pytest.mark.parametrize("text,position", [
    ("sqrt(x)", 5),
    ("foo", 0),
    ("sqrt(7", 6),
    ("sqrt(7) + 1", 8),
    ("1/0", 2),
    ("sqrt(2.5)", 6),
])
def test_parse_errors_carry_position(text, position):
    with pytest.raises(ThetaParseError) as ei:
        parse_theta(text)
    assert ei.value.position == position


def test_nesting_too_deep():
    with pytest.raises(NestingTooDeep) as ei:
        parse_theta("sqrt(sqrt(sqrt(2)))")
    assert ei.value.position == 10
    with pytest.raises(NestingTooDeep):
        parse_theta("sqrt(1 + qroot(2))")


@pytest.mark.parametrize("text", ["0", "-3", "2 - sqrt(7)", "sqrt(-3)", "sqrt(1 - sqrt(2))", "-2*sqrt(3)"])
def test_nonpositive(text):
    with pytest.raises((NonPositiveTheta, ThetaParseError)):
        parse_theta(text)


def test_theta_sq():
    assert RationalSide(3).theta_sq() == QuadExt(9)
    assert QuadSurd(2, 7).theta_sq() == QuadExt(28)
    assert Biquadratic(25, -1, 432).theta_sq() == QuadExt(25, -12, 3)
    assert parse_theta("1 + qroot(2)").theta_sq() is None


def test_biquadratic_validation():
    with pytest.raises(ValueError):
        Biquadratic(25, 1, 4)          # rational radical
    with pytest.raises(NonPositiveTheta):
        Biquadratic(1, -1, 2)          # 1 - sqrt(2) < 0
    with pytest.raises(ValueError):
        QuadSurd(1, 8)


def test_rescale_keeps_variant():
    cases = [RationalSide(3), QuadSurd(1, 7), Biquadratic(25, 1, 432),
             parse_theta("1 + qroot(2)"), parse_theta("sqrt(-3+sqrt(20))")]
    for t in cases:
        for lam in (Fraction(1, 2), 3):
            r = rescale(t, lam)
            assert type(r) is type(t)
            if t.theta_sq() is not None:
                assert r.theta_sq() == lam * lam * t.theta_sq()
    assert rescale(QuadSurd(1, 7), 3) == QuadSurd(3, 7)
    assert rescale(Biquadratic(25, 1, 432), 2) == Biquadratic(100, 1, 6912)
    assert str(rescale(parse_theta("1 + qroot(2)"), 2)) == "2 + 2*qroot(2)"
    with pytest.raises(ValueError):
        rescale(QuadSurd(1, 7), 0)


def test_biquadratic_rejects_nonpositive_alpha():
    with pytest.raises(ValueError, match="alpha"):
        Biquadratic(-3, 1, 20)
    with pytest.raises(ValueError, match="alpha"):
        Biquadratic(0, 1, 2)
    t = parse_theta(str(NonBiquadratic(ALPHA_NONPOSITIVE, -3, 20)))
    assert isinstance(t, NonBiquadratic) and t.reason == ALPHA_NONPOSITIVE


def test_rescale_composes(rng):
    cases = [RationalSide(Fraction(3, 2)), QuadSurd(2, 7), Biquadratic(25, 1, 432),
             Biquadratic(Fraction(7, 2), -1, Fraction(13, 4)),
             parse_theta("3 - 2*qroot(5)"), parse_theta("sqrt(-3+sqrt(20))")]
    for _ in range(100):
        lam = Fraction(rng.randint(1, 30), rng.randint(1, 30))
        mu = Fraction(rng.randint(1, 30), rng.randint(1, 30))
        for t in cases:
            assert rescale(rescale(t, lam), mu) == rescale(t, lam * mu)
