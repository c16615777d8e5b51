# theta/parser.py
"""
Side-length expressions (ASCII, whitespace insensitive):

    RAT   := ["-"] integer [ "/" integer ]
    EXPR  := RAT
           | [RAT "*"] "sqrt" "(" INNER ")"
           | [RAT "*"] "qroot" "(" RAT ")"
           | RAT ("+"|"-") [RAT "*"] ("qroot"|"sqrt") "(" RAT ")"
    INNER := RAT
           | [RAT ("+"|"-")] [RAT "*"] "sqrt" "(" RAT ")"

Anything deeper than sqrt(... sqrt(RAT)) is refused.
"""
from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple
import logging

from exactnum import QuadExt, is_rational_square, quadext_sign, squarefree_decompose
from numtheory import factorize
from theta.classes import (
    ALPHA_NONPOSITIVE, QUARTIC_FORM,
    Biquadratic, NonBiquadratic, NonPositiveTheta, QuadSurd, RationalSide, ThetaClass,
)

log = logging.getLogger(__name__)

FUNCS = ("sqrt", "qroot")


class ThetaParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class NestingTooDeep(ThetaParseError):
    pass


@dataclass
class _Tok:
    kind: str    # NUM, IDENT, OP, END
    text: str
    pos: int


def _tokenize(text: str) -> List[_Tok]:
    out: List[_Tok] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(_Tok("NUM", text[i:j], i))
            i = j
        elif ch.isalpha():
            j = i
            while j < n and text[j].isalpha():
                j += 1
            word = text[i:j]
            if word not in FUNCS:
                raise ThetaParseError(f"unknown function {word!r}", i)
            out.append(_Tok("IDENT", word, i))
            i = j
        elif ch in "+-*/()":
            out.append(_Tok("OP", ch, i))
            i += 1
        else:
            raise ThetaParseError(f"unexpected character {ch!r}", i)
    out.append(_Tok("END", "", n))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    # ---- token helpers ----
    def peek(self, offset: int = 0) -> _Tok:
        return self.toks[min(self.i + offset, len(self.toks) - 1)]

    def take(self) -> _Tok:
        t = self.peek()
        self.i += 1
        return t

    def expect_op(self, op: str) -> None:
        t = self.take()
        if t.kind != "OP" or t.text != op:
            raise ThetaParseError(f"expected {op!r}, found {t.text or 'end of input'!r}", t.pos)

    def at_op(self, *ops: str) -> bool:
        t = self.peek()
        return t.kind == "OP" and t.text in ops

    def starts_rat(self) -> bool:
        t = self.peek()
        return t.kind == "NUM" or (t.kind == "OP" and t.text == "-" and self.peek(1).kind == "NUM")

    def rat(self) -> Fraction:
        neg = False
        if self.at_op("-"):
            self.take()
            neg = True
        t = self.take()
        if t.kind != "NUM":
            raise ThetaParseError(f"expected a number, found {t.text or 'end of input'!r}", t.pos)
        num = int(t.text)
        den = 1
        if self.at_op("/"):
            self.take()
            d = self.take()
            if d.kind != "NUM":
                raise ThetaParseError("expected a denominator", d.pos)
            den = int(d.text)
            if den == 0:
                raise ThetaParseError("zero denominator", d.pos)
        return Fraction(-num if neg else num, den)

    def func(self) -> _Tok:
        t = self.take()
        if t.kind != "IDENT":
            raise ThetaParseError(f"expected sqrt or qroot, found {t.text or 'end of input'!r}", t.pos)
        return t

    def leaf_arg(self) -> Fraction:
        """'(' RAT ')' as the argument of the innermost radical."""
        self.expect_op("(")
        if self.peek().kind == "IDENT":
            raise NestingTooDeep("unsupported nesting depth", self.peek().pos)
        r = self.rat()
        self.expect_op(")")
        return r

    def optional_coef(self) -> Fraction:
        if self.starts_rat():
            c = self.rat()
            self.expect_op("*")
            return c
        return Fraction(1)

    # ---- grammar ----
    def expr(self) -> ThetaClass:
        if self.peek().kind == "IDENT":
            return self.call(Fraction(1))
        r = self.rat()
        if self.peek().kind == "END":
            return from_rational(r)
        if self.at_op("*"):
            self.take()
            return self.call(r)
        if self.at_op("+", "-"):
            sgn = 1 if self.take().text == "+" else -1
            coef = sgn * self.optional_coef()
            f = self.func()
            arg = self.leaf_arg()
            if f.text == "qroot":
                return from_quartic(r, coef, arg, f.pos)
            return from_linear_surd(r, coef, arg, f.pos)
        t = self.peek()
        raise ThetaParseError(f"unexpected {t.text!r}", t.pos)

    def call(self, lam: Fraction) -> ThetaClass:
        f = self.func()
        if f.text == "qroot":
            return from_quartic(Fraction(0), lam, self.leaf_arg(), f.pos)
        self.expect_op("(")
        A, C, R = self.inner()
        self.expect_op(")")
        return from_scaled_root(lam, A, C, R, f.pos)

    def inner(self) -> Tuple[Fraction, Fraction, Fraction]:
        """INNER as A + C*sqrt(R) (C = 0 for a bare rational)."""
        if self.peek().kind == "IDENT":
            f = self.func()
            if f.text != "sqrt":
                raise NestingTooDeep("qroot inside sqrt is unsupported", f.pos)
            return Fraction(0), Fraction(1), self.leaf_arg()
        A = self.rat()
        if self.at_op("*"):
            self.take()
            f = self.func()
            if f.text != "sqrt":
                raise NestingTooDeep("qroot inside sqrt is unsupported", f.pos)
            return Fraction(0), A, self.leaf_arg()
        if self.at_op("+", "-"):
            sgn = 1 if self.take().text == "+" else -1
            C = sgn * self.optional_coef()
            f = self.func()
            if f.text != "sqrt":
                raise NestingTooDeep("qroot inside sqrt is unsupported", f.pos)
            return A, C, self.leaf_arg()
        return A, Fraction(0), Fraction(0)


def parse_theta(text: str) -> ThetaClass:
    p = _Parser(text)
    out = p.expr()
    t = p.peek()
    if t.kind != "END":
        raise ThetaParseError(f"trailing input {t.text!r}", t.pos)
    log.debug("parse_theta(%r) -> %s", text, out)
    return out


# ---- canonicalization ----

def from_rational(lam: Fraction) -> ThetaClass:
    if lam <= 0:
        raise NonPositiveTheta(f"theta = {lam} is not positive")
    return RationalSide(lam)


def from_scaled_sqrt(lam: Fraction, r: Fraction) -> ThetaClass:
    """lam*sqrt(r), r rational: square factors pulled out (sqrt(12) -> 2*sqrt(3))."""
    if lam <= 0 or r <= 0:
        raise NonPositiveTheta(f"{lam}*sqrt({r}) is not positive")
    s, q = squarefree_decompose(r.numerator * r.denominator)
    coef = lam * Fraction(s, r.denominator)
    if q == 1:
        return RationalSide(coef)
    return QuadSurd(coef, q)


def _radicand_ok(R: Fraction, pos: int) -> None:
    if R < 0:
        raise ThetaParseError("negative radicand (complex values unsupported)", pos)


def from_scaled_root(lam: Fraction, A: Fraction, C: Fraction, R: Fraction, pos: int = 0) -> ThetaClass:
    """lam*sqrt(A + C*sqrt(R)), folded into theta^2 = lam²A ± sqrt(lam⁴C²R)."""
    _radicand_ok(R, pos)
    if lam <= 0:
        raise NonPositiveTheta(f"coefficient {lam} is not positive")
    root = is_rational_square(R)
    if C == 0 or root is not None:
        return from_scaled_sqrt(lam, A + C * (root or 0))
    sign = 1 if C > 0 else -1
    beta0 = C * C * R
    inner = QuadExt(A) + sign * QuadExt.sqrt_of(beta0)
    if quadext_sign(inner) <= 0:
        raise NonPositiveTheta(f"radicand {inner} is not positive")
    alpha, beta = lam * lam * A, lam ** 4 * beta0
    if alpha <= 0:
        return NonBiquadratic(ALPHA_NONPOSITIVE, alpha, beta)
    return Biquadratic(alpha, sign, beta)


def from_linear_surd(A: Fraction, C: Fraction, R: Fraction, pos: int = 0) -> ThetaClass:
    """theta = A + C*sqrt(R)."""
    _radicand_ok(R, pos)
    root = is_rational_square(R)
    if C == 0 or root is not None:
        return from_rational(A + C * (root or 0))
    if A == 0:
        return from_scaled_sqrt(C, R)
    s, m = squarefree_decompose(R.numerator * R.denominator)
    C = C * Fraction(s, R.denominator)
    theta = QuadExt(A, C, m)
    if quadext_sign(theta) <= 0:
        raise NonPositiveTheta(f"theta = {theta} is not positive")
    sq = theta.square()
    return Biquadratic(sq.a, 1 if sq.b > 0 else -1, sq.b * sq.b * m)


def fourth_root_split(R: Fraction) -> Tuple[Fraction, int]:
    """R^(1/4) = t * M^(1/4) with t rational, M a fourth-power-free positive integer."""
    N = R.numerator * R.denominator ** 3
    t, M = 1, 1
    if N > 1:
        for p, e in factorize(N).pairs:
            t *= p ** (e // 4)
            M *= p ** (e % 4)
    return Fraction(t, R.denominator), M


def _quartic_sign(A: Fraction, C: Fraction, M: int) -> int:
    # sign of A + C*M^(1/4), M^(1/4) irrational
    sa, sc = (A > 0) - (A < 0), (C > 0) - (C < 0)
    if sc == 0 or sa == sc:
        return sa or sc
    if sa == 0:
        return sc
    return sa if A ** 4 > C ** 4 * M else sc


def from_quartic(A: Fraction, B: Fraction, R: Fraction, pos: int = 0) -> ThetaClass:
    """theta = A + B*R^(1/4)."""
    _radicand_ok(R, pos)
    if R == 0 or B == 0:
        return from_rational(A)
    t, M = fourth_root_split(R)
    C = B * t
    if M == 1:
        return from_rational(A + C)
    m_root = is_rational_square(M)
    if m_root is not None:
        return from_linear_surd(A, C, m_root)
    if _quartic_sign(A, C, M) <= 0:
        raise NonPositiveTheta(f"{A} + {C}*qroot({M}) is not positive")
    if A == 0:
        return NonBiquadratic(ALPHA_NONPOSITIVE, Fraction(0), C ** 4 * M)
    return NonBiquadratic(QUARTIC_FORM, A, C, M)
