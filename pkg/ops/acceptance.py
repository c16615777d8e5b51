# ops/acceptance.py
"""
The six worked exercises, each item checked as PASS/FAIL.
"""
from __future__ import annotations

from dataclasses import dataclass, asdict
from fractions import Fraction
from typing import Any, Callable, Dict, List
import logging

from engine import (
    GOOD, NOT_GOOD, R_EX3, R_EX6, R_THEOREM0, R_THEOREM1,
    classify, fundamental_relation_holds, lemma2_witnesses, verify_certificate,
)
from exactnum import QuadExt
from numtheory import represent_q
from theta import Biquadratic, parse_theta

log = logging.getLogger(__name__)

# ---- Config ----

EXERCISE1 = ["sqrt(2)", "sqrt(3)", "sqrt(5)", "sqrt(6)", "sqrt(7)", "sqrt(10)"]
EXERCISE1_GOOD = {"sqrt(3)", "sqrt(7)"}
EXERCISE5 = ["1 + qroot(2)", "3 - qroot(5)", "1/2 + 2*qroot(3)", "-1 + qroot(7)"]


@dataclass
class Item:
    exercise: int
    item: str
    expected: str
    got: str
    ok: bool


# ---- Helpers ----

def _run(exercise: int, item: str, expected: str, fn: Callable[[], str]) -> Item:
    try:
        got = fn()
    except Exception as e:   # a crash is a FAIL, not an abort
        got = f"error: {e}"
    return Item(exercise, item, expected, got, got == expected)


def _verdict_and_reason(expr: str, bound: int) -> str:
    c = classify(parse_theta(expr), bound)
    return f"{c.verdict}/{c.reason}" if c.reason else c.verdict


# ---- Exercises ----

def exercise1(bound: int) -> List[Item]:
    out = []
    for expr in EXERCISE1:
        exp = GOOD if expr in EXERCISE1_GOOD else f"{NOT_GOOD}/{R_THEOREM1}"
        out.append(_run(1, expr, exp, lambda e=expr: _verdict_and_reason(e, bound)))
    return out


def exercise2(bound: int) -> List[Item]:
    def fn() -> str:
        c = classify(parse_theta("sqrt(25+12*sqrt(3))"), bound)
        v = verify_certificate(c)
        return f"{c.verdict} {c.triangle} lambda={c.lam} verified={bool(v)}"
    return [_run(2, "sqrt(25+12*sqrt(3))", "Good (3, 4, 5) lambda=1 verified=True", fn)]


def exercise3(bound: int) -> List[Item]:
    # 2theta² = 2 + sqrt(8): alpha² = 1 < 2 = beta
    t = Biquadratic(Fraction(1), 1, Fraction(2))
    return [_run(3, str(t), f"{NOT_GOOD}/{R_EX3}", lambda: _verdict_and_reason(str(t), bound))]


def exercise4(bound: int) -> List[Item]:
    def fn() -> str:
        pts = lemma2_witnesses(Fraction(1), 3, represent_q(3))
        ok = all(fundamental_relation_holds(*ds, QuadExt(3)) for _, ds in pts)
        first = sorted(pts[0][1], reverse=True)
        return f"{tuple(int(d) for d in first)} relation={ok}"
    return [_run(4, "witness sqrt(3)", "(2, 1, 1) relation=True", fn)]


def exercise5(bound: int) -> List[Item]:
    return [_run(5, expr, f"{NOT_GOOD}/{R_THEOREM0}", lambda e=expr: _verdict_and_reason(e, bound))
            for expr in EXERCISE5]


def exercise6(bound: int) -> List[Item]:
    # 2theta² = 7 + sqrt(13)
    def fn() -> str:
        c = classify(Biquadratic(Fraction(7, 2), 1, Fraction(13, 4)), bound)
        return f"{c.verdict} ex6={R_EX6 in c.failed_filters}"
    return [_run(6, "2theta^2 = 7 + sqrt(13)", f"{NOT_GOOD} ex6=True", fn)]


EXERCISES = [exercise1, exercise2, exercise3, exercise4, exercise5, exercise6]


# ---- Public API ----

def run_exercises(bound: int = 500) -> Dict[str, Any]:
    items: List[Item] = []
    for ex in EXERCISES:
        items.extend(ex(bound))
    checks = {f"exercise{n}": all(i.ok for i in items if i.exercise == n) for n in range(1, 7)}
    ok = all(checks.values())
    log.info("exercises: %d/%d items pass", sum(i.ok for i in items), len(items))
    return {"ok": ok, "checks": checks, "items": [asdict(i) for i in items]}
