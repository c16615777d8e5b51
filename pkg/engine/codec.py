# engine/codec.py
from __future__ import annotations
from fractions import Fraction
from typing import Any, Dict
import json

from exactnum import format_rat, parse_rat
from theta import parse_theta
from engine.certificate import GOOD, NOT_GOOD, UNKNOWN, SCHEMA_VERSION, Certificate


class CertificateFormatError(ValueError):
    pass


def _rat_or_none(x):
    return None if x is None else format_rat(x)


def to_dict(c: Certificate) -> Dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "theta": str(c.theta),
        "verdict": c.verdict,
        "reason": c.reason,
        "distances": None if c.distances is None else [format_rat(d) for d in c.distances],
        "rep": None if c.rep is None else list(c.rep),
        "e": _rat_or_none(c.e),
        "r": _rat_or_none(c.r),
        "s": _rat_or_none(c.s),
        "prime": c.prime,
        "triangle": None if c.triangle is None else list(c.triangle),
        "lambda": _rat_or_none(c.lam),
        "sign": c.sign,
        "bound": c.bound,
        "heronian_only": c.heronian_only,
        "failed_filters": list(c.failed_filters),
        "notes": list(c.notes),
    }


def to_json(c: Certificate) -> str:
    """Canonical JSON: sorted keys, fixed separators, so equal certificates are equal bytes."""
    return json.dumps(to_dict(c), sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def _int_or_none(v, key):
    if v is None:
        return None
    if not isinstance(v, int) or isinstance(v, bool):
        raise CertificateFormatError(f"{key} must be an integer")
    return v


def _bool_flag(v, key):
    if not isinstance(v, bool):
        raise CertificateFormatError(f"{key} must be true or false")
    return v


def from_dict(obj: Dict[str, Any]) -> Certificate:
    if not isinstance(obj, dict):
        raise CertificateFormatError("certificate must be a JSON object")
    if obj.get("schema_version") != SCHEMA_VERSION:
        raise CertificateFormatError(f"unsupported schema_version {obj.get('schema_version')!r}")
    try:
        theta = parse_theta(obj["theta"])
        if str(theta) != obj["theta"]:
            raise CertificateFormatError(f"theta {obj['theta']!r} is not in canonical form")
        verdict = obj["verdict"]
        if verdict not in (GOOD, NOT_GOOD, UNKNOWN):
            raise CertificateFormatError(f"bad verdict {verdict!r}")

        def rat(key):
            v = obj.get(key)
            return None if v is None else parse_rat(v)

        def int_list(key, n):
            v = obj.get(key)
            if v is None:
                return None
            if not isinstance(v, list) or len(v) != n:
                raise CertificateFormatError(f"{key} must be a list of {n} integers")
            return tuple(_int_or_none(x, key) for x in v)

        ds = obj.get("distances")
        if ds is not None:
            if not isinstance(ds, list) or len(ds) != 3:
                raise CertificateFormatError("distances must be a list of three rationals")
            ds = tuple(parse_rat(d) for d in ds)
        return Certificate(
            theta=theta, verdict=verdict, reason=obj.get("reason"), distances=ds,
            rep=int_list("rep", 2), e=rat("e"), r=rat("r"), s=rat("s"),
            prime=_int_or_none(obj.get("prime"), "prime"),
            triangle=int_list("triangle", 3), lam=rat("lambda"),
            sign=_int_or_none(obj.get("sign"), "sign"),
            bound=_int_or_none(obj.get("bound"), "bound"),
            heronian_only=_bool_flag(obj.get("heronian_only", False), "heronian_only"),
            failed_filters=tuple(obj.get("failed_filters") or ()),
            notes=tuple(obj.get("notes") or ()),
        )
    except CertificateFormatError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise CertificateFormatError(f"malformed certificate: {e}") from e


def from_json(text: str) -> Certificate:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise CertificateFormatError(f"not JSON: {e}") from e
    return from_dict(obj)
