# reports/atlas.py
from __future__ import annotations
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, TextIO
import csv, json, logging

from exactnum import format_rat
from triangles import enumerate_primitive, kappa

log = logging.getLogger(__name__)

FIELDS = ["a", "b", "c", "s1", "sixteen_delta_sq", "alpha", "beta", "kappa"]


@dataclass(frozen=True)
class AtlasRecord:
    """theta² = alpha ± sqrt(beta), i.e. 2theta² = s1 ± 4*area*sqrt(3)."""
    a: int
    b: int
    c: int
    s1: int
    sixteen_delta_sq: int
    alpha: Fraction
    beta: Fraction
    kappa: Fraction

    def as_row(self) -> Dict[str, object]:
        return {"a": self.a, "b": self.b, "c": self.c, "s1": self.s1,
                "sixteen_delta_sq": self.sixteen_delta_sq,
                "alpha": format_rat(self.alpha), "beta": format_rat(self.beta),
                "kappa": format_rat(self.kappa)}

    def theta_exprs(self) -> tuple[str, str]:
        al, be = format_rat(self.alpha), format_rat(self.beta)
        return f"sqrt({al} + sqrt({be}))", f"sqrt({al} - sqrt({be}))"


def atlas_records(max_side: int, min_side: int = 1) -> Iterator[AtlasRecord]:
    """Primitive triangles with irrational 4*area*sqrt(3), c in [min_side, max_side]."""
    if max_side < 1:
        raise ValueError(f"max_side must be >= 1, got {max_side}")
    for t in enumerate_primitive(max_side, min_side):
        if not t.radical_is_irrational:
            continue
        yield AtlasRecord(a=t.a, b=t.b, c=t.c, s1=t.s1, sixteen_delta_sq=t.sixteen_delta_sq,
                          alpha=Fraction(t.s1, 2), beta=Fraction(3 * t.sixteen_delta_sq, 4),
                          kappa=kappa(t))


def write_jsonl(records: Iterable[AtlasRecord], out: TextIO) -> int:
    n = 0
    for r in records:
        out.write(json.dumps(r.as_row(), separators=(",", ":")) + "\n")
        n += 1
    return n


def write_csv(records: Iterable[AtlasRecord], out: TextIO) -> int:
    w = csv.DictWriter(out, fieldnames=FIELDS, lineterminator="\n")
    w.writeheader()
    n = 0
    for r in records:
        w.writerow(r.as_row())
        n += 1
    return n


WRITERS = {"jsonl": write_jsonl, "csv": write_csv}


def write_atlas(max_side: int, fmt: str, out: TextIO, min_side: int = 1) -> int:
    if fmt not in WRITERS:
        raise ValueError(f"unknown atlas format {fmt!r} (use jsonl or csv)")
    n = WRITERS[fmt](atlas_records(max_side, min_side), out)
    log.info("atlas: %d record(s), sides %d..%d, %s", n, min_side, max_side, fmt)
    return n
