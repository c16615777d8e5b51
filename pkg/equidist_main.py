from __future__ import annotations
import argparse, json, logging, sys
from typing import List, Optional

from engine import (
    GOOD, NOT_GOOD, CertificateFormatError, WitnessError,
    classify, lemma2_witness, lemma2_witnesses, lemma4_candidates, lemma4_point,
    to_dict, to_json, from_json, verify_certificate, vertex_witness,
)
from exactnum import format_rat
from numtheory import FactoringBudgetExceeded, FormRep
from numtheory.config import NT
from ops.acceptance import run_exercises
from reports.atlas import write_atlas
from theta import NonPositiveTheta, ThetaParseError, QuadSurd, Biquadratic, parse_theta
from utils.logging_setup import setup_logging
from utils.settings import apply_settings, load_settings

log = logging.getLogger("equidist")

# exit codes (stable contract)
EXIT_GOOD, EXIT_NOT_GOOD, EXIT_UNKNOWN = 0, 1, 2
EXIT_PARSE, EXIT_MALFORMED, EXIT_INTERNAL, EXIT_IO = 64, 65, 70, 74

VERDICT_EXIT = {GOOD: EXIT_GOOD, NOT_GOOD: EXIT_NOT_GOOD}


def _fmt_triple(ds) -> str:
    return "(" + ", ".join(format_rat(d) for d in ds) + ")"


def _parse_or_report(expr: str):
    try:
        return parse_theta(expr)
    except ThetaParseError as e:
        print(f"parse error at position {e.position}: {e.message}", file=sys.stderr)
    except (NonPositiveTheta, ValueError) as e:
        print(f"parse error: {e}", file=sys.stderr)
    return None


def _classify(args):
    t = _parse_or_report(args.expr)
    if t is None:
        return None, EXIT_PARSE
    try:
        return classify(t, args.bound, heronian_only=args.heronian_only or None, seed=args.seed), None
    except FactoringBudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return None, EXIT_INTERNAL
    except ValueError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return None, EXIT_PARSE


def cmd_classify(args) -> int:
    cert, rc = _classify(args)
    if cert is None:
        return rc
    if args.json:
        print(json.dumps(to_dict(cert), indent=2, sort_keys=True))
    else:
        print("== CLASSIFY ==")
        print(f"theta: {cert.theta}  ({cert.theta.tag}, degree {cert.degree})")
        print(f"verdict: {cert.verdict}")
        if cert.reason:
            extra = f" p={cert.prime}" if cert.prime else ""
            print(f"reason: {cert.reason}{extra}")
        if cert.failed_filters:
            print(f"failed filters: {', '.join(cert.failed_filters)}")
        if cert.distances:
            print(f"distances: {_fmt_triple(cert.distances)}")
        if cert.rep:
            print(f"rep: a={cert.rep[0]} b={cert.rep[1]}  e={format_rat(cert.e)} "
                  f"r={format_rat(cert.r)} s={format_rat(cert.s)}")
        if cert.triangle:
            print(f"triangle: {cert.triangle}  lambda={format_rat(cert.lam)}  sign={'+' if cert.sign > 0 else '-'}")
        if cert.bound:
            print(f"search exhausted up to c = {cert.bound}")
        for n in cert.notes:
            print(f"note: {n}")
        print(f"certificate: {to_json(cert)}")
    if args.cert:
        with open(args.cert, "w", encoding="utf-8") as f:
            f.write(to_json(cert) + "\n")
        log.info("certificate written to %s", args.cert)
    return VERDICT_EXIT.get(cert.verdict, EXIT_UNKNOWN)


def cmd_witness(args) -> int:
    cert, rc = _classify(args)
    if cert is None:
        return rc
    if cert.verdict != GOOD:
        print(f"no witness: verdict {cert.verdict}" + (f" ({cert.reason})" if cert.reason else ""))
        return VERDICT_EXIT.get(cert.verdict, EXIT_UNKNOWN)
    t = cert.theta
    print("== WITNESS ==")
    print(f"theta: {t}")
    print("frame: B(-theta/2, 0), C(theta/2, 0), A(0, theta*sqrt(3)/2)")
    try:
        if isinstance(t, QuadSurd):
            rep = FormRep(cert.rep[0], cert.rep[1], t.q)
            pts = lemma2_witnesses(t.lam, t.q, rep) if args.all else [lemma2_witness(t.lam, t.q, rep)]
            for pt, ds in pts:
                print(f"point: {pt.describe()}")
                print(f"distances (A, B, C): {_fmt_triple(ds)}")
        elif isinstance(t, Biquadratic):
            pt = lemma4_point(*cert.distances, t.theta_sq(), precision=args.precision)
            print(f"point: {pt.describe()}")
            print(f"distances (A, B, C): {_fmt_triple(cert.distances)}")
            if args.all:
                for cand in lemma4_candidates(*cert.distances, t.theta_sq(), precision=args.precision):
                    print(f"candidate: {cand.point.describe()}  MA = {cand.dist_a}")
        else:
            pt, ds = vertex_witness(t.lam)
            print(f"point: vertex A, {pt.describe()}")
            print(f"distances (A, B, C): {_fmt_triple(ds)}")
    except WitnessError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_GOOD


def cmd_verify(args) -> int:
    try:
        with open(args.path, "r", encoding="utf-8") as f:
            cert = from_json(f.read())
    except (OSError, UnicodeDecodeError, CertificateFormatError) as e:
        print(f"malformed certificate: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    res = verify_certificate(cert)
    if res:
        print(f"OK: {cert.verdict} certificate for {cert.theta} verified")
        return 0
    print(f"FAILED: {res.reason}")
    return 1


def cmd_atlas(args) -> int:
    if args.max_side < 1:
        print("--max-side must be >= 1", file=sys.stderr)
        return EXIT_PARSE
    try:
        if args.out in (None, "-"):
            n = write_atlas(args.max_side, args.format, sys.stdout, args.min_side)
        else:
            with open(args.out, "w", encoding="utf-8", newline="") as f:
                n = write_atlas(args.max_side, args.format, f, args.min_side)
            print(f"OK: wrote {n} record(s) to {args.out}")
    except OSError as e:
        print(f"atlas I/O error: {e}", file=sys.stderr)
        return EXIT_IO
    return 0


def cmd_exercises(args) -> int:
    out = run_exercises(args.bound)
    print("== EXERCISES ==")
    for it in out["items"]:
        status = "PASS" if it["ok"] else "FAIL"
        print(f"[{status}] exercise {it['exercise']}: {it['item']} -> {it['got']}"
              + ("" if it["ok"] else f" (expected {it['expected']})"))
    print("ALL PASS" if out["ok"] else "SOME FAILED")
    return 0 if out["ok"] else 1


def build_parser(cfg: dict) -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="equidist", description="good side lengths of equilateral triangles")
    ap.add_argument("--seed", type=int, default=None, help="factorizer seed (reproducibility)")
    sub = ap.add_subparsers(dest="cmd")
    bound = int(cfg["engine"]["bound"])

    def theta_cmd(name, help_, func):
        p = sub.add_parser(name, help=help_)
        p.add_argument("expr", help='side length, e.g. "sqrt(25+12*sqrt(3))"')
        p.add_argument("--bound", type=int, default=bound, help=f"max triangle side searched (default {bound})")
        p.add_argument("--heronian-only", action="store_true", help="let the beta/3-square filter decide")
        p.set_defaults(func=func)
        return p

    p1 = theta_cmd("classify", "decide whether theta is good and print a certificate", cmd_classify)
    p1.add_argument("--json", action="store_true", help="print the certificate as JSON only")
    p1.add_argument("--cert", default=None, help="also write the certificate to this file")

    p2 = theta_cmd("witness", "print a rational-distance point", cmd_witness)
    p2.add_argument("--precision", type=int, default=int(cfg["witness"]["precision"]))
    p2.add_argument("--all", action="store_true", help="all sign variants / both placements")

    p3 = sub.add_parser("verify", help="re-check a certificate file")
    p3.add_argument("path")
    p3.set_defaults(func=cmd_verify)

    p4 = sub.add_parser("atlas", help="export theta forms of primitive triangles")
    p4.add_argument("--max-side", type=int, required=True)
    p4.add_argument("--min-side", type=int, default=1)
    p4.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    p4.add_argument("--out", default="-")
    p4.set_defaults(func=cmd_atlas)

    p5 = sub.add_parser("exercises", help="reproduce the six exercises")
    p5.add_argument("--bound", type=int, default=bound)
    p5.set_defaults(func=cmd_exercises)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    cfg = load_settings()
    apply_settings(cfg)
    setup_logging(file_path=cfg["logging"]["file"], level=cfg["logging"]["level"])
    ap = build_parser(cfg)
    args = ap.parse_args(argv)
    if not getattr(args, "cmd", None):
        ap.print_help()
        return 1
    if args.seed is not None:
        NT["seed"] = args.seed
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
