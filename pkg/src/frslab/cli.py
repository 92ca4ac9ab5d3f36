"""Command-line front end.

Every command prints a JSON report ``{config, results, summary}``.  Exit
status is 0 when all checks hold, 1 on a bound violation (the failing
instances are listed under ``summary.witnesses``), and 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__, bounds, experiments
from .decode import brute_force_list, default_m, gw_radius, gw_subspace, prune_certificates
from .frs import FrsCode
from .linalg import AffineSubspace, EnumerationCapError
from .poly import Polynomial
from .recovery import build_counterexample, m_for_eps, verify_counterexample

_RATIONAL = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def rational(text: str) -> Fraction:
    if not _RATIONAL.match(text.strip()):
        raise argparse.ArgumentTypeError(f"expected an exact rational 'num/den', got {text!r}")
    return Fraction(text.strip())


def int_list(text: str) -> list[int]:
    text = text.strip()
    if text.startswith("["):
        return [int(v) for v in json.loads(text)]
    return [int(v) for v in text.split(",") if v.strip()]


def json_arg(text: str):
    if text.startswith("@"):
        with open(text[1:]) as fh:
            return json.load(fh)
    return json.loads(text)


def _code_args(p: argparse.ArgumentParser, **defaults):
    g = p.add_argument_group("code")
    g.add_argument("--q", type=int, default=defaults.get("q", 13))
    g.add_argument("--k", type=int, default=defaults.get("k", 3))
    g.add_argument("--s", type=int, default=defaults.get("s", 3))
    g.add_argument("--n", type=int, default=defaults.get("n", 4))
    g.add_argument("--alphas", type=int_list, default=None, help="evaluation points, comma separated")


def _out_args(p: argparse.ArgumentParser):
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.add_argument("--csv", help="also write report rows as CSV")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="frslab", description="Folded Reed-Solomon list-decoding lab")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="encode a message polynomial")
    _code_args(p)
    p.add_argument("--message", type=int_list, required=True, help="coefficients, lowest degree first")
    _out_args(p)

    p = sub.add_parser("decode-gw", help="interpolation decoder: affine candidate subspace")
    _code_args(p)
    p.add_argument("--word", type=json_arg, required=True, help="JSON word or @file")
    p.add_argument("--m", type=int, default=2)
    _out_args(p)

    p = sub.add_parser("prune", help="random certificate walks inside the decoded subspace")
    _code_args(p)
    p.add_argument("--word", type=json_arg, required=True)
    p.add_argument("--eps", type=rational, default=Fraction(1, 4), help="radius is (1-R) - eps unless --rho is given")
    p.add_argument("--rho", type=rational, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--trials", type=int, default=4096)
    p.add_argument("--seed", type=int, required=True)
    _out_args(p)

    p = sub.add_parser("oracle", help="brute-force list B(y, rho) ∩ C")
    _code_args(p)
    p.add_argument("--word", type=json_arg, required=True)
    p.add_argument("--rho", type=rational, required=True)
    _out_args(p)

    p = sub.add_parser("verify", help="randomized bound-verification suites")
    p.add_argument("bound", choices=["gk", "srivastava", "cz-edge", "cz-theorem", "wronskian", "params", "gw", "prune"])
    _code_args(p)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--dims", type=int_list, default=[1, 2, 3], help="subspace dimensions for gk / wronskian")
    p.add_argument("--eps", type=rational, nargs="+", default=None)
    p.add_argument("--grid", type=int, default=20, help="rates per eps for 'params'")
    p.add_argument("--trials", type=int, default=4096)
    _out_args(p)

    p = sub.add_parser("counterexample", help="list-recovery counterexample family")
    p.add_argument("action", choices=["build", "verify"])
    _code_args(p, k=5, s=2, n=6)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--eps", type=rational, default=None, help="set m = ceil(R/eps) + 1")
    p.add_argument("--ell", type=int, default=None, help="use B = {1, ..., ell}")
    p.add_argument("--B", type=int_list, default=None)
    _out_args(p)

    p = sub.add_parser("fuzz", help="hill-climb for large lists at the Chen-Zhang radius")
    _code_args(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--restarts", type=int, default=10)
    p.add_argument("--steps", type=int, default=200)
    _out_args(p)
    return ap


class InputError(ValueError):
    pass


def _config(args) -> dict:
    cfg = {}
    for key, val in sorted(vars(args).items()):
        if key in ("out", "csv"):
            continue
        if isinstance(val, Fraction):
            val = str(val)
        elif isinstance(val, list):
            val = [str(v) if isinstance(v, Fraction) else v for v in val]
        cfg[key] = val
    cfg["version"] = __version__
    return cfg


def _suite_report(reports) -> tuple[list, dict]:
    summary = experiments.summarize(reports)
    bad = [r.to_dict() for r in reports if not r.holds and r.details.get("in_regime", True)]
    if bad:
        summary["witnesses"] = bad[:20]
    return [r.to_dict() for r in reports], summary


def _run_verify(args, code: Optional[FrsCode]):
    b = args.bound
    if b == "params":
        eps = args.eps or [Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)]
        return experiments.suite_parameter_chain(eps, args.grid)
    if args.seed is None:
        raise InputError(f"verify {b} is randomized: --seed is required")
    if b == "gk":
        return experiments.suite_gk(code, args.samples, args.seed, args.dims)
    if b == "wronskian":
        return experiments.suite_wronskian(code, args.samples, args.seed, args.dims)
    if b == "srivastava":
        pairs = experiments.srivastava_pairs(code)
        if args.t is not None:
            pairs = [(r, t) for r, t in pairs if t == args.t]
        return experiments.suite_srivastava(code, args.samples, args.seed, pairs)
    if b == "cz-edge":
        return experiments.suite_cz_edge(code, args.samples, args.seed)
    if b == "cz-theorem":
        ts = [args.t] if args.t is not None else list(range(1, code.s + 1))
        return [r for t in ts for r in experiments.suite_cz_theorem(code, args.samples, args.seed, t)]
    if b == "gw":
        return experiments.suite_gw(code, args.samples, args.seed, args.m)
    if b == "prune":
        eps = (args.eps or [Fraction(1, 4)])[0]
        return experiments.suite_prune(code, args.samples, args.seed, eps, args.trials, args.m)
    raise InputError(f"unknown bound {b}")


def _polys(fs) -> list[list[int]]:
    return [f.to_list() for f in fs]


def run(args) -> tuple[list, dict]:
    code = FrsCode(args.q, args.k, args.s, args.n, args.alphas)
    cmd = args.command
    if cmd == "encode":
        word = code.encode(args.message)
        return [{"message": code.message(args.message).to_list(), "word": [list(s) for s in word]}], {"total": 1, "violations": 0}
    if cmd == "decode-gw":
        A = gw_subspace(code, args.word, args.m)
        return [{"subspace": A.to_dict(), "radius": str(gw_radius(code, args.m)), "m": args.m}], {"total": 1, "violations": 0}
    if cmd == "oracle":
        L = brute_force_list(code, args.word, args.rho)
        return [{"list": _polys(L), "size": len(L)}], {"total": 1, "violations": 0}
    if cmd == "prune":
        rho = args.rho if args.rho is not None else code.distance - args.eps
        m = args.m if args.m is not None else default_m(code, args.eps)
        A = gw_subspace(code, args.word, m)
        if A.is_empty():
            return [{"codewords": [], "hits": [], "subspace": A.to_dict(), "rho": str(rho)}], {"total": 1, "violations": 0}
        res = prune_certificates(code, args.word, A, rho, args.trials, args.seed)
        hits = [[list(c), h] for c, h in sorted(res.hits.items())]
        return [{
            "codewords": _polys(res.codewords), "hits": hits, "abandoned": res.abandoned,
            "subspace": A.to_dict(), "rho": str(rho), "m": m,
        }], {"total": 1, "violations": 0}
    if cmd == "verify":
        return _suite_report(_run_verify(args, code))
    if cmd == "counterexample":
        m = args.m
        if m is None:
            if args.eps is None:
                raise InputError("counterexample needs --m or --eps")
            m = m_for_eps(code.rate, args.eps)
        if args.B is not None:
            B = args.B
        elif args.ell is not None:
            B = list(range(1, args.ell + 1))
        else:
            raise InputError("counterexample needs --ell or --B")
        fam = build_counterexample(code, m, B)
        if args.action == "build":
            return [fam.to_dict()], {"total": 1, "violations": 0}
        rep = verify_counterexample(fam)
        sizes = json.loads(rep.details["per_coordinate_sizes"])
        results, summary = _suite_report([rep])
        results[0]["family"] = fam.to_dict(sizes)
        return results, summary
    if cmd == "fuzz":
        found = experiments.fuzz_cz(code, args.t, args.seed, args.restarts, args.steps)
        reports = [rep for _, rep in found]
        results, summary = _suite_report(reports)
        for row, (y, _) in zip(results, found):
            row["word"] = [list(s) for s in y]
        return results, summary
    raise InputError(f"unknown command {cmd}")


def _write_csv(path: str, results: list):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(bounds.CSV_FIELDS)
        for row in results:
            if "bound" in row:
                w.writerow(["" if row.get(k) is None else row.get(k) for k in bounds.CSV_FIELDS])


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        results, summary = run(args)
    except (ValueError, EnumerationCapError, KeyError, TypeError) as exc:
        print(f"frslab: error: {exc}", file=sys.stderr)
        return 2
    report = {"config": _config(args), "results": results, "summary": summary}
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.csv:
        _write_csv(args.csv, results)
    return 1 if summary.get("violations") else 0


if __name__ == "__main__":
    sys.exit(main())
