"""Command-line interface.

Every command prints one JSON document of the form
``{"tool_version": ..., "inputs": {...}, "result": {...}}``.

Exit codes: 0 success, 2 invalid arguments, 3 NOT_APPLICABLE (``certify``
only), 4 internal assertion failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional

from . import __version__
from .bn_core import SeriesParams, rho
from .certifier import (
    ALL_CONSTRAINTS,
    CertifierInstance,
    CertifierInternalError,
    ConstraintFlags,
    SearchSpaceTooLarge,
    Status,
    certify_empty,
    classify_incidence_zero,
    remark_counterexample_report,
)
from .counting import (
    CountInputs,
    InternalNonInteger,
    adjunction_nodes,
    chow_count,
    incidence_count,
    severi_count,
)
from .lls import plucker_total
from .secant_oracle import (
    RationalSeries,
    default_grid,
    existence_numerology,
    min_secant_rank,
    random_series,
    ramification_weight_total,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_APPLICABLE = 3
EXIT_INTERNAL = 4

SWEEP_KEYS = ("g", "r1", "d1", "e", "f")
CSV_COLUMNS = ("g", "r1", "d1", "e", "f", "status", "reasons", "constraints_used",
               "survivor_count", "error")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _pair(text: str):
    try:
        r, d = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected r,d but got {text!r}")
    return r, d


def _flag_list(text: str) -> List[str]:
    ids = [t.strip() for t in text.split(",") if t.strip()]
    unknown = sorted(set(ids) - set(ALL_CONSTRAINTS))
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown constraints {unknown}; choose from {', '.join(ALL_CONSTRAINTS)}"
        )
    return ids


def record(inputs: dict, result: dict) -> dict:
    return {"tool_version": __version__, "inputs": inputs, "result": result}


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="bnsecant", description=__doc__.splitlines()[0])
    ap.add_argument("--out", help="write output to FILE instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("rho", help="Brill-Noether number")
    p.add_argument("g", type=int)
    p.add_argument("r", type=int)
    p.add_argument("d", type=int)

    p = sub.add_parser("count", help="expected size of Gamma_e(l1) ∩ Gamma_e(l2)")
    csub = p.add_subparsers(dest="method", required=True, parser_class=_Parser)
    for name in ("incidence", "chow"):
        q = csub.add_parser(name)
        q.add_argument("--g", type=int, required=True)
        q.add_argument("--l1", type=_pair, required=True, metavar="R,D")
        q.add_argument("--l2", type=_pair, required=True, metavar="R,D")
        q.add_argument("--e", type=int, help="defaults to r1 + r2")
    q = csub.add_parser("severi")
    q.add_argument("--g", type=int, required=True)
    q.add_argument("--r1", type=int, required=True)
    q.add_argument("--d1", type=int, required=True)
    q.add_argument("--d2", type=int, required=True)
    q = csub.add_parser("adjunction")
    q.add_argument("--g", type=int, required=True)
    q.add_argument("--d1", type=int, required=True)
    q.add_argument("--d2", type=int, required=True)

    p = sub.add_parser("certify", help="emptiness certificate for (g, r1, d1, e, f)")
    for name in SWEEP_KEYS:
        p.add_argument(name, type=int)
    p.add_argument("--flags", type=_flag_list, metavar="IDS",
                   help="comma-separated constraints to enable (default: all applicable)")
    p.add_argument("--cap", type=int, help="candidate cap (overrides CERTIFIER_SEARCH_CAP)")

    p = sub.add_parser("classify", help="zero count of Gamma(l1) ∩ Gamma(pencil) with rho = 0")
    p.add_argument("g", type=int)
    p.add_argument("r1", type=int)
    p.add_argument("d1", type=int)
    p.add_argument("--not-bpf", action="store_true",
                   help="the pencil has a base point")

    p = sub.add_parser("counterexample", help="empty secant variety of expected dimension 0")
    p.add_argument("d1", type=int)

    p = sub.add_parser("oracle", help="genus-0 exact checks")
    osub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = osub.add_parser("check")
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--r", type=int, help="defaults to d (complete series)")
    q.add_argument("--e", type=int, required=True)
    q.add_argument("--f", type=int, required=True)
    q.add_argument("--grid", type=int, default=7, help="number of grid points")
    q.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("sweep", help="certify every instance in a JSON config")
    p.add_argument("--config", required=True)
    p.add_argument("--jobs", type=int, default=None)

    return ap


def cmd_rho(a):
    return record({"g": a.g, "r": a.r, "d": a.d}, {"rho": rho(a.g, a.r, a.d)}), EXIT_OK


def cmd_count(a):
    if a.method in ("incidence", "chow"):
        (r1, d1), (r2, d2) = a.l1, a.l2
        e = r1 + r2 if a.e is None else a.e
        inputs = {"method": a.method, "g": a.g, "l1": [r1, d1], "l2": [r2, d2], "e": e}
        c = CountInputs(a.g, SeriesParams(a.g, r1, d1), SeriesParams(a.g, r2, d2), e)
        n = incidence_count(c) if a.method == "incidence" else chow_count(c)
    elif a.method == "severi":
        inputs = {"method": "severi", "g": a.g, "r1": a.r1, "d1": a.d1, "d2": a.d2}
        n = severi_count(a.g, a.r1, a.d1, a.d2)
    else:
        inputs = {"method": "adjunction", "g": a.g, "d1": a.d1, "d2": a.d2}
        n = adjunction_nodes(a.g, a.d1, a.d2)
    return record(inputs, {"count": n}), EXIT_OK


def _certify(values, flag_ids, cap):
    inst = CertifierInstance(*values)
    flags = None if flag_ids is None else ConstraintFlags.from_ids(flag_ids)
    return certify_empty(inst, flags, cap=cap)


def cmd_certify(a):
    values = tuple(getattr(a, k) for k in SWEEP_KEYS)
    inputs = dict(zip(SWEEP_KEYS, values))
    if a.flags is not None:
        inputs["flags"] = a.flags
    cert = _certify(values, a.flags, a.cap)
    code = EXIT_NOT_APPLICABLE if cert.status is Status.NOT_APPLICABLE else EXIT_OK
    return record(inputs, cert.as_dict()), code


def cmd_classify(a):
    bpf = not a.not_bpf
    cert = classify_incidence_zero(a.g, a.r1, a.d1, bpf)
    inputs = {"g": a.g, "r1": a.r1, "d1": a.d1, "l2_base_point_free": bpf}
    return record(inputs, cert.as_dict()), EXIT_OK


def cmd_counterexample(a):
    return record({"d1": a.d1}, remark_counterexample_report(a.d1).as_dict()), EXIT_OK


def cmd_oracle(a):
    d = a.d
    r = d if a.r is None else a.r
    if not (0 <= a.f < a.e <= d):
        raise ValueError(f"need 0 <= f < e <= d, got d={d}, e={a.e}, f={a.f}")
    if a.grid < 1:
        raise ValueError("grid needs at least one point")
    if r == d:
        series = RationalSeries.complete(d)
    else:
        series = random_series(d, r, random.Random(a.seed))
    grid = default_grid(a.grid)
    min_rank, divisor = min_secant_rank(series, a.e, grid)
    sampled = min_rank <= a.e - a.f
    numerology = existence_numerology(0, r, d, a.e, a.f)
    complete = r == d
    weight = ramification_weight_total(series)
    result = {
        "basis": [[str(c) for c in p] for p in series.basis],
        "complete": complete,
        "min_rank": min_rank,
        "sampled_nonempty": sampled,
        "witness": None if not sampled else {
            "points": [str(p) for p in divisor.points],
            "multiplicities": list(divisor.multiplicities),
        },
        "numerology_nonempty": numerology,
        "agree": (sampled == numerology) if complete else None,
        "ramification_weight_total": weight,
        "plucker_total": plucker_total(0, r, d),
    }
    inputs = {"d": d, "r": r, "e": a.e, "f": a.f, "grid": a.grid, "seed": a.seed}
    return record(inputs, result), EXIT_OK


def _interval(cfg, key):
    iv = cfg.get(key)
    if (not isinstance(iv, list) or len(iv) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in iv)):
        raise ValueError(f"config key {key!r} must be [lo, hi] integers")
    lo, hi = iv
    if lo < 0 or hi < lo:
        raise ValueError(f"config interval {key}={iv} must be nonempty and nonnegative")
    return range(lo, hi + 1)


def load_sweep_config(path) -> dict:
    try:
        cfg = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ValueError(f"cannot read sweep config {path}: {exc}")
    if not isinstance(cfg, dict):
        raise ValueError("sweep config must be a JSON object")
    ranges = {k: _interval(cfg, k) for k in SWEEP_KEYS}
    fmt = cfg.get("format", "json")
    if fmt not in ("json", "csv"):
        raise ValueError(f"format must be json or csv, got {fmt!r}")
    flags = cfg.get("flags")
    if flags is not None:
        if not isinstance(flags, list):
            raise ValueError("flags must be a list of constraint ids or null")
        ConstraintFlags.from_ids(flags)
    cap = cfg.get("cap")
    if cap is not None and (not isinstance(cap, int) or cap < 0):
        raise ValueError("cap must be a nonnegative integer")
    jobs = cfg.get("jobs", 1)
    if not isinstance(jobs, int) or jobs < 1:
        raise ValueError("jobs must be a positive integer")
    return {"ranges": ranges, "format": fmt, "flags": flags, "out": cfg.get("out"),
            "cap": cap, "jobs": jobs}


def sweep_instances(ranges) -> List[tuple]:
    out = []
    for values in itertools.product(*(ranges[k] for k in SWEEP_KEYS)):
        try:
            CertifierInstance(*values)
        except ValueError:
            continue
        out.append(values)
    return out


def _sweep_one(job):
    values, flags, cap = job
    inputs = dict(zip(SWEEP_KEYS, values))
    try:
        result = _certify(values, flags, cap).as_dict()
    except SearchSpaceTooLarge as exc:
        result = {"error": f"SearchSpaceTooLarge: {exc}"}
    return record(inputs, result)


def run_sweep(cfg: dict, jobs: Optional[int] = None) -> List[dict]:
    work = [(v, cfg["flags"], cfg["cap"]) for v in sweep_instances(cfg["ranges"])]
    jobs = jobs or cfg["jobs"]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_sweep_one, work, chunksize=8))
    return [_sweep_one(w) for w in work]


def render_csv(records: List[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(CSV_COLUMNS)
    for rec in records:
        res = rec["result"]
        w.writerow([
            *(rec["inputs"][k] for k in SWEEP_KEYS),
            res.get("status", ""),
            ";".join(res.get("reasons", [])),
            ";".join(res.get("constraints_used", [])),
            res.get("survivor_count", ""),
            res.get("error", ""),
        ])
    return buf.getvalue()


def cmd_sweep(a):
    cfg = load_sweep_config(a.config)
    records = run_sweep(cfg, a.jobs)
    text = render_csv(records) if cfg["format"] == "csv" else dumps(records)
    out = a.out or cfg["out"]
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="")
        summary = record({"config": str(a.config)},
                         {"records": len(records), "out": str(out), "format": cfg["format"]})
        return summary, EXIT_OK
    return text, EXIT_OK


COMMANDS = {
    "rho": cmd_rho,
    "count": cmd_count,
    "certify": cmd_certify,
    "classify": cmd_classify,
    "counterexample": cmd_counterexample,
    "oracle": cmd_oracle,
    "sweep": cmd_sweep,
}


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(str(exc))
        return EXIT_USAGE
    try:
        payload, code = COMMANDS[args.command](args)
    except (InternalNonInteger, CertifierInternalError, AssertionError) as exc:
        sys.stderr.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL
    except (ValueError, SearchSpaceTooLarge) as exc:
        sys.stderr.write(f"bnsecant: error: {exc}\n{parser.format_usage()}")
        return EXIT_USAGE
    text = payload if isinstance(payload, str) else dumps(payload)
    if args.out and args.command != "sweep":
        Path(args.out).write_text(text, encoding="utf-8", newline="")
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
