"""Compare the compiled and pure-Python candidate scans.

    python benchmarks/bench_scan.py [--repeat N]

Each row times one full search (witness cap 10) on both backends and checks
that they return the same survivor count and witnesses.
"""

import argparse
import time

from bnsecant.certifier import BACKEND, CertifierInstance, ConstraintFlags, search

WIDE = ["C-ZERO", "C-PLK-Y1", "C-PLK-Z1", "C-PLK-Y2", "C-PLK-Z2"]
CASES = [
    # (g, r1, d1, e, f), constraint ids or None for the defaults
    ((12, 2, 10, 2, 1), None),
    ((20, 3, 19, 4, 1), None),
    ((20, 3, 19, 6, 2), None),
    ((24, 3, 21, 5, 2), None),
    ((22, 2, 18, 4, 1), WIDE),
    ((18, 3, 17, 5, 1), WIDE),
    ((20, 2, 16, 8, 3), WIDE),
]


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if BACKEND != "cython":
        raise SystemExit("compiled kernel not built; run `pip install -e . --no-build-isolation`")

    print(f"{'instance':<22}{'flags':<10}{'space':>12}{'survivors':>11}"
          f"{'python s':>11}{'cython s':>11}{'speedup':>9}")
    for values, ids in CASES:
        inst = CertifierInstance(*values)
        flags = None if ids is None else ConstraintFlags.from_ids(ids)
        t_py, r_py = best_of(lambda: search(inst, flags, witness_cap=10, backend="python"),
                             args.repeat)
        t_c, r_c = best_of(lambda: search(inst, flags, witness_cap=10, backend="cython"),
                           args.repeat)
        assert r_py == r_c, values
        label = "default" if ids is None else "wide"
        print(f"{str(values):<22}{label:<10}{r_c.space_size:>12}{r_c.survivor_count:>11}"
              f"{t_py:>11.4f}{t_c:>11.4f}{t_py / max(t_c, 1e-9):>9.1f}")


if __name__ == "__main__":
    main()
