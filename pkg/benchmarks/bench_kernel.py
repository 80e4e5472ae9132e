"""Compare the compiled simplex kernel with the pure-Python one.

Runs the same workloads twice in-process, swapping the kernel functions the
LP layer dispatches to, and checks that both kernels give identical answers.

    python benchmarks/bench_kernel.py [--repeat N] [--quick] [--json]
"""

import argparse
import json
import random
import statistics
import sys
import time

from multithreshold.graphs import build_family, pK2, pK3
from multithreshold.lp import _kernel_py, kernel
from multithreshold.lp.simplex import solve_lp
from multithreshold.solver import decide_fixed, theta_number, threshold_set


def _random_lps(count, seed=7):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        nv = rng.randint(6, 12)
        rows = []
        for _ in range(rng.randint(nv, 2 * nv)):
            coeffs = {j: rng.randint(-9, 9) for j in range(nv) if rng.random() < 0.7}
            rows.append((coeffs, rng.randint(-5, 40)))
        free = [rng.random() < 0.3 for _ in range(nv)]
        obj = {j: rng.randint(-3, 3) for j in range(nv)}
        out.append((nv, free, rows, obj))
    return out


def _lp_batch(lps):
    return [(r.status, r.value) for r in (solve_lp(*lp) for lp in lps)]


def workloads(quick):
    lps = _random_lps(200)
    jobs = [
        ("200 random LPs", lambda: _lp_batch(lps)),
        ("T(4K2)", lambda: str(threshold_set(build_family(pK2(4))))),
        ("4K2 at (-1,1,3)", lambda: decide_fixed(build_family(pK2(4)), (-1, 1, 3)) is None),
        ("T(5K2)", lambda: str(threshold_set(build_family(pK2(5))))),
        ("theta(3K3)", lambda: theta_number(build_family(pK3(3))).theta_number),
    ]
    if not quick:
        jobs.append(("T(6K2)", lambda: str(threshold_set(build_family(pK2(6))))))
    return jobs


class use_kernel:
    def __init__(self, module):
        self.module = module

    def __enter__(self):
        self.saved = (kernel.pivot, kernel.phase0, kernel.simplex)
        kernel.pivot, kernel.phase0, kernel.simplex = self.module.pivot, self.module.phase0, self.module.simplex

    def __exit__(self, *exc):
        kernel.pivot, kernel.phase0, kernel.simplex = self.saved


def _time(fn, repeat):
    times, result = [], None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times), result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the largest workload")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    if kernel.BACKEND != "cython":
        print("compiled kernel not available (build it with pip install -e .); nothing to compare",
              file=sys.stderr)
        return 1

    rows = []
    for name, fn in workloads(args.quick):
        t_py, r_py = _time(lambda: _with(_kernel_py, fn), args.repeat)
        t_ext, r_ext = _time(fn, args.repeat)
        if r_py != r_ext:
            print(f"MISMATCH on {name}: python={r_py!r} compiled={r_ext!r}", file=sys.stderr)
            return 2
        rows.append({"workload": name, "python_s": round(t_py, 4), "compiled_s": round(t_ext, 4),
                     "speedup": round(t_py / t_ext, 2) if t_ext else None})

    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        print(f"{'workload':<20} {'python (s)':>11} {'compiled (s)':>13} {'speedup':>8}")
        for r in rows:
            print(f"{r['workload']:<20} {r['python_s']:>11.4f} {r['compiled_s']:>13.4f} {r['speedup']:>7.2f}x")
    return 0


def _with(module, fn):
    with use_kernel(module):
        return fn()


if __name__ == "__main__":
    sys.exit(main())
