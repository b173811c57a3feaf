"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times the superficial-colon witness search (the loop behind ``reg_rees``)
over all ideals of a few degrees, and mod-p rank on the matrices that
``reduction_number_of`` builds.  Both backends must return identical
results; the script exits with status 1 if they do not.
"""

import argparse
import random
import sys
import time
from array import array

from rrreg import _kernels
from rrreg.equigen import GeneratorSet, iter_generator_sets, pred_table, reduction_number
from rrreg.redcheck import FILTER_PRIME


def colon_cases(degrees):
    cases = []
    for d in degrees:
        for E in iter_generator_sets(d):
            r = reduction_number(E)
            for n in range(max(r, 1), r + 3):
                cases.append((pred_table(E.bits(n), n * d), pred_table(E.bits(n + 1), (n + 1) * d), n, d))
    return cases


def rank_cases(count, seed):
    rng = random.Random(seed)
    cases = []
    for _ in range(count):
        nrows, ncols = rng.randint(20, 80), rng.randint(20, 80)
        flat = array("q", (rng.randint(-3, 3) for _ in range(nrows * ncols)))
        cases.append((flat, nrows, ncols, FILTER_PRIME))
    return cases


def bench(fn, cases, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = [fn(*c) for c in cases]
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--degrees", default="8,9,10")
    ap.add_argument("--matrices", type=int, default=200)
    args = ap.parse_args(argv)
    if _kernels.compiled_kernels is None:
        print("compiled kernels not available; build with `pip install -e . --no-build-isolation`")
        return 1
    py, cy = _kernels.python_kernels, _kernels.compiled_kernels
    suites = [
        ("colon_witness", colon_cases([int(x) for x in args.degrees.split(",")]), "colon_witness"),
        ("rank_mod_p", rank_cases(args.matrices, 0), "rank_mod_p"),
    ]
    status = 0
    print(f"{'kernel':<15}{'cases':>7}{'python s':>11}{'cython s':>11}{'speedup':>9}")
    for name, cases, attr in suites:
        tp, rp = bench(getattr(py, attr), cases, args.repeat)
        tc, rc = bench(getattr(cy, attr), cases, args.repeat)
        if rp != rc:
            print(f"{name}: backends disagree", file=sys.stderr)
            status = 1
        print(f"{name:<15}{len(cases):>7}{tp:>11.3f}{tc:>11.3f}{tp / tc:>8.1f}x")
    return status


if __name__ == "__main__":
    sys.exit(main())
