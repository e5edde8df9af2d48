"""Compare the numba and numpy enumeration kernels on the built-in lattices.

    python3 benchmarks/bench_enumeration.py [--repeat 3]

The numba kernel is timed after one warm-up call so JIT compilation is not
counted.  Both kernels must return identical vectors.
"""

import argparse
import time

import numpy as np

from tmf_forms._accel import HAVE_NUMBA
from tmf_forms.lattice import builtin, enumerate_shells

CASES = [("e8", 6), ("e8", 8), ("d16plus", 4), ("e8cubed", 4), ("leech", 4)]


def _time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = ["numpy"] + (["numba"] if HAVE_NUMBA else [])
    if HAVE_NUMBA:
        enumerate_shells(builtin("e8"), 4, backend="numba")  # compile
    print(f"{'lattice':<10}{'norm':>5}{'vectors':>10}" + "".join(f"{b:>12}" for b in backends))
    for name, norm in CASES:
        g = builtin(name)
        times, tables = [], []
        for b in backends:
            t, table = _time(lambda: enumerate_shells(g, norm, backend=b), args.repeat)
            times.append(t)
            tables.append(table)
        ref = tables[0].representatives()
        for other in tables[1:]:
            assert np.array_equal(ref, other.representatives()), name
        total = sum(tables[0].counts.values())
        print(f"{name:<10}{norm:>5}{total:>10}" + "".join(f"{t:>11.3f}s" for t in times))


if __name__ == "__main__":
    main()
