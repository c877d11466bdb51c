"""Compare the numba and numpy back ends of the polynomial kernels.

Run: python3 benchmarks/bench_kernels.py --degree 24 --repeats 20
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hesse_cremona import _kernels
from hesse_cremona.diagram import build
from hesse_cremona.polynomials import SEED_LINE, curve_equation, exact_divide_linear


def random_pair(deg: int, rng: np.random.Generator, bound: int = 50):
    a = np.zeros((deg + 1, deg + 1), dtype=np.int64)
    b = np.zeros_like(a)
    for i in range(deg + 1):
        for j in range(deg + 1 - i):
            a[i, j], b[i, j] = rng.integers(-bound, bound + 1, size=2)
    return a.astype(object), b.astype(object)


def best_of(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best * 1e3


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--degree", type=int, default=24)
    p.add_argument("--repeats", type=int, default=20)
    p.add_argument("--rows", type=int, default=9, help="diagram rows for the end-to-end equation timing")
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    rng = np.random.default_rng(args.seed)
    fa, fb = random_pair(args.degree, rng)
    ga, gb = random_pair(args.degree, rng)
    prod = curve_equation(5, 1) * SEED_LINE
    diagram = build(args.rows)

    def all_equations():
        for e in diagram:
            curve_equation(e.i, e.j, diagram)

    cases = {
        f"multiply deg {args.degree} x {args.degree}": lambda: _kernels.zt_mul(fa, fb, ga, gb),
        f"divide deg {prod.deg} by a line": lambda: exact_divide_linear(prod, SEED_LINE),
        f"all equations, rows 1-{args.rows}": all_equations,
    }

    if _kernels.HAVE_NUMBA:
        _kernels.set_backend("numba")
        for fn in cases.values():  # compile outside the timed region
            fn()
    print(f"{'case':<32} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for name, fn in cases.items():
        _kernels.set_backend("numpy")
        t_np = best_of(fn, args.repeats if "equations" not in name else 1)
        if _kernels.HAVE_NUMBA:
            _kernels.set_backend("numba")
            t_nb = best_of(fn, args.repeats if "equations" not in name else 1)
            print(f"{name:<32} {t_np:>10.2f} {t_nb:>10.2f} {t_np / t_nb:>7.1f}x")
        else:
            print(f"{name:<32} {t_np:>10.2f} {'n/a':>10}")


if __name__ == "__main__":
    main()
