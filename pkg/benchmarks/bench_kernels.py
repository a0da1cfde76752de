"""Compare the numba kernels with their interpreted twins.

    python benchmarks/bench_kernels.py [--repeat 3] [--seed 1] [--scale 1]

Both variants are called directly, so the ``LEGAUG_DISABLE_JIT`` flag does
not matter here.  Compilation is paid once before timing.
"""
import argparse
import time

import numpy as np

from legaug import _kernels
from legaug.augment import grading_allowed
from legaug.dga import build_dga, words_as_index_arrays
from legaug.front import PlatDiagram, component_count, validate


def best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def knot(cusps, n, rng):
    while True:
        d = PlatDiagram(cusps, tuple(int(x) for x in rng.integers(1, 2 * cusps, size=n)))
        if component_count(d) == 1:
            return d


def workloads(seed, scale):
    rng = np.random.default_rng(seed)
    od = validate(knot(6, 40 * scale, rng))
    pos = od.positions()
    n, c = od.n, od.cusps
    yield f"sweep (c={c}, n={n}, every right cusp)", [
        (_kernels.sweep_jit, _kernels.sweep_py, (pos, n, 2 * k - 1, 2 * k, 0, 0, 0)) for k in range(1, c + 1)
    ]

    od = validate(knot(5, 24 * scale, rng))
    can = np.ones(od.n, dtype=np.uint8)
    yield f"rulings (c={od.cusps}, n={od.n}, ungraded)", [
        (_kernels.rulings_jit, _kernels.rulings_py, (od.positions(), od.cusps, can))
    ]

    aug_knot = PlatDiagram(2, (2,) * (9 + 2 * scale))   # (2, k) torus knot, many augmentations
    dga = build_dga(validate(aug_knot))
    elig = np.array([grading_allowed(g.grading, 1) for g in dga.generators], dtype=np.uint8)
    yield f"augmentations (c={aug_knot.cusps}, n={aug_knot.n}, ungraded)", [
        (_kernels.augmentations_jit, _kernels.augmentations_py, (elig, *words_as_index_arrays(dga)))
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--scale", type=int, default=1, help="grow the workloads")
    args = ap.parse_args()
    print(f"{'kernel':48} {'numba':>10} {'python':>10} {'speedup':>8}")
    for label, calls in workloads(args.seed, args.scale):
        for jit, py, a in calls:
            assert np.array_equal(jit(*a), py(*a)), label
        t_jit = sum(best_of(jit, a, args.repeat) for jit, _, a in calls)
        t_py = sum(best_of(py, a, args.repeat) for _, py, a in calls)
        print(f"{label:48} {t_jit * 1e3:8.2f}ms {t_py * 1e3:8.2f}ms {t_py / t_jit:7.1f}x")


if __name__ == "__main__":
    main()
