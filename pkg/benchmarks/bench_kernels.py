"""Compare the numba and numpy exponent-vector kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each case is timed after one warm-up call, so numba compilation is excluded.
"""

import argparse
import time

import numpy as np

from arithgenus import kernels


def _time(fn, repeat):
    fn()
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def cases(rng):
    # leading ideal-like generator sets: random quadrics and cubics in 9 variables
    gens9 = np.unique(
        np.vstack([kernels.compositions_numpy(9, 2)[rng.choice(45, 20, replace=False)],
                   kernels.compositions_numpy(9, 3)[rng.choice(165, 40, replace=False)]]),
        axis=0,
    )
    monos = kernels.compositions_numpy(9, 12)
    raw = rng.integers(0, 4, size=(400, 9))
    return [
        ("count_standard  9 vars, deg 12", lambda k: lambda: k["count"](gens9, monos)),
        ("minimal_mask    400 monomials", lambda k: lambda: k["mask"](raw)),
        ("compositions    9 vars, deg 12", lambda k: lambda: k["comp"](9, 12)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    impls = {
        "numpy": {
            "count": kernels.count_standard_numpy,
            "mask": kernels.minimal_mask_numpy,
            "comp": kernels.compositions_numpy,
        }
    }
    if kernels.HAVE_NUMBA:
        impls["numba"] = {
            "count": kernels.count_standard_numba,
            "mask": kernels.minimal_mask_numba,
            "comp": kernels.compositions_numba,
        }
    print(f"{'case':34s}" + "".join(f"{name:>12s}" for name in impls))
    for label, make in cases(rng):
        results = {name: make(k)() for name, k in impls.items()}
        vals = list(results.values())
        assert all(np.array_equal(np.asarray(vals[0]), np.asarray(v)) for v in vals[1:]), label
        times = [_time(make(k), args.repeat) for k in impls.values()]
        print(f"{label:34s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times))


if __name__ == "__main__":
    main()
