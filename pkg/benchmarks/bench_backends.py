"""Time the numba and numpy kernel backends against each other.

    python3 benchmarks/bench_backends.py [--sizes 128,256,512,1024] [--repeat 5]

Reports the best-of-``repeat`` wall time for matrix assembly (both
kernels), a full interface solve, and field evaluation at 200 targets.
The numba kernels are compiled (or loaded from cache) before timing.
"""

import argparse
import time

import numpy as np

import filmbie
from filmbie import _backend
from filmbie.field import eval_domain_potential
from filmbie.geometry import build_grid, builtin_profile
from filmbie.kernels import double_layer_matrix, smooth_single_layer_matrix
from filmbie.solver import ProblemParams, solve_interface


def best_time(fn, repeat):
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="128,256,512,1024")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    backends = ["numpy"] + (["numba"] if _backend.HAVE_NUMBA else [])

    prof = builtin_profile("cosine", 0.03, 1.0)
    params = ProblemParams.cosine()
    rng = np.random.default_rng(0)
    targets = (rng.uniform(-1, 1, 200), rng.uniform(0.005, 1.0, 200))

    # warm-up: trigger numba compilation outside the timed region
    if "numba" in backends:
        filmbie.set_backend("numba")
        eval_domain_potential(solve_interface(prof, params, 16), prof, params, targets)

    print(f"{'n':>6} {'task':<12}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for n in sizes:
        grid = build_grid(prof, n)
        tasks = {
            "assemble": lambda: (double_layer_matrix(grid), smooth_single_layer_matrix(grid)),
            "solve": lambda: solve_interface(prof, params, n),
        }
        sol = solve_interface(prof, params, n)
        tasks["field"] = lambda: eval_domain_potential(sol, prof, params, targets)
        for task, fn in tasks.items():
            times = []
            for b in backends:
                filmbie.set_backend(b)
                times.append(best_time(fn, args.repeat))
            speed = f"{times[0] / times[-1]:9.1f}x" if len(times) > 1 else ""
            print(f"{n:>6} {task:<12}" + "".join(f"{t * 1e3:10.2f}ms" for t in times) + f" {speed}")


if __name__ == "__main__":
    main()
