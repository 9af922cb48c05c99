"""Compare the compiled kernel lane against the numpy fallback.

Run as `python3 benchmarks/bench_kernels.py`.  Times the two hot kernels
(box scans against an H-representation, and pair-sum reachability) on a
spread of polytope sizes, then the end-to-end normality oracle.
"""

import os
import statistics
import subprocess
import sys
import time

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))


def _instances():
    from polynorm.generators import gen_bruns_gubeladze, gen_random_fibered

    yield "bg-3", gen_bruns_gubeladze(3)
    for seed in (1, 2, 4):
        yield f"fibered-{seed}", gen_random_fibered(seed, 6).polytope


def _bench(repeat: int = 3):
    from polynorm import dilate
    from polynorm.kernels import IMPLEMENTATION, unreachable_targets
    from polynorm.normality import is_normal

    print(f"lane: {IMPLEMENTATION}")
    for name, p in _instances():
        targets = np.array(dilate(p, 2).lattice_points(), dtype=np.int64)
        left = np.array(p.lattice_points(), dtype=np.int64)

        times = []
        for _ in range(repeat):
            t0 = time.perf_counter()
            unreachable_targets(targets, left, left)
            times.append(time.perf_counter() - t0)
        reach = statistics.median(times)

        times = []
        for _ in range(repeat):
            p._cache.clear()
            t0 = time.perf_counter()
            is_normal(p)
            times.append(time.perf_counter() - t0)
        oracle = statistics.median(times)

        print(
            f"{name:12s} |P cap M| = {len(left):5d}  "
            f"pair-sum {reach * 1e3:8.2f} ms  is_normal {oracle * 1e3:8.2f} ms"
        )


def main():
    if os.environ.get("_POLYNORM_BENCH_CHILD"):
        _bench()
        return
    for force in ("", "1"):
        env = dict(os.environ, _POLYNORM_BENCH_CHILD="1")
        if force:
            env["POLYNORM_FORCE_PYTHON"] = force
        subprocess.run([sys.executable, __file__], env=env, check=True)


if __name__ == "__main__":
    main()
