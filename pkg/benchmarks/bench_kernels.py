"""Time the integer kernels under numba and under the numpy fallback.

Each backend runs in its own interpreter because the choice is made at
import time through TENSOR_ORBIT_NO_NUMBA. Usage:

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import numpy as np
from tensor_orbit import kernels
from tensor_orbit._accel import backend
from tensor_orbit.algebra import basis_list, multiply
from tensor_orbit.bruteforce import burnside_count, gauge_orbit_labels
from tensor_orbit.perm import perm_table

repeat = int(sys.argv[1])
S8 = perm_table(8)
b = basis_list(3, 2)
pairs = [(i, i + 1) for i in range(0, 12, 2)] + [(1, 5), (3, 9)]
jobs = {
    "cycle_counts S_8": lambda: kernels.cycle_counts(S8),
    "orbit_labels d=4 2n=4": lambda: gauge_orbit_labels(4, 2),
    "burnside d=5 2n=6": lambda: burnside_count(5, 3),
    "convolve basis d=3 2n=4": lambda: multiply(b[1], b[2]),
    "count_assignments V=12 N=3": lambda: kernels.count_assignments(12, pairs, 3),
}
out = {"backend": backend(), "times": {}}
for name, job in jobs.items():
    job()  # warm-up: compilation or cache load
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        job()
        best = min(best, time.perf_counter() - t)
    out["times"][name] = best
print(json.dumps(out))
"""


def run(no_numba: bool, repeat: int) -> dict:
    env = dict(os.environ, TENSOR_ORBIT_NO_NUMBA="1" if no_numba else "0")
    res = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast, slow = run(False, args.repeat), run(True, args.repeat)
    if fast["backend"] != "numba":
        print("numba is not importable; both columns use numpy")
    print(f"{'kernel':30s} {'numba (s)':>11s} {'numpy (s)':>11s} {'ratio':>7s}")
    for name, t_fast in fast["times"].items():
        t_slow = slow["times"][name]
        print(f"{name:30s} {t_fast:11.4f} {t_slow:11.4f} {t_slow / t_fast:7.1f}")


if __name__ == "__main__":
    main()
