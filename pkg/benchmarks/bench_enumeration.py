"""Enumeration kernel: numba vs. plain Python.

Each backend runs in its own interpreter because the choice is made at
import time. The numba run is warmed up first so compile time is excluded.

    python3 benchmarks/bench_enumeration.py [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = {
    "count 2^9": ("count", [2] * 9),
    "count 3^8": ("count", [3] * 8),
    "count 4,3^2,2^3,1^2": ("count", [4, 3, 3, 2, 2, 2, 1, 1]),
    "count 2^10": ("count", [2] * 10),
    "sweep bicyclic n=9": ("sweep", 9),
}

CHILD = r"""
import json, sys, time
from forcibly import _accel
from forcibly.enumeration import count_labeled, oracle_forcibly_bicyclic
from forcibly.sequence import iter_sequences, is_graphic

work, repeat = json.loads(sys.argv[1]), int(sys.argv[2])

def run(kind, arg):
    if kind == "count":
        return count_labeled(arg)
    return sum(oracle_forcibly_bicyclic(D).holds for D in iter_sequences(arg, 2 * arg + 2) if is_graphic(D))

for kind, arg in work.values():  # warm-up / jit compile
    run(kind, arg if kind == "sweep" else arg[:6])
res = {}
for name, (kind, arg) in work.items():
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        val = run(kind, arg)
        best = min(best, time.perf_counter() - t0)
    res[name] = [val, best]
print(json.dumps({"backend": _accel.BACKEND, "results": res}))
"""


def run(backend: str, repeat: int) -> dict:
    env = {**os.environ, "FORCIBLY_BACKEND": backend}
    out = subprocess.run([sys.executable, "-c", CHILD, json.dumps(WORKLOAD), str(repeat)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    nb = run("numba", args.repeat)["results"]
    py = run("python", 1)["results"]
    print(f"{'workload':24s} {'value':>8s} {'numba s':>10s} {'python s':>10s} {'speedup':>8s}")
    for name in WORKLOAD:
        (v1, t1), (v2, t2) = nb[name], py[name]
        assert v1 == v2, (name, v1, v2)
        print(f"{name:24s} {v1:8d} {t1:10.4f} {t2:10.4f} {t2 / t1:7.1f}x")


if __name__ == "__main__":
    main()
