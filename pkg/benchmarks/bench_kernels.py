"""Compare the compiled and pure-Python search kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Each workload runs in a subprocess, once with CISTKIT_PURE=1 and once
without, so both backends go through the same public API.
"""
import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "conjecture grid n 4..13, offsets -1..8, 20 samples": """
from cistkit.harness import run_conjecture_grid
run_conjecture_grid(range(4, 14), range(-1, 9), 20, seed=7)
""",
    "exhaustive 3-CIST-partition search, 40 obstructed graphs, |V| = 18": """
import random
from cistkit.cist import find_cist_partition
from cistkit.model import SplitGraph
rng = random.Random(5)
for _ in range(40):
    # 3-uniform with a vertex in every hyperedge: no 3-CIST-partition exists
    rows = [sorted([0] + rng.sample(range(1, 9), 2)) for _ in range(7)]
    covered = set().union(*map(set, rows))
    rows += [[0, v, 1 if v != 1 else 2] for v in range(9) if v not in covered]
    assert find_cist_partition(SplitGraph(9, rows), 3) is None
""",
}

RUNNER = """
import time, json
t = time.perf_counter()
{body}
from cistkit import kernels
print(json.dumps({{"backend": kernels.BACKEND, "seconds": time.perf_counter() - t}}))
"""


def run(body: str, pure: bool) -> dict:
    env = dict(os.environ)
    env.pop("CISTKIT_PURE", None)
    if pure:
        env["CISTKIT_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", RUNNER.format(body=body)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'workload':68} {'compiled s':>11} {'python s':>10} {'speedup':>8}")
    for name, body in WORKLOADS.items():
        fast = [run(body, False) for _ in range(args.repeat)]
        slow = [run(body, True) for _ in range(args.repeat)]
        if fast[0]["backend"] != "cython":
            print(f"{name:68} extension not built; both runs used the Python kernels")
        f = min(r["seconds"] for r in fast)
        s = min(r["seconds"] for r in slow)
        print(f"{name:68} {f:11.3f} {s:10.3f} {s / f:7.1f}x")


if __name__ == "__main__":
    main()
