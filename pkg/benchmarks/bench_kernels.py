#!/usr/bin/env python3
"""Timing comparison of the compiled and pure-Python kernels.

Runs the two scan modes and the branch-and-bound solver on fixed,
seeded workloads and prints one row per (workload, backend). Usable
with or without the compiled extension; absent backends are skipped.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import statistics
import time
from itertools import combinations

from hfree.core import a_from_b
from hfree.geometry import build_plane, dual_family
from hfree.kernels import MATCHES, VERIFY, purepy

try:
    from hfree.kernels import _fast
except ImportError:
    _fast = None

BACKENDS = [("py", purepy)] + ([("c", _fast)] if _fast else [])


def timeit(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), out


def scan_workloads():
    rng = random.Random(0)
    dual = dual_family(build_plane(7))
    yield (
        "verify dual M(7), C(50,3) subsets",
        dual.edges,
        dual.num_vertices,
        3,
        a_from_b((41, 7, 1)),
        VERIFY,
    )
    edges = set()
    while len(edges) < 28:
        edges.add(tuple(sorted(rng.sample(range(96), 4))))
    yield (
        "match random 4-sets, C(28,3) subsets",
        sorted(edges),
        96,
        3,
        a_from_b((2, 1, 0)),
        MATCHES,
    )


def mis_workloads():
    rng = random.Random(0)
    n = 26
    yield (
        "solve all-triples conflicts, n=26",
        n,
        3,
        tuple(combinations(range(n), 3)),
    )
    pool = list(combinations(range(30), 3))
    yield (
        "solve random conflicts, n=30, e=450",
        30,
        3,
        tuple(sorted(rng.sample(pool, 450))),
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    rows = []
    for name, edges, n, k, targets, mode in scan_workloads():
        reference = None
        for label, impl in BACKENDS:
            handle = impl.prepare(edges, n)
            top = len(edges) if mode == VERIFY else len(edges) - k + 1
            ms, out = timeit(
                lambda: impl.scan(handle, len(edges), n, k, targets, mode, 0, top),
                args.repeat,
            )
            if reference is None:
                reference = out
            assert out == reference, f"backend mismatch on {name}"
            rows.append((name, label, ms))

    for name, n, k, conflicts in mis_workloads():
        reference = None
        for label, impl in BACKENDS:
            ms, out = timeit(lambda: impl.mis_solve(n, k, conflicts), args.repeat)
            if reference is None:
                reference = out
            assert out == reference, f"backend mismatch on {name}"
            rows.append((name, label, ms))

    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  backend  median")
    prev = {}
    for name, label, ms in rows:
        line = f"{name:<{width}}  {label:<7}  {ms * 1000:9.2f} ms"
        if label != "py" and name in prev:
            line += f"   ({prev[name] / ms:5.1f}x)"
        prev[name] = ms
        print(line)


if __name__ == "__main__":
    main()
