#!/usr/bin/env python3
"""Benchmark the compiled coloring-search kernels against the pure-Python lane.

The hard case for the set kernel is a search that must exhaust the coloring
space.  A greedy Sidon set gives exactly that: every nonempty class has all
pair sums distinct, so with ell = 1 every coloring satisfies the relation and
the search visits all r**(n-1) leaves.  Pruning is disabled to keep the work
honest.  The edge kernel gets a wider theta graph whose copy list is dense.

Outputs a timing table and verifies that both lanes return identical results.

Usage: python benchmarks/bench_kernels.py [--n 16] [--r 2] [--repeat 3]
"""

import argparse
import sys
import time

from sidonkit import kernels
from sidonkit.ordgraph import ThetaSpec, find_theta_copies, make_theta
from sidonkit.ramsey import _tuple_groups
from sidonkit.repset import FiniteSet


def greedy_sidon(size: int) -> list[int]:
    """First `size` terms of the greedy sequence with all pair sums distinct."""
    chosen: list[int] = []
    sums = set()
    candidate = 1
    while len(chosen) < size:
        new_sums = {candidate + x for x in chosen} | {2 * candidate}
        if not (new_sums & sums):
            chosen.append(candidate)
            sums |= new_sums
        candidate += 1
    return chosen


def time_lane(fn, repeat):
    best = None
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def bench_set_kernel(n, r, repeat):
    X = FiniteSet(greedy_sidon(n))
    groups = tuple(_tuple_groups(X, 2))
    args = (n, r, groups, (), 1, False, (1,))

    rows = []
    reference = None
    for backend in kernels.available_backends():
        seconds, result = time_lane(
            lambda b=backend: kernels.set_search(*args, backend=b), repeat
        )
        if reference is None:
            reference = result
        elif result != reference:
            raise SystemExit(f"lane mismatch on set_search: {result} != {reference}")
        rows.append((f"set exhaust n={n} r={r}", backend, seconds, result[2]))
    return rows


def bench_edge_kernel(k, ell, r, repeat):
    H = make_theta(ThetaSpec(k, ell))
    edges = H.sorted_edges()
    index = {e: i for i, e in enumerate(edges)}
    masks = []
    for copy in find_theta_copies(H, k, 2):
        mask = 0
        for e in copy.edge_set():
            mask |= 1 << index[e]
        masks.append(mask)
    args = (len(edges), r, tuple(sorted(masks)), (1,))

    rows = []
    reference = None
    for backend in kernels.available_backends():
        seconds, result = time_lane(
            lambda b=backend: kernels.edge_search(*args, backend=b), repeat
        )
        if reference is None:
            reference = result
        elif result != reference:
            raise SystemExit(f"lane mismatch on edge_search: {result} != {reference}")
        rows.append(
            (f"edge search theta({k},{ell}) r={r}", backend, seconds, result[2])
        )
    return rows


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=16, help="Sidon set size (default 16)")
    parser.add_argument("--r", type=int, default=2, help="colors (default 2)")
    parser.add_argument("--repeat", type=int, default=3, help="timing repeats, best kept")
    args = parser.parse_args(argv)

    if "compiled" not in kernels.available_backends():
        print("note: compiled lane unavailable, timing the pure lane only", file=sys.stderr)

    rows = bench_set_kernel(args.n, args.r, args.repeat)
    rows += bench_edge_kernel(2, 5, args.r, args.repeat)

    width = max(len(r[0]) for r in rows)
    print(f"{'task':<{width}}  {'backend':<9} {'seconds':>10}  leaves")
    by_task = {}
    for task, backend, seconds, leaves in rows:
        print(f"{task:<{width}}  {backend:<9} {seconds:>10.4f}  {leaves}")
        by_task.setdefault(task, {})[backend] = seconds
    for task, lanes in by_task.items():
        if lanes.get("python", 0) >= 0.01 and lanes.get("compiled", 0) > 0:
            print(f"{task}: compiled is {lanes['python'] / lanes['compiled']:.1f}x faster")
    return 0


if __name__ == "__main__":
    sys.exit(main())
