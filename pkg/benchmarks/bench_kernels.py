#!/usr/bin/env python3
"""Benchmark the compiled kernels against their pure-Python twins.

Two workloads mirror the package's hot loops:

* batches of Smith reductions on small integer matrices of the kind the
  homology and class-group paths produce;
* congruence closures over generator action tables of the kind quotients
  and tensor products produce.

Run:  python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from monoidkit._kernels import closure_py, snf_py

try:
    from monoidkit._kernels import _closure_cy, _snf_cy

    HAVE_COMPILED = True
except ImportError:
    HAVE_COMPILED = False


def snf_workload(rng, count=400):
    mats = []
    for _ in range(count):
        rows = rng.randint(6, 24)
        cols = rng.randint(6, 30)
        mats.append(
            [
                [rng.choice((0, 0, 0, 1, -1)) for _ in range(cols)]
                for _ in range(rows)
            ]
        )
    return mats


def closure_workload(rng, count=300):
    jobs = []
    for _ in range(count):
        n = rng.randint(20, 200)
        gens = [[rng.randrange(n) for _ in range(n)] for _ in range(rng.randint(1, 3))]
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randint(1, n // 2))]
        jobs.append((n, gens, pairs))
    return jobs


def time_snf(impl, mats):
    t0 = time.perf_counter()
    acc = 0
    for m in mats:
        try:
            acc += len(impl.snf_diagonal(m))
        except OverflowError:
            acc += len(snf_py.snf_diagonal(m))
    return time.perf_counter() - t0, acc


def time_closure(impl, jobs):
    t0 = time.perf_counter()
    acc = 0
    for n, gens, pairs in jobs:
        acc += len(set(impl.closure(n, gens, pairs)))
    return time.perf_counter() - t0, acc


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=11)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    mats = snf_workload(rng)
    jobs = closure_workload(rng)

    rows = []
    for label, impl, fast in (
        ("smith reduction", snf_py, _snf_cy if HAVE_COMPILED else None),
        ("congruence closure", closure_py, _closure_cy if HAVE_COMPILED else None),
    ):
        timer = time_snf if label.startswith("smith") else time_closure
        data = mats if label.startswith("smith") else jobs
        pure = min(timer(impl, data)[0] for _ in range(args.repeat))
        if fast is not None:
            t_fast, check_fast = timer(fast, data)
            for _ in range(args.repeat - 1):
                t_fast = min(t_fast, timer(fast, data)[0])
            _, check_pure = timer(impl, data)
            assert check_fast == check_pure, "backends disagree"
            rows.append((label, pure, t_fast, pure / t_fast))
        else:
            rows.append((label, pure, None, None))

    print(f"{'workload':22} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>9}")
    for label, pure, fast, ratio in rows:
        if fast is None:
            print(f"{label:22} {pure:10.3f} {'-':>13} {'-':>9}")
        else:
            print(f"{label:22} {pure:10.3f} {fast:13.3f} {ratio:8.1f}x")
    if not HAVE_COMPILED:
        print("compiled kernels not built; showing pure timings only")


if __name__ == "__main__":
    main()
