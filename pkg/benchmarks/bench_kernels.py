#!/usr/bin/env python3
"""Benchmark the compiled batch-scoring kernels against the numpy fallback.

Shapes mirror the default experiment scale: a 1000-input pool, 25 mask
samples, 10 classes, batches up to 4 (joint tables up to 10^4 label
configurations).

Run:  python3 benchmarks/bench_kernels.py
"""

import time

import numpy as np

from akdsim import _kernels
from akdsim._kernels import fallback


def time_call(fn, *args, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def simplex(rng, *shape):
    return np.ascontiguousarray(rng.dirichlet(np.ones(shape[-1]), size=shape[:-1]))


def main():
    rng = np.random.default_rng(0)
    u, s, k = 1000, 25, 10
    impls = [("numpy", fallback)]
    if _kernels.compiled is not None:
        impls.append(("cython", _kernels.compiled))
    else:
        print("extension not built; benchmarking the fallback only")
    print(f"active implementation at import: {_kernels.IMPLEMENTATION}\n")

    print("mixture_joint_entropy: greedy step scoring, prefix of size b-1")
    print(f"{'b':>2} {'configs':>8}" + "".join(f" {name:>12}" for name, _ in impls) + "  speedup")
    for b in (2, 3, 4):
        joint = simplex(rng, s, k ** (b - 1))
        cand = simplex(rng, u, s, k)
        times = [time_call(impl.mixture_joint_entropy, joint, cand) for _, impl in impls]
        speed = f"{times[0] / times[-1]:.2f}x" if len(times) > 1 else "-"
        print(f"{b:>2} {k ** b:>8}" + "".join(f" {t * 1e3:>10.2f}ms" for t in times) + f"  {speed}")

    print("\nchain_joint_entropy: codec-aware scoring, all slots per candidate")
    print(f"{'b':>2} {'configs':>8}" + "".join(f" {name:>12}" for name, _ in impls) + "  speedup")
    for b in (2, 3, 4):
        tables = simplex(rng, u, b, s, k)
        times = [time_call(impl.chain_joint_entropy, tables) for _, impl in impls]
        speed = f"{times[0] / times[-1]:.2f}x" if len(times) > 1 else "-"
        print(f"{b:>2} {k ** b:>8}" + "".join(f" {t * 1e3:>10.2f}ms" for t in times) + f"  {speed}")


if __name__ == "__main__":
    main()
