#!/usr/bin/env python3
"""Benchmark the compiled rank kernels against the pure-Python fallback.

Workloads:
  * mult-maps -- real multiplication-map matrices collected from a slice of
    the (3, 5) WLP campaign, the hot loop of the verification harness;
  * random-9 / random-99 -- square integer matrices with entries in [-9, 9]
    and [-99, 99] (the latter overflows the 62-bit window at size 25, which
    charges the compiled path with its big-integer retries).

Usage: python benchmarks/bench_rank.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from lefschetz_props import _kernels, _ranks_py
from lefschetz_props.harness import SearchSpec, iter_support_masks, ideal_from_mask
from lefschetz_props.ideals import socle_degree
from lefschetz_props.lefschetz import _build_monomial_rows, ones_form

try:
    from lefschetz_props import _core
except ImportError:
    _core = None


def campaign_matrices(limit: int = 400):
    """Multiplication-map matrices from the start of the (3, 5) campaign."""
    out = []
    spec = SearchSpec(3, 5, 0, 11, symmetry=True)
    ell = ones_form(3)
    for mask in iter_support_masks(spec):
        I = ideal_from_mask(3, 5, mask)
        e = socle_degree(I)
        for j in range(4, e + 1):
            rows, nrows, ncols, _ = _build_monomial_rows(I, ell, 1, j)
            if nrows and ncols:
                out.append((rows, ncols))
        if len(out) >= limit:
            break
    return out[:limit]


def random_matrices(count: int, size: int, spread: int, seed: int):
    rng = random.Random(seed)
    return [
        ([[rng.randint(-spread, spread) for _ in range(size)] for _ in range(size)], size)
        for _ in range(count)
    ]


def time_kernel(fn, matrices, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for rows, ncols in matrices:
            fn(rows, ncols)
        best = min(best, time.perf_counter() - t0)
    return best


def checked_rank(kernel):
    """Exact-rank wrapper with the same retry the dispatcher applies."""

    def fn(rows, ncols):
        r = kernel.rank_i64(rows, ncols)
        if r < 0:
            r = _ranks_py.rank_i64(rows, ncols)
        return r

    return fn


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--campaign-size", type=int, default=400)
    args = parser.parse_args()

    workloads = {
        "mult-maps (3,5)": campaign_matrices(args.campaign_size),
        "random-9 12x12": random_matrices(200, 12, 9, seed=1),
        "random-99 25x25": random_matrices(60, 25, 99, seed=2),
    }
    prime = _kernels.WORD_PRIME

    print(f"active backend: {_kernels.BACKEND}")
    if _core is None:
        print("compiled extension unavailable; timing the pure kernels only\n")
    header = f"{'workload':<18} {'matrices':>8} {'kernel':<22} {'best (s)':>10} {'per rank':>12}"
    print(header)
    print("-" * len(header))
    for name, matrices in workloads.items():
        rows = [("pure rank", checked_rank(_ranks_py)),
                ("pure rank_mod", lambda r, c: _ranks_py.rank_mod(r, c, prime))]
        if _core is not None:
            rows += [("compiled rank", checked_rank(_core)),
                     ("compiled rank_mod", lambda r, c: _core.rank_mod(r, c, prime))]
        timings = {}
        for label, fn in rows:
            timings[label] = time_kernel(fn, matrices, args.repeat)
        for label in sorted(timings):
            t = timings[label]
            per = t / len(matrices)
            print(f"{name:<18} {len(matrices):>8} {label:<22} {t:>10.4f} {per * 1e6:>9.1f} us")
        if _core is not None:
            speedup = timings["pure rank"] / timings["compiled rank"]
            speedup_mod = timings["pure rank_mod"] / timings["compiled rank_mod"]
            print(f"{'':<18} {'':>8} speedup: rank x{speedup:.1f}, rank_mod x{speedup_mod:.1f}")
        print()

    # agreement spot check across lanes
    if _core is not None:
        for name, matrices in workloads.items():
            for rows_, ncols in matrices[:50]:
                assert checked_rank(_core)(rows_, ncols) == _ranks_py.rank_i64(rows_, ncols)
        print("agreement check: compiled and pure ranks identical on sampled matrices")


if __name__ == "__main__":
    main()
