#!/usr/bin/env python3
"""Benchmark the uniformity sweep: numba kernel vs pure-numpy fallback.

The sweep enumerates all q^n - 1 stabilizer exponent vectors, which
dominates verification time, so this is the comparison that matters.
Run from the repo root:

    python3 benchmarks/bench_sweep.py

Setting KUNIGRAPH_DISABLE_NUMBA=1 would hide the numba column entirely;
this script imports both paths explicitly instead.
"""

import time

from kunigraph import _kernels
from kunigraph.codes import mds_code
from kunigraph.field import PrimeField
from kunigraph.graph import HierarchySpec, bipartite_adjacency, hierarchy_adjacency


def instances():
    f5 = PrimeField(5)
    f7 = PrimeField(7)
    yield "GF(5) n=6 bipartite", bipartite_adjacency(mds_code(f5, 6, 2)).gamma.entries, 5
    yield "GF(5) n=6 two-level", hierarchy_adjacency(
        HierarchySpec(f5, ((6, 2), (2, 1)))
    ).gamma.entries, 5
    yield "GF(7) n=7 bipartite", bipartite_adjacency(mds_code(f7, 7, 3)).gamma.entries, 7
    yield "GF(7) n=8 bipartite", bipartite_adjacency(mds_code(f7, 8, 2)).gamma.entries, 7


def timed(fn, *args, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return result, best


def main():
    if not _kernels.HAS_NUMBA:
        print("numba unavailable or disabled; benchmarking the numpy path only")
    print(f"{'instance':<24} {'vectors':>10} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    for name, gamma, q in instances():
        n = gamma.shape[0]
        total = q**n - 1
        res_np, t_np = timed(_kernels.min_support_numpy, gamma, q)
        if _kernels.HAS_NUMBA:
            _kernels.min_support_numba(gamma, q)  # warm the jit once
            res_nb, t_nb = timed(_kernels.min_support_numba, gamma, q)
            assert res_nb == res_np, (name, res_nb, res_np)
            print(
                f"{name:<24} {total:>10} {t_np * 1e3:>8.1f}ms {t_nb * 1e3:>8.1f}ms "
                f"{t_np / t_nb:>7.1f}x"
            )
        else:
            print(f"{name:<24} {total:>10} {t_np * 1e3:>8.1f}ms {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
