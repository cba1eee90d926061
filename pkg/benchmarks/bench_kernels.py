#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python twins.

Instances: random graphs at several sizes/densities, the compatibility graph
of a real search problem, and dense F_p matrices.  Both backends run the
identical algorithm, so the answers must agree; only the wall time differs.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

import os
import sys
import time
from random import Random

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from lintersect import _pykernels  # noqa: E402

try:
    from lintersect import _ckernels
except ImportError:
    _ckernels = None

from lintersect import search  # noqa: E402


def random_graph(rng, V, density):
    nbr = [0] * V
    for i in range(V):
        for j in range(i + 1, V):
            if rng.random() < density:
                nbr[i] |= 1 << j
                nbr[j] |= 1 << i
    return nbr


def time_call(fn, *args, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return result, best


def bench_clique(quick):
    rng = Random(2024)
    cases = [("random V=40 d=0.7", random_graph(rng, 40, 0.7))]
    if not quick:
        cases += [
            ("random V=80 d=0.5", random_graph(rng, 80, 0.5)),
            ("random V=100 d=0.8", random_graph(rng, 100, 0.8)),
            ("random V=150 d=0.6", random_graph(rng, 150, 0.6)),
        ]
    prob = search.SearchProblem(9, (2, 3, 4), (0, 1, 2), None)
    _, nbr = search.compatibility_graph(prob)
    cases.append((f"search graph n=9 V={len(nbr)}", nbr))

    print(f"{'max-clique instance':<28} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for name, nbr in cases:
        full = (1 << len(nbr)) - 1
        res_py, t_py = time_call(
            _pykernels.max_clique_core, nbr, full, 0, -1, -1.0, repeats=1
        )
        if _ckernels is None:
            print(f"{name:<28} {t_py:>9.3f}s {'n/a':>10} {'':>9}")
            continue
        res_c, t_c = time_call(
            _ckernels.max_clique_core, nbr, full, 0, -1, -1.0, repeats=1
        )
        assert res_py == res_c, f"backend mismatch on {name}"
        print(f"{name:<28} {t_py:>9.3f}s {t_c:>9.3f}s {t_py / t_c:>8.1f}x"
              f"   (omega={res_py[0]}, nodes={res_py[2]})")


def bench_rank(quick):
    rng = Random(77)
    shapes = [(120, 200)] if quick else [(120, 200), (250, 400), (400, 600)]
    print(f"\n{'rank mod p instance':<28} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for nr, nc in shapes:
        p = 13
        rows = [[rng.randrange(p) for _ in range(nc)] for _ in range(nr)]
        r_py, t_py = time_call(_pykernels.rank_mod_p, rows, p, repeats=1)
        name = f"dense {nr}x{nc} mod {p}"
        if _ckernels is None:
            print(f"{name:<28} {t_py:>9.3f}s {'n/a':>10}")
            continue
        r_c, t_c = time_call(_ckernels.rank_mod_p, rows, p, repeats=1)
        assert r_py == r_c
        print(f"{name:<28} {t_py:>9.3f}s {t_c:>9.3f}s {t_py / t_c:>8.1f}x"
              f"   (rank={r_py})")


def main():
    quick = "--quick" in sys.argv
    if _ckernels is None:
        print("compiled kernels not available; timing pure backend only\n")
    bench_clique(quick)
    bench_rank(quick)


if __name__ == "__main__":
    main()
