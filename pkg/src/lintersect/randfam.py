"""Seeded random generation of hypothesis-satisfying families and parameters.

Families are grown greedily over a shuffled vertex order, so conditions
(i)-(ii) hold by construction.  All entropy comes from the caller's
random.Random instance; there is no hidden randomness.
"""

from __future__ import annotations

from random import Random

from . import search
from .setfam import SetFamily


def random_admissible_family(rng: Random, n: int, K, L, p: int | None = None,
                             target: int | None = None) -> SetFamily:
    """Random family meeting the size and intersection conditions.

    target caps the family size (drawn uniformly when omitted), so the
    output ranges from empty to maximal.
    """
    problem = search.SearchProblem(n, tuple(sorted(set(K))),
                                   tuple(sorted(set(L))), p)
    verts = list(search.admissible_vertices(problem).members)
    rng.shuffle(verts)
    if target is None:
        target = rng.randint(0, len(verts))
    chosen: list[int] = []
    allowed = set(problem.L)
    for v in verts:
        if len(chosen) >= target:
            break
        size_ok = True
        for c in chosen:
            inter = (v & c).bit_count()
            if (inter % p if p is not None else inter) not in allowed:
                size_ok = False
                break
        if size_ok:
            chosen.append(v)
    return SetFamily(n, tuple(chosen))


def random_multilevel_params(rng: Random, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(K, L) for the exact multilevel theorem: k > s-r for every k in K."""
    s = rng.randint(1, min(4, n))
    r = rng.randint(1, s)
    L = tuple(sorted(rng.sample(range(0, n), s)))
    pool = list(range(max(s - r + 1, 1), n + 1))  # size >= n-s+r >= r
    K = tuple(sorted(rng.sample(pool, r)))
    return K, L


def random_modular_params(rng: Random, p: int,
                          multilevel: bool = False) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(K, L) disjoint residue sets mod p; multilevel adds k > s-r for all k."""
    s = rng.randint(1, min(4, p - 1))
    L = tuple(sorted(rng.sample(range(p), s)))
    rest = [x for x in range(p) if x not in L]
    if multilevel:
        feasible = [
            r for r in range(1, s + 1)
            if len([x for x in rest if x > s - r]) >= r
        ]
        if not feasible:
            # e.g. L = {0,2} mod 3 admits no valid K; redraw (almost never loops)
            return random_modular_params(rng, p, multilevel=True)
        r = rng.choice(feasible)
        pool = [x for x in rest if x > s - r]
        K = tuple(sorted(rng.sample(pool, r)))
    else:
        r = rng.randint(1, len(rest))
        K = tuple(sorted(rng.sample(rest, r)))
    return K, L


def random_disjoint_params(rng: Random, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(K, L) nonnegative integers with K and L disjoint (exact support bound)."""
    s = rng.randint(1, min(4, n))
    L = tuple(sorted(rng.sample(range(0, n), s)))
    rest = [x for x in range(0, n + 1) if x not in L]
    r = rng.randint(1, min(3, len(rest)))
    K = tuple(sorted(rng.sample(rest, r)))
    return K, L
