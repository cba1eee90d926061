"""Kernel backend selection and the shared search drivers built on top.

The compiled extension (_ckernels) is preferred when importable; setting
LINTERSECT_PURE=1 forces the pure-Python twin.  Both expose the same two
entry points with identical semantics, so everything above this layer is
backend-agnostic.
"""

from __future__ import annotations

import os
from time import monotonic

if os.environ.get("LINTERSECT_PURE", "0") not in ("", "0"):
    from . import _pykernels as _impl

    BACKEND = "pure"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _pykernels as _impl

        BACKEND = "pure"


def max_clique(
    neighbors: list[int],
    *,
    cand_mask: int | None = None,
    lower: int = 0,
    cutoff: int | None = None,
    deadline: float | None = None,
):
    """(best_size, best_mask, nodes, completed) for the selected backend."""
    if cand_mask is None:
        cand_mask = (1 << len(neighbors)) - 1
    return _impl.max_clique_core(
        neighbors,
        cand_mask,
        lower,
        -1 if cutoff is None else cutoff,
        -1.0 if deadline is None else deadline,
    )


def clique_at_least(neighbors, cand_mask: int, k: int, deadline: float | None):
    """Decision: is there a clique of size >= k inside cand_mask?

    Returns (verdict, nodes); verdict is None on timeout.
    """
    if k <= 0:
        return True, 0
    if k == 1:
        return cand_mask != 0, 0
    size, _, nodes, completed = max_clique(
        neighbors, cand_mask=cand_mask, lower=k - 1, cutoff=k, deadline=deadline
    )
    if size >= k:
        return True, nodes
    return (False if completed else None), nodes


def lex_min_clique(neighbors, omega: int, deadline: float | None):
    """Lexicographically least clique of size omega, as ascending vertex ids.

    Greedy: pick the smallest feasible vertex, restrict candidates to later
    neighbors, repeat.  Feasibility is an exact decision search.  Returns
    (vertices, nodes) or (None, nodes) on timeout.
    """
    total_nodes = 0
    chosen: list[int] = []
    pool = (1 << len(neighbors)) - 1
    need = omega
    while need > 0:
        m = pool
        advanced = False
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            sub = pool & neighbors[v] & ~((1 << (v + 1)) - 1)
            verdict, nodes = clique_at_least(neighbors, sub, need - 1, deadline)
            total_nodes += nodes
            if verdict is None:
                return None, total_nodes
            if verdict:
                chosen.append(v)
                pool = sub
                need -= 1
                advanced = True
                break
        if not advanced:
            raise AssertionError("no clique of the requested size exists")
    return chosen, total_nodes


def rank_mod_p(rows, p: int) -> int:
    """Exact rank over F_p; large moduli fall back to the pure kernel."""
    if BACKEND == "compiled" and p < 2**31:
        return _impl.rank_mod_p(rows, p)
    from . import _pykernels

    return _pykernels.rank_mod_p(rows, p)


def time_deadline(budget_s: float | None) -> float | None:
    return None if budget_s is None else monotonic() + budget_s
