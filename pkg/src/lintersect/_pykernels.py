"""Pure-Python hot kernels: exact max-clique search and rank over F_p.

These mirror the compiled kernels in _ckernels.pyx step for step (same
branching order, same coloring, same node counting), so both backends give
identical answers and identical node counts.  Vertices live in arbitrary-width
Python-int bitmasks here; the compiled twin uses uint64 word arrays.
"""

from __future__ import annotations

import sys
from time import monotonic

_TIME_CHECK_MASK = 0x3FF  # poll the clock every 1024 nodes


def max_clique_core(
    neighbors: list[int],
    cand_mask: int,
    lower: int,
    cutoff: int,
    deadline: float,
):
    """Branch-and-bound maximum clique within the candidate set.

    neighbors[v] is the adjacency bitmask of vertex v (symmetric, no self
    loop).  Search starts from best = lower; a witness mask is reported only
    for cliques strictly larger.  cutoff >= 0 stops the search as soon as
    best >= cutoff (the caller promises it is a sound upper bound).
    deadline < 0 disables the clock.

    Returns (best_size, best_mask, nodes, completed); completed is False only
    on timeout.
    """
    state = [lower, 0, 0, False]  # best, best_mask, nodes, aborted

    def expand(rmask: int, rsize: int, P: int) -> bool:
        # Returns True when the caller should unwind (cutoff or timeout).
        state[2] += 1
        if deadline >= 0.0 and state[2] & _TIME_CHECK_MASK == 0 and monotonic() > deadline:
            state[3] = True
            return True
        # Greedy coloring of P in increasing vertex order; color classes are
        # independent sets, so rsize + color bounds any clique through here.
        order: list[int] = []
        colors: list[int] = []
        uncolored = P
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                v = (avail & -avail).bit_length() - 1
                order.append(v)
                colors.append(color)
                bit = 1 << v
                uncolored ^= bit
                avail &= ~(neighbors[v] | bit)
        for i in range(len(order) - 1, -1, -1):
            v = order[i]
            if rsize + colors[i] <= state[0]:
                return False
            bit = 1 << v
            new_p = P & neighbors[v]
            if rsize + 1 > state[0]:
                state[0] = rsize + 1
                state[1] = rmask | bit
                if cutoff >= 0 and state[0] >= cutoff:
                    return True
            if new_p:
                if expand(rmask | bit, rsize + 1, new_p):
                    return True
            P &= ~bit
        return False

    if cand_mask:
        # Recursion depth is bounded by the largest clique (<= vertex count).
        need = len(neighbors) + 100
        if sys.getrecursionlimit() < need:
            sys.setrecursionlimit(need + 1000)
        expand(0, 0, cand_mask)
    return state[0], state[1], state[2], not state[3]


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank over F_p by Gaussian elimination with modular inverses."""
    mat = [[x % p for x in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    rank = 0
    for c in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if mat[r][c]:
                piv = r
                break
        if piv < 0:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        top = mat[rank]
        inv = pow(top[c], -1, p)
        for j in range(c, ncols):
            top[j] = top[j] * inv % p
        for r in range(rank + 1, nrows):
            f = mat[r][c]
            if f:
                row = mat[r]
                for j in range(c, ncols):
                    row[j] = (row[j] - f * top[j]) % p
        rank += 1
        if rank == nrows:
            break
    return rank
