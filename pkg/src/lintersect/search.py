"""Exhaustive and branch-and-bound search for maximum admissible families.

An admissible family is a clique in the compatibility graph whose vertices
are the size-admissible subsets and whose edges join pairs meeting the
intersection condition.  The solver is exact at desk scale: greedy-coloring
upper bounds, an optional theorem-derived global cutoff, and a deterministic
lexicographically-least witness among co-optimal families.  Timeouts are a
first-class result, never a crash.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from time import monotonic

from . import _config, _kernels, bounds, ffpoly, setfam
from .errors import BoundViolation, SearchCapExceeded
from .setfam import SetFamily


@dataclass(frozen=True)
class SearchProblem:
    """Size condition K, intersection condition L, exact when p is None."""

    n: int
    K: tuple[int, ...]
    L: tuple[int, ...]
    p: int | None = None


def make_problem(n: int, K, L, p: int | None = None,
                 cap: int | None = None) -> SearchProblem:
    cap = _config.search_cap() if cap is None else cap
    if n > cap:
        raise SearchCapExceeded(f"n = {n} exceeds search cap {cap}")
    return SearchProblem(n, ffpoly.residue_set(K, p), ffpoly.residue_set(L, p), p)


@dataclass(frozen=True)
class SearchResult:
    max_size: int
    witness: SetFamily
    nodes_explored: int
    vertex_count: int
    bound_used: int | None
    bound_theorem: str | None
    proof_of_optimality: bool
    elapsed_s: float

    def to_dict(self) -> dict:
        return {
            "max_size": self.max_size,
            "witness": self.witness.as_elements(),
            "nodes_explored": self.nodes_explored,
            "vertex_count": self.vertex_count,
            "bound_used": self.bound_used,
            "bound_theorem": self.bound_theorem,
            "proof_of_optimality": self.proof_of_optimality,
            "elapsed_s": round(self.elapsed_s, 4),
        }


def admissible_vertices(problem: SearchProblem) -> SetFamily:
    """All subsets of [n] meeting the size condition, canonical order."""
    allowed = set(problem.K)
    masks = []
    for size in range(problem.n + 1):
        ok = (size % problem.p in allowed) if problem.p is not None else size in allowed
        if not ok:
            continue
        for bits in combinations(range(problem.n), size):
            m = 0
            for b in bits:
                m |= 1 << b
            masks.append(m)
    return SetFamily(problem.n, tuple(masks))


def _pair_compatible(problem: SearchProblem, a: int, b: int) -> bool:
    size = (a & b).bit_count()
    if problem.p is not None:
        size %= problem.p
    return size in set(problem.L)


def compatibility_graph(problem: SearchProblem) -> tuple[list[int], list[int]]:
    """(vertex masks in canonical order, adjacency bitmasks)."""
    verts = list(admissible_vertices(problem).members)
    allowed = set(problem.L)
    p = problem.p
    nbr = [0] * len(verts)
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            size = (verts[i] & verts[j]).bit_count()
            if (size % p if p is not None else size) in allowed:
                nbr[i] |= 1 << j
                nbr[j] |= 1 << i
    return verts, nbr


def problem_bound(problem: SearchProblem) -> tuple[int | None, str | None]:
    """Tightest proven theorem bound applying to every admissible family.

    Only proven statements prune: the exact multilevel bound, the modular
    multilevel bound, and the coefficient-sensitive modular bound.  The
    integer-domain support bound is checked empirically elsewhere and is
    deliberately never used here.
    """
    n, K, L, p = problem.n, problem.K, problem.L, problem.p
    s, r = len(L), len(K)
    candidates: list[tuple[int, str]] = []
    if p is None:
        if 1 <= r <= s and all(k > s - r for k in K):
            candidates.append(
                (sum(comb(n, i) for i in range(s - r + 1, s + 1)),
                 bounds.TheoremId.MULTILEVEL_NONSHADOW.value)
            )
    else:
        if 1 <= s <= p - 1 and not set(K) & set(L) and K:
            support = ffpoly.bsupp(L, p)
            candidates.append(
                (sum(comb(n, j) for j in support),
                 bounds.TheoremId.COEFF_SENSITIVE.value)
            )
            if r <= s and all(k > s - r for k in K):
                candidates.append(
                    (sum(comb(n, i) for i in range(s - r + 1, s + 1)),
                     bounds.TheoremId.MODULAR_MULTILEVEL.value)
                )
    if not candidates:
        return None, None
    return min(candidates)


def _greedy_clique(nbr: list[int]) -> list[int]:
    chosen: list[int] = []
    mask = (1 << len(nbr)) - 1
    for v in range(len(nbr)):
        if mask >> v & 1:
            chosen.append(v)
            mask &= nbr[v]
    return chosen


def max_family(problem: SearchProblem, time_budget: float | None = None,
               use_theorem_cutoff: bool = True) -> SearchResult:
    """Maximum admissible family, with the lexicographically least witness."""
    t0 = monotonic()
    budget = _config.time_budget() if time_budget is None else time_budget
    deadline = None if budget is None else t0 + budget

    verts, nbr = compatibility_graph(problem)
    v_count = len(verts)
    bound, bound_name = problem_bound(problem)
    cutoff = bound if use_theorem_cutoff else None

    def result(size, vertex_ids, nodes, optimal):
        fam = SetFamily(problem.n, tuple(verts[v] for v in vertex_ids))
        return SearchResult(size, fam, nodes, v_count, bound, bound_name,
                            optimal, monotonic() - t0)

    if v_count == 0:
        return result(0, [], 0, True)

    greedy = _greedy_clique(nbr)
    if deadline is not None and monotonic() > deadline:
        return result(len(greedy), greedy, 0, False)

    total_nodes = 0
    if cutoff is not None and len(greedy) >= cutoff:
        # The theorem bound certifies the greedy family is already maximum.
        size, best_ids = len(greedy), greedy
        completed = True
    else:
        size, best_mask, nodes, completed = _kernels.max_clique(
            nbr, lower=len(greedy), cutoff=cutoff, deadline=deadline
        )
        total_nodes += nodes
        if size > len(greedy):
            best_ids = [v for v in range(v_count) if best_mask >> v & 1]
        else:
            size, best_ids = len(greedy), greedy
    if not completed:
        return result(size, best_ids, total_nodes, False)

    lex_ids, nodes = _kernels.lex_min_clique(nbr, size, deadline)
    total_nodes += nodes
    if lex_ids is None:
        return result(size, best_ids, total_nodes, True)
    return result(size, lex_ids, total_nodes, True)


@dataclass(frozen=True)
class SharpnessRow:
    n: int
    s: int
    r: int
    bound: int
    attained: int
    optimal: bool
    nodes: int

    def to_dict(self) -> dict:
        return {"n": self.n, "s": self.s, "r": self.r, "bound": self.bound,
                "attained": self.attained, "optimal": self.optimal,
                "nodes": self.nodes}


def sharpness_sweep(n_max: int, s_max: int,
                    time_budget: float | None = None) -> list[SharpnessRow]:
    """Confirm the top-level union attains N(n,s,r) for consecutive L."""
    rows = []
    for n in range(1, n_max + 1):
        for s in range(1, min(s_max, n) + 1):
            for r in range(1, s + 1):
                problem = make_problem(
                    n, range(s - r + 1, s + 1), range(s), p=None
                )
                res = max_family(problem, time_budget=time_budget)
                target = bounds.abs_bound(n, s, r)
                if res.proof_of_optimality and res.max_size != target:
                    raise BoundViolation(
                        f"sharpness failed at (n={n}, s={s}, r={r}): "
                        f"max {res.max_size} != N = {target}"
                    )
                rows.append(SharpnessRow(n, s, r, target, res.max_size,
                                         res.proof_of_optimality,
                                         res.nodes_explored))
    return rows


@dataclass(frozen=True)
class UnattainabilityRow:
    p: int
    n: int
    s: int
    r: int
    K: tuple[int, ...]
    max_size: int
    level_bound: int
    abs_bound: int
    optimal: bool

    def to_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "s": self.s, "r": self.r,
                "K": list(self.K), "max_size": self.max_size,
                "level_bound": self.level_bound, "abs_bound": self.abs_bound,
                "optimal": self.optimal}


def unattainability_sweep(p: int, n_max: int,
                          time_budget: float | None = None) -> list[UnattainabilityRow]:
    """For consecutive residues, verify max families sit at or below C(n,s),
    strictly under the modular ABS bound N(n,s,r).

    The theorem cutoff is disabled so the search genuinely measures the
    maximum; a family beyond C(n,s) would be a counterexample and aborts.
    """
    ffpoly.check_prime(p)
    rows = []
    for s in range(2, p):
        L = tuple(range(s))
        others = [x for x in range(s, p)]
        for n in range(s, n_max + 1):
            for r in range(2, s + 1):
                for extra in combinations([x for x in others if x != s], r - 1):
                    K = tuple(sorted((s,) + extra))
                    problem = make_problem(n, K, L, p=p)
                    res = max_family(problem, time_budget=time_budget,
                                     use_theorem_cutoff=False)
                    level_bound = comb(n, s)
                    if res.max_size > level_bound:
                        raise BoundViolation(
                            f"consecutive-residue ceiling violated at "
                            f"(p={p}, n={n}, s={s}, K={K}): found family of "
                            f"size {res.max_size} > C(n,s) = {level_bound}"
                        )
                    rows.append(UnattainabilityRow(
                        p, n, s, r, K, res.max_size, level_bound,
                        bounds.abs_bound(n, s, r), res.proof_of_optimality
                    ))
    return rows
