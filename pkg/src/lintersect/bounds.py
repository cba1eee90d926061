"""Evaluate the intersection-bound theorems on a concrete family.

Every checker returns a full BoundReport even when the family fails the
theorem's hypotheses (researchers want to see near misses); slack >= 0 is
only guaranteed when hypotheses_ok is True.  Validation problems that make
the bound itself uncomputable (non-prime modulus, residues out of range,
s >= p) raise instead.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import comb

from . import ffpoly, setfam
from .errors import ParamOutOfRange
from .setfam import LevelStats, SetFamily


class TheoremId(enum.Enum):
    ABS_CLASSIC = "abs-classic"
    MULTILEVEL_NONSHADOW = "multilevel-nonshadow"
    MODULAR_MULTILEVEL = "modular-multilevel"
    COEFF_SENSITIVE = "coeff-sensitive"
    COEFF_SENSITIVE_NONSHADOW = "coeff-sensitive-nonshadow"
    ALMOST_INITIAL = "almost-initial"
    CONSECUTIVE = "consecutive"
    NONMODULAR_SUPPORT = "nonmodular-support"


@dataclass(frozen=True)
class BoundReport:
    """One theorem evaluated on one family, with all the intermediates."""

    theorem: TheoremId
    n: int
    p: int | None
    K: tuple[int, ...]
    L: tuple[int, ...]
    s: int
    r: int
    family_size: int
    hypotheses_ok: bool
    violated: tuple[str, ...]
    lhs: int
    rhs: int
    slack: int
    shadow_lhs: int
    shadow_rhs: int
    levels: tuple[LevelStats, ...]
    bsupp: tuple[int, ...] | None = None
    binomial_coeffs: tuple[int, ...] | None = None
    m: int | None = None
    extras: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {
            "theorem": self.theorem.value,
            "n": self.n,
            "p": self.p,
            "K": list(self.K),
            "L": list(self.L),
            "s": self.s,
            "r": self.r,
            "family_size": self.family_size,
            "hypotheses_ok": self.hypotheses_ok,
            "violated": list(self.violated),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "shadow_lhs": self.shadow_lhs,
            "shadow_rhs": self.shadow_rhs,
            "levels": [
                {"j": x.level, "shadow": x.shadow_count, "nonshadow": x.nonshadow_count}
                for x in self.levels
            ],
            "bsupp": list(self.bsupp) if self.bsupp is not None else None,
            "binomial_coeffs": (
                list(self.binomial_coeffs) if self.binomial_coeffs is not None else None
            ),
            "m": self.m,
        }
        d.update(self.extras)
        return d


def abs_bound(n: int, s: int, r: int) -> int:
    """N(n,s,r) = C(n,s) + C(n,s-1) + ... + C(n,s-r+1)."""
    if not 1 <= r <= s <= n:
        raise ParamOutOfRange(f"need 1 <= r <= s <= n, got n={n}, s={s}, r={r}")
    return _top_levels_sum(n, s, r)


def _top_levels_sum(n: int, s: int, r: int) -> int:
    return sum(comb(n, i) for i in range(s - r + 1, s + 1) if i >= 0)


def unattainability_margin(n: int, s: int, r: int, p: int) -> int:
    """How far the consecutive-residue ceiling C(n,s) sits below N(n,s,r)."""
    ffpoly.check_prime(p)
    if not (2 <= r <= s <= p - 1 and n >= s):
        raise ParamOutOfRange(f"need 2 <= r <= s <= p-1 and n >= s, got {(n, s, r, p)}")
    return _top_levels_sum(n, s, r) - comb(n, s)


def _exact_shape_violations(K, L) -> list[str]:
    s, r = len(L), len(K)
    out = []
    if s < 1:
        out.append("s-zero: L is empty")
    if r < 1:
        out.append("K-empty: no admissible sizes")
    if r > s >= 1:
        out.append(f"r-exceeds-s: |K|={r} > |L|={s}")
    for k in K:
        if k <= s - r:
            out.append(f"low-level-size: k={k} <= s-r={s - r}")
    return out


def _family_violations(F: SetFamily, K, L, p=None) -> list[str]:
    out = []
    size_check = setfam.check_sizes(F, K, p)
    if not size_check:
        out.append(f"size-outside-K: {size_check.detail}")
    inter_check = setfam.check_L_intersecting(F, L, p)
    if not inter_check:
        out.append(f"intersection-outside-L: {inter_check.detail}")
    return out


def _report(theorem, F, K, L, p, levels, rhs, *, with_nonshadows, violated,
            bsupp=None, coeffs=None, m=None, extras=None) -> BoundReport:
    stats = tuple(setfam.level_stats(F, levels))
    shadow_rhs = sum(x.shadow_count for x in stats)
    lhs = len(F) + (sum(x.nonshadow_count for x in stats) if with_nonshadows else 0)
    return BoundReport(
        theorem=theorem,
        n=F.n,
        p=p,
        K=tuple(sorted(set(K))),
        L=tuple(sorted(set(L))),
        s=len(set(L)),
        r=len(set(K)),
        family_size=len(F),
        hypotheses_ok=not violated,
        violated=tuple(violated),
        lhs=lhs,
        rhs=rhs,
        slack=rhs - lhs,
        shadow_lhs=len(F),
        shadow_rhs=shadow_rhs,
        levels=stats,
        bsupp=bsupp,
        binomial_coeffs=coeffs,
        m=m,
        extras=extras or {},
    )


def check_abs_classic(F: SetFamily, K, L) -> BoundReport:
    """|F| <= N(n,s,r) under sizes-in-K, L-intersecting, k > s-r."""
    K, L = ffpoly.residue_set(K), ffpoly.residue_set(L)
    s, r = len(L), len(K)
    violated = _exact_shape_violations(K, L) + _family_violations(F, K, L)
    levels = range(max(0, s - r + 1), s + 1)
    rhs = _top_levels_sum(F.n, s, r)
    return _report(TheoremId.ABS_CLASSIC, F, K, L, None, levels, rhs,
                   with_nonshadows=False, violated=violated)


def check_multilevel(F: SetFamily, K, L) -> BoundReport:
    """|F| + sum of top-level non-shadows <= N(n,s,r) (exact setting)."""
    K, L = ffpoly.residue_set(K), ffpoly.residue_set(L)
    s, r = len(L), len(K)
    violated = _exact_shape_violations(K, L) + _family_violations(F, K, L)
    levels = range(max(0, s - r + 1), s + 1)
    rhs = _top_levels_sum(F.n, s, r)
    return _report(TheoremId.MULTILEVEL_NONSHADOW, F, K, L, None, levels, rhs,
                   with_nonshadows=True, violated=violated)


def _modular_shape_violations(K, L, p) -> list[str]:
    s, r = len(L), len(K)
    out = []
    if s < 1:
        out.append("s-zero: L is empty")
    if r < 1:
        out.append("K-empty: no admissible sizes")
    if set(K) & set(L):
        out.append(f"K-L-not-disjoint: shared residues {sorted(set(K) & set(L))}")
    if r > s >= 1:
        out.append(f"r-exceeds-s: |K|={r} > |L|={s}")
    for k in K:
        if k <= s - r:
            out.append(f"low-level-size: k={k} <= s-r={s - r}")
    return out


def check_modular_multilevel(F: SetFamily, K, L, p: int) -> BoundReport:
    """The mod-p variant of the multilevel theorem (conditions (i)-(ii) mod p)."""
    K, L = ffpoly.residue_set(K, p), ffpoly.residue_set(L, p)
    s, r = len(L), len(K)
    violated = _modular_shape_violations(K, L, p) + _family_violations(F, K, L, p)
    levels = range(max(0, s - r + 1), s + 1)
    rhs = _top_levels_sum(F.n, s, r)
    return _report(TheoremId.MODULAR_MULTILEVEL, F, K, L, p, levels, rhs,
                   with_nonshadows=True, violated=violated)


def _coeff_violations(K, L, p) -> list[str]:
    s = len(L)
    out = []
    if not 1 <= s <= p - 1:
        out.append(f"s-out-of-range: need 1 <= s <= p-1, s={s}")
    if set(K) & set(L):
        out.append(f"K-L-not-disjoint: shared residues {sorted(set(K) & set(L))}")
    return out


def check_coeff_sensitive(F: SetFamily, K, L, p: int,
                          with_nonshadows: bool = False) -> BoundReport:
    """|F| (+ non-shadows on active levels) <= sum of C(n,j) over bsupp(L)."""
    K, L = ffpoly.residue_set(K, p), ffpoly.residue_set(L, p)
    violated = _coeff_violations(K, L, p) + _family_violations(F, K, L, p)
    exp = ffpoly.to_binomial_basis(ffpoly.annihilator_poly(L, p), len(L), p)
    support = exp.support()
    rhs = sum(comb(F.n, j) for j in support)
    theorem = (TheoremId.COEFF_SENSITIVE_NONSHADOW if with_nonshadows
               else TheoremId.COEFF_SENSITIVE)
    return _report(theorem, F, K, L, p, support, rhs,
                   with_nonshadows=with_nonshadows, violated=violated,
                   bsupp=support, coeffs=exp.coeffs)


def check_almost_initial(F: SetFamily, K, L, p: int) -> BoundReport:
    """Collapse bound sum_{i<=m} C(n,s-i) for L = initial segment + m extras.

    Uses the smallest valid m (the strongest form); the refined lhs adds the
    non-shadow counts on the actual support levels.
    """
    K, L = ffpoly.residue_set(K, p), ffpoly.residue_set(L, p)
    s = len(L)
    violated = _coeff_violations(K, L, p) + _family_violations(F, K, L, p)
    m, R = ffpoly.is_almost_initial(L, p)
    exp = ffpoly.to_binomial_basis(ffpoly.annihilator_poly(L, p), s, p)
    support = exp.support()
    rhs = sum(comb(F.n, s - i) for i in range(m + 1) if s - i >= 0)
    return _report(TheoremId.ALMOST_INITIAL, F, K, L, p, support, rhs,
                   with_nonshadows=True, violated=violated,
                   bsupp=support, coeffs=exp.coeffs, m=m,
                   extras={"R": list(R)})


def check_consecutive(F: SetFamily, K, L, p: int) -> BoundReport:
    """Sharp ceiling C(n,s) for the consecutive pattern L = {0,..,s-1}."""
    K, L = ffpoly.residue_set(K, p), ffpoly.residue_set(L, p)
    s = len(L)
    violated = _coeff_violations(K, L, p) + _family_violations(F, K, L, p)
    if L != tuple(range(s)):
        violated.append(f"L-not-consecutive: {list(L)} != 0..{s - 1}")
    if s < 2:
        violated.append(f"s-too-small: consecutive ceiling needs s >= 2, s={s}")
    exp = ffpoly.to_binomial_basis(ffpoly.annihilator_poly(L, p), s, p)
    support = exp.support()
    rhs = comb(F.n, s)
    return _report(TheoremId.CONSECUTIVE, F, K, L, p, support, rhs,
                   with_nonshadows=True, violated=violated,
                   bsupp=support, coeffs=exp.coeffs)


def check_nonmodular_support(F: SetFamily, K, L) -> BoundReport:
    """Integer-domain support bound: only K and L disjoint is assumed.

    The slack >= 0 claim here is checked empirically by the test suite rather
    than trusted; a concrete violation is treated as a build-stopping event.
    """
    K, L = ffpoly.residue_set(K), ffpoly.residue_set(L)
    s = len(L)
    violated = []
    if s < 1:
        violated.append("s-zero: L is empty")
    if len(K) < 1:
        violated.append("K-empty: no admissible sizes")
    if set(K) & set(L):
        violated.append(f"K-L-not-disjoint: shared values {sorted(set(K) & set(L))}")
    violated += _family_violations(F, K, L)
    exp = ffpoly.to_binomial_basis(ffpoly.annihilator_poly(L), s)
    support = exp.support()
    rhs = sum(comb(F.n, j) for j in support)
    return _report(TheoremId.NONMODULAR_SUPPORT, F, K, L, None, support, rhs,
                   with_nonshadows=True, violated=violated,
                   bsupp=support, coeffs=exp.coeffs)
