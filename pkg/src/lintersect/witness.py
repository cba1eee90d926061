"""Mechanized independence witnesses: the triangular family, the filter
polynomial with its monomial multiples, non-shadow monomials, and the
incidence-vector route.  Certification is exact: fraction-free elimination
over the integers for the rational domain, modular elimination for F_p.

A multilinear polynomial is a sparse map monomial-bitmask -> coefficient;
multiplying by a linear form applies the reduction x_i^2 -> x_i on the fly
(or-ing the bit does exactly that), so intermediates never leave the
multilinear span.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from time import perf_counter

from . import _config, _kernels, ffpoly, setfam
from .errors import DimensionOverflow, DomainMismatch, HypothesisViolated, ParamOutOfRange
from .setfam import SetFamily


@dataclass(frozen=True)
class MultilinearPoly:
    """Sparse multilinear polynomial on {0,1}^n; no zero coefficients stored."""

    n: int
    terms: tuple[tuple[int, int], ...]  # (monomial mask, coefficient), mask-sorted
    p: int | None = None

    @property
    def degree(self) -> int:
        return max((m.bit_count() for m, _ in self.terms), default=0)

    def __call__(self, subset_mask: int) -> int:
        """Evaluate at the 0/1 point of a subset: sum of coeffs of submonomials."""
        acc = 0
        for m, c in self.terms:
            if m & ~subset_mask == 0:
                acc += c
        return acc % self.p if self.p is not None else acc

    def coeff(self, mask: int) -> int:
        for m, c in self.terms:
            if m == mask:
                return c
        return 0


def _normalize(n: int, terms: dict, p: int | None) -> MultilinearPoly:
    out = []
    for m in sorted(terms):
        c = terms[m] % p if p is not None else terms[m]
        if c:
            out.append((m, c))
    return MultilinearPoly(n, tuple(out), p)


def monomial(n: int, mask: int, p: int | None = None) -> MultilinearPoly:
    return MultilinearPoly(n, ((mask, 1),), p)


def _mul_linear(terms: dict, support_mask: int, shift: int) -> dict:
    """Multiply a term map by (sum_{i in support} x_i - shift), reducing squares."""
    out: dict = {}
    for m, c in terms.items():
        if shift:
            out[m] = out.get(m, 0) - shift * c
        mm = support_mask
        while mm:
            b = mm & -mm
            mm ^= b
            key = m | b  # x_i * x_I = x_(I u {i}): the or IS the reduction
            out[key] = out.get(key, 0) + c
    return out


def product_of_linear_forms(n: int, factors, p: int | None = None) -> MultilinearPoly:
    """prod (sum_{i in mask} x_i - shift) over (mask, shift) pairs, multilinear."""
    terms = {0: 1}
    for support_mask, shift in factors:
        terms = _mul_linear(terms, support_mask, shift)
        if p is not None:
            terms = {m: c % p for m, c in terms.items() if c % p}
        else:
            terms = {m: c for m, c in terms.items() if c}
    return _normalize(n, terms, p)


def triangular_polys(F: SetFamily, L, p: int | None = None) -> list[MultilinearPoly]:
    """f_i = prod over l in L with l < |A_i| of (v_{A_i} . x - l), in family order."""
    elems = ffpoly.residue_set(L, p)
    out = []
    for mask in F.members:
        size = mask.bit_count()
        out.append(
            product_of_linear_forms(F.n, [(mask, l) for l in elems if l < size], p)
        )
    return out


def filter_poly(K, n: int, p: int | None = None) -> MultilinearPoly:
    """g = prod_{k in K} (x_1 + ... + x_n - k); kills every size in K (+pZ)."""
    elems = ffpoly.residue_set(K, p)
    full = (1 << n) - 1
    return product_of_linear_forms(n, [(full, k) for k in elems], p)


@dataclass(frozen=True)
class WitnessFamily:
    """Triangular block, filter-multiple block, non-shadow monomial block."""

    n: int
    p: int | None
    s: int
    r: int
    polys: tuple[MultilinearPoly, ...]
    block_sizes: tuple[int, int, int]


def build_witness(F: SetFamily, K, L, p: int | None = None,
                  strict: bool = True) -> WitnessFamily:
    """Assemble the full witness family for the multilevel argument.

    strict=True refuses hypothesis-violating input; strict=False builds
    anyway (the certificate may then legitimately report dependence).
    """
    from . import bounds  # local import: bounds also imports nothing from here

    if p is None:
        report = bounds.check_multilevel(F, K, L)
    else:
        report = bounds.check_modular_multilevel(F, K, L, p)
    if strict and not report.hypotheses_ok:
        raise HypothesisViolated("; ".join(report.violated))
    s, r = report.s, report.r

    tri = triangular_polys(F, L, p)

    g = filter_poly(K, F.n, p)
    filter_block = []
    for imask in _degree_monomials(F.n, max(s - r, -1)):
        terms: dict = {}
        for m, c in g.terms:
            key = m | imask  # x_I * x_m collapses onto x_(I u m)
            terms[key] = terms.get(key, 0) + c
        filter_block.append(_normalize(F.n, terms, p))

    nonshadow_block = []
    for j in range(max(0, s - r + 1), s + 1):
        if j > F.n:
            continue
        for t_mask in setfam.nonshadows(F, j).members:
            nonshadow_block.append(monomial(F.n, t_mask, p))

    return WitnessFamily(
        n=F.n,
        p=p,
        s=s,
        r=r,
        polys=tuple(tri + filter_block + nonshadow_block),
        block_sizes=(len(tri), len(filter_block), len(nonshadow_block)),
    )


@dataclass(frozen=True)
class Certificate:
    """Exact rank verdict for a family of vectors/polynomials."""

    kind: str
    domain: str
    rows: int
    cols: int
    rank: int
    independent: bool
    block_sizes: tuple[int, ...]
    elapsed_ms: float
    matrix: tuple[tuple[int, ...], ...] | None = None

    def to_dict(self) -> dict:
        d = {
            "kind": self.kind,
            "domain": self.domain,
            "rows": self.rows,
            "cols": self.cols,
            "rank": self.rank,
            "independent": self.independent,
            "block_sizes": list(self.block_sizes),
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.matrix is not None:
            d["matrix"] = [list(r) for r in self.matrix]
        return d


def rank_bareiss(rows) -> int:
    """Fraction-free (integer-preserving) elimination; exact rank over Q."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if mat[r][c]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            mat[rank], mat[piv] = mat[piv], mat[rank]
        top = mat[rank]
        pv = top[c]
        for r in range(rank + 1, nrows):
            row = mat[r]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (row[j] * pv - f * top[j]) // prev
            row[c] = 0
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def _degree_monomials(n: int, max_degree: int) -> list[int]:
    """Monomial masks of degree <= max_degree in canonical (size, mask) order."""
    cols = []
    for d in range(0, min(max_degree, n) + 1):
        layer = []
        for bits in combinations(range(n), d):
            m = 0
            for b in bits:
                m |= 1 << b
            layer.append(m)
        cols.extend(sorted(layer))
    return cols


def verify_independence(W: WitnessFamily, matrix_cap: int | None = None,
                        keep_matrix: bool = False) -> Certificate:
    """Rank of the monomial-coefficient matrix over monomials of degree <= s."""
    cap = _config.matrix_cap() if matrix_cap is None else matrix_cap
    ncols = sum(comb(W.n, i) for i in range(0, min(W.s, W.n) + 1))
    if ncols > cap:
        raise DimensionOverflow(f"{ncols} columns exceed cap {cap}")
    for poly in W.polys:
        if poly.p != W.p:
            raise DomainMismatch("witness members disagree on coefficient domain")
        if poly.degree > W.s:
            raise ParamOutOfRange(f"member degree {poly.degree} exceeds s={W.s}")
    cols = _degree_monomials(W.n, W.s)
    col_index = {m: i for i, m in enumerate(cols)}
    t0 = perf_counter()
    rows = []
    for poly in W.polys:
        vec = [0] * ncols
        for m, c in poly.terms:
            vec[col_index[m]] = c
        rows.append(vec)
    if W.p is not None:
        rank = _kernels.rank_mod_p(rows, W.p) if rows else 0
    else:
        rank = rank_bareiss(rows)
    elapsed = (perf_counter() - t0) * 1000.0
    return Certificate(
        kind="polynomial-coefficients",
        domain="rationals" if W.p is None else f"mod {W.p}",
        rows=len(rows),
        cols=ncols,
        rank=rank,
        independent=rank == len(rows),
        block_sizes=W.block_sizes,
        elapsed_ms=elapsed,
        matrix=tuple(tuple(r) for r in rows) if keep_matrix else None,
    )


def verify_independence_evaluation(W: WitnessFamily,
                                   keep_matrix: bool = False) -> Certificate:
    """Cross-check: rank of the evaluation matrix over all of {0,1}^n (n <= 12)."""
    if W.n > 12:
        raise DimensionOverflow(f"evaluation cross-check capped at n <= 12, n={W.n}")
    t0 = perf_counter()
    rows = [[poly(j) for j in range(1 << W.n)] for poly in W.polys]
    if W.p is not None:
        rank = _kernels.rank_mod_p(rows, W.p) if rows else 0
    else:
        rank = rank_bareiss(rows)
    elapsed = (perf_counter() - t0) * 1000.0
    return Certificate(
        kind="polynomial-evaluation",
        domain="rationals" if W.p is None else f"mod {W.p}",
        rows=len(rows),
        cols=1 << W.n,
        rank=rank,
        independent=rank == len(rows),
        block_sizes=W.block_sizes,
        elapsed_ms=elapsed,
        matrix=tuple(tuple(r) for r in rows) if keep_matrix else None,
    )


@dataclass(frozen=True)
class GramWitness:
    """Matrix of P_L(|A & B|) mod p: valid iff diagonal nonzero, rest zero."""

    n: int
    p: int
    size: int
    values: tuple[tuple[int, ...], ...]
    valid: bool
    violation: tuple[int, int, int, str] | None  # (i, j, value, kind)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "size": self.size,
            "values": [list(r) for r in self.values],
            "valid": self.valid,
            "violation": (
                None
                if self.violation is None
                else {
                    "i": self.violation[0],
                    "j": self.violation[1],
                    "value": self.violation[2],
                    "kind": self.violation[3],
                }
            ),
        }


def gram_witness(F: SetFamily, L, p: int) -> GramWitness:
    """Pairwise annihilator values; locates the first orthogonality failure."""
    P = ffpoly.annihilator_poly(L, p)
    ms = F.members
    values = tuple(
        tuple(P((ms[i] & ms[j]).bit_count()) for j in range(len(ms)))
        for i in range(len(ms))
    )
    violation = None
    for i in range(len(ms)):
        if values[i][i] == 0:
            violation = (i, i, 0, "zero-self-pairing")
            break
        for j in range(i + 1, len(ms)):
            if values[i][j] != 0:
                violation = (i, j, values[i][j], "nonzero-cross-pairing")
                break
        if violation:
            break
    return GramWitness(F.n, p, len(ms), values, violation is None, violation)


def incidence_independence(F: SetFamily, L, p: int,
                           with_nonshadows: bool = False,
                           matrix_cap: int | None = None,
                           keep_matrix: bool = False) -> Certificate:
    """Rank-certify the concatenated incidence vectors on the active levels.

    Row blocks: one vector per member (its containment indicator on each
    active level), then, when requested, one unit vector per non-shadow set
    per active level.
    """
    cap = _config.matrix_cap() if matrix_cap is None else matrix_cap
    support = ffpoly.bsupp(L, p)
    levels = [j for j in support if j <= F.n]
    ncols = 0
    col_of: dict[tuple[int, int], int] = {}
    for j in levels:
        layer = []
        for bits in combinations(range(F.n), j):
            m = 0
            for b in bits:
                m |= 1 << b
            layer.append(m)
        for idx, m in enumerate(sorted(layer)):
            col_of[(j, m)] = ncols + idx
        ncols += comb(F.n, j)
    if ncols > cap:
        raise DimensionOverflow(f"{ncols} columns exceed cap {cap}")

    t0 = perf_counter()
    rows = []
    for a_mask in F.members:
        vec = [0] * ncols
        for j in levels:
            if j > a_mask.bit_count():
                continue
            bits = [i for i in range(F.n) if a_mask >> i & 1]
            for combo in combinations(bits, j):
                m = 0
                for b in combo:
                    m |= 1 << b
                vec[col_of[(j, m)]] = 1
        rows.append(vec)
    n_nonshadow = 0
    if with_nonshadows:
        for j in levels:
            for t_mask in setfam.nonshadows(F, j).members:
                vec = [0] * ncols
                vec[col_of[(j, t_mask)]] = 1
                rows.append(vec)
                n_nonshadow += 1
    rank = _kernels.rank_mod_p(rows, p) if rows else 0
    elapsed = (perf_counter() - t0) * 1000.0
    return Certificate(
        kind="incidence",
        domain=f"mod {p}",
        rows=len(rows),
        cols=ncols,
        rank=rank,
        independent=rank == len(rows),
        block_sizes=(len(F), n_nonshadow),
        elapsed_ms=elapsed,
        matrix=tuple(tuple(r) for r in rows) if keep_matrix else None,
    )
