"""Exact univariate polynomial arithmetic over the integers and prime fields.

Everything here is exact: integer coefficients are arbitrary-precision Python
ints, modular coefficients are canonical residues in 0..p-1.  No floating
point anywhere.

The binomial-basis conversion is the heart of the module: a degree-<=s
polynomial P is rewritten as sum_j c_j * C(t,j), and the set of indices with
c_j != 0 (the binomial support) tells which Boolean-lattice levels an
intersection argument actually uses.  Conversion is done by forward
differences at 0..s, which is integral, O(s^2), and needs no Stirling tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import (
    BasisDegenerate,
    DegreeExceedsModulus,
    NonPrimeModulus,
    ParamOutOfRange,
    ResidueOutOfRange,
)

# Deterministic Miller-Rabin witnesses, valid for all n < 3.3 * 10^24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with fixed witness set)."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise NonPrimeModulus(f"modulus {p!r} is not prime")
    return p


def residue_set(elements, p: int | None = None) -> tuple[int, ...]:
    """Sorted duplicate-free tuple of nonnegative residues, validated against p."""
    elems = sorted(set(int(e) for e in elements))
    if elems and elems[0] < 0:
        raise ResidueOutOfRange(f"negative element {elems[0]}")
    if p is not None:
        check_prime(p)
        if elems and elems[-1] >= p:
            raise ResidueOutOfRange(f"element {elems[-1]} >= modulus {p}")
    return tuple(elems)


@dataclass(frozen=True)
class Poly:
    """Polynomial in the power basis, ascending coefficients, exact domain.

    p is None for integer coefficients; otherwise coefficients are residues
    mod p.  The zero polynomial is the empty tuple (degree -1).
    """

    coeffs: tuple[int, ...]
    p: int | None = None

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc % self.p if self.p is not None else acc

    def __mul__(self, other: "Poly") -> "Poly":
        if self.p != other.p:
            raise ValueError("mixed coefficient domains")
        if not self.coeffs or not other.coeffs:
            return Poly((), self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return poly(out, self.p)

    def __add__(self, other: "Poly") -> "Poly":
        if self.p != other.p:
            raise ValueError("mixed coefficient domains")
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        for i, b in enumerate(other.coeffs):
            a[i] += b
        return poly(a, self.p)

    def scale(self, k: int) -> "Poly":
        return poly([k * c for c in self.coeffs], self.p)


def poly(coeffs, p: int | None = None) -> Poly:
    """Normalize: reduce mod p, strip trailing zeros."""
    cs = [int(c) for c in coeffs]
    if p is not None:
        cs = [c % p for c in cs]
    while cs and cs[-1] == 0:
        cs.pop()
    return Poly(tuple(cs), p)


def annihilator_poly(L, p: int | None = None) -> Poly:
    """Monic polynomial prod_{l in L} (t - l); constant 1 for empty L."""
    elems = residue_set(L, p)
    if p is not None and len(elems) >= p:
        raise DegreeExceedsModulus(f"|L| = {len(elems)} >= p = {p}")
    out = poly([1], p)
    for l in elems:
        out = out * poly([-l, 1], p)
    return out


def falling_factorial(k: int, p: int | None = None) -> Poly:
    """(t)_k = t (t-1) ... (t-k+1); (t)_0 = 1."""
    if k < 0:
        raise ParamOutOfRange(f"k = {k} must be >= 0")
    out = poly([1], p)
    for i in range(k):
        out = out * poly([-i, 1], p)
    return out


@dataclass(frozen=True)
class BinomialExpansion:
    """Coefficients c_0..c_s of a polynomial written in the basis C(t,0)..C(t,s).

    Length is exactly s+1 with zeros retained, so support indices are stable.
    """

    coeffs: tuple[int, ...]
    p: int | None = None

    @property
    def s(self) -> int:
        return len(self.coeffs) - 1

    def support(self) -> tuple[int, ...]:
        return tuple(j for j, c in enumerate(self.coeffs) if c != 0)

    def __call__(self, t: int) -> int:
        acc = sum(c * comb(t, j) for j, c in enumerate(self.coeffs) if t >= j)
        return acc % self.p if self.p is not None else acc

    def to_power_poly(self) -> Poly:
        """Reconstruct the power-basis polynomial, exactly.

        C(t,j) itself has rational coefficients, but the full sum is always
        integral for integral c_j produced by forward differences; Fractions
        are used transiently and must clear.
        """
        if self.p is not None:
            out = poly([], self.p)
            for j, c in enumerate(self.coeffs):
                if c == 0:
                    continue
                inv = pow(
                    _factorial_mod(j, self.p), -1, self.p
                )  # j < p guaranteed at construction
                out = out + falling_factorial(j, self.p).scale(c * inv)
            return out
        acc: list[Fraction] = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            ff = falling_factorial(j)
            fj = _factorial(j)
            term = [Fraction(c * a, fj) for a in ff.coeffs]
            if len(term) > len(acc):
                acc += [Fraction(0)] * (len(term) - len(acc))
            for i, v in enumerate(term):
                acc[i] += v
        ints = []
        for v in acc:
            if v.denominator != 1:
                raise ArithmeticError("non-integral reconstruction")
            ints.append(v.numerator)
        return poly(ints)


def _factorial(j: int) -> int:
    out = 1
    for i in range(2, j + 1):
        out *= i
    return out


def _factorial_mod(j: int, p: int) -> int:
    out = 1
    for i in range(2, j + 1):
        out = out * i % p
    return out


def to_binomial_basis(P: Poly, s: int, p: int | None = None) -> BinomialExpansion:
    """Expand P in the binomial basis up to index s via forward differences.

    c_j = (Delta^j P)(0) = sum_i (-1)^(j-i) C(j,i) P(i).  Requires deg P <= s,
    and s < p in the modular domain (otherwise the basis degenerates).
    """
    if p is None:
        p = P.p
    elif P.p is not None and P.p != p:
        raise ValueError("mixed coefficient domains")
    if s < 0:
        raise ParamOutOfRange(f"s = {s} must be >= 0")
    if P.degree > s:
        raise ParamOutOfRange(f"deg P = {P.degree} exceeds s = {s}")
    if p is not None and s >= check_prime(p):
        raise BasisDegenerate(f"s = {s} >= p = {p}: C(t,0..s) is not a basis")
    vals = [P(i) for i in range(s + 1)]
    cs = []
    for j in range(s + 1):
        c = sum((-1) ** (j - i) * comb(j, i) * vals[i] for i in range(j + 1))
        cs.append(c % p if p is not None else c)
    exp = BinomialExpansion(tuple(cs), p)
    # Postcondition guard: both sides must agree on t = 0..s.
    for t in range(s + 1):
        if exp(t) != P(t):
            raise AssertionError("binomial expansion failed self-check")
    return exp


def bsupp(L, p: int | None = None) -> tuple[int, ...]:
    """Binomial support of the annihilator of L: { j : c_j(L) != 0 }, sorted.

    Always contains s = |L| (the leading coefficient is s!, nonzero for s < p).
    """
    P = annihilator_poly(L, p)
    s = len(residue_set(L, p))
    return to_binomial_basis(P, s, p).support()


def is_almost_initial(L, p: int) -> tuple[int, tuple[int, ...]]:
    """Smallest m >= 0 with {0,..,s-m-1} contained in L; returns (m, R).

    R is the m leftover elements.  m = s (empty initial segment, R = L) is the
    degenerate fallback, so a decomposition always exists for a valid L.
    """
    elems = residue_set(L, p)
    s = len(elems)
    have = set(elems)
    for m in range(s + 1):
        seg = range(s - m)
        if all(x in have for x in seg):
            return m, tuple(sorted(have - set(seg)))
    raise AssertionError("unreachable: m = s always admits a decomposition")
