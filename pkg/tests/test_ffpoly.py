"""Polynomial arithmetic, binomial-basis conversion, and support extraction."""

from itertools import combinations
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lintersect import ffpoly
from lintersect.errors import (
    BasisDegenerate,
    DegreeExceedsModulus,
    NonPrimeModulus,
    ParamOutOfRange,
    ResidueOutOfRange,
)

PRIMES = [2, 3, 5, 7, 11, 13]


def binomial_coeffs_backsolve(P, s, p=None):
    """Independent oracle: evaluate P at 0..s, then solve the unit-lower-
    triangular system with matrix C(i,j) by forward substitution."""
    vals = [P(i) for i in range(s + 1)]
    cs = []
    for i in range(s + 1):
        acc = vals[i] - sum(comb(i, j) * cs[j] for j in range(i))
        cs.append(acc % p if p is not None else acc)
    return tuple(cs)


class TestAnnihilator:
    def test_single_root_at_zero(self):
        assert ffpoly.annihilator_poly([0]).coeffs == (0, 1)

    def test_consecutive_is_falling_factorial(self):
        # P_{0..s-1} = (t)_s in every domain
        for p in [5, 7, 11]:
            for s in range(1, p):
                P = ffpoly.annihilator_poly(range(s), p)
                assert P.coeffs == ffpoly.falling_factorial(s, p).coeffs

    def test_mod5_example(self):
        assert ffpoly.annihilator_poly([0, 2], 5).coeffs == (0, 3, 1)

    def test_empty_L_is_one(self):
        assert ffpoly.annihilator_poly([]).coeffs == (1,)
        assert ffpoly.bsupp([]) == (0,)

    def test_monic_and_roots(self):
        P = ffpoly.annihilator_poly([1, 4, 6], 11)
        assert P.coeffs[-1] == 1 and P.degree == 3
        for root in (1, 4, 6):
            assert P(root) == 0
        assert P(2) != 0

    def test_rejects_nonprime(self):
        with pytest.raises(NonPrimeModulus):
            ffpoly.annihilator_poly([0], 6)

    def test_rejects_residue_out_of_range(self):
        with pytest.raises(ResidueOutOfRange):
            ffpoly.annihilator_poly([5], 5)
        with pytest.raises(ResidueOutOfRange):
            ffpoly.annihilator_poly([-1])

    def test_rejects_degree_at_least_p(self):
        with pytest.raises(DegreeExceedsModulus):
            ffpoly.annihilator_poly([0, 1, 2], 3)


class TestBinomialBasis:
    def test_consecutive_top_coefficient(self):
        exp = ffpoly.to_binomial_basis(ffpoly.annihilator_poly([0, 1, 2], 7), 3, 7)
        assert exp.coeffs == (0, 0, 0, 6)

    def test_constant(self):
        exp = ffpoly.to_binomial_basis(ffpoly.poly([1]), 0)
        assert exp.coeffs == (1,)

    def test_mod5_example(self):
        exp = ffpoly.to_binomial_basis(ffpoly.poly([0, -2, 1], 5), 2, 5)
        assert exp.coeffs == (0, 4, 2)

    def test_zeros_retained(self):
        exp = ffpoly.to_binomial_basis(ffpoly.poly([1]), 4)
        assert len(exp.coeffs) == 5

    def test_degenerate_basis_rejected(self):
        with pytest.raises(BasisDegenerate):
            ffpoly.to_binomial_basis(ffpoly.poly([1, 1], 3), 3, 3)

    def test_degree_above_s_rejected(self):
        with pytest.raises(ParamOutOfRange):
            ffpoly.to_binomial_basis(ffpoly.poly([0, 0, 1]), 1)

    def test_matches_backsolve_oracle_everywhere(self):
        for p in PRIMES:
            for s in range(1, min(4, p - 1) + 1):
                for L in combinations(range(p), s):
                    P = ffpoly.annihilator_poly(L, p)
                    exp = ffpoly.to_binomial_basis(P, s, p)
                    assert exp.coeffs == binomial_coeffs_backsolve(P, s, p)

    @given(st.lists(st.integers(-50, 50), min_size=1, max_size=6))
    @settings(max_examples=200, deadline=None)
    def test_round_trip_integers(self, coeffs):
        P = ffpoly.poly(coeffs)
        s = max(P.degree, 0)
        exp = ffpoly.to_binomial_basis(P, s)
        assert exp.to_power_poly().coeffs == P.coeffs
        assert exp.coeffs == binomial_coeffs_backsolve(P, s)

    @given(
        st.sampled_from([5, 7, 11, 13]),
        st.lists(st.integers(0, 12), min_size=1, max_size=4),
    )
    @settings(max_examples=200, deadline=None)
    def test_round_trip_modular(self, p, raw):
        coeffs = [c % p for c in raw]
        P = ffpoly.poly(coeffs, p)
        s = p - 1
        exp = ffpoly.to_binomial_basis(P, s, p)
        assert exp.to_power_poly().coeffs == P.coeffs


class TestFallingFactorial:
    def test_k0(self):
        assert ffpoly.falling_factorial(0).coeffs == (1,)

    def test_k2(self):
        assert ffpoly.falling_factorial(2).coeffs == (0, -1, 1)

    def test_k3_mod5(self):
        assert ffpoly.falling_factorial(3, 5).coeffs == (0, 2, 2, 1)

    def test_recurrence_identity(self):
        # t * (t)_k = (t)_{k+1} + k * (t)_k as exact polynomials
        for p in [None] + PRIMES:
            for k in range(0, 11):
                ff_k = ffpoly.falling_factorial(k, p)
                lhs = ffpoly.poly([0, 1], p) * ff_k
                rhs = ffpoly.falling_factorial(k + 1, p) + ff_k.scale(k)
                assert lhs.coeffs == rhs.coeffs, (p, k)

    def test_negative_rejected(self):
        with pytest.raises(ParamOutOfRange):
            ffpoly.falling_factorial(-1)


class TestBsupp:
    def test_consecutive_collapse(self):
        for p in PRIMES:
            for s in range(1, p):
                assert ffpoly.bsupp(range(s), p) == (s,)
                exp = ffpoly.to_binomial_basis(
                    ffpoly.annihilator_poly(range(s), p), s, p
                )
                assert exp.coeffs[s] == factorial(s) % p

    def test_examples(self):
        assert ffpoly.bsupp([0, 1, 3], 7) == (2, 3)
        assert ffpoly.bsupp([0, 2], 5) == (1, 2)

    def test_always_contains_top_index(self):
        for p in [7, 11]:
            for L in combinations(range(p), 3):
                assert 3 in ffpoly.bsupp(L, p)

    def test_almost_initial_collapse_exhaustive(self):
        # bsupp of an initial segment plus m extras lives in the top m+1 levels
        for p in PRIMES:
            for s in range(1, p):
                for m in range(0, s):
                    seg = set(range(s - m))
                    rest = sorted(set(range(p)) - seg)
                    for R in combinations(rest, m):
                        L = tuple(sorted(seg | set(R)))
                        supp = ffpoly.bsupp(L, p)
                        assert set(supp) <= set(range(s - m, s + 1)), (p, L, supp)

    def test_integer_domain_support(self):
        assert ffpoly.bsupp([1]) == (0, 1)
        assert ffpoly.bsupp([0, 1, 2]) == (3,)


class TestAlmostInitial:
    def test_full_initial_segment(self):
        assert ffpoly.is_almost_initial([0, 1, 2], 7) == (0, ())

    def test_one_extra(self):
        assert ffpoly.is_almost_initial([0, 1, 3], 7) == (1, (3,))

    def test_degenerate_empty_segment(self):
        assert ffpoly.is_almost_initial([2, 4], 7) == (2, (2, 4))

    def test_m_zero_iff_consecutive(self):
        for p in [5, 7]:
            for s in range(1, p):
                for L in combinations(range(p), s):
                    m, R = ffpoly.is_almost_initial(L, p)
                    assert (m == 0) == (set(L) == set(range(s)))
                    assert len(R) == m
                    assert set(L) == set(range(s - m)) | set(R)


class TestPrimality:
    def test_small_primes(self):
        known = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
        for n in range(50):
            assert ffpoly.is_prime(n) == (n in known)

    def test_larger(self):
        assert ffpoly.is_prime(2**31 - 1)
        assert not ffpoly.is_prime(2**32 + 1)
