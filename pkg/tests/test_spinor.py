"""Spinor operators, singular vectors, radial systems, monogenics."""

from __future__ import annotations

from fractions import Fraction

import pytest

from vermaops.clifford import (
    CliffordPolynomial,
    all_blades,
    clifford_mul,
    left_mul_blade,
    xi_n_underline,
    xi_prime_underline,
)
from vermaops.polynomial import (
    LAMBDA,
    MultiPolynomial,
    Signature,
    monomial_basis,
    poly,
    xi,
)
from vermaops.scalar import SYMBOLIC
from vermaops.spinor import (
    apply_spinor_P,
    apply_spinor_Q,
    brute_force_spinor_sol,
    gegenbauer_pair,
    monogenic_basis,
    spinor_alpha,
    spinor_ode_residuals,
    spinor_singular_F,
)

SIG = Signature(2, 3)
L = poly(LAMBDA)


class TestSingularVectors:
    def test_degree_zero(self):
        assert spinor_singular_F(0, SYMBOLIC, SIG) == CliffordPolynomial.scalar(1)

    def test_degree_one_explicit(self):
        F = spinor_singular_F(1, SYMBOLIC, SIG)
        alpha = spinor_alpha(SYMBOLIC, SIG)
        expected = xi_prime_underline(SIG) \
            + CliffordPolynomial({(3,): 2 * alpha * (SIG.eps(3) * poly(xi(3)))})
        assert F == expected

    def test_degree_two_components(self):
        F = spinor_singular_F(2, SYMBOLIC, SIG)
        alpha = spinor_alpha(SYMBOLIC, SIG)
        norm2 = SIG.xi_prime_norm2()
        xi3sq = MultiPolynomial.monomial([(xi(3), 2)])
        assert F.component(()) == 2 * (alpha + 1) * xi3sq - norm2
        bivector = clifford_mul(xi_prime_underline(SIG), xi_n_underline(SIG), SIG)
        for b in ((1, 3), (2, 3)):
            assert F.component(b) == 2 * bivector.component(b)

    def test_homogeneous(self):
        codes = set(SIG.xi_vars())
        for K in range(0, 7):
            F = spinor_singular_F(K, SYMBOLIC, SIG)
            assert F.is_homogeneous(codes)
            assert F.degree(codes) == (K if K else 0)

    def test_blade_parity_structure(self):
        for K in range(0, 7):
            F = spinor_singular_F(K, SYMBOLIC, SIG)
            even, odd = F.blade_parity_split()
            if K % 2 == 0:
                assert odd.is_zero()
            else:
                assert even.is_zero()


class TestAnnihilation:
    @pytest.mark.parametrize("p,q", [(2, 3), (1, 4), (3, 3), (3, 4)])
    def test_symbolic(self, p, q):
        sig = Signature(p, q)
        for K in range(0, 6):
            F = spinor_singular_F(K, SYMBOLIC, sig)
            for j in range(1, sig.n):
                assert apply_spinor_P(j, SYMBOLIC, F, sig).is_zero(), (K, j)

    def test_right_multiples_stay_in_kernel(self):
        # annihilation transfers to F * blade because the operators act
        # by left multiplication and derivatives
        F = spinor_singular_F(2, Fraction(1, 5), SIG)
        for b in all_blades(3):
            Fb = clifford_mul(F, CliffordPolynomial.blade(b), SIG)
            for j in range(1, 3):
                assert apply_spinor_P(j, Fraction(1, 5), Fb, SIG).is_zero()

    def test_constant_example(self):
        out = apply_spinor_P(1, SYMBOLIC, CliffordPolynomial.scalar(poly(xi(1))), SIG)
        assert out == CliffordPolynomial.scalar(L)


class TestBaseSideAction:
    def test_raises_degree(self):
        F = CliffordPolynomial.scalar(1)
        out = apply_spinor_Q(1, Fraction(1, 5), F, SIG)
        assert out.degree({*(SIG.x_vars())}) == 1

    def test_operators_commute(self):
        lam = Fraction(2, 7)
        from vermaops.polynomial import x
        for d in range(0, 3):
            for m in monomial_basis([x(i) for i in range(1, 4)], d):
                for b in all_blades(3):
                    F = CliffordPolynomial({b: MultiPolynomial({m: Fraction(1)})})
                    for i in range(1, 4):
                        for j in range(i + 1, 4):
                            a1 = apply_spinor_Q(i, lam, apply_spinor_Q(j, lam, F, SIG), SIG)
                            a2 = apply_spinor_Q(j, lam, apply_spinor_Q(i, lam, F, SIG), SIG)
                            assert a1 == a2

    def test_parity_flip(self):
        # the action moves even blades to odd and back only through the
        # grade-even Clifford factor, so blade parity is preserved
        lam = Fraction(1, 5)
        F = CliffordPolynomial.scalar(1)
        out = apply_spinor_Q(1, lam, F, SIG)
        assert all(len(b) % 2 == 0 for b in out.blades())


class TestRadialSystems:
    @pytest.mark.parametrize("K", range(0, 7))
    def test_gegenbauer_pair_solves(self, K):
        P, Q = gegenbauer_pair(K, SYMBOLIC, SIG)
        N = K // 2 if K % 2 == 0 else (K - 1) // 2
        parity = "even" if K % 2 == 0 else "odd"
        rep = spinor_ode_residuals(P, Q, N, SYMBOLIC, parity, SIG)
        assert rep.all_zero
        assert rep.derived_first_two

    def test_trivial_pair(self):
        from vermaops.polynomial import ONE, ZERO
        rep = spinor_ode_residuals(ONE, ZERO, 0, SYMBOLIC, "even", SIG)
        assert rep.all_zero

    def test_mismatched_pair_has_defect(self):
        # P = Ctilde_2(-t) with Q = 1 breaks the first-order coupling
        from vermaops.polynomial import ONE
        P, _ = gegenbauer_pair(2, SYMBOLIC, SIG)
        rep = spinor_ode_residuals(P, ONE, 1, SYMBOLIC, "even", SIG)
        assert not rep.residuals[3].is_zero()

    def test_parity_validation(self):
        from vermaops.polynomial import ONE
        with pytest.raises(ValueError):
            spinor_ode_residuals(ONE, ONE, 0, SYMBOLIC, "sideways", SIG)


class TestBruteForce:
    def test_degree_zero_all_constants(self):
        sol = brute_force_spinor_sol(0, Fraction(1, 5), SIG)
        assert sol.dimension == 8
        assert sol.even_block_dim == 4 and sol.odd_block_dim == 4

    def test_degree_one_right_module(self):
        sol = brute_force_spinor_sol(1, Fraction(1, 5), SIG)
        assert sol.dimension == 8

    def test_degree_two_generic(self):
        sol = brute_force_spinor_sol(2, Fraction(1, 5), SIG)
        assert sol.dimension == 8

    def test_kernel_closed_under_right_multiplication(self):
        sol = brute_force_spinor_sol(1, Fraction(1, 5), SIG)
        for F in sol.entries[:4]:
            for b in all_blades(3):
                Fb = clifford_mul(F, CliffordPolynomial.blade(b), SIG)
                for j in range(1, 3):
                    assert apply_spinor_P(j, Fraction(1, 5), Fb, SIG).is_zero()

    def test_operators_preserve_blade_parity(self):
        lam = Fraction(1, 5)
        for m in monomial_basis(SIG.xi_vars(), 2):
            for b in all_blades(3):
                F = CliffordPolynomial({b: MultiPolynomial({m: Fraction(1)})})
                out = apply_spinor_P(1, lam, F, SIG)
                for bb in out.blades():
                    assert len(bb) % 2 == len(b) % 2


class TestMonogenics:
    def test_degree_zero(self):
        assert len(monogenic_basis(0, SIG)) == 8

    def test_degree_one_dimension(self):
        assert len(monogenic_basis(1, SIG)) == 16

    def test_half_integer_parameters_solve_everything(self):
        for lam in (Fraction(-1, 2), Fraction(1, 2), Fraction(3, 2)):
            deg = int(lam + Fraction(1, 2))
            for F in monogenic_basis(deg, SIG):
                for j in range(1, SIG.n + 1):
                    assert apply_spinor_P(j, lam, F, SIG).is_zero(), (lam, j)
