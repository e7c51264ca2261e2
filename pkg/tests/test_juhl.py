"""Operator stencils: coefficients, application, equivariance."""

from __future__ import annotations

from fractions import Fraction

import pytest

from vermaops.clifford import CliffordPolynomial, all_blades
from vermaops.juhl import (
    apply_and_restrict,
    build_ambient_operator,
    build_operator,
    coeff_a,
    coeff_b,
    verify_intertwining,
)
from vermaops.polynomial import (
    LAMBDA,
    MultiPolynomial,
    Signature,
    monomial_basis,
    poly,
    x,
    xi,
)
from vermaops.scalar import SYMBOLIC, closed_form_w

SIG = Signature(2, 3)
L = poly(LAMBDA)


class TestCoefficients:
    def test_top_normalization(self):
        for N in range(0, 5):
            assert coeff_a(N, N, 3, SYMBOLIC) == MultiPolynomial.constant(1)
            assert coeff_b(N, N, 3, SYMBOLIC) == MultiPolynomial.constant(1)

    def test_first_values(self):
        n = 3
        assert coeff_a(0, 1, n, SYMBOLIC) == -(2 * L + n - 3)
        assert coeff_b(0, 1, n, SYMBOLIC) == Fraction(-1, 3) * (2 * L + n - 5)

    def test_degree_bound(self):
        with pytest.raises(ValueError):
            coeff_a(2, 1, 3, SYMBOLIC)
        with pytest.raises(ValueError):
            coeff_b(3, 2, 3, SYMBOLIC)

    @pytest.mark.parametrize("N", range(0, 5))
    def test_even_expansion_matches_closed_form(self, N):
        # sum_j a_j(L) (-|xi'|^2)^j xi_n^(2N-2j) equals the Gegenbauer
        # route; the two constructions are independent
        norm2 = SIG.xi_prime_norm2()
        xin = poly(xi(3))
        total = MultiPolynomial()
        for j in range(N + 1):
            total = total + coeff_a(j, N, SIG.n, SYMBOLIC) * (-norm2) ** j \
                * xin ** (2 * N - 2 * j)
        assert total == closed_form_w(2 * N, SYMBOLIC, SIG)

    @pytest.mark.parametrize("N", range(0, 4))
    def test_odd_expansion_matches_closed_form(self, N):
        norm2 = SIG.xi_prime_norm2()
        xin = poly(xi(3))
        total = MultiPolynomial()
        for j in range(N + 1):
            total = total + coeff_b(j, N, SIG.n, SYMBOLIC) * (-norm2) ** j \
                * xin ** (2 * N - 2 * j + 1)
        assert total == closed_form_w(2 * N + 1, SYMBOLIC, SIG)


class TestScalarStencils:
    def test_identity_stencil(self):
        st = build_operator(0, SYMBOLIC, SIG)
        u = poly(x(1)) + poly(x(3))
        assert apply_and_restrict(st, u) == poly(x(1))

    def test_order_invariant(self):
        for K in range(0, 9):
            st = build_operator(K, SYMBOLIC, SIG)
            assert st.order_invariant_holds()

    def test_duality_with_closed_form(self):
        # stencil coefficients at L equal the monomial coefficients of the
        # degree-K solution at -L under xi_n -> d_n, -|xi'|^2 -> -Box'
        for K in range(0, 9):
            st = build_operator(K, SYMBOLIC, SIG)
            w = closed_form_w(K, -L, SIG)
            norm2 = SIG.xi_prime_norm2()
            xin = poly(xi(3))
            rebuilt = MultiPolynomial()
            for t in st.terms:
                rebuilt = rebuilt + t.coeff * (-norm2) ** t.boxprime_power \
                    * xin ** t.dn_power
            assert rebuilt == w, K

    def test_apply_examples(self):
        st = build_operator(2, SYMBOLIC, SIG)
        # d_n^2 picks up the j = 0 coefficient a_0(-L) = 2L - n + 3
        out = apply_and_restrict(st, MultiPolynomial.monomial([(x(3), 2)]))
        assert out == 2 * (2 * L - SIG.n + 3) * MultiPolynomial.constant(1)
        # tangential input hits only the (-Box') term
        out = apply_and_restrict(st, MultiPolynomial.monomial([(x(1), 2)]))
        assert out == MultiPolynomial.constant(-2)

    def test_parity_covariance(self):
        # flipping x_n -> -x_n multiplies the operator by (-1)^K: every
        # term's d_n power has the parity of K
        for K in range(0, 9):
            st = build_operator(K, SYMBOLIC, SIG)
            for t in st.terms:
                assert t.dn_power % 2 == K % 2
        # and on an actual section
        for K in (2, 3):
            st = build_operator(K, Fraction(1, 3), SIG)
            u = (poly(x(1)) + poly(x(3))) ** K
            flipped = u.substitute(x(3), -poly(x(3)))
            lhs = apply_and_restrict(st, flipped)
            rhs = apply_and_restrict(st, u) * Fraction((-1) ** K)
            assert lhs == rhs

    def test_yamabe_factorization(self):
        # at lam = (n-3)/2 the order-2 stencil degenerates to -Box'
        for sig in (SIG, Signature(2, 4)):
            st = build_operator(2, Fraction(sig.n - 3, 2), sig)
            live = [(t.coeff, t.boxprime_power, t.dn_power)
                    for t in st.terms if not t.coeff.is_zero()]
            assert live == [(MultiPolynomial.constant(1), 1, 0)]
            st3 = build_operator(3, Fraction(sig.n - 5, 2), sig)
            live = [(t.coeff, t.boxprime_power, t.dn_power)
                    for t in st3.terms if not t.coeff.is_zero()]
            assert live == [(MultiPolynomial.constant(1), 1, 1)]


class TestSpinorStencils:
    def test_order_invariant(self):
        for K in range(0, 7):
            st = build_operator(K, SYMBOLIC, SIG, spinor=True)
            assert st.order_invariant_holds()

    def test_coefficient_pattern(self):
        # even order: identity-blade coefficients are (-1)^(N+j) a_j(-L-1/2),
        # bivector coefficients are (-1)^(N+1+j) 2N b_j(-L-1/2)
        for K in (2, 4, 6):
            N = K // 2
            st = build_operator(K, SYMBOLIC, SIG, spinor=True)
            for t in st.terms:
                j = t.boxprime_power
                if t.clifford_factor is None:
                    want = coeff_a(j, N, SIG.n, -L - Fraction(1, 2)) * ((-1) ** (N + j))
                else:
                    assert t.clifford_factor == "Dprime_then_dn_underline"
                    want = coeff_b(j, N - 1, SIG.n, -L - Fraction(1, 2)) \
                        * ((-1) ** (N + 1 + j)) * (2 * N)
                assert t.coeff == want, (K, j)

    def test_odd_coefficient_pattern(self):
        # odd order: Dprime terms carry (-1)^(N+j) a_j(-L-1/2), the
        # dn_underline terms the prefactor (2L - n + 2 + 2N)
        for K in (1, 3, 5):
            N = (K - 1) // 2
            st = build_operator(K, SYMBOLIC, SIG, spinor=True)
            pref = 2 * L - SIG.n + 2 + 2 * N
            for t in st.terms:
                j = t.boxprime_power
                if t.clifford_factor == "Dprime":
                    want = coeff_a(j, N, SIG.n, -L - Fraction(1, 2)) * ((-1) ** (N + j))
                else:
                    assert t.clifford_factor == "dn_underline"
                    want = coeff_b(j, N, SIG.n, -L - Fraction(1, 2)) \
                        * ((-1) ** (N + j)) * pref
                assert t.coeff == want, (K, j)

    def test_blade_parity_of_output(self):
        # order-K stencils move blade parity by (-1)^K
        for K in range(0, 5):
            st = build_operator(K, Fraction(1, 5), SIG, spinor=True)
            for b in all_blades(3):
                u = CliffordPolynomial({b: MultiPolynomial.monomial([(x(3), K)])})
                out = apply_and_restrict(st, u)
                for bb in out.blades():
                    assert (len(bb) - len(b)) % 2 == K % 2


class TestAmbient:
    def test_power_laplacian(self):
        amb = build_ambient_operator("power_laplacian", SIG, m=1)
        out = apply_and_restrict(amb, MultiPolynomial.monomial([(x(1), 2)]))
        assert out == MultiPolynomial.constant(2)
        out = apply_and_restrict(amb, MultiPolynomial.monomial([(x(3), 2)]))
        assert out == MultiPolynomial.constant(-2)
        amb2 = build_ambient_operator("power_laplacian", SIG, m=2)
        out = apply_and_restrict(amb2, MultiPolynomial.monomial([(x(1), 4)]))
        assert out == MultiPolynomial.constant(24)

    def test_harmonic_contraction(self):
        h = poly(xi(1))
        hc = build_ambient_operator("harmonic_contraction", SIG, h=h)
        out = apply_and_restrict(hc, MultiPolynomial.monomial([(x(1), 2)]))
        assert out == 2 * poly(x(1))

    def test_harmonic_contraction_mixed_symbol(self):
        h = poly(xi(1)) * poly(xi(2))
        hc = build_ambient_operator("harmonic_contraction", SIG, h=h)
        u = poly(x(1)) * poly(x(2)) * poly(x(3))
        assert apply_and_restrict(hc, u) == poly(x(3))

    def test_rejects_non_harmonic(self):
        with pytest.raises(ValueError):
            build_ambient_operator("harmonic_contraction", SIG,
                                   h=MultiPolynomial.monomial([(xi(1), 2)]))

    def test_power_validation(self):
        with pytest.raises(ValueError):
            build_ambient_operator("power_laplacian", SIG, m=0)


class TestIntertwining:
    @pytest.mark.parametrize("gen", [("nplus", 1), ("nplus", 2),
                                     ("nminus", 1), ("nminus", 2)])
    def test_scalar_small(self, gen):
        for K in (0, 1, 2, 3):
            rep = verify_intertwining(K, Fraction(1, 3), gen, 3, SIG)
            assert rep.ok, rep.first_discrepancy

    @pytest.mark.parametrize("gen", [("nplus", 1), ("nminus", 2)])
    def test_spinor_small(self, gen):
        for K in (0, 1, 2, 3):
            rep = verify_intertwining(K, Fraction(1, 5), gen, 2, SIG, spinor=True)
            assert rep.ok, rep.first_discrepancy

    def test_scaling_and_rotation(self):
        for spinor in (False, True):
            for K in (0, 1, 2):
                rep = verify_intertwining(K, Fraction(1, 5), ("scaling",), 2, SIG,
                                          spinor=spinor)
                assert rep.ok, rep.first_discrepancy
                rep = verify_intertwining(K, Fraction(1, 5), ("rotation", 1, 2), 2,
                                          SIG, spinor=spinor)
                assert rep.ok, rep.first_discrepancy

    def test_restriction_commutes_with_tangential_derivative(self):
        rep = verify_intertwining(0, Fraction(7, 2), ("nminus", 1), 4, SIG)
        assert rep.ok

    def test_other_signature(self):
        sig = Signature(2, 4)
        rep = verify_intertwining(2, Fraction(1, 3), ("nplus", 1), 3, sig)
        assert rep.ok, rep.first_discrepancy
        rep = verify_intertwining(1, Fraction(1, 5), ("nplus", 3), 2, sig, spinor=True)
        assert rep.ok, rep.first_discrepancy

    def test_generator_index_bounds(self):
        with pytest.raises(ValueError):
            verify_intertwining(1, Fraction(1, 2), ("nplus", 3), 2, SIG)


def test_stencil_json_and_csv():
    st = build_operator(3, SYMBOLIC, SIG, spinor=True)
    d = st.to_json_dict()
    assert d["K"] == 3 and d["kind"] == "spinor_odd"
    assert all({"j", "boxprime_power", "dn_power", "clifford_factor",
                "coefficient"} <= set(t) for t in d["terms"])
    csv = st.to_csv()
    assert csv.splitlines()[0] == "j,boxprime_power,dn_power,clifford_factor,coefficient"
    assert st.to_latex()
