"""Characters, decomposition verdicts, factorization identities."""

from __future__ import annotations

from fractions import Fraction

import pytest

from vermaops.branching import (
    CharacterVector,
    character_collisions,
    default_bmax,
    exceptional_index,
    factorization_witness,
    inf_char_scalar,
    inf_char_spinor,
    irreducibility_test,
    is_generic,
    lambda_j,
    scalar_branch_report,
    spinor_branch_report,
    submodule_inclusion_holds,
    xi_n_top_coefficient,
)
from vermaops.polynomial import Signature


class TestCharacters:
    def test_scalar_example(self):
        c = inf_char_scalar(Fraction(0), 0, 3)
        assert c.entries == (Fraction(1), Fraction(0))
        assert c.weyl_type == "D"

    def test_type_b_for_even_n(self):
        c = inf_char_scalar(Fraction(0), 0, 4)
        assert c.weyl_type == "B"
        assert c.entries == (Fraction(3, 2), Fraction(1, 2))

    def test_canonical_collision(self):
        assert inf_char_scalar(Fraction(0), 0, 3) == inf_char_scalar(Fraction(0), 2, 3)
        assert inf_char_scalar(Fraction(1, 3), 0, 3) != inf_char_scalar(Fraction(1, 3), 2, 3)

    def test_type_d_parity_matters_without_zero(self):
        a = CharacterVector((Fraction(2), Fraction(1)), "D")
        b = CharacterVector((Fraction(-2), Fraction(1)), "D")
        assert a != b
        with_zero_a = CharacterVector((Fraction(2), Fraction(0)), "D")
        with_zero_b = CharacterVector((Fraction(-2), Fraction(0)), "D")
        assert with_zero_a == with_zero_b

    def test_spinor_lengths(self):
        assert len(inf_char_spinor(Fraction(1, 5), 0, 3, 1).entries) == 2
        assert len(inf_char_spinor(Fraction(1, 5), 0, 5, 1).entries) == 3
        assert len(inf_char_spinor(Fraction(1, 5), 0, 4).entries) == 2


class TestGenericity:
    def test_examples(self):
        assert is_generic(Fraction(1, 3), 3)
        assert not is_generic(Fraction(-1, 2), 3)
        assert is_generic(Fraction(-3, 2), 3)  # 2 lam + n = 0 is below the cut

    def test_exceptional_index(self):
        assert exceptional_index(Fraction(-1, 2), 3) == 1
        assert exceptional_index(Fraction(0), 3) == 2
        assert exceptional_index(Fraction(1, 3), 3) is None
        assert lambda_j(2, 3) == Fraction(0)

    def test_collisions_match_genericity(self):
        for n in (3, 4, 5):
            for num in range(-10, 11):
                for den in (1, 2, 3):
                    lam = Fraction(num, den)
                    cols = character_collisions(lam, n, 12)
                    j = exceptional_index(lam, n)
                    expected = [] if j is None else \
                        [(b, j - b) for b in range(0, 13) if b < j - b <= 12]
                    assert cols == expected, (lam, n)


class TestIrreducibility:
    def test_examples(self):
        assert irreducibility_test(Fraction(1, 3), 4)
        assert not irreducibility_test(Fraction(0), 3)
        assert not irreducibility_test(Fraction(-1), 4)

    def test_odd_n_natural_parameters(self):
        assert not irreducibility_test(Fraction(2), 3)
        assert irreducibility_test(Fraction(-5, 2), 5)


class TestScalarReports:
    def test_lambda2_partners(self):
        rep = scalar_branch_report(lambda_j(2, 3), 3, b_max=6)
        assert rep.verdict == "even_exceptional_with_extensions"
        partner = {s.b: s.partner for s in rep.summands}
        assert partner[0] == 2 and partner[2] == 0
        assert partner[1] is None and partner[3] is None

    def test_lambda4_partners(self):
        rep = scalar_branch_report(lambda_j(4, 3), 3, b_max=6)
        partner = {s.b: s.partner for s in rep.summands}
        assert partner[0] == 4 and partner[1] == 3
        assert partner[3] == 1 and partner[4] == 0
        assert partner[2] is None

    def test_lambda3_direct(self):
        rep = scalar_branch_report(lambda_j(3, 3), 3, b_max=6)
        assert rep.verdict == "odd_exceptional_direct_sum"
        assert all(s.partner is None for s in rep.summands)

    def test_generic(self):
        rep = scalar_branch_report(Fraction(1, 3), 3, b_max=6)
        assert rep.verdict == "generic_direct_sum"

    def test_partnered_characters_coincide(self):
        rep = scalar_branch_report(lambda_j(6, 4), 4, b_max=10)
        for s in rep.summands:
            if s.partner is not None:
                assert s.character == rep.summands[s.partner].character

    def test_default_truncation(self):
        assert default_bmax(Fraction(0), 3) == 2 * 3 + 8

    def test_n_validation(self):
        with pytest.raises(ValueError):
            scalar_branch_report(Fraction(0), 2)


class TestSpinorReports:
    def test_examples(self):
        assert spinor_branch_report(Fraction(1, 5), 3).verdict == "irreducible_direct_sum"
        assert spinor_branch_report(Fraction(-1, 2), 3).verdict == "not_necessarily_direct"
        assert spinor_branch_report(Fraction(0), 4).verdict == "not_necessarily_direct"

    def test_odd_n_has_two_half_spins(self):
        rep = spinor_branch_report(Fraction(1, 5), 3, b_max=2)
        eps = [(s.b, s.epsilon) for s in rep.summands]
        assert (0, 1) in eps and (0, -1) in eps

    def test_distinctness_condition_matches_characters(self):
        for lam in (Fraction(1, 5), Fraction(-1, 2), Fraction(-3, 2)):
            rep = spinor_branch_report(lam, 3, b_max=10)
            chars = [s.character.canonical() for s in rep.summands]
            all_distinct = len(set(chars)) == len(chars)
            assert all_distinct == (rep.verdict == "irreducible_direct_sum")


class TestFactorization:
    @pytest.mark.parametrize("n", (3, 4))
    def test_witnesses(self, n):
        sig = Signature(2, n - 2 + 2)
        assert sig.n == n
        for k in range(1, 5):
            for a in range(0, k + 1):
                rep = factorization_witness(k, a, sig)
                assert rep.ok, (n, k, a, rep.f_difference.text())

    def test_trivial_case(self):
        rep = factorization_witness(2, 2, Signature(2, 3))
        assert rep.f_difference.is_zero() and rep.gegenbauer_ok

    def test_requires_a_le_k(self):
        with pytest.raises(ValueError):
            factorization_witness(1, 2, Signature(2, 3))

    def test_w_multiple_reported(self):
        rep = factorization_witness(1, 0, Signature(2, 3))
        assert rep.w_multiple is not None

    def test_submodule_inclusion_small(self):
        sig = Signature(2, 3)
        assert submodule_inclusion_holds(1, 0, sig, 6)
        assert submodule_inclusion_holds(2, 1, sig, 8)


def test_xi_n_triangularity():
    sig = Signature(2, 3)
    for lam in (0, 1, 2, 3):
        for K in range(0, lam + 2):
            assert xi_n_top_coefficient(K, Fraction(lam), sig) != 0
