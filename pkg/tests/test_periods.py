"""Unit tests for period word predicates, counts, and class reports."""

import pytest

from surdsym.forms import Form
from surdsym.periods import (ClassificationError, ClassReport, SymmetryType,
                             canonical_rotation, classify_class,
                             classify_period, classify_square,
                             counts_nonsquare, counts_square,
                             is_bipalindromic, is_palindromic_cyclic,
                             is_primitive_period, normalize_square_form,
                             square_cf_display)

SUPER = SymmetryType.SUPERSYMMETRIC
K = SymmetryType.K_SYMMETRIC
MPN = SymmetryType.M_PLUS_N_SYMMETRIC
ANTI = SymmetryType.ANTISYMMETRIC
ASYM = SymmetryType.ASYMMETRIC


class TestSymmetryType:
    def test_codes_round_trip(self):
        for sym in SymmetryType:
            assert SymmetryType.from_code(sym.code) is sym

    def test_unknown_code(self):
        with pytest.raises(ValueError):
            SymmetryType.from_code("chiral")


class TestRotationsAndPredicates:
    def test_canonical_rotation(self):
        assert canonical_rotation((3, 1, 2)) == (1, 2, 3)
        assert canonical_rotation((2, 1, 2, 1)) == (1, 2, 1, 2)
        assert canonical_rotation((5,)) == (5,)

    def test_primitive_period(self):
        assert is_primitive_period((1, 2, 3))
        assert is_primitive_period((1,))
        assert not is_primitive_period((1, 2, 1, 2))
        assert not is_primitive_period((2, 2))

    def test_palindromic_cyclic(self):
        assert is_palindromic_cyclic((1, 1, 3))       # rotation (1,3,1)
        assert is_palindromic_cyclic((1, 2, 2, 1))    # already its own reverse
        assert is_palindromic_cyclic((5,))
        assert not is_palindromic_cyclic((1, 2, 3))
        # (2,1) reversed is (1,2), a rotation of (2,1) but no rotation is
        # its own reverse: achirality is not cyclic palindromicity
        assert not is_palindromic_cyclic((2, 1))

    def test_bipalindromic(self):
        assert is_bipalindromic((2, 1))       # split into (2) and (1)
        assert is_bipalindromic((5, 2, 1, 2))  # (5) + (2,1,2)
        assert not is_bipalindromic((1, 2, 3))
        assert not is_bipalindromic((1, 2, 2, 1))

    def test_classify_period_all_five(self):
        assert classify_period((1, 1, 3)) is SUPER          # palindromic, odd
        assert classify_period((1, 2, 2, 1)) is MPN         # palindromic, even
        assert classify_period((2, 1)) is K                 # bipalindromic
        assert classify_period((1, 2, 3)) is ANTI           # nonpal, odd
        assert classify_period((1, 1, 2, 3)) is ASYM        # nonpal, even

    def test_classify_period_input_validation(self):
        with pytest.raises(ValueError):
            classify_period(())
        with pytest.raises(ValueError):
            classify_period((1, 0, 2))
        with pytest.raises(ValueError):
            classify_period((1, 2, 1, 2))  # imprimitive


class TestCountsNonsquare:
    def test_table_convention(self):
        assert counts_nonsquare((5, 2, 1, 2)) == (10, 6, 4)
        assert counts_nonsquare((2, 1)) == (3, 2, 1)
        assert counts_nonsquare((1, 1, 3)) == (10, 5, 5)

    def test_odd_period_doubles(self):
        t, up, down = counts_nonsquare((1, 2, 3))
        assert t == 12 and up == down == 6

    def test_start_parity_flips_ordered_pair(self):
        t_o, up_o, down_o = counts_nonsquare((2, 1), "odd")
        t_e, up_e, down_e = counts_nonsquare((2, 1), "even")
        assert t_o == t_e
        assert (up_o, down_o) == (down_e, up_e)

    def test_bad_parity(self):
        with pytest.raises(ValueError):
            counts_nonsquare((2, 1), "sideways")


class TestSquareClasses:
    def test_counts_square_examples(self):
        assert counts_square(0, 3) == (0, 0, 0)
        assert counts_square(1, 3) == (2, 1, 0)
        assert counts_square(2, 3) == (2, 0, 1)
        assert counts_square(2, 5) == (3, 1, 1)
        assert counts_square(1, 2) == (1, 0, 0)

    def test_classify_square_examples(self):
        assert classify_square(0, 4) is SUPER
        assert classify_square(2, 4) is SUPER   # m = k/2
        assert classify_square(1, 4) is K
        assert classify_square(2, 5) is MPN
        assert classify_square(2, 7) is ASYM

    def test_square_cf_display(self):
        assert square_cf_display(0, 3) == ()
        assert square_cf_display(1, 3) == (3,)
        assert square_cf_display(2, 3) == (1, 1, 1)
        assert square_cf_display(2, 5) == (2, 2)

    def test_display_value(self):
        from fractions import Fraction
        from surdsym.cf import CFExpansion, cf_value
        for k in range(2, 12):
            for m in range(1, k):
                disp = square_cf_display(m, k)
                assert cf_value(CFExpansion(disp, ())) == Fraction(k, m)


class TestNormalizeSquareForm:
    def test_already_normal(self):
        assert normalize_square_form(Form(1, 0, 3)) == Form(1, 0, 3)

    def test_worked_example(self):
        assert normalize_square_form(Form(2, 2, -5)) == Form(2, 0, 3)

    def test_m_reduced_mod_k(self):
        g = normalize_square_form(Form(5, 0, 3))
        assert g == Form(2, 0, 3)

    def test_rejects_nonsquare(self):
        with pytest.raises(ValueError):
            normalize_square_form(Form(2, -1, -3))


class TestClassifyClass:
    def test_nonsquare_worked_example(self):
        r = classify_class(Form(2, -1, -3))
        assert r.delta == 17
        assert r.gamma == (1, 1, 3)
        assert r.p_or_l == 3
        assert (r.t, r.t_up, r.t_down) == (10, 5, 5)
        assert r.symmetry is SUPER
        assert r.primitive
        assert not r.square
        assert not r.star

    def test_mpn_worked_example(self):
        r = classify_class(Form(5, -7, 9))
        assert r.delta == 221
        assert canonical_rotation(r.gamma) == (1, 1, 2, 2)
        assert r.symmetry is MPN

    def test_square_worked_example(self):
        r = classify_class(Form(1, 0, 3))
        assert r.square
        assert r.delta == 9
        assert r.cf_of_k_over_m == (3,)
        assert r.p_or_l == 1
        assert (r.t, r.t_up, r.t_down) == (2, 1, 0)
        assert r.symmetry is K

    def test_square_normalizes_first(self):
        r = classify_class(Form(2, 2, -5))
        assert r.representative == Form(2, 0, 3)
        assert r.delta == 9
        assert r.symmetry is K

    def test_scaled_class(self):
        r = classify_class(Form(2, -2, 2))
        assert r.delta == 20
        assert not r.primitive
        assert r.star

    def test_not_indefinite(self):
        with pytest.raises(ValueError):
            classify_class(Form(1, 1, 1))

    def test_parity_of_preperiod_respected(self):
        # (2,-1,-3) is purely periodic (preperiod length 0, even parity);
        # its table-mate (2,-2,1) = A(2,-1,-3) has preperiod [1] (odd).
        r_even = classify_class(Form(2, -1, -3))
        r_odd = classify_class(Form(2, -2, 1))
        assert r_even.delta == r_odd.delta == 17
        assert (r_even.t, r_even.t_up) == (r_odd.t, r_odd.t_up)


class TestClassificationExclusivity:
    def test_primitive_words_get_exactly_one_type(self):
        import itertools
        seen = set()
        for n in range(1, 7):
            for digits in itertools.product((1, 2, 3), repeat=n):
                if not is_primitive_period(digits):
                    continue
                sym = classify_period(digits)  # must not raise
                seen.add(sym)
                pal = is_palindromic_cyclic(digits)
                bip = is_bipalindromic(digits)
                assert not (pal and bip), digits
        assert seen == {SUPER, K, MPN, ANTI, ASYM}
