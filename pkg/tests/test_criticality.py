"""Tests for critical-strength location and the pairing gap."""

import math

import numpy as np
import pytest

from quadspec import (
    BracketError,
    PairingGap,
    SymmetryClass,
    char_value,
    critical_table,
    family_for_label,
    find_critical,
    log_gap,
    oracle_char_value,
    pairing_gap,
)
from quadspec import criticality as criticality_mod

# Ten reference critical strengths xi_c (a_0, b_1, ..., a_4, b_5), quoted
# to ten significant figures; the first six are reproduced to 1e-8 and
# the near-degenerate last four to 5e-7.
TABLE1 = [
    ("a0", 0.0),
    ("b1", 0.2270115834),
    ("a1", 1.878402574),
    ("b2", 1.894922593),
    ("a2", 5.324657803),
    ("b3", 5.325793406),
    ("a3", 10.48179309),
    ("b4", 10.48186048),
    ("a4", 17.35709457),
    ("b5", 17.35709827),
]
TABLE1_TOL = [1e-8] * 6 + [5e-7] * 4


class TestFindCritical:
    def test_lowest_curve_roots_at_origin(self):
        point = find_critical(SymmetryClass.EVEN_PI, 0)
        assert point.q_c == 0.0
        assert point.xi_c == 0.0
        assert point.residual < 1e-12

    def test_lowest_curve_negative_for_positive_q(self):
        # Numerical check of the claim behind the origin root: the a0
        # curve starts at zero and is negative for every q > 0.
        for q in np.geomspace(0.01, 100.0, 25):
            assert char_value(SymmetryClass.EVEN_PI, 0, float(q)).value < 0

    def test_first_threshold(self):
        point = find_critical(SymmetryClass.ODD_2PI, 1)
        assert point.xi_c == pytest.approx(0.2270115834, abs=1e-8)
        assert point.label == "b1"

    def test_second_threshold(self):
        point = find_critical(SymmetryClass.EVEN_2PI, 1)
        assert point.xi_c == pytest.approx(1.878402574, abs=1e-8)

    def test_high_order_threshold(self):
        point = find_critical(SymmetryClass.ODD_2PI, 5)
        assert point.xi_c == pytest.approx(17.35709827, abs=1e-6)

    def test_xi_is_quarter_q(self):
        point = find_critical(SymmetryClass.ODD_PI, 2)
        assert point.xi_c == point.q_c / 4.0

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            find_critical(SymmetryClass.ODD_2PI, 2)
        with pytest.raises(ValueError):
            find_critical(SymmetryClass.ODD_2PI, 1, tol=0.0)

    def test_bracket_error_when_curve_never_crosses(self, monkeypatch):
        real = criticality_mod.char_value

        def always_positive(symmetry, m, q, tol=1e-12):
            cv = real(symmetry, m, q, tol)
            return type(cv)(symmetry, m, q, abs(cv.value) + 1.0, cv.truncation)

        monkeypatch.setattr(criticality_mod, "char_value", always_positive)
        with pytest.raises(BracketError, match="no zero crossing"):
            find_critical(SymmetryClass.ODD_2PI, 1)


class TestCriticalTable:
    def test_reproduces_reference_values(self, table5):
        assert len(table5) == 10
        for point, (label, xi_ref), tol in zip(table5, TABLE1, TABLE1_TOL):
            assert point.label == label
            assert point.xi_c == pytest.approx(xi_ref, abs=tol)

    def test_strictly_increasing(self, table5):
        values = [p.xi_c for p in table5]
        assert all(lo < hi for lo, hi in zip(values, values[1:]))

    def test_residuals_small_on_both_routes(self, table5):
        for point in table5:
            assert point.residual < 1e-10
            oracle = oracle_char_value(point.symmetry, point.order, point.q_c)
            assert abs(oracle) < 1e-8

    def test_prefix_property(self, table5):
        short = critical_table(1)
        assert [p.label for p in short] == ["a0", "b1"]
        assert short[0].q_c == table5[0].q_c
        assert short[1].q_c == table5[1].q_c

    def test_six_pairs_extend_beyond_reference(self, table5):
        extended = critical_table(6)
        assert len(extended) == 12
        assert [p.label for p in extended[:10]] == [p.label for p in table5]
        for point in extended[10:]:
            assert point.xi_c > 17.35709827
            oracle = oracle_char_value(point.symmetry, point.order, point.q_c)
            assert abs(oracle) < 1e-8

    def test_rejects_zero_pairs(self):
        with pytest.raises(ValueError):
            critical_table(0)


class TestPairingGap:
    def test_free_rotor_gap(self):
        gap = pairing_gap(0, 0.0)
        assert gap.gap == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("m", range(6))
    @pytest.mark.parametrize("q", [0.5, 5.0, 20.0, 80.0])
    def test_positive(self, m, q):
        assert pairing_gap(m, q).gap > 0

    def test_fast_decay(self):
        assert pairing_gap(2, 40.0).gap < pairing_gap(2, 20.0).gap / 10.0

    def test_log_gap_decay_shape(self):
        # The gap closes like exp(-4 sqrt(q)), so log-gap is decreasing in
        # q and its slopes with respect to sqrt(q) never increase.  (In q
        # itself the differences grow toward zero, which is the same
        # statement about sub-exponential-in-q decay.)
        qs = [10.0, 20.0, 30.0, 40.0]
        logs = [log_gap(pairing_gap(1, q)) for q in qs]
        assert all(hi < lo for lo, hi in zip(logs, logs[1:]))
        roots = [math.sqrt(q) for q in qs]
        slopes = [
            (l1 - l0) / (r1 - r0)
            for (l0, l1, r0, r1) in zip(logs, logs[1:], roots, roots[1:])
        ]
        assert all(s1 <= s0 + 1e-9 for s0, s1 in zip(slopes, slopes[1:]))

    def test_matches_reference_pair_spacing(self, table5):
        # The spacing of the closest reference pair, 17.35709827 -
        # 17.35709457 = 3.70e-6, is what the gap shrinks to at crossing.
        spacing = table5[9].xi_c - table5[8].xi_c
        assert spacing == pytest.approx(3.70e-6, abs=2e-7)
        gap_at_crossing = pairing_gap(4, 69.42837828).gap
        assert 1e-6 < gap_at_crossing < 1e-4

    def test_log_gap_of_nonpositive_is_nan(self):
        assert math.isnan(log_gap(PairingGap(0, 1.0, 0.0)))
        assert math.isnan(log_gap(PairingGap(0, 1.0, -1e-30)))

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            pairing_gap(-1, 1.0)
        with pytest.raises(ValueError):
            pairing_gap(0, -1.0)


class TestFamilySelection:
    def test_pairs_use_matching_families(self):
        assert family_for_label("a", 0) is SymmetryClass.EVEN_PI
        assert family_for_label("a", 3) is SymmetryClass.EVEN_2PI
        assert family_for_label("b", 4) is SymmetryClass.ODD_PI
        assert family_for_label("b", 5) is SymmetryClass.ODD_2PI
