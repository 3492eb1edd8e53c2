from fractions import Fraction

import pytest

from trilat.contfrac import CFSpec, convergent_series, verify_cf_identity, verify_induction_step
from trilat.formulas import ALPHA, BETA
from trilat.paths import MotzkinStripSpec, motzkin_strip_count
from trilat.series import BIVAR, TruncSeries


def test_base_cases():
    assert convergent_series(CFSpec(0), 12) == TruncSeries.constant(BIVAR, 1, 12)
    s = ALPHA + BETA
    assert convergent_series(CFSpec(1), 12) == TruncSeries(BIVAR, [s**n for n in range(13)])
    assert list(convergent_series(CFSpec(1), 5, (1, 1)).coeffs) == [1, 2, 4, 8, 16, 32]
    assert list(convergent_series(CFSpec(2), 4, (1, 1)).coeffs) == [1, 2, 8, 24, 80]


def test_depth_parity():
    assert (CFSpec(6).H, CFSpec(6).depth) == (3, 3)
    assert (CFSpec(7).H, CFSpec(7).depth) == (3, 4)
    assert not CFSpec(6).odd and CFSpec(7).odd
    with pytest.raises(ValueError):
        CFSpec(-1)


@pytest.mark.parametrize("L", range(9))
def test_cf_identity(L):
    assert verify_cf_identity(L, 30).passed


@pytest.mark.parametrize("L,order", [(0, 20), (1, 20), (5, 30)])
def test_induction_step(L, order):
    assert verify_induction_step(L, order).passed


@pytest.mark.parametrize("L", range(9))
def test_convergents_agree_through_order_l(L):
    a = convergent_series(CFSpec(L), L + 6)
    b = convergent_series(CFSpec(L + 2), L + 6)
    assert a.truncate(L) == b.truncate(L)


def test_alpha_only_convergent_counts_motzkin_paths():
    for L in range(8):
        spec = MotzkinStripSpec(L // 2, forbid_top_horizontal=L % 2 == 0)
        got = convergent_series(CFSpec(L), 14, (1, 0))
        assert list(got.coeffs) == [motzkin_strip_count(spec, n) for n in range(15)]


def test_rational_weights_match_symbolic_evaluation():
    sym = convergent_series(CFSpec(5), 10)
    num = convergent_series(CFSpec(5), 10, ("1/3", 2))
    assert list(num.coeffs) == [c.evaluate(Fraction(1, 3), 2) for c in sym.coeffs]
