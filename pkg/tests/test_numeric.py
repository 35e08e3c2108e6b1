from fractions import Fraction

import mpmath as mp
import pytest

from mzvkit.index_algebra import make_index
from mzvkit.numeric import (PrecReal, default_digits, euler_gamma, eval_zeta_poly, mzv_numeric,
                            series_S_direct, tail_majorant, tstar_numeric, xi_numeric, zeta_single)
from mzvkit.zetapoly import ZetaPoly, height_one_mzv

W = lambda *p: make_index(p)


def test_zeta_single_against_mpmath():
    for k in (2, 3, 5, 8):
        v = zeta_single(k, 15)
        assert v.radius < 1e-15
        with mp.workdps(40):
            assert abs(v.value - mp.zeta(k)) <= v.radius + mp.mpf(10) ** -30


def test_euler_gamma():
    with mp.workdps(40):
        assert abs(euler_gamma(20).value - mp.euler) < mp.mpf(10) ** -20


def test_mzv_numeric_known_values():
    assert abs(mzv_numeric(W(2, 1), 12).value - mp.zeta(3)) < 1e-11
    assert abs(mzv_numeric(W(3, 1), 12).value - mp.pi ** 4 / 360) < 1e-11
    v = mzv_numeric(W(2, 2), 12).value
    assert abs(v - mp.pi ** 4 / 120) < 1e-11


def test_height_one_numeric_agreement():
    for m, n in ((0, 2), (1, 1), (2, 1)):
        word = W(m + 2, *([1] * n))
        closed = eval_zeta_poly(height_one_mzv(m, n), 12)
        assert abs(closed.value - mzv_numeric(word, 12).value) < 1e-10


def test_series_examples():
    assert abs(series_S_direct(0, 0, 1, 2, 12).value - (mp.zeta(2) - 1)) < 1e-11
    assert abs(series_S_direct(0, 1, 2, 1, 12).value - mp.mpf(1) / 4) < 1e-11


def test_xi_and_tstar():
    assert abs(xi_numeric(W(1), 1, 12).value - mp.zeta(2)) < 1e-11
    assert abs(tstar_numeric(1, 1, 12).value - mp.zeta(2)) < 1e-11


def test_precreal_arithmetic():
    a = PrecReal.exact(Fraction(1, 3))
    b = a + a - a * 2
    assert b.contains(0)
    assert PrecReal.from_json(a.to_json()).overlaps(a)


def test_tail_majorant_decreases():
    assert tail_majorant(2000, 2, 1) < tail_majorant(1000, 2, 1)


def test_default_digits_env(monkeypatch):
    monkeypatch.setenv("MZVKIT_DIGITS", "17")
    assert default_digits() == 17
    monkeypatch.delenv("MZVKIT_DIGITS")
    assert default_digits() == 12
