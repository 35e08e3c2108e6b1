"""Worked examples and cross-checks between independent evaluators."""
from fractions import Fraction

import mpmath as mp
import pytest

from mzvkit import closed_forms as cf
from mzvkit.exact import zts_trunc
from mzvkit.index_algebra import make_index, repeat_ones, star_expansion
from mzvkit.numeric import (eval_zeta_poly, mzv_numeric, series_S_direct, tstar_numeric,
                            xi_numeric, zeta_single)
from mzvkit.zetapoly import Zeta, ZetaPoly, height_one_mzv, kaneko_sakata, z

F = Fraction
W = lambda *p: make_index(p)


def close(a, b, tol=1e-10):
    with mp.workdps(40):
        va, vb = (x.value if hasattr(x, "value") else mp.mpf(F(x).numerator) / F(x).denominator
                  if isinstance(x, (int, F)) else mp.mpf(x) for x in (a, b))
        return abs(va - vb) <= tol


def test_truncated_stirling_examples():
    assert cf.stirling_series_trunc(1, 0, 2, 2) == F(1, 3)
    assert cf.K_term(3, 1, 2) == F(1, 27)


def test_stirling_closed_examples():
    assert cf.stirling_series_closed(0, 1, 2) == ZetaPoly.zeta(2) - 1
    assert cf.stirling_series_closed(1, 2, 1) == ZetaPoly.const(F(1, 4))
    p = cf.stirling_series_closed(0, 1, 3)
    assert p == ZetaPoly.zeta(3) - ZetaPoly.zeta(2) + 1
    assert close(eval_zeta_poly(p), series_S_direct(0, 0, 1, 3), 1e-9)


def test_reduce_examples():
    r = lambda s: cf.reduce_to_single(ZetaPoly.symbol(s)).poly
    assert r(z(2, 1)) == ZetaPoly.zeta(3)
    assert r(z(2, 1, star=True)) == ZetaPoly.zeta(3, coeff=2)
    assert r(z(3, 1, star=True)) == ZetaPoly.zeta(4, coeff=F(5, 4))


def test_tstar_examples():
    assert cf.tstar_closed(0, 2) == ZetaPoly.const(F(3, 2))
    assert cf.tstar_closed(0, 1) == ZetaPoly.const(1)
    assert cf.tstar_closed(1, 1) == ZetaPoly.zeta(2)
    assert cf.tstar_closed(1, 2) == ZetaPoly.zeta(2) + 1
    assert close(tstar_numeric(0, 2), F(3, 2))
    assert close(tstar_numeric(1, 2), eval_zeta_poly(ZetaPoly.zeta(2) + 1))


def test_zetastar_examples():
    assert cf.reduce_to_single(cf.zetastar_series_closed(0, 1, 2)).poly == ZetaPoly.zeta(2) - 1
    red = cf.reduce_to_single(cf.zetastar_series_closed(2, 1, 2))
    assert red.complete and red.poly.only_single_zetas()
    assert close(eval_zeta_poly(red.poly), series_S_direct(2, 0, 1, 2), 1e-8)


def test_arakawa_examples():
    chk = cf.arakawa_relation(1, 0, 2)
    assert close(chk.series, zeta_single(3), 1e-9)
    assert chk.holds(1e-8)
    assert cf.arakawa_relation(1, 1, 2).holds(1e-8)
    assert cf.arakawa_relation(2, 0, 3).holds(1e-8)


def test_single_and_mzv_examples():
    assert close(zeta_single(10), mp.mpf("1.000994575128"), 1e-12)
    assert close(mzv_numeric(W(2)), zeta_single(2))
    assert close(mzv_numeric(W(2, 1)), zeta_single(3))
    assert close(mzv_numeric(W(3, 1)), mp.pi ** 4 / 360)


def test_eval_zeta_poly_examples():
    assert close(eval_zeta_poly(ZetaPoly.zeta(3) - 1), mp.mpf("0.2020569"), 1e-7)
    assert close(eval_zeta_poly(ZetaPoly.zeta(3, coeff=2)), mp.mpf("2.4041138"), 1e-7)
    empty = eval_zeta_poly(ZetaPoly())
    assert empty.value == 0 and empty.radius == 0


def test_series_and_xi_examples():
    assert close(series_S_direct(1, 0, 0, 2), zeta_single(3), 1e-9)
    assert close(xi_numeric(W(1), 2), zeta_single(3) * 2, 1e-9)
    assert close(xi_numeric(W(2), 1), zeta_single(3), 1e-9)


def test_kaneko_sakata_examples():
    assert kaneko_sakata(1, 1) == ZetaPoly.zeta(2)
    assert kaneko_sakata(2, 1) == ZetaPoly.zeta(3)
    assert height_one_mzv(0, 0) == ZetaPoly.zeta(2)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 5) for n in range(1, 5) if m + n <= 6])
def test_height_one_agrees_with_kaneko_sakata(m, n):
    a = eval_zeta_poly(height_one_mzv(m - 1, n - 1), 12)
    b = eval_zeta_poly(kaneko_sakata(m, n), 12)
    assert close(a, b, 1e-8)


@pytest.mark.parametrize("r,s", [(r, s) for r in range(1, 5) for s in range(1, 5) if r + s <= 5])
def test_xi_equals_star_value(r, s):
    star = ZetaPoly()
    for c, w in star_expansion(W(r + 1, *([1] * (s - 1)))):
        star = star + ZetaPoly.symbol(Zeta(w), c)
    assert close(xi_numeric(W(r), s, 12), eval_zeta_poly(star, 12), 1e-8)


@pytest.mark.parametrize("make", [
    lambda d: zeta_single(5, d),
    lambda d: mzv_numeric(W(2, 1, 1), d),
    lambda d: series_S_direct(1, 1, 1, 2, d),
    lambda d: xi_numeric(W(2, 1), 2, d),
    lambda d: tstar_numeric(2, 3, d),
])
def test_interval_soundness(make):
    # refine by ten digits; the refined value must sit inside the coarse interval
    coarse, fine = make(10), make(20)
    with mp.workdps(50):
        assert abs(fine.value - coarse.value) <= coarse.radius
