"""Acceptance criteria 1-12.

Each test records one PASS/FAIL line; conftest prints the table at the end
of the session.  Running this file as a script prints the same table.
"""
from __future__ import annotations

import time
from fractions import Fraction

import mpmath as mp
import pytest

from mzvkit import closed_forms as cf
from mzvkit.exact import interp_trunc, zt_trunc, zts_trunc
from mzvkit.identity_suite import (interp_det_solvable_k4, interp_det_unsolvable_k5_half,
                                   verify)
from mzvkit.index_algebra import make_index, repeat_ones
from mzvkit.numeric import eval_zeta_poly, series_S_direct, xi_numeric, zeta_single
from mzvkit.zetapoly import ZetaPoly, z

RESULTS: dict[int, str] = {}


def record(n: int, ok: bool, detail: str):
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def _reports(specs):
    start = time.perf_counter()
    reports = [verify(i, g) for i, g in specs]
    return reports, time.perf_counter() - start


def _summary(reports):
    return ", ".join(f"{r.identity_id} {r.cases_total - r.cases_failed}/{r.cases_total}" for r in reports)


def test_criterion_01_stirling_truncation_grid():
    reports, dt = _reports([("thm2-trunc", "N<=25,r1<=4,r2<=4,l2<=3")])
    ok = all(r.ok for r in reports) and dt < 60
    record(1, ok, f"{_summary(reports)} exact, {dt:.1f}s (limit 60s)")


def test_criterion_02_duality_grid():
    reports, dt = _reports([("lem10-duality", "N<=15,r<=2,a<=3,b<=3")])
    ok = all(r.ok for r in reports) and dt < 60
    record(2, ok, f"{_summary(reports)} exact, {dt:.1f}s (limit 60s)")


def test_criterion_03_finite_identities():
    reports, dt = _reports([
        ("lem8-nested", "n<=12,k<=4,l<=4"),
        ("conv-star", "N<=12,weight<=5"),
        ("conv-plain", "N<=12,weight<=5"),
        ("stuffle", "N<=12,wa<=4,wb<=4"),
        ("binomial-inversion", "n<=12,l<=4"),
        ("lem3-recurrence", "n<=12,k<=4"),
        ("eq-nestedsum", "n<=12,k<=4"),
    ])
    ok = all(r.ok for r in reports) and dt < 120
    record(3, ok, f"{_summary(reports)}, {dt:.1f}s (limit 120s)")


def test_criterion_04_representation_coherence():
    reports, _ = _reports([("lem2-representations", "n<=20,k<=6"),
                           ("lem3-representations", "n<=20,k<=6"),
                           ("thm1-summand", "n<=20,l<=6"),
                           ("genfun-product", "n<=12")])
    record(4, all(r.ok for r in reports), _summary(reports))


def test_criterion_05_stirling_series_r2_one():
    worst = mp.mpf(0)
    for r1 in range(1, 5):
        for l2 in range(0, 4):
            v = series_S_direct(0, l2, r1, 1, 14)
            worst = max(worst, abs(v.value - mp.mpf(1) / r1 ** (l2 + 1)))
    record(5, worst <= 1e-10, f"max |S - 1/r1^(l2+1)| = {mp.nstr(worst, 3)} (tol 1e-10, 16 cases)")


def test_criterion_06_stirling_series_closed():
    worst = mp.mpf(0)
    for r1 in range(1, 4):
        for r2 in range(1, 4):
            for l2 in range(0, 3):
                closed = eval_zeta_poly(cf.stirling_series_closed(l2, r1, r2), 14)
                worst = max(worst, abs(closed.value - series_S_direct(0, l2, r1, r2, 14).value))
    anchor = eval_zeta_poly(cf.stirling_series_closed(0, 1, 2), 14)
    anchor_ok = abs(anchor.value - mp.mpf("0.6449341")) < 1e-7
    record(6, worst <= 1e-8 and anchor_ok,
           f"max |closed - direct| = {mp.nstr(worst, 3)} (tol 1e-8, 27 cases); "
           f"S(0,0,1,2) = {mp.nstr(anchor.value, 10)}")


def test_criterion_07_zetastar_series_closed():
    worst = mp.mpf(0)
    flagged = []
    for l1 in range(0, 3):
        for r1 in range(1, 4):
            for r2 in range(1, 4):
                poly = cf.zetastar_series_closed(l1, r1, r2)
                worst = max(worst, abs(eval_zeta_poly(poly, 14).value
                                       - series_S_direct(l1, 0, r1, r2, 14).value))
                if r2 <= 2:
                    red = cf.reduce_to_single(poly)
                    if red.flagged or not red.poly.only_single_zetas():
                        flagged.append((l1, r1, r2))
    record(7, worst <= 1e-8 and not flagged,
           f"max |closed - direct| = {mp.nstr(worst, 3)} (tol 1e-8, 27 cases); "
           f"r2<=2 irreducible leftovers: {flagged or 'none'}")


def test_criterion_08_arakawa_kaneko():
    worst = mp.mpf(0)
    for l1 in (1, 2):
        for l2 in (0, 1):
            for r2 in (2, 3):
                worst = max(worst, cf.arakawa_relation(l1, l2, r2, 14).error)
    worst_xi = mp.mpf(0)
    for r in range(1, 5):
        worst_xi = max(worst_xi, abs(xi_numeric(make_index((r,)), 1, 14).value
                                     - zeta_single(r + 1, 14).value))
    record(8, worst <= 1e-8 and worst_xi <= 1e-10,
           f"max relation error {mp.nstr(worst, 3)} (tol 1e-8); "
           f"max |xi_r(1) - zeta(r+1)| {mp.nstr(worst_xi, 3)} (tol 1e-10)")


def test_criterion_09_general_split():
    worst = mp.mpf(0)
    for l1, l2 in ((1, 1), (1, 2), (2, 1)):
        for r1 in (1, 2):
            for r2 in (1, 2):
                worst = max(worst, cf.general_S1(l1, l2, r1, r2, 12).error)
    record(9, worst <= 1e-7, f"max |S1 + S2 - S| = {mp.nstr(worst, 3)} (tol 1e-7, 12 cases)")


def test_criterion_10_interpolated_values():
    endpoints = all(interp_trunc(n, k)(0) == zt_trunc(n, repeat_ones(k))
                    and interp_trunc(n, k)(1) == zts_trunc(n, repeat_ones(k))
                    for n in range(1, 16) for k in range(0, 6))
    det_half = verify("interp-examples", "n<=10,k<=4")
    sample = sorted({Fraction(i, 64) for i in range(-64, 136)})
    solvable = {t for t in sample if interp_det_solvable_k4(t).solvable}
    ledger = interp_det_unsolvable_k5_half()
    hi = verify("hoffman-ihara-half", "n<=12,k<=6")
    ok = (endpoints and det_half.ok and solvable == {Fraction(0), Fraction(1, 2), Fraction(1)}
          and len(sample) == 200 and all(b.contradictory for b in ledger) and hi.ok)
    record(10, ok, f"endpoints {'ok' if endpoints else 'bad'}; t=1/2 dets {det_half.cases_total - det_half.cases_failed}/"
                   f"{det_half.cases_total}; k=4 solvable on {sorted(map(str, solvable))} of {len(sample)} t; "
                   f"k=5 branches contradictory {sum(b.contradictory for b in ledger)}/{len(ledger)}; "
                   f"Hoffman-Ihara {hi.cases_total - hi.cases_failed}/{hi.cases_total}")


def test_criterion_11_remainder_decay():
    r = verify("en-decay", "r1<=3,r2<=3,l2<=2")
    record(11, r.ok, f"{r.cases_total - r.cases_failed}/{r.cases_total} parameter sets bounded")


def test_criterion_12_star_31():
    d = cf.decide_star_31(20)
    wired = cf.reduce_to_single(ZetaPoly.symbol(z(3, 1, star=True))).poly == ZetaPoly.zeta(4, coeff=Fraction(5, 4))
    ok = d.winner == "5/4*zeta(4)" and d.margin >= 1000 * d.combined_radius and wired
    record(12, ok, f"winner {d.winner}, margin {mp.nstr(d.margin, 3)} vs 1e3 x radii "
                   f"{mp.nstr(1000 * d.combined_radius, 3)}; wired into reduce_to_single: {wired}")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                pass
