"""High-precision evaluation of convergent zeta-type series.

Values are :class:`PrecReal` (mpmath value plus error radius).  Single zeta
values use Euler-Maclaurin with a rigorous remainder bound.  The other
series share one summation engine: partial sums up to a cutoff plus either

* a certified tail bound from the majorant C (1 + ln n)^L / n^p, when that
  bound reaches the requested accuracy at a reasonable cutoff, or
* a least-squares fit of the partial sums against
  c0 + sum_{p,q} c_{p,q} ln(N)^q / N^p on a geometric ladder of cutoffs.
  The radius is then a heuristic: the disagreement between fits on two
  ladders whose tops differ by a factor two.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator

import mpmath as mp

from .exact import binomial, factorial
from .index_algebra import IndexWord, star_expansion
from .zetapoly import Zeta, ZetaPoly

DEFAULT_DIGITS = 12
WORKING_DIGITS = 30
GUARD_DIGITS = 18
CUTOFF_BOUND = 1 << 16
FIT_ORDER = 6
LADDER_SPAN = 32


class PrecisionError(ArithmeticError):
    """Requested accuracy not reachable within the configured budgets."""


def working_dps(digits: int) -> int:
    return max(WORKING_DIGITS, digits + GUARD_DIGITS)


def default_digits() -> int:
    env = os.environ.get("MZVKIT_DIGITS")
    return int(env) if env else DEFAULT_DIGITS


# --------------------------------------------------------------------------
# PrecReal

@dataclass(frozen=True)
class PrecReal:
    value: mp.mpf
    radius: mp.mpf
    digits: int = WORKING_DIGITS

    @classmethod
    def exact(cls, q, digits: int = WORKING_DIGITS) -> PrecReal:
        with mp.workdps(working_dps(digits)):
            q = Fraction(q)
            v = mp.mpf(q.numerator) / q.denominator
            r = abs(v) * mp.eps if q.denominator != 1 else mp.mpf(0)
        return cls(v, r, digits)

    def _round(self, v) -> mp.mpf:
        return abs(v) * mp.eps

    def __add__(self, other):
        other = _coerce(other, self.digits)
        with mp.workdps(working_dps(max(self.digits, other.digits))):
            v = self.value + other.value
            return PrecReal(v, self.radius + other.radius + self._round(v),
                            min(self.digits, other.digits))

    __radd__ = __add__

    def __neg__(self):
        with mp.workdps(working_dps(self.digits)):
            return PrecReal(-self.value, self.radius, self.digits)

    def __sub__(self, other):
        return self + (-_coerce(other, self.digits))

    def __rsub__(self, other):
        return _coerce(other, self.digits) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            with mp.workdps(working_dps(self.digits)):
                c = mp.mpf(q.numerator) / q.denominator
                v = self.value * c
                return PrecReal(v, self.radius * abs(c) + self._round(v) * 2, self.digits)
        other = _coerce(other, self.digits)
        with mp.workdps(working_dps(max(self.digits, other.digits))):
            v = self.value * other.value
            r = (abs(self.value) * other.radius + abs(other.value) * self.radius
                 + self.radius * other.radius + self._round(v))
            return PrecReal(v, r, min(self.digits, other.digits))

    __rmul__ = __mul__

    def contains(self, x) -> bool:
        x = x.value if isinstance(x, PrecReal) else x
        with mp.workdps(working_dps(self.digits)):
            return abs(mp.mpf(x) - self.value) <= self.radius

    def overlaps(self, other: PrecReal, slack=0) -> bool:
        with mp.workdps(working_dps(max(self.digits, other.digits))):
            return abs(self.value - other.value) <= self.radius + other.radius + slack

    def __float__(self):
        return float(self.value)

    def to_json(self) -> dict:
        with mp.workdps(working_dps(self.digits)):
            return {"value": mp.nstr(self.value, self.digits + 5, strip_zeros=False),
                    "radius": mp.nstr(self.radius, 3)}

    @classmethod
    def from_json(cls, data: dict, digits: int = WORKING_DIGITS) -> PrecReal:
        # widen by the rounding of the printed value and radius
        text = data["value"].lower().split("e")[0]
        shown = sum(ch.isdigit() for ch in text.lstrip("-+0."))
        with mp.workdps(working_dps(digits)):
            v = mp.mpf(data["value"])
            r = mp.mpf(data["radius"]) * mp.mpf("1.01") + abs(v) * mp.mpf(10) ** (1 - max(shown, 1))
            return cls(v, r, digits)

    def __str__(self):
        with mp.workdps(working_dps(self.digits)):
            return f"{mp.nstr(self.value, self.digits)} +/- {mp.nstr(self.radius, 3)}"


def _coerce(v, digits) -> PrecReal:
    if isinstance(v, PrecReal):
        return v
    return PrecReal.exact(v, digits)


# --------------------------------------------------------------------------
# Euler-Maclaurin: single zeta values and Euler's constant

@lru_cache(maxsize=None)
def _bernoulli(n: int) -> Fraction:
    p, q = mp.bernfrac(n)
    return Fraction(int(p), int(q))


def _rising(k: int, m: int) -> int:
    out = 1
    for j in range(m):
        out *= k + j
    return out


@lru_cache(maxsize=None)
def zeta_single(k: int, digits: int = DEFAULT_DIGITS) -> PrecReal:
    """zeta(k) for integer k >= 2 by Euler-Maclaurin through the B_10 term."""
    if k < 2:
        raise ValueError("zeta(k) needs k >= 2")
    target = mp.mpf(10) ** (-digits) / 10
    with mp.workdps(working_dps(digits)):
        # first omitted term B_12/12! * k(k+1)...(k+10) * N^{-k-11}
        b12 = abs(_bernoulli(12)) / factorial(12) * _rising(k, 11)
        N = 8
        while mp.mpf(b12.numerator) / b12.denominator * 2 / mp.mpf(N) ** (k + 11) > target:
            N *= 2
            if N > CUTOFF_BOUND:
                raise PrecisionError(f"zeta({k}) to {digits} digits exceeds cutoff bound")
        s = mp.fsum(mp.mpf(1) / mp.mpf(n) ** k for n in range(1, N))
        Nm = mp.mpf(N)
        s += Nm ** (1 - k) / (k - 1) + Nm ** (-k) / 2
        for j in range(1, 6):
            c = _bernoulli(2 * j) / factorial(2 * j) * _rising(k, 2 * j - 1)
            s += mp.mpf(c.numerator) / c.denominator * Nm ** (-k - 2 * j + 1)
        radius = mp.mpf(b12.numerator) / b12.denominator * 2 / Nm ** (k + 11) + N * mp.eps
        return PrecReal(s, radius, digits)


@lru_cache(maxsize=None)
def euler_gamma(digits: int = WORKING_DIGITS) -> PrecReal:
    """Euler's constant from H_N - ln N with the Euler-Maclaurin correction.

    Only used for diagnostics of harmonic-number tails.
    """
    with mp.workdps(working_dps(digits)):
        target = mp.mpf(10) ** (-digits) / 10
        b12 = abs(_bernoulli(12)) / 12
        N = 8
        while mp.mpf(b12.numerator) / b12.denominator / mp.mpf(N) ** 12 > target:
            N *= 2
        Nm = mp.mpf(N)
        g = mp.fsum(mp.mpf(1) / n for n in range(1, N + 1)) - mp.log(Nm) - 1 / (2 * Nm)
        for j in range(1, 6):
            c = _bernoulli(2 * j) / (2 * j)
            g += mp.mpf(c.numerator) / c.denominator / Nm ** (2 * j)
        radius = mp.mpf(b12.numerator) / b12.denominator / Nm ** 12 + N * mp.eps
        return PrecReal(g, radius, digits)


# --------------------------------------------------------------------------
# summation engine

def tail_majorant(N: int, p: int, L: int, C=1) -> mp.mpf:
    """Bound for sum_{n>N} C (1 + ln n)^L / n^p via the integral from N.

    Valid when the majorant decreases on [N, inf), i.e. p (1 + ln N) >= L.
    """
    a = p - 1
    u = 1 + mp.log(N)
    if a <= 0 or p * u < L:
        return mp.inf
    s = mp.fsum((a * u) ** j / mp.factorial(j) for j in range(L + 1))
    return mp.mpf(C) * mp.factorial(L) * s / (mp.mpf(a) ** (L + 1) * mp.mpf(N) ** a)


def _ladder(top: int, unknowns: int) -> list[int]:
    bottom = max(top // LADDER_SPAN, 8)
    count = min(2 * unknowns + 4, top - bottom + 1)
    ratio = (top / bottom) ** (1 / (count - 1))
    return sorted({int(round(bottom * ratio**i)) for i in range(count)} | {top})


def _fit_limit(partials: list, top: int, p0: int, P: int, Q: int):
    cols = [(p, q) for p in range(p0, p0 + P) for q in range(Q + 1)]
    Ns = _ladder(top, len(cols) + 1)
    A = mp.matrix(len(Ns), len(cols) + 1)
    b = mp.matrix(len(Ns), 1)
    Lt = mp.log(top)
    for row, N in enumerate(Ns):
        A[row, 0] = 1
        LN = mp.log(N) / Lt
        scale = mp.mpf(top) / N
        for col, (p, q) in enumerate(cols, start=1):
            A[row, col] = LN**q * scale**p
        b[row] = partials[N]
    x, _res = mp.qr_solve(A, b)
    return x[0]


@dataclass
class _Series:
    """A positive-index series sum_{n>=1} term_n with majorant C (1+ln n)^L / n^p."""

    terms: Callable[[], Iterator]
    p: int
    L: int
    C: object = 1
    label: str = "series"


def sum_series(series: _Series, digits: int) -> PrecReal:
    if series.p < 2:
        raise ValueError(f"{series.label}: divergent (decay exponent {series.p} < 2)")
    target = mp.mpf(10) ** (-digits)
    with mp.workdps(working_dps(digits)):
        partials = [mp.mpf(0)]
        gen = series.terms()

        def extend(N):
            s = partials[-1]
            while len(partials) <= N:
                s += next(gen)
                partials.append(s)

        # certified cutoff, if one exists within budget
        N = 256
        while N <= CUTOFF_BOUND // 4:
            bound = tail_majorant(N, series.p, series.L, series.C)
            if bound <= target / 4:
                extend(N)
                rounding = N * mp.eps * (abs(partials[N]) + 1)
                return PrecReal(partials[N], bound + rounding, digits)
            N *= 2

        p0 = series.p - 1
        Q = series.L
        top = 2048
        while top <= CUTOFF_BOUND:
            extend(top)
            hi = _fit_limit(partials, top, p0, FIT_ORDER, Q)
            lo = _fit_limit(partials, top // 2, p0, FIT_ORDER, Q)
            radius = 4 * abs(hi - lo) + top * mp.eps * (abs(hi) + 1)
            if radius <= target:
                return PrecReal(hi, radius, digits)
            top *= 2
    raise PrecisionError(f"{series.label}: {digits} digits not reached by cutoff {CUTOFF_BOUND}")


# --------------------------------------------------------------------------
# streaming generators for truncated values

class _PlainStream:
    """zeta_n(w) for n = 0, 1, 2, ... (advance() moves n -> n+1)."""

    def __init__(self, w: IndexWord):
        self.w = w.parts
        self.vals = [mp.mpf(0)] * len(self.w) + [mp.mpf(1)]
        self.n = 0

    @property
    def value(self):
        return self.vals[0]

    def advance(self):
        self.n += 1
        n = self.n
        for j, e in enumerate(self.w):
            self.vals[j] += self.vals[j + 1] / mp.mpf(n) ** e


class _OnesStarStream:
    """zeta*_n({1}_k) for k = 0..K."""

    def __init__(self, K: int):
        self.vals = [mp.mpf(1)] + [mp.mpf(0)] * K
        self.n = 0

    def advance(self):
        self.n += 1
        inv = mp.mpf(1) / self.n
        for k in range(1, len(self.vals)):
            self.vals[k] += self.vals[k - 1] * inv


class _OnesPlainStream:
    """zeta_n({1}_k) for k = 0..K."""

    def __init__(self, K: int):
        self.vals = [mp.mpf(1)] + [mp.mpf(0)] * K
        self.n = 0

    def advance(self):
        self.n += 1
        inv = mp.mpf(1) / self.n
        for k in range(len(self.vals) - 1, 0, -1):
            self.vals[k] += self.vals[k - 1] * inv


# --------------------------------------------------------------------------
# the series themselves

def series_S_terms(l1: int, l2: int, r1: int, r2: int) -> Callable[[], Iterator]:
    def gen():
        star = _OnesStarStream(l1)
        plain = _OnesPlainStream(l2)
        n = 0
        while True:
            n += 1
            den = binomial(n + r1, r1) * n**r2
            yield star.vals[l1] * plain.vals[l2] / den
            star.advance()
            plain.advance()
    return gen


def series_S_direct(l1: int, l2: int, r1: int, r2: int, digits: int = DEFAULT_DIGITS) -> PrecReal:
    """S(l1, l2, r1, r2) = sum_n zeta*_{n-1}({1}_l1) zeta_{n-1}({1}_l2) / (binom(n+r1, r1) n^r2)."""
    if min(l1, l2, r1, r2) < 0:
        raise ValueError("parameters must be nonnegative")
    if r1 + r2 < 2:
        raise ValueError("S converges only for r1 + r2 >= 2")
    return sum_series(_Series(series_S_terms(l1, l2, r1, r2), r1 + r2, l1 + l2,
                              factorial(r1), f"S({l1},{l2},{r1},{r2})"), digits)


@lru_cache(maxsize=None)
def mzv_numeric(w: IndexWord, digits: int = DEFAULT_DIGITS) -> PrecReal:
    """zeta(w) for admissible w as the limit of zeta_N(w)."""
    if not isinstance(w, IndexWord):
        w = IndexWord(tuple(w))
    if w.depth == 0:
        return PrecReal.exact(1, digits)
    if not w.admissible:
        raise ValueError(f"zeta({w}) diverges: first entry must be >= 2")
    head, tail = w.parts[0], w[1:]

    def gen():
        inner = _PlainStream(tail)
        n = 0
        while True:
            n += 1
            yield inner.value / mp.mpf(n) ** head
            inner.advance()

    return sum_series(_Series(gen, head, tail.depth, 1, f"zeta({w})"), digits)


def xi_numeric(w: IndexWord, s: int, digits: int = DEFAULT_DIGITS) -> PrecReal:
    """Arakawa-Kaneko xi_{w}(s) at a positive integer s:
    sum_n zeta*_n({1}_{s-1}) zeta_{n-1}(i2, ..., ik) / n^(i1+1)."""
    if s < 1 or w.depth < 1 or w.parts[0] < 1:
        raise ValueError("need s >= 1 and a nonempty index")
    head, tail = w.parts[0], w[1:]

    def gen():
        star = _OnesStarStream(s - 1)
        plain = _PlainStream(tail)
        n = 0
        while True:
            n += 1
            star.advance()
            yield star.vals[s - 1] * plain.value / mp.mpf(n) ** (head + 1)
            plain.advance()

    return sum_series(_Series(gen, head + 1, s - 1 + tail.depth, 1, f"xi_{w}({s})"), digits)


def tstar_numeric(ell: int, k: int, digits: int = DEFAULT_DIGITS) -> PrecReal:
    """T*(ell, k) = sum_n zeta*_n({1}_ell) (1/n - 1/(n+k))."""
    if k < 1 or ell < 0:
        raise ValueError("need k >= 1 and ell >= 0")

    def gen():
        star = _OnesStarStream(ell)
        n = 0
        while True:
            n += 1
            star.advance()
            yield star.vals[ell] * k / (n * (n + k))

    return sum_series(_Series(gen, 2, ell, k, f"T*({ell},{k})"), digits)


def ustar_mixed_numeric(l1: int, l2: int, k: int, digits: int = DEFAULT_DIGITS) -> PrecReal:
    """sum_n zeta*_{n-1}({1}_l1) zeta_{n-1}({1}_l2) (1/n - 1/(n+k))."""
    if k < 1:
        raise ValueError("need k >= 1")

    def gen():
        star = _OnesStarStream(l1)
        plain = _OnesPlainStream(l2)
        n = 0
        while True:
            n += 1
            yield star.vals[l1] * plain.vals[l2] * k / (n * (n + k))
            star.advance()
            plain.advance()

    return sum_series(_Series(gen, 2, l1 + l2, k, f"U({l1},{l2},{k})"), digits)


# --------------------------------------------------------------------------
# symbolic values

def eval_symbol(sym: Zeta, digits: int = DEFAULT_DIGITS) -> PrecReal:
    if sym.star:
        total = PrecReal.exact(0, digits)
        for coeff, word in star_expansion(sym.word):
            total = total + eval_symbol(Zeta(word), digits) * coeff
        return total
    if sym.word.depth == 1:
        return zeta_single(sym.word.parts[0], digits)
    return mzv_numeric(sym.word, digits)


def eval_zeta_poly(p: ZetaPoly, digits: int = DEFAULT_DIGITS) -> PrecReal:
    """Numeric value of a ZetaPoly with interval propagation."""
    p = ZetaPoly.coerce(p)
    for sym in p.symbols():
        if not sym.word.admissible:
            raise ValueError(f"non-admissible symbol {sym}")
    total = PrecReal.exact(0, digits)
    values = {sym: eval_symbol(sym, digits) for sym in p.symbols()}
    for mono, coeff in p:
        term = PrecReal.exact(1, digits)
        for sym in mono:
            term = term * values[sym]
        total = total + term * coeff
    return total
