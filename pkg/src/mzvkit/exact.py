"""Exact rational values of truncated multiple zeta, zeta-star and
interpolated values, with the redundant harmonic-number representations
(Stirling numbers, Bell polynomials, power-sum polynomials, determinants,
alternating binomial sums).
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterator, Sequence

from .index_algebra import EMPTY, IndexWord, ordered_partitions, repeat_ones

Rat = Fraction

FACTORIAL_CACHE_BOUND = 10_000


@lru_cache(maxsize=None)
def _factorial_cached(n: int) -> int:
    return math.factorial(n)


def factorial(n: int) -> int:
    if n <= FACTORIAL_CACHE_BOUND:
        return _factorial_cached(n)
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def format_rat(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rat(text: str) -> Fraction:
    return Fraction(text.strip())


# --------------------------------------------------------------------------
# harmonic numbers and truncated values

def harmonic(n: int, s: int = 1) -> Fraction:
    """Generalized harmonic number H_n^(s)."""
    if n < 0 or s < 1:
        raise ValueError("need n >= 0 and s >= 1")
    return sum((Fraction(1, k**s) for k in range(1, n + 1)), Fraction(0))


def harmonic_vector(n: int, k: int) -> list[Fraction]:
    """[H_n^(1), ..., H_n^(k)]."""
    return [harmonic(n, s) for s in range(1, k + 1)]


def zeta_table(N: int, w: IndexWord, star: bool = False) -> list[Fraction]:
    """Values zeta_n(w) (or zeta*_n(w)) for n = 0..N.

    Dynamic programming over the suffixes of ``w``: with T_j[n] the value of
    the suffix starting at position j,

        plain: T_j[n] = T_j[n-1] + T_{j+1}[n-1] / n^{w_j}
        star:  T_j[n] = T_j[n-1] + T_{j+1}[n]   / n^{w_j}
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    inner = [Fraction(1)] * (N + 1)
    for i in reversed(w.parts):
        row = [Fraction(0)] * (N + 1)
        acc = Fraction(0)
        for n in range(1, N + 1):
            acc += (inner[n] if star else inner[n - 1]) / n**i
            row[n] = acc
        inner = row
    return inner


def zt_trunc(N: int, w: IndexWord) -> Fraction:
    """Truncated multiple zeta value zeta_N(w); 0 if depth(w) > N.

    The empty word has value 1 for every N, including negative N.
    """
    if w.depth == 0:
        return Fraction(1)
    if w.depth > N:
        return Fraction(0)
    return zeta_table(N, w)[N]


def zts_trunc(N: int, w: IndexWord) -> Fraction:
    """Truncated multiple zeta star value zeta*_N(w)."""
    if w.depth == 0:
        return Fraction(1)
    if N <= 0:
        return Fraction(0)
    return zeta_table(N, w, star=True)[N]


ORACLE_MAX_N = 14
ORACLE_MAX_DEPTH = 5


def zt_trunc_oracle(N: int, w: IndexWord, star: bool = False) -> Fraction:
    """Literal enumeration of the nested sum; independent of :func:`zeta_table`."""
    if N > ORACLE_MAX_N or w.depth > ORACLE_MAX_DEPTH:
        raise ValueError(
            f"oracle guard: need N <= {ORACLE_MAX_N} and depth <= {ORACLE_MAX_DEPTH}")
    pick = combinations_with_replacement if star else combinations
    total = Fraction(0)
    # tuples come out increasing; reverse so that n1 >= n2 >= ...
    for tup in pick(range(1, N + 1), w.depth):
        den = 1
        for n, i in zip(reversed(tup), w.parts):
            den *= n**i
        total += Fraction(1, den)
    return total


# --------------------------------------------------------------------------
# Stirling, Bell, power-sum polynomials

@lru_cache(maxsize=64)
def _stirling_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = (prev[k - 1] if k - 1 < len(prev) else 0) + \
            (n - 1) * (prev[k] if k < len(prev) else 0)
    return tuple(row)


def stirling_first(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind [n, k]."""
    if n < 0 or k < 0 or k > n:
        return 0
    row = None
    # build iteratively to keep recursion shallow for large n
    for m in range(0, n + 1):
        row = _stirling_row(m)
    return row[k]


def complete_bell(k: int, x: Sequence) -> Fraction:
    """Complete Bell polynomial B_k(x_1, ..., x_k)."""
    if len(x) < k:
        raise ValueError("need at least k arguments")
    B = [Fraction(1)]
    for m in range(1, k + 1):
        B.append(sum((binomial(m - 1, j - 1) * Fraction(x[j - 1]) * B[m - j]
                      for j in range(1, m + 1)), Fraction(0)))
    return B[k]


def partitions_multiplicities(k: int, parts: Sequence[int] | None = None) -> Iterator[dict[int, int]]:
    """Partitions of k as {part: multiplicity}, parts restricted to ``parts``."""
    allowed = sorted(parts if parts is not None else range(1, k + 1), reverse=True)
    allowed = [p for p in allowed if 1 <= p <= k]

    def rec(rem, idx):
        if rem == 0:
            yield {}
            return
        if idx == len(allowed):
            return
        p = allowed[idx]
        for m in range(rem // p, -1, -1):
            for tail in rec(rem - m * p, idx + 1):
                if m:
                    tail = dict(tail)
                    tail[p] = m
                yield tail

    yield from rec(k, 0)


def _power_sum_poly(k: int, x: Sequence, signed: bool) -> Fraction:
    if len(x) < k:
        raise ValueError("need at least k arguments")
    total = Fraction(0)
    for mult in partitions_multiplicities(k):
        term = Fraction(1)
        sign = 1
        for part, m in mult.items():
            term *= (Fraction(x[part - 1]) / part) ** m / factorial(m)
            if signed and part % 2 == 0:
                sign *= (-1) ** m
        total += sign * term
    return total


def macdonald_P(k: int, x: Sequence) -> Fraction:
    """Elementary symmetric function e_k in terms of power sums x_i = p_i."""
    return _power_sum_poly(k, x, signed=True)


def macdonald_Q(k: int, x: Sequence) -> Fraction:
    """Complete homogeneous function h_k in terms of power sums x_i = p_i."""
    return _power_sum_poly(k, x, signed=False)


# --------------------------------------------------------------------------
# quadratic extension and Hessenberg determinants

class QuadExt:
    """a + b*sqrt(d) with rational a, b, d (d may be negative).

    Elements with b == 0 are rationals and combine with any d.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=0):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = Fraction(d) if self.b else Fraction(0)
        if self.d == 0:
            self.b = Fraction(0)

    @classmethod
    def coerce(cls, v) -> QuadExt:
        return v if isinstance(v, QuadExt) else cls(v)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def _common_d(self, other: QuadExt) -> Fraction:
        if self.b and other.b and self.d != other.d:
            raise ValueError(f"incompatible radicands {self.d} and {other.d}")
        return self.d if self.b else other.d

    def __add__(self, other):
        other = QuadExt.coerce(other)
        d = self._common_d(other)
        return QuadExt(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-QuadExt.coerce(other))

    def __rsub__(self, other):
        return QuadExt.coerce(other) - self

    def __mul__(self, other):
        other = QuadExt.coerce(other)
        d = self._common_d(other)
        return QuadExt(self.a * other.a + self.b * other.b * d,
                       self.a * other.b + self.b * other.a, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QuadExt.coerce(other)
        d = self._common_d(other)
        norm = other.a**2 - other.b**2 * d
        if norm == 0:
            raise ZeroDivisionError("division by zero in quadratic extension")
        conj = QuadExt(other.a / norm, -other.b / norm, d)
        return self * conj

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadExt(other)
        if not isinstance(other, QuadExt):
            return NotImplemented
        return self.a == other.a and self.b == other.b and (self.b == 0 or self.d == other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def to_rational(self) -> Fraction:
        if self.b:
            raise ValueError(f"{self} is not rational")
        return self.a

    def __str__(self):
        return f"{format_rat(self.a)} + {format_rat(self.b)}*sqrt({format_rat(self.d)})"

    def __repr__(self):
        return f"QuadExt({self})"

    @classmethod
    def parse(cls, text: str) -> QuadExt:
        a_part, _, rest = text.partition(" + ")
        if not rest:
            return cls(Fraction(a_part))
        b_part, _, d_part = rest.partition("*sqrt(")
        return cls(Fraction(a_part), Fraction(b_part), Fraction(d_part.rstrip(")")))


def hessenberg_det(k: int, column: Sequence, superdiag: Sequence) -> QuadExt:
    """Determinant of the k x k lower Hessenberg matrix with entry
    column[r-c] at (r, c) for c <= r and superdiag[r] at (r, r+1).

    For the truncated zeta determinants, column = (H^(1), ..., H^(k)).
    Uses the expansion along the last row:
        D_j = sum_{i=1..j} (-1)^(j-i) column[j-i] (prod_{m=i..j-1} c_m) D_{i-1}
    """
    if k < 1:
        raise ValueError("k must be positive")
    if len(column) < k or len(superdiag) < k - 1:
        raise ValueError("not enough matrix entries")
    sup = [QuadExt.coerce(c) for c in superdiag[:k - 1]]
    radicands = {c.d for c in sup if not c.is_rational}
    if len(radicands) > 1:
        raise ValueError(f"inconsistent radicands {sorted(radicands)}")
    col = [Fraction(h) for h in column[:k]]
    D = [QuadExt(1)]
    for j in range(1, k + 1):
        acc = QuadExt(0)
        run = QuadExt(1)
        # i runs downward so that run = prod_{m=i..j-1} c_m builds incrementally
        for i in range(j, 0, -1):
            if i < j:
                run = run * sup[i - 1]
            term = run * col[j - i] * D[i - 1]
            acc = acc + (term if (j - i) % 2 == 0 else -term)
        D.append(acc)
    return D[k]


def zeta_superdiag(k: int) -> list[int]:
    """Superdiagonal 1, 2, ..., k-1 of the determinant for zeta_n({1}_k)."""
    return list(range(1, k))


def zeta_star_superdiag(k: int) -> list[int]:
    """Superdiagonal -1, -2, ..., -(k-1) of the determinant for zeta*_n({1}_k)."""
    return [-j for j in range(1, k)]


# --------------------------------------------------------------------------
# alternating binomial sums

def alt_binom_star(N: int, w: IndexWord) -> Fraction:
    """A*_N(a1, ..., ar) = sum_n binom(N, n) (-1)^(n-1) / n^a1 * zeta*_n(a2, ..., ar)."""
    if w.depth < 1:
        raise ValueError("need a nonempty word")
    if N < 1:
        raise ValueError("N must be positive")
    a1 = w.parts[0]
    inner = zeta_table(N, w[1:], star=True)
    return sum((Fraction(binomial(N, n) * (-1) ** (n - 1), n**a1) * inner[n]
                for n in range(1, N + 1)), Fraction(0))


def alt_binom_sum(N: int, seq: Sequence, power: int = 0) -> Fraction:
    """sum_{j=1..N} binom(N, j) (-1)^(j-1) seq[j] / j^power (seq indexed from 0)."""
    return sum((Fraction(binomial(N, j) * (-1) ** (j - 1), j**power) * seq[j]
                for j in range(1, N + 1)), Fraction(0))


# --------------------------------------------------------------------------
# polynomials in t and interpolated values

class TPoly:
    """Polynomial in t with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def t(cls) -> TPoly:
        return cls((0, 1))

    @classmethod
    def coerce(cls, v) -> TPoly:
        return v if isinstance(v, TPoly) else cls((v,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other):
        other = TPoly.coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return TPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return TPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-TPoly.coerce(other))

    def __rsub__(self, other):
        return TPoly.coerce(other) - self

    def __mul__(self, other):
        other = TPoly.coerce(other)
        if not self.coeffs or not other.coeffs:
            return TPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = TPoly((1,))
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TPoly((other,))
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        return "[" + ", ".join(format_rat(c) for c in self.coeffs) + "]"

    def __repr__(self):
        return f"TPoly({self})"

    @classmethod
    def parse(cls, text: str) -> TPoly:
        body = text.strip().strip("[]").strip()
        return cls(Fraction(tok) for tok in body.split(",")) if body else cls()


def interp_trunc(N: int, k: int) -> TPoly:
    """zeta^t_N({1}_k) = sum over compositions p of k of t^(k - len p) zeta_N(p)."""
    if N < 0 or k < 0:
        raise ValueError("need N >= 0 and k >= 0")
    if k == 0:
        return TPoly((1,))
    coeffs = [Fraction(0)] * k
    for p in ordered_partitions(k):
        coeffs[k - p.depth] += zt_trunc(N, p)
    return TPoly(coeffs)


__all__ = [
    "Rat", "EMPTY", "IndexWord", "repeat_ones",
    "factorial", "binomial", "format_rat", "parse_rat",
    "harmonic", "harmonic_vector", "zeta_table", "zt_trunc", "zts_trunc",
    "zt_trunc_oracle", "stirling_first", "complete_bell",
    "partitions_multiplicities", "macdonald_P", "macdonald_Q",
    "QuadExt", "hessenberg_det", "zeta_superdiag", "zeta_star_superdiag",
    "alt_binom_star", "alt_binom_sum", "TPoly", "interp_trunc",
]
