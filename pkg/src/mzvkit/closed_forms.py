"""Closed-form evaluations of the series

    S(l1, l2, r1, r2) = sum_{n>=1} zeta*_{n-1}({1}_l1) zeta_{n-1}({1}_l2) / (binom(n+r1, r1) n^r2)

and its truncations: the Stirling series (l1 = 0), the zeta-star series
(l2 = 0), the Arakawa-Kaneko form (r1 = 0) and the split S = S1 + S2 of the
general case.  Truncated quantities are exact rationals; infinite ones are
:class:`ZetaPoly` values whose symbols are genuinely infinite objects.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath as mp

from .exact import binomial, harmonic, zt_trunc, zts_trunc
from .index_algebra import EMPTY, IndexWord, plain_from_star, repeat_ones, star_expansion
from .numeric import (DEFAULT_DIGITS, PrecReal, eval_zeta_poly, working_dps, series_S_direct,
                      ustar_mixed_numeric, xi_numeric)
from .zetapoly import Zeta, ZetaPoly, granville_star, height_one_mzv


def _ones(k: int) -> IndexWord:
    return repeat_ones(k)


def _word(*chunks) -> IndexWord:
    parts: list[int] = []
    for c in chunks:
        parts.extend(c.parts if isinstance(c, IndexWord) else ([c] if isinstance(c, int) else c))
    return IndexWord(tuple(parts))


def _sym(word: IndexWord, star: bool = False) -> ZetaPoly:
    # star and plain agree in depth one; keep one spelling
    if star and word.depth <= 1:
        star = False
    if word.depth == 0:
        return ZetaPoly.const(1)
    return ZetaPoly.symbol(Zeta(word, star))


# --------------------------------------------------------------------------
# truncated Stirling series

def K_term(r1: int, r2: int, l2: int) -> Fraction:
    """Constant part of the truncated Stirling series."""
    if r2 == 1:
        return Fraction(1, r1 ** (l2 + 1))
    return (-1) ** (r2 + 1) * zts_trunc(r1, _word(_ones(r2 - 2), l2 + 2))


def R_N(N: int, l2: int, k0: int) -> Fraction:
    """Nested remainder sum

        sum_{j=0..l2} sum_{k0>=k1>=...>=kj>=1} 1/(k1...kj)
            * zeta_{N-1-j}({1}_{l2-j}) * (H_{N-j} - H_{N-j+kj}).
    """
    total = Fraction(0)
    weights = {k0: Fraction(1)}  # chain weight indexed by last element kj
    for j in range(l2 + 1):
        inner = sum((w * (harmonic(N - j) - harmonic(N - j + kj)) for kj, w in weights.items()),
                    Fraction(0))
        total += zt_trunc(N - 1 - j, _ones(l2 - j)) * inner
        nxt: dict[int, Fraction] = {}
        for y in range(1, k0 + 1):
            acc = sum((w for x, w in weights.items() if x >= y), Fraction(0))
            if acc:
                nxt[y] = acc / y
        weights = nxt
    return total


def E_N(N: int, r1: int, r2: int, l2: int) -> Fraction:
    sign = (-1) ** (r2 + 1)
    return sign * sum((binomial(r1, k) * Fraction((-1) ** (k + 1), k ** (r2 - 1)) * R_N(N, l2, k)
                       for k in range(1, r1 + 1)), Fraction(0))


def stirling_series_pieces(N: int, l2: int, r1: int, r2: int) -> tuple[Fraction, Fraction, Fraction]:
    """(m-sum, K, E_N) of the truncated Stirling series."""
    if r1 < 1 or r2 < 1:
        raise ValueError("need r1, r2 >= 1")
    if not N >= l2 >= 0:
        raise ValueError("need N >= l2 >= 0")
    msum = sum(((-1) ** (r2 - m) * zt_trunc(N, _word(m, _ones(l2))) * zts_trunc(r1, _ones(r2 - m))
                for m in range(2, r2 + 1)), Fraction(0))
    return msum, K_term(r1, r2, l2), E_N(N, r1, r2, l2)


def stirling_series_trunc(N: int, l2: int, r1: int, r2: int) -> Fraction:
    """S_N(0, l2, r1, r2) assembled from its closed-form pieces."""
    return sum(stirling_series_pieces(N, l2, r1, r2), Fraction(0))


def stirling_series_closed(l2: int, r1: int, r2: int) -> ZetaPoly:
    """S(0, l2, r1, r2) as a polynomial in height-one MZV symbols."""
    if r1 < 1 or r2 < 1 or l2 < 0:
        raise ValueError("need r1, r2 >= 1 and l2 >= 0")
    if r2 == 1:
        return ZetaPoly.const(Fraction(1, r1 ** (l2 + 1)))
    poly = ZetaPoly.const(K_term(r1, r2, l2))
    for m in range(2, r2 + 1):
        c = (-1) ** (r2 - m) * zts_trunc(r1, _ones(r2 - m))
        poly = poly + _sym(_word(m, _ones(l2))) * c
    return poly


# --------------------------------------------------------------------------
# alternating binomial sums through duality

def duality_split(word: IndexWord) -> list[tuple[int, int]]:
    """Read ``word`` as (a1, {1}_{b1-1}, a2+1, {1}_{b2-1}, ...) and return [(a_i, b_i)]."""
    if word.depth == 0:
        raise ValueError("empty word")
    parts = word.parts
    pairs = [[parts[0], 1]]
    for p in parts[1:]:
        if p == 1:
            pairs[-1][1] += 1
        else:
            pairs.append([p - 1, 1])
    return [tuple(ab) for ab in pairs]


def dual_word(word: IndexWord) -> IndexWord:
    """Index of the star value equal to A*_N(word) for every N."""
    pairs = duality_split(word)
    out: list[int] = []
    for i, (a, b) in enumerate(pairs):
        out.extend([1] * (a - 1))
        out.append(b + 1 if i < len(pairs) - 1 else b)
    return IndexWord(tuple(out))


def alt_binom_star_dual(N: int, word: IndexWord) -> Fraction:
    """A*_N(word) evaluated as a single truncated star value."""
    return zts_trunc(N, dual_word(word))


def binom_star_sum(N: int, e: int, word: IndexWord) -> Fraction:
    """sum_{k=1..N} binom(N, k) (-1)^(k-1) k^(-e) zeta*_k(word), without summing over k."""
    if e >= 1:
        return alt_binom_star_dual(N, _word(e, word))
    lead = 0
    while lead < word.depth and word.parts[lead] == 1:
        lead += 1
    rest = word[lead:]
    if rest.depth == 0:
        return Fraction(1, N**lead)
    return Fraction(1, N ** (lead + 1)) * binom_star_sum(N, rest.parts[0] - 1, rest[1:])


def binom_zeta_shift_sum(N: int, c: int, word: IndexWord) -> Fraction:
    """sum_{k=1..N} binom(N, k) (-1)^(k+1) k^(-c) zeta_{k-1}(word).

    Peels zeta_{k-1} into zeta_k values, converts those to star values and
    evaluates each alternating sum by :func:`binom_star_sum`.
    """
    total = Fraction(0)
    shift = 0
    for i in range(word.depth + 1):
        suffix = word[i:]
        combo = [(1, EMPTY)] if suffix.depth == 0 else list(plain_from_star(suffix))
        for sgn, w in combo:
            total += (-1) ** i * sgn * binom_star_sum(N, c + shift, w)
        if i < word.depth:
            shift += word.parts[i]
    return total


def binom_zeta_shift_sum_direct(N: int, c: int, word: IndexWord) -> Fraction:
    return sum((binomial(N, k) * Fraction((-1) ** (k + 1), k**c) * zt_trunc(k - 1, word)
                for k in range(1, N + 1)), Fraction(0))


# --------------------------------------------------------------------------
# zeta-star series

def tstar_terms(ell: int) -> list[tuple[ZetaPoly, int, IndexWord]]:
    """T*(ell, k) as a list of (constant, e, u) meaning constant * k^(-e) * zeta_{k-1}(u)."""
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    if ell == 0:
        # H_k = zeta_{k-1}(1) + 1/k
        return [(ZetaPoly.const(1), 0, _ones(1)), (ZetaPoly.const(1), 1, EMPTY)]
    out = [(_sym(_word(2, _ones(ell - 1 - j)), star=True), 0, _ones(j)) for j in range(ell)]
    out.append((ZetaPoly.const(1), 0, _ones(ell + 1)))
    out.append((ZetaPoly.const(1), 0, _word(_ones(ell - 1), 2)))
    return out


def tstar_closed(ell: int, k: int) -> ZetaPoly:
    """T*(ell, k) with truncated factors folded into rationals and the
    zeta*(2, {1}_m) constants reduced to single zetas."""
    if k < 1:
        raise ValueError("k must be positive")
    poly = ZetaPoly()
    for const, e, u in tstar_terms(ell):
        poly = poly + const * (Fraction(1, k**e) * zt_trunc(k - 1, u))
    return reduce_to_single(poly).poly


def zetastar_series_closed(l1: int, r1: int, r2: int) -> ZetaPoly:
    """S(l1, 0, r1, r2) in terms of zeta-star symbols and rationals."""
    if r1 < 1 or r2 < 1 or l1 < 0:
        raise ValueError("need r1, r2 >= 1 and l1 >= 0")
    sgn = (-1) ** (r2 + 1)
    poly = ZetaPoly()
    if l1 == 0:
        for m in range(2, r2 + 1):
            poly = poly + _sym(_word(m)) * ((-1) ** (r2 - m) * zts_trunc(r1, _ones(r2 - m)))
        for const, e, u in tstar_terms(0):
            poly = poly + const * (sgn * binom_zeta_shift_sum(r1, r2 - 1 + e, u))
        return poly
    for m in range(2, r2 + 1):
        c = (-1) ** (r2 - m) * zts_trunc(r1, _ones(r2 - m))
        poly = poly + (_sym(_word(m, _ones(l1)), True) - _sym(_word(m + 1, _ones(l1 - 1)), True)) * c
    for const, e, u in tstar_terms(l1):
        poly = poly + const * (sgn * binom_zeta_shift_sum(r1, r2 - 1 + e, u))
    for const, e, u in tstar_terms(l1 - 1):
        poly = poly + const * (sgn * binom_zeta_shift_sum(r1, r2 + e, u))
    poly = poly + _sym(_word(2, _ones(l1 - 1)), True) * ((-1) ** r2 * zts_trunc(r1, _ones(r2 - 1)))
    return poly


# --------------------------------------------------------------------------
# reduction to single zeta values

# zeta*(3,1) = zeta(3,1) + zeta(4) = (5/4) zeta(4); confirmed numerically by
# decide_star_31 against the competing value (zeta(3) + zeta(4)) / 2.
STAR_31 = ZetaPoly.zeta(4, coeff=Fraction(5, 4))
STAR_31_ALTERNATIVE = (ZetaPoly.zeta(3) + ZetaPoly.zeta(4)) * Fraction(1, 2)


@dataclass
class Reduction:
    poly: ZetaPoly
    flagged: tuple = ()

    @property
    def complete(self) -> bool:
        return not self.flagged


def _is_height_one(w: IndexWord) -> bool:
    return w.depth >= 1 and w.parts[0] >= 2 and all(p == 1 for p in w.parts[1:])


def reduce_to_single(p: ZetaPoly) -> Reduction:
    """Rewrite symbols into single zeta values where a classical formula applies.

    Height-one values use the bivariate generating function, zeta*(2, {1}_m)
    Granville's formula, zeta*(3, 1) the rule above, other star values
    their expansion into plain values.  Symbols left over are flagged.
    """
    flagged: set[Zeta] = set()

    def plain_rule(sym: Zeta):
        w = sym.word
        if w.depth == 1:
            return None
        if _is_height_one(w):
            return height_one_mzv(w.parts[0] - 2, w.depth - 1)
        flagged.add(sym)
        return None

    def rule(sym: Zeta):
        w = sym.word
        if not sym.star:
            return plain_rule(sym)
        if w.depth == 1:
            return ZetaPoly.zeta(w.parts[0])
        if w.parts[0] == 2 and all(x == 1 for x in w.parts[1:]):
            return granville_star(w.depth + 1)
        if w.parts == (3, 1):
            return STAR_31
        expanded = ZetaPoly()
        for coeff, word in star_expansion(w):
            expanded = expanded + ZetaPoly.symbol(Zeta(word), coeff)
        return expanded.substitute(plain_rule)

    out = ZetaPoly.coerce(p).substitute(rule)
    return Reduction(out, tuple(sorted(flagged)))


@dataclass
class Star31Decision:
    value: PrecReal
    candidates: dict
    winner: str
    margin: mp.mpf
    combined_radius: mp.mpf


def decide_star_31(digits: int = 20) -> Star31Decision:
    """Decide between the two candidate reductions of zeta*(3,1) numerically.

    The value comes from the extrapolated zeta(3,1) plus zeta(4), without
    using any reduction formula.
    """
    value = eval_zeta_poly(ZetaPoly.zeta(3, 1) + ZetaPoly.zeta(4), digits)
    cands = {"5/4*zeta(4)": eval_zeta_poly(STAR_31, digits),
             "(zeta(3)+zeta(4))/2": eval_zeta_poly(STAR_31_ALTERNATIVE, digits)}
    with mp.workdps(working_dps(digits)):
        dist = {name: abs(v.value - value.value) for name, v in cands.items()}
    winner = min(dist, key=dist.get)
    loser = max(dist, key=dist.get)
    combined = value.radius + cands[winner].radius + cands[loser].radius
    return Star31Decision(value, cands, winner, dist[loser], combined)


# --------------------------------------------------------------------------
# Arakawa-Kaneko forms

@dataclass(frozen=True)
class XiSymbol:
    word: IndexWord
    s: int

    def __str__(self):
        return f"xi_{{{','.join(map(str, self.word.parts))}}}({self.s})"

    def evaluate(self, digits: int = DEFAULT_DIGITS) -> PrecReal:
        return xi_numeric(self.word, self.s, digits)


@dataclass
class ArakawaCheck:
    plus: XiSymbol
    minus: XiSymbol
    series: PrecReal
    xi_difference: PrecReal

    @property
    def error(self):
        with mp.workdps(working_dps(self.series.digits)):
            return abs(self.series.value - self.xi_difference.value)

    def holds(self, tol) -> bool:
        return self.error <= tol

    def to_json(self) -> dict:
        return {"identity": f"S = {self.plus} - {self.minus}",
                "series": self.series.to_json(), "xi_difference": self.xi_difference.to_json(),
                "error": mp.nstr(self.error, 3)}


def arakawa_pair(l1: int, l2: int, r2: int) -> tuple[XiSymbol, XiSymbol]:
    """S(l1, l2, 0, r2) = xi_{r2-1,{1}_l2}(l1+1) - xi_{r2,{1}_l2}(l1)."""
    if r2 < 2 or l1 < 1 or l2 < 0:
        raise ValueError("need r2 >= 2, l1 >= 1 and l2 >= 0")
    return (XiSymbol(_word(r2 - 1, _ones(l2)), l1 + 1), XiSymbol(_word(r2, _ones(l2)), l1))


def arakawa_relation(l1: int, l2: int, r2: int, digits: int = DEFAULT_DIGITS) -> ArakawaCheck:
    plus, minus = arakawa_pair(l1, l2, r2)
    return ArakawaCheck(plus, minus, series_S_direct(l1, l2, 0, r2, digits),
                        plus.evaluate(digits) - minus.evaluate(digits))


@dataclass
class GeneralSplit:
    s1_terms: list = field(default_factory=list)  # (coefficient, plus, minus) or (coefficient, ZetaPoly)
    s1: PrecReal | None = None
    s2: PrecReal | None = None
    direct: PrecReal | None = None

    @property
    def total(self) -> PrecReal:
        return self.s1 + self.s2

    @property
    def error(self):
        with mp.workdps(working_dps(self.direct.digits)):
            return abs(self.total.value - self.direct.value)

    def describe_s1(self) -> str:
        pieces = []
        for term in self.s1_terms:
            if len(term) == 3:
                c, plus, minus = term
                pieces.append(f"({c})*({plus} - {minus})")
            else:
                c, poly = term
                pieces.append(f"({c})*({poly})")
        return " + ".join(pieces) or "0"


def general_S1(l1: int, l2: int, r1: int, r2: int, digits: int = DEFAULT_DIGITS) -> GeneralSplit:
    """S = S1 + S2 with S1 through Arakawa-Kaneko values and S2 summed directly.

    For l1 = 0 the xi form is unavailable and S1 falls back to the
    height-one symbols of the truncated Stirling series.
    """
    if r1 < 1 or r2 < 1 or l1 < 0 or l2 < 0:
        raise ValueError("need r1, r2 >= 1 and l1, l2 >= 0")
    out = GeneralSplit()
    s1 = PrecReal.exact(0, digits)
    for m in range(2, r2 + 1):
        c = (-1) ** (r2 - m) * zts_trunc(r1, _ones(r2 - m))
        if l1 >= 1:
            plus, minus = arakawa_pair(l1, l2, m)
            out.s1_terms.append((c, plus, minus))
            s1 = s1 + (plus.evaluate(digits) - minus.evaluate(digits)) * c
        else:
            poly = _sym(_word(m, _ones(l2)))
            out.s1_terms.append((c, poly))
            s1 = s1 + eval_zeta_poly(poly, digits) * c
    s2 = PrecReal.exact(0, digits)
    for k in range(1, r1 + 1):
        c = (-1) ** (r2 + 1) * binomial(r1, k) * Fraction((-1) ** (k + 1), k ** (r2 - 1))
        s2 = s2 + ustar_mixed_numeric(l1, l2, k, digits) * c
    out.s1, out.s2 = s1, s2
    out.direct = series_S_direct(l1, l2, r1, r2, digits)
    return out
