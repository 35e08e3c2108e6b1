"""Formal rational polynomials in multiple zeta symbols.

A monomial is an unordered multiset of symbols; a depth-1 plain symbol
``(k)`` stands for the single zeta value zeta(k).  Products of symbols are
never reduced automatically.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from itertools import product
from typing import Iterable, Iterator

from .exact import format_rat
from .index_algebra import IndexWord, compositions, format_index, make_index, parse_index


@total_ordering
@dataclass(frozen=True)
class Zeta:
    """A multiple zeta (``star=False``) or zeta-star value symbol."""

    word: IndexWord
    star: bool = False

    def sort_key(self):
        return (self.word.sort_key(), self.star)

    def __lt__(self, other):
        if not isinstance(other, Zeta):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    @property
    def is_single(self) -> bool:
        return self.word.depth == 1

    def __str__(self):
        return f"zeta{'*' if self.star else ''}({format_index(self.word)})"

    def to_json(self) -> list[str]:
        return [format_index(self.word), "star"] if self.star else [format_index(self.word)]

    @classmethod
    def from_json(cls, data) -> Zeta:
        return cls(parse_index(data[0]), len(data) > 1 and data[1] == "star")


Monomial = tuple  # sorted tuple of Zeta


def z(*parts: int, star: bool = False) -> Zeta:
    return Zeta(make_index(parts), star)


class ZetaPoly:
    """Rational linear combination of monomials in :class:`Zeta` symbols."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | Iterable | None = None):
        acc: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for mono, coeff in items:
            mono = tuple(sorted(mono))
            acc[mono] = acc.get(mono, Fraction(0)) + Fraction(coeff)
        self.terms = {m: c for m, c in acc.items() if c != 0}

    # constructors
    @classmethod
    def const(cls, c) -> ZetaPoly:
        return cls({(): c})

    @classmethod
    def symbol(cls, sym: Zeta, coeff=1) -> ZetaPoly:
        return cls({(sym,): coeff})

    @classmethod
    def zeta(cls, *parts: int, star: bool = False, coeff=1) -> ZetaPoly:
        return cls.symbol(z(*parts, star=star), coeff)

    @classmethod
    def coerce(cls, v) -> ZetaPoly:
        if isinstance(v, ZetaPoly):
            return v
        if isinstance(v, Zeta):
            return cls.symbol(v)
        return cls.const(v)

    # algebra
    def __add__(self, other):
        other = ZetaPoly.coerce(other)
        return ZetaPoly(list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return ZetaPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-ZetaPoly.coerce(other))

    def __rsub__(self, other):
        return ZetaPoly.coerce(other) - self

    def __mul__(self, other):
        other = ZetaPoly.coerce(other)
        out = []
        for (m1, c1), (m2, c2) in product(self.terms.items(), other.terms.items()):
            out.append((m1 + m2, c1 * c2))
        return ZetaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = ZetaPoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Zeta)):
            other = ZetaPoly.coerce(other)
        if not isinstance(other, ZetaPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # inspection
    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(),
                      key=lambda mc: (-len(mc[0]), [s.sort_key() for s in mc[0]]))

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.sorted_terms())

    def symbols(self) -> set[Zeta]:
        return {s for mono in self.terms for s in mono}

    @property
    def is_constant(self) -> bool:
        return all(not mono for mono in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    def only_single_zetas(self) -> bool:
        return all(s.is_single and not s.star for s in self.symbols())

    def substitute(self, rule) -> ZetaPoly:
        """Replace each symbol by ``rule(symbol)`` (a ZetaPoly or None = keep)."""
        out = ZetaPoly()
        cache: dict[Zeta, ZetaPoly] = {}
        for mono, coeff in self.terms.items():
            acc = ZetaPoly.const(coeff)
            for sym in mono:
                if sym not in cache:
                    rep = rule(sym)
                    cache[sym] = ZetaPoly.symbol(sym) if rep is None else rep
                acc = acc * cache[sym]
            out = out + acc
        return out

    # serialization
    def to_json(self) -> list[dict]:
        return [{"coeff": format_rat(c), "monomial": [s.to_json() for s in mono]}
                for mono, c in self]

    @classmethod
    def from_json(cls, data: list[dict]) -> ZetaPoly:
        return cls((tuple(Zeta.from_json(s) for s in item["monomial"]), Fraction(item["coeff"]))
                   for item in data)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mono, c in self:
            body = "*".join(str(s) for s in mono)
            if not body:
                text = format_rat(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = f"{format_rat(abs(c))}*{body}"
            pieces.append(("-" if c < 0 else "+", text))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"ZetaPoly({self})"


# --------------------------------------------------------------------------
# classical reductions producing ZetaPoly values

@lru_cache(maxsize=None)
def height_one_mzv(m: int, n: int) -> ZetaPoly:
    """zeta(m+2, {1}_n) as a polynomial in single zeta values.

    Coefficient of x^(m+1) y^(n+1) in
        1 - exp( sum_{k>=2} (x^k + y^k - (x+y)^k) zeta(k) / k ),
    expanded with symbolic zeta(k).
    """
    if m < 0 or n < 0:
        raise ValueError("need m, n >= 0")
    X, Y = m + 1, n + 1
    D = X + Y
    # exponent series F as {(i, j): ZetaPoly}, only i <= X and j <= Y matter
    F: dict[tuple[int, int], ZetaPoly] = {}
    for k in range(2, D + 1):
        zk = ZetaPoly.zeta(k)
        for i in range(0, k + 1):
            j = k - i
            if i > X or j > Y:
                continue
            c = -Fraction(_binom(k, i))
            if i == k or j == k:
                c += 1
            if c:
                F[(i, j)] = F.get((i, j), ZetaPoly()) + zk * Fraction(c, k)
    # exp(F) = sum_r F^r / r!, F has minimal total degree 2
    result = ZetaPoly()
    power = {(0, 0): ZetaPoly.const(1)}
    fact = 1
    for r in range(1, D // 2 + 1):
        fact *= r
        nxt: dict[tuple[int, int], ZetaPoly] = {}
        for (i1, j1), a in power.items():
            for (i2, j2), b in F.items():
                i, j = i1 + i2, j1 + j2
                if i > X or j > Y:
                    continue
                nxt[(i, j)] = nxt.get((i, j), ZetaPoly()) + a * b
        power = nxt
        if (X, Y) in power:
            result = result - power[(X, Y)] * Fraction(1, fact)
    return result


def _binom(n, k):
    from math import comb
    return comb(n, k)


def kaneko_sakata(m: int, n: int) -> ZetaPoly:
    """zeta(m+1, {1}_{n-1}) as a signed sum of componentwise-added index pairs."""
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    out = ZetaPoly()
    for i in range(1, min(m, n) + 1):
        sign = (-1) ** (i - 1)
        for mm in compositions(m, i):
            for nn in compositions(n, i):
                word = make_index(a + b for a, b in zip(mm, nn))
                out = out + ZetaPoly.symbol(Zeta(word), sign)
    return out


def granville_star(ell: int) -> ZetaPoly:
    """zeta*(2, {1}_{ell-2}) = (ell - 1) zeta(ell)."""
    if ell < 2:
        raise ValueError("ell must be at least 2")
    return ZetaPoly.zeta(ell, coeff=ell - 1)
