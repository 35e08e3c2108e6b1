"""Index words (compositions) and the combinatorics acting on them.

An index word ``(i1, ..., ik)`` is the argument of a (truncated) multiple
zeta value.  ``i1`` is attached to the largest summation variable.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from itertools import product
from typing import Iterable, Iterator


@total_ordering
@dataclass(frozen=True)
class IndexWord:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"index entries must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    @property
    def admissible(self) -> bool:
        return not self.parts or self.parts[0] >= 2

    def sort_key(self):
        return (self.weight, self.depth, self.parts)

    def __lt__(self, other):
        if not isinstance(other, IndexWord):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return IndexWord(self.parts[item])
        return self.parts[item]

    def __add__(self, other):
        """Concatenation."""
        if isinstance(other, IndexWord):
            return IndexWord(self.parts + other.parts)
        if isinstance(other, tuple):
            return IndexWord(self.parts + other)
        return NotImplemented

    def __str__(self):
        return format_index(self)

    def __repr__(self):
        return f"IndexWord({self.parts!r})"


EMPTY = IndexWord(())


def make_index(parts: Iterable[int]) -> IndexWord:
    return IndexWord(tuple(parts))


def repeat_ones(m: int) -> IndexWord:
    """The word ``{1}_m``; ``m = 0`` gives the empty word."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return IndexWord((1,) * m)


def parse_index(text: str) -> IndexWord:
    """Parse ``"2,1,1"``; the empty string is the empty word."""
    text = text.strip()
    if not text:
        return EMPTY
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed index word {text!r}") from None
    return make_index(parts)


def format_index(w: IndexWord) -> str:
    return ",".join(str(p) for p in w.parts)


class SignedCombo:
    """Integer linear combination of index words in normal form.

    Duplicate words are merged and zero coefficients dropped; iteration
    follows the canonical word order.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[int, IndexWord]] = ()):
        acc: dict[IndexWord, int] = {}
        for coeff, word in terms:
            acc[word] = acc.get(word, 0) + coeff
        self._terms = {w: c for w, c in acc.items() if c != 0}

    @property
    def terms(self) -> list[tuple[int, IndexWord]]:
        return [(self._terms[w], w) for w in sorted(self._terms)]

    def __iter__(self) -> Iterator[tuple[int, IndexWord]]:
        return iter(self.terms)

    def __len__(self):
        return len(self._terms)

    def __getitem__(self, word: IndexWord) -> int:
        return self._terms.get(word, 0)

    def __eq__(self, other):
        if not isinstance(other, SignedCombo):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: SignedCombo) -> SignedCombo:
        return SignedCombo(list(self) + list(other))

    def scale(self, c: int) -> SignedCombo:
        return SignedCombo((c * k, w) for k, w in self)

    def __repr__(self):
        inner = ", ".join(f"{c:+d}*({w})" for c, w in self)
        return f"SignedCombo[{inner}]"


def contractions(w: IndexWord) -> Iterator[tuple[IndexWord, int]]:
    """Yield every word obtained by replacing separators of ``w`` by ``","``
    or ``"+"``, together with the number of ``"+"`` used."""
    if w.depth == 0:
        raise ValueError("contractions of the empty word are undefined")
    parts = w.parts
    for ops in product((False, True), repeat=len(parts) - 1):
        out = [parts[0]]
        for merge, p in zip(ops, parts[1:]):
            if merge:
                out[-1] += p
            else:
                out.append(p)
        yield IndexWord(tuple(out)), sum(ops)


def star_expansion(w: IndexWord) -> SignedCombo:
    """zeta*(w) as a sum of plain zeta values (all coefficients +1)."""
    return SignedCombo((1, c) for c, _ in contractions(w))


def plain_from_star(w: IndexWord) -> SignedCombo:
    """zeta(w) as a signed sum of star values, sign (-1)^(number of merges)."""
    return SignedCombo(((-1) ** plus, c) for c, plus in contractions(w))


def stuffle(a: IndexWord, b: IndexWord) -> list[IndexWord]:
    """Quasi-shuffle product of two words, as a multiset (list with repeats)."""
    return sorted(IndexWord(w) for w in _stuffle(a.parts, b.parts))


@lru_cache(maxsize=100_000)
def _stuffle(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    if not a:
        return (b,)
    if not b:
        return (a,)
    out = [(a[0],) + w for w in _stuffle(a[1:], b)]
    out += [(b[0],) + w for w in _stuffle(a, b[1:])]
    out += [(a[0] + b[0],) + w for w in _stuffle(a[1:], b[1:])]
    return tuple(out)


def stuffle_counter(a: IndexWord, b: IndexWord) -> Counter:
    """Stuffle product with multiplicities merged."""
    return Counter({IndexWord(w): m for w, m in _stuffle_count(a.parts, b.parts).items()})


@lru_cache(maxsize=100_000)
def _stuffle_count(a: tuple[int, ...], b: tuple[int, ...]) -> dict:
    if not a or not b:
        return {a or b: 1}
    out: Counter = Counter()
    for head, rest in ((a[0], _stuffle_count(a[1:], b)), (b[0], _stuffle_count(a, b[1:])),
                       (a[0] + b[0], _stuffle_count(a[1:], b[1:]))):
        for w, m in rest.items():
            out[(head,) + w] += m
    return dict(out)


def ordered_partitions(k: int) -> list[IndexWord]:
    """All compositions of ``k``."""
    if k < 1:
        raise ValueError("k must be positive")
    return sorted(c for c, _ in contractions(repeat_ones(k)))


def compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``n`` into exactly ``parts`` positive parts."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(1, n - parts + 2):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


def words_up_to_weight(max_weight: int, include_empty: bool = False) -> list[IndexWord]:
    out = [EMPTY] if include_empty else []
    for wt in range(1, max_weight + 1):
        for d in range(1, wt + 1):
            out.extend(IndexWord(c) for c in compositions(wt, d))
    return sorted(out)
