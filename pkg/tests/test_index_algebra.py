from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from mzvkit.index_algebra import (EMPTY, IndexWord, SignedCombo, contractions, format_index,
                                  make_index, ordered_partitions, parse_index, plain_from_star,
                                  repeat_ones, star_expansion, stuffle, stuffle_counter,
                                  words_up_to_weight)

words = st.lists(st.integers(1, 3), min_size=1, max_size=4).map(make_index)


def test_parse_and_format_roundtrip():
    assert parse_index("2,1,1") == make_index((2, 1, 1))
    assert parse_index("") == EMPTY
    assert format_index(make_index((3, 1))) == "3,1"
    with pytest.raises(ValueError):
        parse_index("2,x")
    with pytest.raises(ValueError):
        make_index((2, 0))


def test_word_properties():
    w = make_index((2, 1, 1))
    assert (w.weight, w.depth, w.admissible) == (4, 3, True)
    assert not make_index((1, 2)).admissible
    assert w[1:] == repeat_ones(2)
    assert make_index((2,)) + repeat_ones(1) == make_index((2, 1))


def test_canonical_order():
    ws = sorted([make_index((1, 2)), make_index((3,)), make_index((2, 1)), make_index((1,))])
    assert ws == [make_index((1,)), make_index((3,)), make_index((1, 2)), make_index((2, 1))]


def test_contractions_count_and_empty():
    assert len(list(contractions(make_index((1, 2, 3))))) == 4
    with pytest.raises(ValueError):
        list(contractions(EMPTY))


def test_star_expansion_example():
    combo = star_expansion(make_index((2, 1)))
    assert combo.terms == [(1, make_index((3,))), (1, make_index((2, 1)))]
    assert plain_from_star(make_index((2, 1))).terms == [(-1, make_index((3,))), (1, make_index((2, 1)))]


def test_signed_combo_merges_and_drops_zeros():
    a = make_index((2,))
    c = SignedCombo([(1, a), (-1, a), (2, make_index((3,)))])
    assert len(c) == 1 and c[make_index((3,))] == 2 and c[a] == 0


def test_stuffle_small_example():
    got = Counter(stuffle(make_index((2,)), make_index((1,))))
    assert got == Counter({make_index((3,)): 1, make_index((1, 2)): 1, make_index((2, 1)): 1})


def _delannoy(m, n):
    if m == 0 or n == 0:
        return 1
    return _delannoy(m - 1, n) + _delannoy(m, n - 1) + _delannoy(m - 1, n - 1)


@given(words, words)
def test_stuffle_size_is_delannoy(a, b):
    assert len(stuffle(a, b)) == _delannoy(a.depth, b.depth)


@given(words, words)
def test_stuffle_commutative_and_weight_preserving(a, b):
    ab = stuffle(a, b)
    assert ab == stuffle(b, a)
    assert all(w.weight == a.weight + b.weight for w in ab)


def _assoc(a, b, c):
    left, right = Counter(), Counter()
    for w, m in stuffle_counter(a, b).items():
        for x, k in stuffle_counter(w, c).items():
            left[x] += m * k
    for w, m in stuffle_counter(b, c).items():
        for x, k in stuffle_counter(a, w).items():
            right[x] += m * k
    return left == right


def test_stuffle_counter_matches_multiset():
    for a in words_up_to_weight(3):
        for b in words_up_to_weight(3):
            assert stuffle_counter(a, b) == Counter(stuffle(a, b))


def test_stuffle_associative_exhaustive_weight_3():
    ws = words_up_to_weight(3)
    assert all(_assoc(a, b, c) for a in ws for b in ws for c in ws)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(words_up_to_weight(4)), st.sampled_from(words_up_to_weight(4)),
       st.sampled_from(words_up_to_weight(4)))
def test_stuffle_associative_weight_4(a, b, c):
    assert _assoc(a, b, c)


def test_conversions_are_inverse_up_to_weight_6():
    for w in words_up_to_weight(6):
        back = SignedCombo((k * s, x) for k, v in star_expansion(w) for s, x in plain_from_star(v))
        assert back == SignedCombo([(1, w)])


def test_ordered_partitions():
    assert len(ordered_partitions(5)) == 16
    assert all(p.weight == 5 for p in ordered_partitions(5))
    with pytest.raises(ValueError):
        ordered_partitions(0)


def test_words_up_to_weight_count():
    assert len(words_up_to_weight(4)) == 15
    assert words_up_to_weight(2, include_empty=True)[0] == EMPTY
