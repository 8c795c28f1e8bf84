from __future__ import annotations

import itertools

import pytest

from ncbinom.errors import AlphabetMismatch
from ncbinom.errors import EmptyWord
from ncbinom.errors import NoFactorization
from ncbinom.words import Alphabet
from ncbinom.words import cfl_factorize
from ncbinom.words import format_word
from ncbinom.words import is_lyndon
from ncbinom.words import is_lyndon_by_rotation
from ncbinom.words import lex_compare
from ncbinom.words import longest_lyndon_suffix
from ncbinom.words import lyndon_count
from ncbinom.words import lyndon_enumerate
from ncbinom.words import multidegree
from ncbinom.words import MultiDegree
from ncbinom.words import Ordering
from ncbinom.words import parse_word
from ncbinom.words import standard_factorization


@pytest.mark.parametrize(
    ('w', 'expected'),
    (
        ((1,), True),
        ((1, 2), True),
        ((1, 1, 2), True),
        ((1, 1, 2, 1, 2), True),
        ((1, 1), False),
        ((2, 1), False),
        ((1, 2, 1), False),
        ((1, 2, 1, 2), False),
        ((), False),
    ),
)
def test_is_lyndon(w, expected):
    assert is_lyndon(w) is expected
    assert is_lyndon_by_rotation(w) is expected


def test_is_lyndon_agrees_with_rotations_on_short_words():
    for n in range(1, 7):
        for w in itertools.product((1, 2, 3), repeat=n):
            assert is_lyndon(w) == is_lyndon_by_rotation(w), w


@pytest.mark.parametrize(
    ('a', 'b', 'expected'),
    (
        ((1, 2), (1, 2, 2), Ordering.LESS),
        ((1, 2, 2), (1, 2), Ordering.GREATER),
        ((2,), (1, 2, 2), Ordering.GREATER),
        ((1, 2), (1, 2), Ordering.EQUAL),
    ),
)
def test_lex_compare(a, b, expected):
    assert lex_compare(a, b) is expected


@pytest.mark.parametrize(
    ('w', 'expected'),
    (
        ((1, 1), [(1,), (1,)]),
        ((2, 1, 1, 2, 1, 2), [(2,), (1, 1, 2, 1, 2)]),
        ((1, 2, 1), [(1, 2), (1,)]),
        ((2, 2, 1), [(2,), (2,), (1,)]),
        ((1, 2, 2, 1, 2), [(1, 2, 2), (1, 2)]),
    ),
)
def test_cfl_factorize(w, expected):
    assert cfl_factorize(w) == expected


def test_cfl_factorize_is_non_increasing_lyndon():
    for n in range(1, 9):
        for w in itertools.product((1, 2), repeat=n):
            factors = cfl_factorize(w)
            assert sum(factors, ()) == w
            assert all(is_lyndon(u) for u in factors)
            assert factors == sorted(factors, reverse=True)


def test_cfl_factorize_empty_word():
    with pytest.raises(EmptyWord):
        cfl_factorize(())


@pytest.mark.parametrize(
    ('w', 'expected'),
    (
        ((1, 2), ((1,), (2,))),
        ((1, 1, 2), ((1,), (1, 2))),
        ((1, 2, 2), ((1, 2), (2,))),
        ((1, 1, 2, 1, 2), ((1, 1, 2), (1, 2))),
        ((1, 1, 2, 2), ((1,), (1, 2, 2))),
    ),
)
def test_standard_factorization(w, expected):
    left, right = standard_factorization(w)
    assert (left, right) == expected
    assert is_lyndon(left) and is_lyndon(right) and left < right


@pytest.mark.parametrize('w', ((1,), (2, 1), (1, 1)))
def test_standard_factorization_needs_a_long_lyndon_word(w):
    with pytest.raises(NoFactorization):
        standard_factorization(w)


def test_longest_lyndon_suffix():
    assert longest_lyndon_suffix((2, 1, 1, 2)) == (1, 1, 2)
    with pytest.raises(NoFactorization):
        longest_lyndon_suffix((1,))


def test_lyndon_enumerate_in_lex_order():
    ret = list(lyndon_enumerate(Alphabet(2), 3))
    assert ret == [(1,), (1, 1, 2), (1, 2), (1, 2, 2), (2,)]


def test_lyndon_enumerate_nothing_below_length_one():
    assert list(lyndon_enumerate(Alphabet(2), 0)) == []


@pytest.mark.parametrize(
    ('m', 'n', 'expected'),
    (
        (2, 1, 2),
        (2, 2, 1),
        (2, 3, 2),
        (2, 4, 3),
        (2, 5, 6),
        (2, 6, 9),
        (3, 2, 3),
        (3, 3, 8),
        (1, 3, 0),
    ),
)
def test_lyndon_count(m, n, expected):
    assert lyndon_count(m, n) == expected
    words = lyndon_enumerate(Alphabet(m), n)
    assert sum(len(w) == n for w in words) == expected


def test_multidegree_binary_reading():
    d = MultiDegree.from_binary(2, 3)
    assert d.counts == (3, 2)
    assert d.descending == (2, 3)
    assert d.total == 5
    assert d.count(2) == 2
    assert d.count(3) == 0
    assert str(d) == '2,3'


def test_multidegree_of_word():
    assert multidegree((1, 2, 1, 3), 3) == MultiDegree((2, 1, 1))


def test_multidegree_rejects_negative_counts():
    with pytest.raises(ValueError):
        MultiDegree.from_descending((1, -1))


@pytest.mark.parametrize(
    ('s', 'alphabet', 'w'),
    (
        ('112', 2, (1, 1, 2)),
        ('[10,2]', 10, (10, 2)),
        ('', 2, ()),
    ),
)
def test_parse_and_format_word(s, alphabet, w):
    assert parse_word(s) == w
    assert format_word(w, alphabet) == s


def test_parse_word_rejects_garbage():
    with pytest.raises(ValueError):
        parse_word('1a2')


def test_parse_word_checks_the_alphabet():
    with pytest.raises(AlphabetMismatch):
        parse_word('13', Alphabet(2))


@pytest.mark.parametrize('s', ('0', '102', '[0]', '[1,-2]'))
def test_parse_word_letters_start_at_one(s):
    with pytest.raises(AlphabetMismatch) as excinfo:
        parse_word(s)
    msg, = excinfo.value.args
    assert msg.endswith('is not in the alphabet, letters start at 1')


def test_alphabet_needs_a_letter():
    with pytest.raises(AlphabetMismatch):
        Alphabet.create(0)
