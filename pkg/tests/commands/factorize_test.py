from __future__ import annotations

import json

import pytest

from ncbinom.commands.factorize import factorize
from ncbinom.errors import NoFactorization


@pytest.mark.parametrize(
    ('fmt', 'expected'),
    (
        ('text', '2 11212\n'),
        ('latex', '(2)(11212)\n'),
        ('json', '["2", "11212"]\n'),
    ),
)
def test_factorize(cap_out, fmt, expected):
    assert factorize((2, 1, 1, 2, 1, 2), standard=False, fmt=fmt) == 0
    assert cap_out.get() == expected


def test_factorize_lyndon_word_is_one_factor(cap_out):
    assert factorize((1, 1, 2), standard=False, fmt='json') == 0
    assert json.loads(cap_out.get()) == ['112']


def test_standard_factorization(cap_out):
    assert factorize((1, 1, 2, 2), standard=True, fmt='text') == 0
    assert cap_out.get() == '1 122\n'


def test_standard_factorization_of_a_letter():
    with pytest.raises(NoFactorization):
        factorize((2,), standard=True, fmt='text')
