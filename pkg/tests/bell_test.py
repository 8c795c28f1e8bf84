from __future__ import annotations

import pytest

from ncbinom.bell import bell_dual
from ncbinom.bell import bell_dual_words
from ncbinom.bell import bell_ls_form
from ncbinom.bell import bell_ls_form_multi
from ncbinom.bell import bell_multi_partial
from ncbinom.bell import bell_partial
from ncbinom.bell import bell_partial_words
from ncbinom.bell import bell_table
from ncbinom.bell import bell_total
from ncbinom.bell import bell_total_ls_form
from ncbinom.bell import binomial_via_bell_holds
from ncbinom.bell import binomial_via_bell_multi_holds
from ncbinom.bell import classical_bell_formula
from ncbinom.bell import classical_bell_project
from ncbinom.bell import LEFTMOST_NOT_E2
from ncbinom.bell import RIGHTMOST_NOT_E1
from ncbinom.bell import sh_filter
from ncbinom.freepoly import FreePoly
from ncbinom.pbw import PBWPoly
from ncbinom.pbw import UNIT
from ncbinom.words import MultiDegree
from testing.util import pbw
from testing.util import words


def test_bell_partial_words_small():
    assert bell_partial_words(0, 0) == FreePoly.one(2)
    assert bell_partial_words(1, 1) == words('E(2)')
    assert bell_partial_words(2, 1) == words('E(12) - E(21)')
    assert bell_partial_words(2, 2) == words('E(22)')
    assert bell_partial_words(3, 0) == FreePoly.zero(2)
    assert bell_partial_words(2, 3) == FreePoly.zero(2)


def test_bell_total_pbw():
    ret = bell_total(2)
    assert ret.k is None
    assert ret.pbw == pbw('E(2)^2 + E(12)')


def test_bell_partial_4_2():
    ret = bell_partial(4, 2)
    assert (ret.n, ret.k) == (4, 2)
    assert ret.pbw == pbw('4*E(2)*E(112) + 3*E(12)^2 + E(1122)')


def test_bell_table():
    table = bell_table(3)
    assert len(table) == 10
    assert table[3, 3].pbw == pbw('E(2)^3')
    assert table[3, 1].pbw == pbw('E(112)')


@pytest.mark.parametrize('n', range(1, 6))
def test_bell_is_sh_without_trailing_e1(n):
    for k in range(n + 1):
        expected = sh_filter(
            MultiDegree.from_binary(k, n - k), RIGHTMOST_NOT_E1,
        )
        assert bell_partial(n, k).pbw == expected
        assert bell_ls_form(n, k) == expected


@pytest.mark.parametrize('n', range(1, 6))
def test_dual_is_sh_without_leading_e2(n):
    for k in range(n + 1):
        expected = sh_filter(
            MultiDegree.from_binary(n - k, k), LEFTMOST_NOT_E2,
        )
        assert bell_dual(n, k) == expected


def test_dual_words_small():
    assert bell_dual_words(1, 1) == words('E(1)')
    assert bell_dual_words(2, 1) == words('E(12) - E(21)')
    assert bell_dual_words(2, 2) == words('E(11)')


def test_sh_filter_rejects_unknown_side():
    with pytest.raises(ValueError):
        sh_filter(MultiDegree.from_binary(1, 1), 'middle')


def test_bell_ls_form_degree_zero():
    assert bell_ls_form(0, 0) == PBWPoly.monomial(UNIT, 2)
    assert bell_ls_form(0, 1) == PBWPoly.zero(2)
    assert bell_total_ls_form(0) == PBWPoly.monomial(UNIT, 2)


def test_bell_total_ls_form():
    for n in range(5):
        assert bell_total_ls_form(n) == bell_total(n).pbw


@pytest.mark.parametrize('n', range(6))
def test_binomial_via_bell(n):
    assert binomial_via_bell_holds(n)


@pytest.mark.parametrize(('m', 'n'), ((3, 2), (3, 3), (4, 2)))
def test_binomial_via_bell_multi(m, n):
    assert binomial_via_bell_multi_holds(m, n)


@pytest.mark.parametrize(('n', 'k'), ((1, 1), (2, 1), (3, 2), (3, 1)))
def test_bell_ls_form_multi(n, k):
    assert bell_ls_form_multi(3, n, k) == bell_multi_partial(3, n, k)


@pytest.mark.parametrize(('n', 'k'), ((0, 1), (2, 3), (3, 5)))
def test_bell_ls_form_k_above_n_is_zero(n, k):
    assert bell_ls_form(n, k) == PBWPoly.zero(2)
    assert bell_ls_form_multi(3, n, k) == PBWPoly.zero(3)


def test_classical_bell_formula():
    assert classical_bell_formula(0) == PBWPoly.monomial(UNIT, 2)
    assert classical_bell_formula(2) == pbw('E(2)^2 + E(12)')
    expected = pbw('E(2)^3 + 3*E(2)*E(12) + E(112)')
    assert classical_bell_formula(3) == expected


@pytest.mark.parametrize('n', range(1, 6))
def test_classical_projection(n):
    assert classical_bell_project(n) == classical_bell_formula(n)
