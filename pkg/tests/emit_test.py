from __future__ import annotations

import json

import pytest

from ncbinom.emit import doc_from_poly
from ncbinom.emit import doc_from_terms
from ncbinom.emit import format_json
from ncbinom.emit import format_latex
from ncbinom.emit import format_text
from ncbinom.emit import parse_json
from ncbinom.emit import parse_text
from ncbinom.emit import PBW
from ncbinom.emit import render
from ncbinom.emit import to_json_obj
from ncbinom.emit import to_polynomial
from ncbinom.emit import WORD
from ncbinom.freepoly import sh_word_basis
from ncbinom.pbw import pbw_rewrite
from ncbinom.pbw import PBWPoly
from ncbinom.quotients import BlumenMonomial
from ncbinom.rings import parse_ring
from ncbinom.rings import Q
from ncbinom.rings import QQ
from testing.util import pbw
from testing.util import qpoly
from testing.util import words

SH_2_2 = (
    '6*E(2)^2*E(1)^2 + 12*E(2)*E(12)*E(1) + 4*E(2)*E(112) + '
    '4*E(122)*E(1) + 3*E(12)^2 + E(1122)'
)


def test_text_orders_pbw_terms_decreasing():
    doc = doc_from_poly(pbw_rewrite(sh_word_basis(2, 2)), Q)
    assert format_text(doc) == SH_2_2


def test_text_word_basis_with_signs():
    doc = doc_from_poly(words('E(12) - E(21)'), Q)
    assert format_text(doc) == '-E(21) + E(12)'


def test_text_q_coefficients():
    doc = doc_from_poly(words('E(12) - q*E(21) + (1+q)*E(22)'), QQ)
    assert format_text(doc) == '(1+q)*E(22) - q*E(21) + E(12)'


def test_text_constants_and_zero():
    assert format_text(doc_from_poly(words('3'), Q)) == '3'
    assert format_text(doc_from_poly(PBWPoly.zero(2), Q)) == '0'


def test_prime_field_drops_vanishing_terms():
    doc = doc_from_poly(pbw('3*E(2)*E(1) + E(12)'), parse_ring('GF:3'))
    assert doc.ring == 'GF:3'
    assert format_text(doc) == 'E(12)'


def test_latex():
    doc = doc_from_poly(pbw('2*E(2)*E(1) + E(12)'), Q)
    assert format_latex(doc) == '2E_{2}E_{1} + E_{12}'
    doc = doc_from_poly(pbw('1/2*E(1)^3 - E(2)'), Q)
    assert format_latex(doc) == '\\frac{1}{2}E_{1}^{3} - E_{2}'


def test_latex_q_coefficient():
    doc = doc_from_poly(words('(1+2*q^2)*E(12)'), QQ)
    assert format_latex(doc) == '(1+2q^{2})E_{1}E_{2}'


def test_json():
    doc = doc_from_poly(pbw('2*E(2)*E(1) + E(12)'), Q)
    assert json.loads(format_json(doc)) == {
        'alphabet': 2,
        'basis': 'pbw',
        'ring': 'Q',
        'terms': [
            {'coeff': '2', 'factors': [['2', 1], ['1', 1]]},
            {'coeff': '1', 'factors': [['12', 1]]},
        ],
    }


def test_json_word_basis():
    obj = to_json_obj(doc_from_poly(words('E(21)'), Q))
    assert obj['terms'] == [{'coeff': '1', 'word': '21'}]


def test_parse_json_inverts_format_json():
    p = pbw(SH_2_2)
    assert parse_json(format_json(doc_from_poly(p, Q))) == p
    f = words('1/3*E(12) - E(21)')
    assert parse_json(format_json(doc_from_poly(f, Q))) == f


def test_parse_json_rejects_other_bases():
    doc = doc_from_terms(
        'blumen', 3, [(BlumenMonomial(1, 0, 1), qpoly('1+q'), 2)], QQ,
    )
    with pytest.raises(ValueError):
        parse_json(format_json(doc))


def test_quotient_terms():
    doc = doc_from_terms(
        'blumen', 3,
        [
            (BlumenMonomial(1, 0, 1), qpoly('1+q'), 2),
            (BlumenMonomial(0, 1, 0), qpoly('1'), 2),
        ],
        QQ,
    )
    assert format_text(doc) == '(1+q)*y*x + h'
    assert to_json_obj(doc)['terms'][1] == {'coeff': '1', 'monomial': 'h'}
    with pytest.raises(ValueError):
        to_polynomial(doc)


def test_to_polynomial():
    p = pbw(SH_2_2)
    assert to_polynomial(doc_from_poly(p, Q)) == p


@pytest.mark.parametrize(
    ('fmt', 'expected'),
    (('text', 'E(12)'), ('latex', 'E_{12}')),
)
def test_render(fmt, expected):
    assert render(doc_from_poly(pbw('E(12)'), Q), fmt) == expected


def test_render_unknown_format():
    with pytest.raises(ValueError):
        render(doc_from_poly(pbw('E(12)'), Q), 'yaml')


def test_parse_text_bases():
    assert parse_text('E(2)*E(1)', PBW, 2, Q) == pbw('E(2)*E(1)')
    assert parse_text('E(2)*E(1)', WORD, 2, Q) == words('E(21)')
    assert parse_text('0', PBW, 2, Q) == PBWPoly.zero(2)
    assert parse_text('-E(1) + E(1)', WORD, 2, Q) == words('0')


@pytest.mark.parametrize('s', ('E(12', 'E(1)^x', 'foo*E(1)'))
def test_parse_text_errors(s):
    with pytest.raises(ValueError):
        parse_text(s, WORD, 2, Q)
