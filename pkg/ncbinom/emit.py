from __future__ import annotations

import json
from typing import Any
from typing import Iterable
from typing import NamedTuple
from typing import Tuple
from typing import Union

from ncbinom.freepoly import FreePoly
from ncbinom.pbw import PBWMonomial
from ncbinom.pbw import PBWPoly
from ncbinom.rings import Coefficient
from ncbinom.rings import parse_ring
from ncbinom.rings import QPoly
from ncbinom.rings import Rational
from ncbinom.rings import Ring
from ncbinom.words import format_word
from ncbinom.words import parse_word
from ncbinom.words import Word

WORD = 'word'
PBW = 'pbw'

Polynomial = Union[FreePoly, PBWPoly]
# (monomial, coefficient, total degree) for bases without a parser
Term = Tuple[Any, Coefficient, int]


class OutputDoc(NamedTuple):
    ring: str
    basis: str
    alphabet: int
    terms: Tuple[Term, ...]


def _sort_key(term: Term) -> tuple[int, Any]:
    mono, _, degree = term
    if isinstance(mono, PBWMonomial):
        return degree, mono.factors
    else:
        return degree, mono


def _canonical(terms: Iterable[Term]) -> tuple[Term, ...]:
    return tuple(sorted(terms, key=_sort_key, reverse=True))


def doc_from_poly(p: Polynomial, ring: Ring) -> OutputDoc:
    if isinstance(p, PBWPoly):
        terms = [(m, ring.coerce(c), m.degree) for m, c in p]
        basis = PBW
    else:
        terms = [(w, ring.coerce(c), len(w)) for w, c in p]
        basis = WORD
    return OutputDoc(
        ring.name, basis, p.alphabet,
        _canonical(t for t in terms if t[1]),
    )


def doc_from_terms(
        basis: str,
        alphabet: int,
        items: Iterable[Term],
        ring: Ring,
) -> OutputDoc:
    """For normal-ordered quotient monomials, rendered through `str`."""
    return OutputDoc(
        ring.name, basis, alphabet,
        _canonical((m, ring.coerce(c), d) for m, c, d in items),
    )


def to_polynomial(doc: OutputDoc) -> Polynomial:
    if doc.basis == PBW:
        return PBWPoly({m: c for m, c, _ in doc.terms}, doc.alphabet)
    elif doc.basis == WORD:
        return FreePoly({w: c for w, c, _ in doc.terms}, doc.alphabet)
    else:
        raise ValueError(f'{doc.basis} terms have no polynomial type')


def _word_text(w: Word, alphabet: int) -> str:
    return f'E({format_word(w, alphabet)})' if w else '1'


def _pbw_text(m: PBWMonomial, alphabet: int) -> str:
    if not m.factors:
        return '1'
    return '*'.join(
        f'E({format_word(alpha, alphabet)})' + (f'^{t}' if t > 1 else '')
        for alpha, t in m.factors
    )


def _monomial_text(doc: OutputDoc, mono: Any) -> str:
    if doc.basis == PBW:
        return _pbw_text(mono, doc.alphabet)
    elif doc.basis == WORD:
        return _word_text(mono, doc.alphabet)
    else:
        return str(mono)


def _is_negative(c: Coefficient) -> bool:
    if isinstance(c, (int, Rational)):
        return c < 0
    elif isinstance(c, QPoly):
        nonzero = [a for a in c.coefficients if a]
        return len(nonzero) == 1 and nonzero[0] < 0
    else:
        return False


def _coefficient_text(c: Coefficient) -> str:
    if isinstance(c, QPoly) and c.degree > 0 and len(
            [a for a in c.coefficients if a],
    ) > 1:
        return f'({c})'
    else:
        return str(c)


def format_text(doc: OutputDoc) -> str:
    if not doc.terms:
        return '0'
    out = []
    for i, (mono, c, _) in enumerate(doc.terms):
        negative = _is_negative(c)
        if negative:
            c = -c
        mono_s = _monomial_text(doc, mono)
        if mono_s == '1':
            body = _coefficient_text(c)
        elif c == 1:
            body = mono_s
        else:
            body = f'{_coefficient_text(c)}*{mono_s}'
        if i == 0:
            out.append(f'-{body}' if negative else body)
        else:
            out.append(f'- {body}' if negative else f'+ {body}')
    return ' '.join(out)


def _latex_coefficient(c: Coefficient) -> str:
    if isinstance(c, QPoly):
        parts = []
        for i, a in enumerate(c.coefficients):
            if not a:
                continue
            power = '' if i == 0 else 'q' if i == 1 else f'q^{{{i}}}'
            if not power:
                parts.append(_latex_coefficient(a))
            elif a == 1:
                parts.append(power)
            else:
                parts.append(f'{_latex_coefficient(a)}{power}')
        body = '+'.join(parts).replace('+-', '-')
        return f'({body})' if len(parts) > 1 else body
    elif isinstance(c, Rational) and c.denominator != 1:
        sign = '-' if c < 0 else ''
        return f'{sign}\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}'
    else:
        return str(c)


def _latex_monomial(doc: OutputDoc, mono: Any) -> str:
    if doc.basis == PBW:
        return ''.join(
            f'E_{{{format_word(alpha, doc.alphabet)}}}' +
            (f'^{{{t}}}' if t > 1 else '')
            for alpha, t in mono.factors
        )
    elif doc.basis == WORD:
        return ''.join(f'E_{{{letter}}}' for letter in mono)
    else:
        return str(mono)


def format_latex(doc: OutputDoc) -> str:
    if not doc.terms:
        return '0'
    out = []
    for i, (mono, c, _) in enumerate(doc.terms):
        negative = _is_negative(c)
        if negative:
            c = -c
        mono_s = _latex_monomial(doc, mono) or '1'
        if mono_s == '1':
            body = _latex_coefficient(c)
        elif c == 1:
            body = mono_s
        else:
            body = f'{_latex_coefficient(c)}{mono_s}'
        if i == 0:
            out.append(f'-{body}' if negative else body)
        else:
            out.append(f'- {body}' if negative else f'+ {body}')
    return ' '.join(out)


def _json_term(doc: OutputDoc, mono: Any, c: Coefficient) -> dict[str, Any]:
    if doc.basis == PBW:
        return {
            'coeff': str(c),
            'factors': [
                [format_word(alpha, doc.alphabet), t]
                for alpha, t in mono.factors
            ],
        }
    elif doc.basis == WORD:
        return {'coeff': str(c), 'word': format_word(mono, doc.alphabet)}
    else:
        return {'coeff': str(c), 'monomial': str(mono)}


def to_json_obj(doc: OutputDoc) -> dict[str, Any]:
    return {
        'alphabet': doc.alphabet,
        'basis': doc.basis,
        'ring': doc.ring,
        'terms': [_json_term(doc, mono, c) for mono, c, _ in doc.terms],
    }


def format_json(doc: OutputDoc) -> str:
    return json.dumps(to_json_obj(doc), sort_keys=True)


def render(doc: OutputDoc, fmt: str) -> str:
    if fmt == 'text':
        return format_text(doc)
    elif fmt == 'latex':
        return format_latex(doc)
    elif fmt == 'json':
        return format_json(doc)
    else:
        raise ValueError(f'unknown format {fmt!r}')


def pbw_terms_from_json(
        terms: Iterable[dict[str, Any]],
        alphabet: int,
        ring: Ring,
) -> PBWPoly:
    return PBWPoly(
        {
            PBWMonomial.create(
                (parse_word(word), t) for word, t in term['factors']
            ): ring.parse_coefficient(term['coeff'])
            for term in terms
        },
        alphabet,
    )


def parse_json(s: str) -> Polynomial:
    obj = json.loads(s)
    ring = parse_ring(obj['ring'])
    alphabet = obj['alphabet']
    if obj['basis'] == PBW:
        return pbw_terms_from_json(obj['terms'], alphabet, ring)
    elif obj['basis'] == WORD:
        return FreePoly(
            {
                parse_word(term['word']): ring.parse_coefficient(term['coeff'])
                for term in obj['terms']
            },
            alphabet,
        )
    else:
        raise ValueError(f'cannot parse {obj["basis"]} terms')


def _split_top_level(s: str, seps: str) -> list[tuple[str, str]]:
    """Split at the characters in `seps` outside parentheses, keeping the
    separator that preceded each piece ('' for the first)."""
    ret = []
    depth = 0
    start = 0
    sep = ''
    for i, ch in enumerate(s):
        if ch in '([':
            depth += 1
        elif ch in ')]':
            depth -= 1
        elif depth == 0 and ch in seps and i > 0 and s[i - 1] != '^':
            ret.append((sep, s[start:i]))
            sep, start = ch, i + 1
    ret.append((sep, s[start:]))
    return ret


def _parse_factor(s: str) -> tuple[Word, int] | None:
    s = s.strip()
    if not s.startswith('E('):
        return None
    close = s.index(')')
    word = parse_word(s[2:close])
    rest = s[close + 1:]
    if not rest:
        return word, 1
    elif rest.startswith('^') and rest[1:].isdigit():
        return word, int(rest[1:])
    else:
        raise ValueError(f'not a basis factor: {s!r}')


def _parse_coefficient(s: str, ring: Ring) -> Coefficient:
    s = s.strip()
    if s.startswith('(') and s.endswith(')') and 'q' not in s:
        s = s[1:-1]
    return ring.parse_coefficient(s)


def parse_text(
        s: str,
        basis: str,
        alphabet: int,
        ring: Ring,
) -> Polynomial:
    """Inverse of `format_text`: "2*E(21) - E(12)" in the word basis,
    "6*E(2)^2*E(1)^2 + E(12)" in the PBW basis."""
    s = s.strip()
    word_terms: dict[Word, Coefficient] = {}
    pbw_terms: dict[PBWMonomial, Coefficient] = {}
    if s != '0':
        if s.startswith('-'):
            s = '0' + s
        for sign, term in _split_top_level(s, '+-'):
            term = term.strip()
            if sign == '' and term == '0':
                continue
            c: Coefficient = -1 if sign == '-' else 1
            factors = []
            for _, piece in _split_top_level(term, '*'):
                factor = _parse_factor(piece)
                if factor is None:
                    c = c * _parse_coefficient(piece, ring)
                else:
                    factors.append(factor)
            if basis == PBW:
                mono = PBWMonomial.create(factors)
                pbw_terms[mono] = pbw_terms.get(mono, 0) + c
            else:
                w = sum((alpha * t for alpha, t in factors), ())
                word_terms[w] = word_terms.get(w, 0) + c
    if basis == PBW:
        return PBWPoly(pbw_terms, alphabet)
    else:
        return FreePoly(word_terms, alphabet)
