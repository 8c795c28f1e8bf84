from __future__ import annotations

from ncbinom import output
from ncbinom.emit import doc_from_poly
from ncbinom.emit import doc_from_terms
from ncbinom.emit import OutputDoc
from ncbinom.emit import parse_text
from ncbinom.emit import render
from ncbinom.emit import WORD
from ncbinom.errors import FatalError
from ncbinom.freepoly import FreePoly
from ncbinom.pbw import pbw_rewrite
from ncbinom.quotients import blumen_binomial
from ncbinom.quotients import kill_project
from ncbinom.quotients import KillSet
from ncbinom.quotients import qcomm_bell
from ncbinom.quotients import weyl_binomial
from ncbinom.rings import Q
from ncbinom.rings import QQ
from ncbinom.rings import Ring
from ncbinom.util import check_degree
from ncbinom.words import Alphabet
from ncbinom.words import is_lyndon
from ncbinom.words import Word

QUOTIENTS = ('weyl', 'blumen', 'qcomm-bell', 'kill')


def _q_ring(ring: Ring) -> Ring:
    return QQ if ring == Q else ring


def _kill(
        words: tuple[Word, ...],
        min_length: int | None,
        expr: str,
        alphabet: int,
        ring: Ring,
        max_degree: int,
) -> OutputDoc:
    for w in words:
        if not is_lyndon(w):
            raise FatalError(f'{w} is not a Lyndon word')
    try:
        f = parse_text(expr, WORD, alphabet, QQ)
    except ValueError as e:
        raise FatalError(f'cannot parse {expr!r}: {e}')
    assert isinstance(f, FreePoly)
    letters = Alphabet.create(alphabet)
    for w, _ in f:
        letters.check(w)
    check_degree(f.degree, max_degree)
    ks = KillSet(frozenset(words), min_length)
    return doc_from_poly(kill_project(pbw_rewrite(f), ks), ring)


def quotient(
        kind: str,
        *,
        n: int | None,
        k: int | None,
        kill_set: tuple[Word, ...],
        min_length: int | None,
        expr: str | None,
        alphabet: int,
        ring: Ring,
        fmt: str,
        max_degree: int,
) -> int:
    if kind == 'kill':
        if expr is None:
            raise FatalError('quotient kill needs --expr')
        doc = _kill(kill_set, min_length, expr, alphabet, ring, max_degree)
    elif n is None:
        raise FatalError(f'quotient {kind} needs a degree')
    elif kind == 'weyl':
        check_degree(n, max_degree)
        doc = doc_from_poly(weyl_binomial(n), ring)
    elif kind == 'blumen':
        check_degree(n, max_degree)
        doc = doc_from_terms(
            'blumen', 3,
            ((mono, c, n) for mono, c in blumen_binomial(n).items()),
            _q_ring(ring),
        )
    elif kind == 'qcomm-bell':
        check_degree(n, max_degree)
        if k is None or not 0 <= k <= n:
            raise FatalError(f'quotient qcomm-bell needs 0 <= --k <= {n}')
        doc = doc_from_terms(
            'qcomm', n,
            ((mono, c, n) for mono, c in qcomm_bell(n, k).items()),
            _q_ring(ring),
        )
    else:
        raise AssertionError(f'unknown quotient {kind}')
    output.write_line(render(doc, fmt))
    return 0
