from __future__ import annotations

import functools
import json
import logging
from typing import Any
from typing import NamedTuple

from ncbinom import util
from ncbinom.config import Array
from ncbinom.config import check_any
from ncbinom.config import check_array
from ncbinom.config import check_nonneg_int
from ncbinom.config import check_one_of
from ncbinom.config import check_string
from ncbinom.config import load_from_text
from ncbinom.config import Map
from ncbinom.config import Required
from ncbinom.config import RequiredRecurse
from ncbinom.config import ValidationError
from ncbinom.emit import doc_from_poly
from ncbinom.emit import format_text
from ncbinom.emit import pbw_terms_from_json
from ncbinom.errors import FatalError
from ncbinom.pbw import PBWPoly
from ncbinom.rings import parse_ring
from ncbinom.rings import Q
from ncbinom.shuffle import appendix_table
from ncbinom.words import MultiDegree

logger = logging.getLogger('ncbinom')


def check_factor(v: Any) -> None:
    check_array(check_any)(v)
    if len(v) != 2:
        raise ValidationError(f'Expected [word, exponent] but got {v!r}')
    check_string(v[0])
    check_nonneg_int(v[1])


APPENDIX_TERM = Map(
    'Term', 'coeff',
    Required('coeff', check_string),
    Required('factors', check_array(check_factor)),
)
APPENDIX_TABLE = Map(
    'Table', 'degree',
    Required('degree', check_array(check_nonneg_int)),
    RequiredRecurse('terms', Array(APPENDIX_TERM)),
)
APPENDIX_SCHEMA = Map(
    'Appendix', 'n',
    Required('n', check_nonneg_int),
    Required('ring', check_string),
    Required('basis', check_one_of(('pbw',))),
    RequiredRecurse('tables', Array(APPENDIX_TABLE, allow_empty=False)),
)


class InvalidAppendixError(FatalError):
    pass


class AppendixMismatch(NamedTuple):
    degree: MultiDegree
    expected: PBWPoly
    actual: PBWPoly

    def __str__(self) -> str:
        return (
            f'SH_{{{self.degree}}}:\n'
            f'    expected: {format_text(doc_from_poly(self.expected, Q))}\n'
            f'    actual:   {format_text(doc_from_poly(self.actual, Q))}'
        )


@functools.lru_cache(maxsize=None)
def load_appendix(n: int) -> tuple[tuple[MultiDegree, PBWPoly], ...]:
    data = load_from_text(
        util.appendix_text(n), f'Appendix sh_{n}.json', APPENDIX_SCHEMA,
        load_strategy=json.loads, exc_tp=InvalidAppendixError,
    )
    ring = parse_ring(data['ring'])
    return tuple(
        (
            MultiDegree.from_descending(table['degree']),
            pbw_terms_from_json(table['terms'], 2, ring),
        )
        for table in data['tables']
    )


def diff_appendix(n: int) -> list[AppendixMismatch]:
    expected = dict(load_appendix(n))
    ret = []
    for degree, actual in appendix_table(n):
        want = expected.pop(degree, PBWPoly.zero(2))
        if want != actual:
            ret.append(AppendixMismatch(degree, want, actual))
    for degree, want in expected.items():
        ret.append(AppendixMismatch(degree, want, PBWPoly.zero(2)))
    for mismatch in ret:
        logger.debug('appendix n=%d mismatch at %s', n, mismatch.degree)
    return ret
