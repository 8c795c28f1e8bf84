from __future__ import annotations

from ncbinom import output
from ncbinom.emit import doc_from_poly
from ncbinom.emit import parse_text
from ncbinom.emit import render
from ncbinom.emit import WORD
from ncbinom.errors import FatalError
from ncbinom.freepoly import FreePoly
from ncbinom.pbw import pbw_rewrite
from ncbinom.rings import QQ
from ncbinom.rings import Ring
from ncbinom.util import check_degree
from ncbinom.words import Alphabet


def pbw(
        expr: str,
        *,
        alphabet: int,
        ring: Ring,
        fmt: str,
        max_degree: int,
) -> int:
    try:
        f = parse_text(expr, WORD, alphabet, QQ)
    except ValueError as e:
        raise FatalError(f'cannot parse {expr!r}: {e}')
    assert isinstance(f, FreePoly)
    letters = Alphabet.create(alphabet)
    for w, _ in f:
        letters.check(w)
    check_degree(f.degree, max_degree)
    output.write_line(render(doc_from_poly(pbw_rewrite(f), ring), fmt))
    return 0
