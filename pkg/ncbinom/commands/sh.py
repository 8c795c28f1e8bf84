from __future__ import annotations

from ncbinom import output
from ncbinom.emit import doc_from_poly
from ncbinom.emit import Polynomial
from ncbinom.emit import render
from ncbinom.freepoly import sh_word_basis
from ncbinom.freepoly import sh_word_multi
from ncbinom.rings import parse_ring
from ncbinom.rings import Ring
from ncbinom.shuffle import sh_pbw
from ncbinom.util import check_degree
from ncbinom.words import MultiDegree


def sh(
        degree: MultiDegree,
        *,
        pbw: bool,
        char: int | None,
        ring: Ring,
        fmt: str,
        max_degree: int,
) -> int:
    check_degree(degree.total, max_degree)
    if char is not None:
        ring = parse_ring(f'GF:{char}')

    p: Polynomial
    if pbw:
        p = sh_pbw(degree)
    elif degree.alphabet_size == 2:
        p = sh_word_basis(degree.count(2), degree.count(1))
    else:
        p = sh_word_multi(degree)
    output.write_line(render(doc_from_poly(p, ring), fmt))
    return 0
