from __future__ import annotations

from ncbinom import output
from ncbinom.emit import doc_from_poly
from ncbinom.emit import render
from ncbinom.rings import Ring
from ncbinom.shuffle import binomial_ls
from ncbinom.util import check_degree


def binom(
        letters: int,
        power: int,
        *,
        ring: Ring,
        fmt: str,
        max_degree: int,
) -> int:
    check_degree(power, max_degree)
    p = binomial_ls(letters, power)
    output.write_line(render(doc_from_poly(p, ring), fmt))
    return 0
