from __future__ import annotations

from ncbinom import output
from ncbinom import qsigma
from ncbinom.emit import doc_from_poly
from ncbinom.emit import render
from ncbinom.errors import FatalError
from ncbinom.rings import Q
from ncbinom.rings import QQ
from ncbinom.rings import Ring
from ncbinom.util import check_degree


def qbell(
        n: int,
        k: int | None,
        *,
        ring: Ring,
        fmt: str,
        max_degree: int,
) -> int:
    check_degree(n, max_degree)
    if k is not None and not 0 <= k <= n:
        raise FatalError(f'need 0 <= k <= {n}, got {k}')
    # the default ring cannot hold q
    if ring == Q:
        ring = QQ
    f = qsigma.qbell(n) if k is None else qsigma.qbell_partial(n, k)
    output.write_line(render(doc_from_poly(f, ring), fmt))
    return 0
