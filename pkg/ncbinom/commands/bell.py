from __future__ import annotations

from ncbinom import output
from ncbinom.bell import bell_dual
from ncbinom.bell import bell_partial
from ncbinom.bell import bell_total
from ncbinom.bell import classical_bell_project
from ncbinom.emit import doc_from_poly
from ncbinom.emit import render
from ncbinom.errors import FatalError
from ncbinom.pbw import PBWPoly
from ncbinom.rings import Ring
from ncbinom.util import check_degree


def _dual_total(n: int) -> PBWPoly:
    ret = PBWPoly.zero(2)
    for k in range(n + 1):
        ret = ret + bell_dual(n, k)
    return ret


def bell(
        n: int,
        k: int | None,
        *,
        dual: bool,
        project_classical: bool,
        ring: Ring,
        fmt: str,
        max_degree: int,
) -> int:
    check_degree(n, max_degree)
    if k is not None and not 0 <= k <= n:
        raise FatalError(f'need 0 <= k <= {n}, got {k}')

    if project_classical:
        if dual or k is not None:
            raise FatalError(
                '--project-classical takes neither --k nor --dual',
            )
        p = classical_bell_project(n)
    elif dual:
        p = _dual_total(n) if k is None else bell_dual(n, k)
    elif k is None:
        p = bell_total(n).pbw
    else:
        p = bell_partial(n, k).pbw
    output.write_line(render(doc_from_poly(p, ring), fmt))
    return 0
