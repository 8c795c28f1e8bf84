from __future__ import annotations

import json

from ncbinom import output
from ncbinom.emit import doc_from_poly
from ncbinom.emit import render
from ncbinom.emit import to_json_obj
from ncbinom.errors import InvalidSpecError
from ncbinom.freepoly import FreePoly
from ncbinom.qsigma import ore_binomial
from ncbinom.rings import QQ
from ncbinom.rings import Ring
from ncbinom.specs import build_delta
from ncbinom.specs import build_sigma
from ncbinom.specs import load_delta_spec
from ncbinom.specs import load_sigma_spec
from ncbinom.util import check_degree


def ore(
        n: int,
        sigma_spec: str,
        delta_spec: str,
        *,
        ring: Ring,
        fmt: str,
        max_degree: int,
) -> int:
    """Print the coefficient of x^i in (x+y)^n for i = 0..n, where y is the
    letter 1 of the operator files' alphabet."""
    check_degree(n, max_degree)
    sigma_cfg = load_sigma_spec(sigma_spec)
    delta_cfg = load_delta_spec(delta_spec)
    if sigma_cfg['alphabet'] != delta_cfg['alphabet']:
        raise InvalidSpecError(
            f'sigma acts on {sigma_cfg["alphabet"]} letters but delta on '
            f'{delta_cfg["alphabet"]}',
        )
    sigma = build_sigma(sigma_cfg, QQ)
    delta = build_delta(delta_cfg, sigma, QQ)
    y = FreePoly.letter(1, sigma_cfg['alphabet'])

    for i, coeff in enumerate(ore_binomial(n, sigma, delta, y)):
        doc = doc_from_poly(coeff, ring)
        if fmt == 'json':
            obj = to_json_obj(doc)
            obj['x_power'] = i
            output.write_line(json.dumps(obj, sort_keys=True))
        else:
            output.write_line(f'x^{i}: {render(doc, fmt)}')
    return 0
