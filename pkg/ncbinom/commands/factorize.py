from __future__ import annotations

import json

from ncbinom import output
from ncbinom.words import cfl_factorize
from ncbinom.words import format_word
from ncbinom.words import standard_factorization
from ncbinom.words import Word


def factorize(w: Word, *, standard: bool, fmt: str) -> int:
    if standard:
        factors = list(standard_factorization(w))
    else:
        factors = cfl_factorize(w)
    rendered = [format_word(u, max(w)) for u in factors]
    if fmt == 'json':
        output.write_line(json.dumps(rendered))
    elif fmt == 'latex':
        output.write_line(''.join(f'({u})' for u in rendered))
    else:
        output.write_line(' '.join(rendered))
    return 0
