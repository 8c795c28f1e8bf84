from __future__ import annotations

import json

from ncbinom import output
from ncbinom.util import check_degree
from ncbinom.words import Alphabet
from ncbinom.words import format_word
from ncbinom.words import lyndon_enumerate


def lyndon(alphabet: int, max_len: int, *, fmt: str, max_degree: int) -> int:
    check_degree(max_len, max_degree)
    words = [
        format_word(w, alphabet)
        for w in lyndon_enumerate(Alphabet.create(alphabet), max_len)
    ]
    if fmt == 'json':
        output.write_line(json.dumps(words))
    else:
        output.write_line(' '.join(words))
    return 0
