from __future__ import annotations

import json
import os.path

from ncbinom.emit import parse_text
from ncbinom.emit import PBW
from ncbinom.emit import WORD
from ncbinom.rings import QPoly
from ncbinom.rings import QQ


def pbw(s, alphabet=2):
    """Parse "6*E(2)^2*E(1)^2 + E(12)" into a PBWPoly."""
    return parse_text(s, PBW, alphabet, QQ)


def words(s, alphabet=2):
    """Parse "2*E(21) - E(12)" into a FreePoly."""
    return parse_text(s, WORD, alphabet, QQ)


def qpoly(s):
    return QPoly.parse(s)


def write_spec(directory, name, obj):
    path = os.path.join(directory, name)
    with open(path, 'w') as f:
        json.dump(obj, f)
    return path
