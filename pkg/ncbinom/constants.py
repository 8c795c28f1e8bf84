from __future__ import annotations

import importlib.metadata

VERSION = importlib.metadata.version('ncbinom')

DEFAULT_MAX_DEGREE = 10
# verify checks every degree up to this one
VERIFY_MAX_DEGREE = 6
# any single polynomial larger than this aborts the computation
MAX_TERMS = 2_000_000

RINGS = ('Q', 'GF:p', 'Q[q]')
FORMATS = ('text', 'latex', 'json')

SUITES = (
    'appendix', 'bell', 'blumen', 'char-p', 'cyclotomic', 'faa', 'lyndon',
    'pbw', 'q-plane', 'qbell', 'qcomm', 'theorem-a', 'theorem-b',
    'theorem-c', 'weyl',
)
