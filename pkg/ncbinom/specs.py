from __future__ import annotations

import functools
from typing import Any

from ncbinom.config import check_bool
from ncbinom.config import check_one_of
from ncbinom.config import check_string
from ncbinom.config import check_type
from ncbinom.config import load_from_filename
from ncbinom.config import Map
from ncbinom.config import NoAdditionalKeys
from ncbinom.config import Optional
from ncbinom.config import Required
from ncbinom.config import ValidationError
from ncbinom.emit import parse_text
from ncbinom.emit import WORD
from ncbinom.errors import InvalidSpecError
from ncbinom.freepoly import FreePoly
from ncbinom.qsigma import AdSigma
from ncbinom.qsigma import Endomorphism
from ncbinom.qsigma import GradingSigma
from ncbinom.qsigma import Identity
from ncbinom.qsigma import Operator
from ncbinom.qsigma import SigmaDerivation
from ncbinom.rings import QQ
from ncbinom.rings import Ring
from ncbinom.util import yaml_load

SIGMA_KINDS = ('endomorphism', 'grading', 'identity')
DELTA_KINDS = ('adjoint', 'derivation')


def check_positive_int(v: Any) -> None:
    check_type(int)(v)
    if v < 1:
        raise ValidationError(f'Expected a positive integer but got {v}')


def check_images(v: Any) -> None:
    check_type(dict)(v)
    for key, image in v.items():
        if not str(key).isdigit() or int(key) < 1:
            raise ValidationError(f'Expected a letter but got {key!r}')
        check_string(image)


OPERATOR_KEYS = (
    'alphabet', 'kind', 'images', 'unit', 'q', 'element', 'twisted',
)

SIGMA_SPEC_SCHEMA = Map(
    'Sigma', 'kind',
    Required('alphabet', check_positive_int),
    Required('kind', check_one_of(SIGMA_KINDS)),
    Optional('images', check_images, {}),
    Optional('unit', check_string, '1'),
    Optional('q', check_string, 'q'),
    NoAdditionalKeys(OPERATOR_KEYS),
)
DELTA_SPEC_SCHEMA = Map(
    'Delta', 'kind',
    Required('alphabet', check_positive_int),
    Required('kind', check_one_of(DELTA_KINDS)),
    Optional('images', check_images, {}),
    Optional('element', check_string, 'E(1)'),
    Optional('twisted', check_bool, True),
    NoAdditionalKeys(OPERATOR_KEYS),
)


load_sigma_spec = functools.partial(
    load_from_filename,
    schema=SIGMA_SPEC_SCHEMA,
    load_strategy=yaml_load,
    exc_tp=InvalidSpecError,
)
load_delta_spec = functools.partial(
    load_from_filename,
    schema=DELTA_SPEC_SCHEMA,
    load_strategy=yaml_load,
    exc_tp=InvalidSpecError,
)


def _parse(text: str, alphabet: int, ring: Ring) -> FreePoly:
    try:
        ret = parse_text(text, WORD, alphabet, ring)
    except ValueError as e:
        raise InvalidSpecError(f'cannot parse {text!r}: {e}')
    assert isinstance(ret, FreePoly)
    for w, _ in ret:
        for letter in w:
            if not 1 <= letter <= alphabet:
                raise InvalidSpecError(
                    f'{text!r} uses letter {letter} outside 1..{alphabet}',
                )
    return ret


def _images(
        spec: dict[str, Any],
        ring: Ring,
) -> dict[int, FreePoly]:
    return {
        int(letter): _parse(text, spec['alphabet'], ring)
        for letter, text in spec['images'].items()
    }


def build_sigma(spec: dict[str, Any], ring: Ring = QQ) -> Operator:
    if spec['kind'] == 'identity':
        return Identity()
    elif spec['kind'] == 'grading':
        return GradingSigma(ring.parse_coefficient(spec['q']))
    else:
        unit = _parse(spec['unit'], spec['alphabet'], ring)
        return Endomorphism(
            _images(spec, ring),
            None if unit == FreePoly.one(spec['alphabet']) else unit,
        )


def build_delta(
        spec: dict[str, Any],
        sigma: Operator,
        ring: Ring = QQ,
) -> Operator:
    if spec['kind'] == 'derivation':
        return SigmaDerivation(_images(spec, ring), sigma)
    else:
        element = _parse(spec['element'], spec['alphabet'], ring)
        return AdSigma(element, sigma if spec['twisted'] else Identity())
