from __future__ import annotations

import pytest

from ncbinom.errors import InvalidSpecError
from ncbinom.freepoly import FreePoly
from ncbinom.qsigma import AdSigma
from ncbinom.qsigma import Endomorphism
from ncbinom.qsigma import GradingSigma
from ncbinom.qsigma import Identity
from ncbinom.qsigma import SigmaDerivation
from ncbinom.rings import QPoly
from ncbinom.specs import build_delta
from ncbinom.specs import build_sigma
from ncbinom.specs import load_delta_spec
from ncbinom.specs import load_sigma_spec
from testing.util import words

X = FreePoly.letter(1, 2)
Y = FreePoly.letter(2, 2)


def _write(tmpdir, name, contents):
    path = tmpdir.join(name)
    path.write(contents)
    return str(path)


def test_identity_sigma(tmpdir):
    path = _write(tmpdir, 's.yaml', 'alphabet: 2\nkind: identity\n')
    spec = load_sigma_spec(path)
    assert spec['images'] == {}
    assert build_sigma(spec) == Identity()


def test_grading_sigma(tmpdir):
    path = _write(tmpdir, 's.yaml', 'alphabet: 2\nkind: grading\n')
    spec = load_sigma_spec(path)
    sigma = build_sigma(spec)
    assert sigma == GradingSigma(QPoly.q_power(1))
    assert sigma(Y) == words('q*E(2)')


def test_grading_sigma_with_a_number(tmpdir):
    path = _write(tmpdir, 's.yaml', 'alphabet: 2\nkind: grading\nq: "3"\n')
    assert build_sigma(load_sigma_spec(path))(Y) == Y.scale(3)


def test_endomorphism_sigma(tmpdir):
    path = _write(
        tmpdir, 's.yaml',
        'alphabet: 2\n'
        'kind: endomorphism\n'
        'images:\n'
        '  1: 2*E(1)\n'
        '  2: E(1) + E(2)\n',
    )
    sigma = build_sigma(load_sigma_spec(path))
    assert isinstance(sigma, Endomorphism)
    assert sigma.unit is None
    assert sigma(words('E(21)')) == words('2*E(11) + 2*E(21)')


def test_non_unital_endomorphism_keeps_its_unit(tmpdir):
    path = _write(
        tmpdir, 's.yaml', 'alphabet: 2\nkind: endomorphism\nunit: "2"\n',
    )
    sigma = build_sigma(load_sigma_spec(path))
    assert sigma.unit == words('2')


def test_adjoint_delta(tmpdir):
    path = _write(tmpdir, 'd.yaml', 'alphabet: 2\nkind: adjoint\n')
    delta = build_delta(load_delta_spec(path), Identity())
    assert delta == AdSigma(X, Identity())
    assert delta(Y) == words('E(12) - E(21)')


def test_untwisted_adjoint_delta(tmpdir):
    path = _write(
        tmpdir, 'd.yaml', 'alphabet: 2\nkind: adjoint\ntwisted: false\n',
    )
    delta = build_delta(load_delta_spec(path), GradingSigma())
    assert delta.sigma == Identity()


def test_derivation_delta(tmpdir):
    path = _write(
        tmpdir, 'd.yaml',
        'alphabet: 2\nkind: derivation\nimages:\n  1: E(2)\n',
    )
    delta = build_delta(load_delta_spec(path), Identity())
    assert isinstance(delta, SigmaDerivation)
    assert delta(words('E(11)')) == words('E(21) + E(12)')


@pytest.mark.parametrize(
    'contents',
    (
        'kind: identity\n',
        'alphabet: 0\nkind: identity\n',
        'alphabet: 2\nkind: frobenius\n',
        'alphabet: 2\nkind: identity\nextra: 1\n',
        'alphabet: 2\nkind: endomorphism\nimages:\n  x: E(1)\n',
        '[1, 2',
    ),
)
def test_invalid_sigma_specs(tmpdir, contents):
    with pytest.raises(InvalidSpecError):
        load_sigma_spec(_write(tmpdir, 's.yaml', contents))


def test_missing_spec_file(tmpdir):
    with pytest.raises(InvalidSpecError) as excinfo:
        load_sigma_spec(str(tmpdir.join('missing.yaml')))
    assert 'is not a file' in str(excinfo.value)


@pytest.mark.parametrize(
    'image',
    ('E(3)', 'E(1', '2*E(1)^x'),
)
def test_invalid_images(tmpdir, image):
    path = _write(
        tmpdir, 's.yaml',
        f'alphabet: 2\nkind: endomorphism\nimages:\n  1: "{image}"\n',
    )
    spec = load_sigma_spec(path)
    with pytest.raises(InvalidSpecError):
        build_sigma(spec)
