from __future__ import annotations

import pytest

from ncbinom.commands.bell import bell
from ncbinom.errors import FatalError
from ncbinom.rings import Q


def _bell(n, k=None, *, dual=False, project_classical=False):
    return bell(
        n, k,
        dual=dual,
        project_classical=project_classical,
        ring=Q,
        fmt='text',
        max_degree=12,
    )


def test_bell_partial(cap_out):
    assert _bell(4, 2) == 0
    assert cap_out.get() == '4*E(2)*E(112) + 3*E(12)^2 + E(1122)\n'


def test_bell_total(cap_out):
    assert _bell(2) == 0
    assert cap_out.get() == 'E(2)^2 + E(12)\n'


def test_bell_dual(cap_out):
    assert _bell(2, 1, dual=True) == 0
    assert cap_out.get() == 'E(12)\n'


def test_bell_project_classical(cap_out):
    assert _bell(3, project_classical=True) == 0
    assert cap_out.get() == 'E(2)^3 + 3*E(2)*E(12) + E(112)\n'


def test_bell_k_out_of_range():
    with pytest.raises(FatalError) as excinfo:
        _bell(3, 4)
    assert str(excinfo.value) == 'need 0 <= k <= 3, got 4'


@pytest.mark.parametrize(
    'kwargs', ({'k': 1}, {'dual': True}),
)
def test_bell_project_classical_takes_no_options(kwargs):
    with pytest.raises(FatalError):
        _bell(3, project_classical=True, **kwargs)
