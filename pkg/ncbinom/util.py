from __future__ import annotations

import contextlib
import functools
import importlib.resources
import os.path
from typing import Any

import yaml

from ncbinom.errors import DegreeCapExceeded

Loader = getattr(yaml, 'CSafeLoader', yaml.SafeLoader)
yaml_load = functools.partial(yaml.load, Loader=Loader)


def force_bytes(exc: Any) -> bytes:
    with contextlib.suppress(TypeError):
        return bytes(exc)
    with contextlib.suppress(Exception):
        return str(exc).encode()
    return f'<unprintable {type(exc).__name__} object>'.encode()


def _get_default_directory() -> str:
    ret = os.environ.get('NCBINOM_HOME') or os.path.join(
        os.environ.get('XDG_CACHE_HOME') or os.path.expanduser('~/.cache'),
        'ncbinom',
    )
    return os.path.realpath(ret)


def get_default_directory() -> str:
    """Directory holding the crash log.  Tests mock this function and call
    `_get_default_directory` when they need the real answer.
    """
    return _get_default_directory()


def appendix_text(n: int) -> str:
    resources = importlib.resources.files('ncbinom.resources.appendix')
    return resources.joinpath(f'sh_{n}.json').read_text(encoding='utf-8')


def appendix_sizes() -> tuple[int, ...]:
    resources = importlib.resources.files('ncbinom.resources.appendix')
    names = [path.name for path in resources.iterdir()]
    return tuple(sorted(
        int(name[len('sh_'):-len('.json')])
        for name in names
        if name.startswith('sh_') and name.endswith('.json')
    ))


def check_degree(degree: int, max_degree: int) -> int:
    if degree > max_degree:
        raise DegreeCapExceeded(
            f'degree {degree} is above the cap of {max_degree}, '
            f'raise it with --max-degree',
        )
    return degree
