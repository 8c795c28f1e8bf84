from __future__ import annotations

import concurrent.futures
import contextlib
import multiprocessing
import os
from typing import Callable
from typing import Generator
from typing import Iterable
from typing import TypeVar

TArg = TypeVar('TArg')
TRet = TypeVar('TRet')


def target_concurrency() -> int:
    if 'NCBINOM_NO_CONCURRENCY' in os.environ:
        return 1
    else:
        try:
            return multiprocessing.cpu_count()
        except NotImplementedError:
            return 1


@contextlib.contextmanager
def thread_mapper(maxsize: int) -> Generator[
    Callable[[Callable[[TArg], TRet], Iterable[TArg]], Iterable[TRet]],
    None, None,
]:
    if maxsize <= 1:
        yield map
    else:
        with concurrent.futures.ThreadPoolExecutor(maxsize) as ex:
            yield ex.map
