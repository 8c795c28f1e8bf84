from __future__ import annotations

import logging

import ncbinom.constants as C
from ncbinom import color
from ncbinom import output
from ncbinom import xargs
from ncbinom.suites import run_suite
from ncbinom.suites import SuiteOptions
from ncbinom.suites import SuiteResult

logger = logging.getLogger('ncbinom')

COLS = 79


def _full_msg(
        *,
        start: str,
        end_msg: str,
        end_color: str,
        use_color: bool,
        postfix: str = '',
) -> str:
    dots = '.' * (COLS - len(start) - len(postfix) - len(end_msg) - 1)
    end = color.format_color(end_msg, end_color, use_color)
    return f'{start}{dots}{postfix}{end}'


def _report(result: SuiteResult, use_color: bool) -> None:
    if result.ok:
        end_msg, end_color = 'Passed', color.GREEN
    else:
        end_msg, end_color = 'Failed', color.RED
    checks = result.passed + len(result.failures)
    output.write_line(
        _full_msg(
            start=result.name,
            postfix=f'({result.passed}/{checks}) ',
            end_msg=end_msg,
            end_color=end_color,
            use_color=use_color,
        ),
    )
    for failure in result.failures:
        output.write_line(f'- {failure}')


def verify(
        suite: str,
        opts: SuiteOptions,
        *,
        jobs: int,
        use_color: bool,
) -> int:
    names = C.SUITES if suite == 'all' else (suite,)
    logger.info(
        f'Running {len(names)} suite(s) up to degree {opts.max_degree}',
    )

    def _run(name: str) -> SuiteResult:
        return run_suite(name, opts)

    with xargs.thread_mapper(jobs) as mapper:
        results = sorted(mapper(_run, names))

    for result in results:
        _report(result, use_color)
    return 0 if all(result.ok for result in results) else 1
