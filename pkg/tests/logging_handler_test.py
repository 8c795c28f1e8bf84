from __future__ import annotations

import logging

from ncbinom import color
from ncbinom.logging_handler import logger
from ncbinom.logging_handler import LoggingHandler
from ncbinom.logging_handler import logging_handler


def _log_record(message, level):
    return logging.LogRecord('name', level, '', 1, message, {}, None)


def test_logging_handler_color(cap_out):
    handler = LoggingHandler(True)
    handler.emit(_log_record('hi', logging.WARNING))
    ret = cap_out.get()
    assert ret == f'{color.YELLOW}[WARNING]{color.NORMAL} hi\n'


def test_logging_handler_no_color(cap_out):
    handler = LoggingHandler(False)
    handler.emit(_log_record('hi', logging.WARNING))
    assert cap_out.get() == '[WARNING] hi\n'


def test_logging_handler_formats_arguments(cap_out):
    handler = LoggingHandler(False)
    record = logging.LogRecord(
        'name', logging.DEBUG, '', 1, 'appendix n=%d', (5,), None,
    )
    handler.emit(record)
    assert cap_out.get() == '[DEBUG] appendix n=5\n'


def test_logging_handler_context_removes_its_handler():
    before = list(logger.handlers)
    with logging_handler(False, logging.DEBUG):
        assert len(logger.handlers) == len(before) + 1
        assert logger.level == logging.DEBUG
    assert logger.handlers == before
    logger.setLevel(logging.INFO)
