"""Logging for the ``ordlines`` package.

Reports go to stdout, so every log record goes to stderr or to the debug file.
"""
import logging
import sys

LOGGER_NAME = "ordlines"

DEBUG_FORMAT = "%(asctime)s %(levelname)s %(filename)s[line:%(lineno)d] %(name)s: %(message)s"
PLAIN_FORMAT = "%(levelname)s: %(message)s"

STREAM_LEVELS = {
    "DEBUG": (logging.DEBUG, DEBUG_FORMAT),
    "INFO": (logging.INFO, PLAIN_FORMAT),
    "WARNING": (logging.WARNING, PLAIN_FORMAT),
}


def _attach(logger, handler, level, fmt):
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(fmt))
    logger.addHandler(handler)


def configure_logger(stream_level="DEBUG", debug_file=None):
    """Route ``ordlines`` records to stderr at ``stream_level``.

    With ``debug_file`` every record, DEBUG included, is also appended there.
    Handlers from an earlier call are dropped first.
    """
    if stream_level not in STREAM_LEVELS:
        raise ValueError(f"unknown stream level {stream_level!r}, expected one of {sorted(STREAM_LEVELS)}")
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(logging.DEBUG)
    del logger.handlers[:]

    if debug_file is not None:
        _attach(logger, logging.FileHandler(debug_file), logging.DEBUG, DEBUG_FORMAT)
    level, fmt = STREAM_LEVELS[stream_level]
    _attach(logger, logging.StreamHandler(stream=sys.stderr), level, fmt)
    return logger
