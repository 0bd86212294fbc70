"""Colored log records for the catalanc CLI.

Results are printed on standard output one object per line, so log records always go to
standard error. Level names are colored only when standard error is a terminal.
"""
import logging
import sys

RESET = "\x1b[0m"

COLOR_MAP = {
    "INFO": "\x1b[32;20m",
    "DEBUG": "\x1b[38;20m",
    "WARNING": "\x1b[33;20m",
    "ERROR": "\x1b[31;20m",
    "CRITICAL": "\x1b[31;1m",
}


FORMAT = "%(colored_name)s | %(asctime)s | %(name)s | %(message)s"

_default_logrecord_factory = logging.getLogRecordFactory()


def _logrecord_factory(*args, **kwargs):
    record = _default_logrecord_factory(*args, **kwargs)
    color = COLOR_MAP.get(record.levelname, RESET)
    record.colored_name = f"{color}{record.levelname}{RESET}"
    return record


def _plain_logrecord_factory(*args, **kwargs):
    record = _default_logrecord_factory(*args, **kwargs)
    record.colored_name = record.levelname
    return record


def configure_logging(verbose: bool = False) -> None:
    """Configure catalanc logger for use in the CLI.

    :param verbose: if True, progress of enumerations and verification suites is logged
     at INFO level. Otherwise only warnings (e.g. failed checks) are shown.
    """
    logging.basicConfig(format=FORMAT, stream=sys.stderr)
    colored = sys.stderr.isatty()
    logging.setLogRecordFactory(_logrecord_factory if colored else _plain_logrecord_factory)
    logging.getLogger("catalanc").setLevel("INFO" if verbose else "WARNING")
