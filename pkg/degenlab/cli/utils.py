from __future__ import print_function, unicode_literals

import logging
import sys
from enum import Enum, unique

LAB_LOGGER_NAME = "degenlab"
FMT = "[%(levelname)s][%(asctime)s.%(msecs)03d][%(name)s]: %(message)s"
DATE_FMT = "%H:%M:%S"


@unique
class PrettyPrintLevel(Enum):
    INFO = "92"
    WARNING = "93"
    ERROR = "91"
    SUCCESS = "32"


def pretty_print(*paragraphs, **kwargs):
    """Prints paragraphs separated by blank lines, under an optional
    coloured title

    Keyword Args:
        title (str): headline, coloured according to *level*
        level (:class:`PrettyPrintLevel`): defaults to INFO
        exits (int): when not None, exit with this status after printing
    """
    title = kwargs.get("title")
    level = kwargs.get("level", PrettyPrintLevel.INFO)
    exits = kwargs.get("exits")
    lines = []
    if title:
        lines.append("\033[%sm%s\033[0m" % (level.value, title))
    lines.append("\n\n".join(paragraphs))
    print("\n%s\n" % "\n".join(lines))
    if exits is not None:
        sys.exit(exits)


def set_lab_logger(level=logging.INFO):
    """Sends the package logs to stdout; calling it again only changes the
    level"""
    logger = logging.getLogger(LAB_LOGGER_NAME)
    logger.setLevel(level)
    handler = next((h for h in logger.handlers
                    if getattr(h, "_lab_handler", False)), None)
    if handler is None:
        handler = logging.StreamHandler(sys.stdout)
        handler.setFormatter(logging.Formatter(FMT, DATE_FMT))
        handler._lab_handler = True  # pylint: disable=protected-access
        logger.addHandler(handler)
    handler.setLevel(level)


def set_verbosity(verbosity):
    if verbosity >= 2:
        set_lab_logger(logging.DEBUG)
    elif verbosity == 1:
        set_lab_logger(logging.INFO)
