from __future__ import unicode_literals

from builtins import str
from functools import wraps
from timeit import default_timer

from degenlab.common.utils import json_debug_string


class DifferedLoggingMessage(object):
    """Defers the formatting of a (possibly expensive) log message until a
    handler actually emits it"""

    def __init__(self, fn, *args, **kwargs):
        self.fn = fn
        self.args = args
        self.kwargs = kwargs

    def __str__(self):
        return str(self.fn(*self.args, **self.kwargs))


def log_elapsed_time(logger, level, output_msg=None):
    """Decorator logging the wall time spent in the decorated function

    The message may reference ``{elapsed_time}`` (seconds, as a float) and
    ``{name}`` (the function name).
    """
    if output_msg is None:
        output_msg = "{name} done in {elapsed_time:.3f}s"

    def get_wrapper(fn):
        @wraps(fn)
        def wrapped(*args, **kwargs):
            start = default_timer()
            res = fn(*args, **kwargs)
            if logger.isEnabledFor(level):
                logger.log(level, output_msg.format(
                    elapsed_time=default_timer() - start, name=fn.__name__))
            return res

        return wrapped

    return get_wrapper


def log_result(logger, level, output_msg=None):
    """Decorator logging the value returned by the decorated function"""
    if output_msg is None:
        output_msg = "Result ->:\n{result}"

    def get_wrapper(fn):
        @wraps(fn)
        def wrapped(*args, **kwargs):
            res = fn(*args, **kwargs)
            if logger.isEnabledFor(level):
                try:
                    res_debug_string = json_debug_string(res)
                except TypeError:
                    res_debug_string = str(res)
                logger.log(level, output_msg.format(result=res_debug_string))
            return res

        return wrapped

    return get_wrapper


def format_table(header, rows, precision=6):
    """Renders rows as an aligned plain-text table, for debug logs

    Example:

        >>> print(format_table(["n", "value"], [[1, 0.5], [10, 0.125]]))
        n   value
        1   0.5
        10  0.125
    """
    cells = [[str(h) for h in header]]
    for row in rows:
        cells.append([_format_cell(c, precision) for c in row])
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
             for r in cells]
    return "\n".join(lines)


def _format_cell(value, precision):
    if isinstance(value, float):
        return "%.*g" % (precision, value)
    return str(value)
