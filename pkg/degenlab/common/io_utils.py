import csv
import errno
import io
import os
import shutil
from contextlib import contextmanager
from pathlib import Path
from tempfile import mkdtemp

import numpy as np

from degenlab.common.utils import json_string


def mkdir_p(path):
    """Reproduces the 'mkdir -p shell' command

    See
    http://stackoverflow.com/questions/600268/mkdir-p-functionality-in-python
    """
    try:
        os.makedirs(str(path))
    except OSError as exc:
        if exc.errno == errno.EEXIST and Path(path).is_dir():
            pass
        else:
            raise


@contextmanager
def temp_dir():
    tmp_dir = mkdtemp()
    try:
        yield Path(tmp_dir)
    finally:
        shutil.rmtree(tmp_dir)


def write_csv(path, header, rows):
    """Writes a CSV file with a header row, UTF-8 encoded, LF line endings

    Complex cells are split by the caller; floats are written with ``repr``
    so that the file round-trips exactly.
    """
    path = Path(path)
    mkdir_p(path.parent)
    with io.open(str(path), mode="w", encoding="utf8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_format_csv_cell(c) for c in row])
    return path


def _format_csv_cell(value):
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return value


def write_json(path, obj):
    path = Path(path)
    mkdir_p(path.parent)
    with io.open(str(path), mode="w", encoding="utf8", newline="\n") as f:
        f.write(json_string(obj))
        f.write("\n")
    return path
