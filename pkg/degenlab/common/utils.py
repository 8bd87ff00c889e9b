from __future__ import unicode_literals

import json
import numbers
from builtins import bytes as newbytes, str as newstr
from math import isinf, isnan

import numpy as np
from future.utils import iteritems, text_type

from degenlab.constants import IMAG, REAL


def check_random_state(seed):
    """Turn seed into a :class:`numpy.random.RandomState` instance

    If seed is None, return the RandomState singleton used by np.random.
    If seed is an int, return a new RandomState instance seeded with seed.
    If seed is already a RandomState instance, return it.
    Otherwise raise ValueError.
    """
    # pylint: disable=W0212
    if seed is None or seed is np.random:
        return np.random.mtrand._rand
    if isinstance(seed, (numbers.Integral, np.integer)):
        return np.random.RandomState(seed)
    if isinstance(seed, np.random.RandomState):
        return seed
    raise ValueError('%r cannot be used to seed a numpy.random.RandomState'
                     ' instance' % seed)


def to_jsonable(obj):
    """Recursively converts numpy and complex values into plain JSON types

    Complex numbers become ``{"re": ..., "im": ...}`` and non-finite floats
    become the strings ``"inf"``, ``"-inf"`` or ``"nan"``.

    Example:

        >>> to_jsonable({"z": 1 + 2j, "n": np.int64(3), "x": float("inf")})
        {'z': {'re': 1.0, 'im': 2.0}, 'n': 3, 'x': 'inf'}
    """
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict())
    if isinstance(obj, dict):
        return {k: to_jsonable(v) for k, v in iteritems(obj)}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (numbers.Integral, np.integer)):
        return int(obj)
    if isinstance(obj, (numbers.Real, np.floating)):
        return _float_to_jsonable(float(obj))
    if isinstance(obj, (numbers.Complex, np.complexfloating)):
        return {REAL: _float_to_jsonable(float(obj.real)),
                IMAG: _float_to_jsonable(float(obj.imag))}
    return obj


def _float_to_jsonable(value):
    if isnan(value):
        return "nan"
    if isinf(value):
        return "inf" if value > 0 else "-inf"
    return value


def complex_from_jsonable(obj):
    if isinstance(obj, dict):
        return complex(obj[REAL], obj[IMAG])
    return complex(obj)


def json_debug_string(dict_data):
    return json.dumps(to_jsonable(dict_data), ensure_ascii=False, indent=2,
                      sort_keys=True)


def json_string(json_object, indent=2, sort_keys=True):
    json_dump = json.dumps(to_jsonable(json_object), indent=indent,
                           sort_keys=sort_keys, separators=(',', ': '))
    return unicode_string(json_dump)


def unicode_string(string):
    if isinstance(string, text_type):
        return string
    if isinstance(string, bytes):
        return string.decode("utf8")
    if isinstance(string, newstr):
        return text_type(string)
    if isinstance(string, newbytes):
        string = bytes(string).decode("utf8")

    raise TypeError("Cannot convert %s into unicode string" % type(string))


def as_scalar_or_array(values, like):
    """Returns a python float/complex when *like* is a scalar, the array
    otherwise"""
    if np.ndim(like) == 0:
        return values.item()
    return values
