"""Python access to the crsym core."""

import json

from . import _crsym
from ._crsym import ParseError, builtin_names, check_cralgebra, check_extension, verify_builtin

__all__ = [
    "ParseError",
    "builtin",
    "builtin_names",
    "check_cralgebra",
    "check_extension",
    "find_symmetries",
    "verify_builtin",
]


def builtin(name):
    """Data files of a builtin as parsed JSON objects."""
    return json.loads(_crsym.builtin_json(name))


def find_symmetries(p, q, u, v, mode, i_sign=1, d=2):
    """Solution set over (a_1..a_n, b_1..b_n, z).

    u and v are lists of scalars, each a 4-list of rational strings
    [re, im, sqrt(d) part, i sqrt(d) part].
    """
    out = _crsym.find_symmetries_json(p, q, json.dumps(u), json.dumps(v), mode, i_sign, d)
    return json.loads(out)
