"""Exact polynomial differential forms on a single simplex.

Rationals cross the boundary as "p/q" strings; tables come back as dicts.
"""

import json

from ._core import (
    ConfigError,
    GeneratorParseError,
    NotTraceFree,
    PolyForm,
    bubble_decompose,
    contains,
    d,
    dot_extend,
    integrate,
    is_trace_free,
    unicode_text,
    ring_star,
    space_basis,
    statements,
    trace,
    wedge,
)
from . import _core

__all__ = [
    "ConfigError", "GeneratorParseError", "NotTraceFree", "PolyForm", "basis_table", "bubble_decompose",
    "contains", "counterexample", "d", "dot_extend", "gram_table", "integrate", "is_trace_free", "unicode_text",
    "ring_star", "space_basis", "statements", "trace", "two_cell", "verify", "wedge",
]


def basis_table(n, k, r, family="full"):
    return json.loads(_core._basis_table(n, k, r, family))


def gram_table(n, k, r, family="full"):
    return json.loads(_core._gram_table(n, k, r, family))


def counterexample():
    return json.loads(_core._counterexample())


def two_cell(n, k, r, family="full"):
    return json.loads(_core._two_cell(n, k, r, family))


def verify(**config):
    """Run the verification suite; keyword arguments are config keys."""
    return [json.loads(line) for line in _core._verify(json.dumps(config))]
