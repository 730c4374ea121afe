"""Exact character tables of normal subgroups, with theorem checks.

Thin wrapper over the compiled core: structured commands return the same
schema-stable JSON the command line emits, parsed into dictionaries.
"""

import json as _json

from ._core import (
    Fixture,
    FixtureSyntaxError,
    ToolkitError,
    VerificationError,
    corpus_fixture,
    corpus_names,
    load_fixture,
    normalize_cyclo,
    parse_fixture,
)
from . import _core as _c

__all__ = [
    "Fixture",
    "FixtureSyntaxError",
    "ToolkitError",
    "VerificationError",
    "corpus_fixture",
    "corpus_names",
    "load_fixture",
    "normalize_cyclo",
    "parse_fixture",
    "table",
    "normals",
    "gtable",
    "series",
    "check",
    "verify",
]


def table(fixture):
    return _json.loads(_c.table_json(fixture))


def normals(fixture):
    return _json.loads(_c.normals_json(fixture))


def gtable(fixture, normal):
    return _json.loads(_c.gtable_json(fixture, normal))


def series(fixture, normal):
    return _json.loads(_c.series_json(fixture, normal))


def check(fixture, which, normal=0, p=0):
    return _json.loads(_c.check_json(fixture, which, normal, p))


def verify(fixture, seed=0):
    return _json.loads(_c.verify_json(fixture, seed))
