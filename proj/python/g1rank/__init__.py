"""Exact rank computations for G_1 of integral group rings.

The heavy lifting lives in the C++ extension `_g1rank`; this package adds
small conveniences that return parsed dictionaries instead of JSON text.
"""

import json as _json

from ._g1rank import (
    G1RankError,
    analyze_json,
    analyze_table,
    chartab,
    run_cli,
    scan_json,
    scan_table,
    split,
)

__all__ = [
    "G1RankError",
    "analyze",
    "analyze_json",
    "analyze_table",
    "chartab",
    "run_cli",
    "scan",
    "scan_json",
    "scan_table",
    "split",
]


def analyze(spec, cap=20000):
    """Rank report for a group spec like "sl2_3" or "cyclic:2 x cyclic:4"."""
    return _json.loads(analyze_json(spec, cap))


def scan(catalog_text, max_order=200, cap=20000):
    """Scan a catalog (text in the `name := cycles` grammar)."""
    return _json.loads(scan_json(catalog_text, max_order, cap))
