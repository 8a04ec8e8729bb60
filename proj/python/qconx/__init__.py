"""Construction X quantum codes over GF(p^2).

Thin wrappers over the C++ core; JSON results come back as Python objects.
"""

import json

from . import _core

__all__ = [
    "field_info",
    "construct",
    "construct_defining_set",
    "scan",
    "compare_table",
    "min_weight",
    "dual_exponents",
    "distance_3ps",
    "verify_construction",
    "verify_scan",
    "run_cli",
]

dual_exponents = _core.dual_exponents
distance_3ps = _core.distance_3ps
run_cli = _core.run_cli


def field_info(p):
    return json.loads(_core.field_info(p))


def construct(p, i, j, k, s=1, exact=False, budget=10_000_000, seed=0):
    return json.loads(_core.construct(p, s, i, j, k, exact, budget, seed))


def construct_defining_set(p, n, elements, exact=False, budget=10_000_000):
    return json.loads(_core.construct_defining_set(p, n, list(elements), exact, budget))


def scan(p, s=1, bound_only=False, max_e=None, budget=10_000_000, seed=0):
    return json.loads(_core.scan(p, s, bound_only, max_e, budget, seed))


def compare_table(records):
    return json.loads(_core.compare_table(json.dumps(records)))


def min_weight(p, generator, budget=10_000_000, seed=0):
    """generator: rows of [a, b] pairs, each entry a + b*u."""
    return json.loads(_core.min_weight(p, json.dumps(generator), budget, seed))


def verify_construction(doc, budget=10_000_000):
    """Empty string when every check passes, else the first failure."""
    text = doc if isinstance(doc, str) else json.dumps(doc)
    return _core.verify_construction(text, budget)


def verify_scan(records, budget=10_000_000):
    if isinstance(records, str):
        text = records
    else:
        text = "\n".join(json.dumps(r) for r in records)
    return _core.verify_scan(text, budget)
