"""Shared helpers for the test suite: committed fixtures and family builders."""

import json
from pathlib import Path

from opoly.serialize import functional_from_json, parse_rational_list
from opoly.rational import parse_rational

FIXTURE_DIR = Path(__file__).parent / "fixtures"


def fixture_json(name):
    return json.loads((FIXTURE_DIR / name).read_text())


def fixture_functional(name):
    return functional_from_json(fixture_json(name))


def fixture_table(family_key, table_key):
    """One frozen rational table from inverse_tables.json, parsed."""
    return parse_rational_list(fixture_json("inverse_tables.json")[family_key][table_key])


def random_functional():
    """The committed non-classical quasi-definite functional and its (c, m0)."""
    obj = fixture_json("random_order20.json")
    u = functional_from_json(obj)
    c = parse_rational(obj["params"]["c"])
    m0 = parse_rational(obj["params"]["m0"])
    return u, c, m0


def random_source_recurrence():
    """The recurrence that generated the random fixture's moments."""
    obj = fixture_json("random_order20.json")
    return parse_rational_list(obj["source_b"]), parse_rational_list(obj["source_a"])
