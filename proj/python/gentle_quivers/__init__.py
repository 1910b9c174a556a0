"""Derived-equivalence invariants of gentle bound quivers."""

import json as _json

from . import _gentle
from ._gentle import (
    BoundQuiver,
    ParseError,
    admissible_vertices,
    cartan_matrix,
    euler_characteristic,
    fixture,
    fixture_names,
    hh_dims,
    invariant_pair,
    is_A_branched,
    is_connected,
    is_finite_dimensional,
    is_gentle,
    is_m_branched,
    isomorphic,
    normal_form,
    parse_quiver,
    read_quiver_file,
)

__all__ = [
    "BoundQuiver", "ParseError", "admissible_vertices", "cartan", "cartan_matrix",
    "classify", "equivalent", "euler_characteristic", "fixture", "fixture_names",
    "hh_dims", "invariant_pair", "is_A_branched", "is_connected",
    "is_finite_dimensional", "is_gentle", "is_m_branched", "isomorphic", "mutate",
    "normal_form", "parse_quiver", "parse_quiver_json", "phi", "read_quiver_file", "reduce", "replay",
    "validate",
]


def validate(quiver):
    return _json.loads(_gentle.validate_json(quiver))


def classify(quiver, m=None):
    return _json.loads(_gentle.classify_json(quiver, m))


def phi(quiver, convention="paper"):
    """Thread invariant as {(a, b): multiplicity}."""
    data = _json.loads(_gentle.phi_json(quiver, convention))
    return {tuple(t["pair"]): t["multiplicity"] for t in data["terms"]}


def cartan(quiver):
    return _json.loads(_gentle.cartan_json(quiver))


def mutate(quiver, vertex, co=False):
    result, step = _gentle.mutate(quiver, vertex, co)
    return result, _json.loads(step)


def reduce(quiver, m, budget=20000):
    data = _json.loads(_gentle.reduce_json(quiver, m, budget))
    data["quiver"] = parse_quiver_json(data["quiver"])
    return data


def replay(log):
    """Empty string when the log replays exactly, else a description."""
    return _gentle.replay_json(_json.dumps(log))


def equivalent(a, b, m):
    return _json.loads(_gentle.equivalent_json(a, b, m))


def parse_quiver_json(data):
    return BoundQuiver(
        data["vertices"],
        [(a["name"], a["source"], a["target"]) for a in data["arrows"]],
        [tuple(r) for r in data["relations"]],
        data.get("name", ""),
    )
