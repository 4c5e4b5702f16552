"""JSON wire formats for codes and realizations.

Rationals are always strings ("p/q", or "p" for integers).  Labels are
bare integers for plain labels and {"kind": ..., "index": ...} objects
otherwise; body names use the compact string form ("3", "alpha_1").
"""

from __future__ import annotations

import json
from typing import Dict

from .atlas import Body, Realization
from .codes import (Code, Label, code_from_json, code_to_json)
from .geometry import (ConstraintSystem, LinearConstraint, format_rat,
                       parse_rat)

__all__ = [
    "code_to_json", "code_from_json", "realization_to_json",
    "realization_from_json", "dump_realization", "load_realization",
    "constraint_to_json", "constraint_from_json",
]


def constraint_to_json(c: LinearConstraint) -> dict:
    return {
        "a": [format_rat(x) for x in c.coeffs],
        "rel": "<" if c.strict else "<=",
        "b": format_rat(c.bound),
    }


def constraint_from_json(obj: dict) -> LinearConstraint:
    coeffs = tuple(parse_rat(x) for x in obj["a"])
    if obj["rel"] not in ("<", "<="):
        raise ValueError(f"bad relation {obj['rel']!r}")
    return LinearConstraint(coeffs, parse_rat(obj["b"]), obj["rel"] == "<")


def realization_to_json(r: Realization) -> dict:
    return {
        "dim": r.dim,
        "topology": r.topology,
        "bodies": {
            str(label): {"constraints": [constraint_to_json(c) for c in body.system.constraints]}
            for label, body in r.bodies
        },
    }


def realization_from_json(obj: dict) -> Realization:
    dim = int(obj["dim"])
    bodies: Dict[Label, Body] = {}
    for name, spec in obj["bodies"].items():
        cons = tuple(constraint_from_json(c) for c in spec["constraints"])
        bodies[Label.parse(name)] = Body(ConstraintSystem(dim, cons))
    return Realization(dim, obj["topology"], bodies)


def dump_realization(r: Realization) -> str:
    return json.dumps(realization_to_json(r), sort_keys=True, indent=1)


def load_realization(text: str) -> Realization:
    return realization_from_json(json.loads(text))
