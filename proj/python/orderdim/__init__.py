"""Finite relations: order classes, extensions, realizers, dimensions, geometry.

Relations are passed as dicts ``{"elements": [...], "pairs": [[a, b], ...]}``
or as document text (JSON or edge list). Results are plain dicts.
"""

import json

from . import _orderdim
from ._orderdim import OrderdimError, audit_theorems, run_cli

__all__ = [
    "OrderdimError",
    "audit",
    "audit_theorems",
    "canonical",
    "classify",
    "decompose",
    "dimension",
    "extend",
    "realize",
    "represent",
    "run_cli",
]


def _text(relation):
    if isinstance(relation, str):
        return relation
    doc = {"elements": list(relation["elements"]), "pairs": [list(p) for p in relation["pairs"]]}
    if relation.get("name") is not None:
        doc["name"] = relation["name"]
    return json.dumps(doc)


def canonical(relation):
    return json.loads(_orderdim.canonical(_text(relation)))


def classify(relation):
    return json.loads(_orderdim.classify(_text(relation)))


def extend(relation, cls):
    """cls: linear, linear-reflexive, interval, strong-interval or semiorder."""
    return json.loads(_orderdim.extend(_text(relation), cls))


def decompose(relation, partner="interval", exhaustive=False):
    return json.loads(_orderdim.decompose(_text(relation), partner, exhaustive))


def realize(relation, cls):
    return json.loads(_orderdim.realize(_text(relation), cls))


def dimension(relation, quantity="dim"):
    return json.loads(_orderdim.dimension(_text(relation), quantity))


def represent(relation, kind, format="json"):
    out = _orderdim.represent(_text(relation), kind, format)
    return json.loads(out) if format == "json" else out


def audit(theorem, n=6, count=100, seed=1):
    return json.loads(_orderdim.audit(theorem, n, count, seed))
