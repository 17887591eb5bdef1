"""Reading and writing ideals as JSON."""

from __future__ import annotations

import json
from pathlib import Path

from .groebner import Ideal
from .hessenberg import Permutation, chart_ring
from .poly import Grading, PolynomialRing, _variable_name, field_from_name, format_variable


def ring_descriptor(ring: PolynomialRing, n: int | None = None,
                    w: Permutation | None = None) -> dict:
    """Chart rings are described by ``n`` and ``w``; others list their variables."""
    desc = {"field": repr(ring.field)}
    if n is not None:
        w = w or Permutation.w0(n)
        desc["n"] = n
        desc["w"] = "w0" if w.is_longest else list(w.values)
    else:
        desc["variables"] = [format_variable(v) for v in ring.variables]
    if ring.grading is not None:
        desc["grading"] = list(ring.grading.weights)
    return desc


def ring_from_descriptor(desc: dict) -> PolynomialRing:
    field = field_from_name(desc.get("field", "QQ"))
    if "n" in desc:
        n = int(desc["n"])
        w = desc.get("w", "w0")
        w = Permutation.w0(n) if w == "w0" else Permutation(tuple(w))
        ring = chart_ring(n, w, field)
    else:
        names = [_variable_name(v) for v in desc["variables"]]
        grading = Grading(tuple(desc["grading"])) if "grading" in desc else None
        ring = PolynomialRing(names, field, grading)
    if "grading" in desc and ring.grading is not None \
            and tuple(desc["grading"]) != ring.grading.weights:
        raise ValueError("grading in file does not match the chart grading")
    return ring


def ideal_to_dict(I: Ideal, n: int | None = None, w: Permutation | None = None) -> dict:
    return {"ring": ring_descriptor(I.ring, n, w), "generators": [str(g) for g in I.gens]}


def ideal_from_dict(data: dict) -> Ideal:
    ring = ring_from_descriptor(data["ring"])
    return Ideal(ring, [ring.parse(s) for s in data["generators"]])


def write_ideal(I: Ideal, path, n: int | None = None, w: Permutation | None = None):
    Path(path).write_text(json.dumps(ideal_to_dict(I, n, w), indent=2) + "\n", encoding="utf-8")


def read_ideal(path) -> Ideal:
    return ideal_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
