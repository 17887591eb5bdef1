import json

import pytest

from hesspatch.groebner import Ideal, ideal_equal
from hesspatch.hessenberg import HessenbergFunction, Permutation, hess_generators
from hesspatch.io import (ideal_from_dict, ideal_to_dict, read_ideal, ring_descriptor,
                          ring_from_descriptor, write_ideal)
from hesspatch.poly import GF, QQ, Grading, PolynomialRing

from oracles import H1


def test_chart_ideal_round_trip(tmp_path):
    I = hess_generators(5, None, HessenbergFunction(H1)).ideal()
    path = tmp_path / "h1.json"
    write_ideal(I, path, n=5)
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["ring"]["n"] == 5 and data["ring"]["w"] == "w0"
    J = read_ideal(path)
    assert J.ring == I.ring
    assert J.gens == I.gens


def test_general_chart_descriptor():
    w = Permutation((2, 1, 3))
    I = hess_generators(3, w, HessenbergFunction((2, 3, 3))).ideal()
    d = ideal_to_dict(I, 3, w)
    assert d["ring"]["w"] == [2, 1, 3]
    assert ideal_equal(ideal_from_dict(d), I)


def test_plain_ring_round_trip():
    R = PolynomialRing(["a", "b"], GF(5), Grading((2, 1)))
    I = Ideal(R, [R("a - b^2"), R("3*a*b")])
    d = ideal_to_dict(I)
    assert d["ring"] == {"field": "GF(5)", "variables": ["a", "b"], "grading": [2, 1]}
    J = ideal_from_dict(json.loads(json.dumps(d)))
    assert J.gens == I.gens and J.ring.grading == R.grading


def test_grading_mismatch_is_rejected():
    desc = {"field": "QQ", "n": 3, "w": "w0", "grading": [1, 1, 1]}
    with pytest.raises(ValueError):
        ring_from_descriptor(desc)


def test_descriptor_defaults():
    R = ring_from_descriptor({"n": 3})
    assert R.field is QQ and R.nvars == 3
    assert ring_descriptor(R, 3)["w"] == "w0"
