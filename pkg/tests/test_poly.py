from fractions import Fraction

import pytest

from hesspatch.hessenberg import chart_ring, f_entry
from hesspatch.poly import (GF, QQ, ZZ, Grading, Inhomogeneous, MonomialOrder,
                            PolynomialRing, PolynomialSyntaxError, RingMismatchError,
                            field_from_name, is_homogeneous, leading_term, parse_poly,
                            ring_arithmetic, weighted_degree)
from hesspatch import poly as poly_mod


@pytest.fixture
def xy():
    return PolynomialRing(["x", "y"], QQ)


@pytest.fixture
def r5():
    return chart_ring(5, field=QQ)


def test_cancellation(xy):
    assert ring_arithmetic(xy("x + 1"), xy("-x"), "add") == xy.one


def test_middle_summand_of_f41(r5):
    got = r5("x[2,3]") * r5("x[3,2] - x[4,1]")
    assert got == r5("x[2,3]*x[3,2] - x[2,3]*x[4,1]")


def test_frobenius_in_char_two():
    R = PolynomialRing(["x", "y"], GF(2))
    assert R("x + y") * R("x + y") == R("x^2 + y^2")


def test_cross_ring_arithmetic_is_an_error(xy):
    other = PolynomialRing(["x", "z"], QQ)
    with pytest.raises(RingMismatchError):
        xy("x") + other("x")
    with pytest.raises(RingMismatchError):
        ring_arithmetic(xy("x"), other("x"), "mul")


def test_zero_coefficients_are_pruned(xy):
    f = xy("x*y + 2") - xy("x*y")
    assert f.terms == {(0, 0): 2}
    assert not (xy("x") - xy("x")).terms


def test_leading_terms(r5):
    f53 = f_entry(5, 5, 3).change_ring(r5)
    assert leading_term(f53) == ((0, 0, 0, 1, 0, 0, 0, 0, 0, 0), -1)
    assert leading_term(r5.constant(7)) == ((0,) * 10, 7)
    f41 = f_entry(5, 4, 1).change_ring(r5)
    lm, lc = leading_term(f41)
    assert r5.monomial(lm) == r5("x[2,2]") and lc == -1


def test_leading_term_of_zero_raises(xy):
    with pytest.raises(ValueError):
        leading_term(xy.zero)


def test_weighted_degrees(r5):
    assert weighted_degree(f_entry(5, 3, 1).change_ring(r5)) == 1
    assert weighted_degree(f_entry(5, 4, 1).change_ring(r5)) == 2
    bad = weighted_degree(r5("x[1,1] + 1"))
    assert isinstance(bad, Inhomogeneous) and repr(bad) == "inhomogeneous"
    assert weighted_degree(r5.zero) is None
    assert not is_homogeneous(r5("x[1,1] + 1"))


def test_grading_positivity():
    assert Grading((1, 2)).positive
    assert not Grading((1, 0)).positive


def test_parse_examples(r5):
    assert r5("-x[1,4] + x[2,3]") == f_entry(5, 5, 3).change_ring(r5)
    assert r5("0").is_zero()
    f = r5("x[1,1]^2*x[2,1] - 3")
    assert len(f) == 2 and f.constant_term() == -3


def test_parse_rationals_and_whitespace(xy):
    f = xy(" 1/2 * x ^ 2  -  y ")
    assert f.terms == {(2, 0): Fraction(1, 2), (0, 1): -1}


@pytest.mark.parametrize("text", ["2x", "x y", "x[1,1]x[1,2]", "(x)(y)", "x +", "x^y", "", "x ^ 1/2"])
def test_parse_rejects_malformed(text):
    R = PolynomialRing(["x", "y", (1, 1), (1, 2)], QQ)
    with pytest.raises(PolynomialSyntaxError):
        parse_poly(text, R)


def test_parse_unknown_variable(xy):
    with pytest.raises(KeyError):
        xy("z + 1")


def test_parse_coefficient_outside_field():
    R = PolynomialRing(["x"], ZZ)
    with pytest.raises(ValueError):
        R("1/2*x")
    assert R("4/2*x") == R("2*x")


def test_printing_is_descending_with_signs(r5):
    f = f_entry(5, 5, 2).change_ring(r5)
    assert str(f) == "-x[1,3] + x[1,4]*x[2,3] - x[1,4]*x[3,2] + x[2,2]"
    assert str(r5.zero) == "0"


def test_printing_over_prime_field():
    R = PolynomialRing(["x"], GF(5))
    f = R("-x - 2")
    assert str(f) == "4*x + 3"


def test_custom_order_printing(xy):
    rev = MonomialOrder.lex(xy, ["y", "x"])
    assert xy("x + y^2").format(rev) == "y^2 + x"
    assert leading_term(xy("x + y^2"), rev)[0] == (0, 2)


def test_order_must_be_a_permutation(xy):
    with pytest.raises(ValueError):
        MonomialOrder((0, 0))
    with pytest.raises(ValueError):
        MonomialOrder.lex(xy, ["x"])


def test_field_names():
    assert field_from_name("QQ") is QQ
    assert field_from_name("ZZ") is ZZ
    assert field_from_name("GF(7)") is GF(7)
    with pytest.raises(ValueError):
        field_from_name("RR")
    with pytest.raises(ValueError):
        GF(4)


def test_change_ring_and_rename(xy):
    big = PolynomialRing(["z", "x", "y"], QQ)
    f = xy("x^2 - y").change_ring(big)
    assert f == big("x^2 - y")
    g = xy("x*y^2").rename(xy, {"x": "y", "y": "x"}.get)
    assert g == xy("x^2*y")


def test_evaluate(xy):
    assert xy("x^2 + 3*x*y").evaluate({"x": 2, "y": 1}) == 10


def test_packed_product_matches_plain(monkeypatch):
    R = chart_ring(5, field=GF(5))
    f = f_entry(5, 5, 1).change_ring(R) * f_entry(5, 4, 1).change_ring(R)
    big = f ** 3
    monkeypatch.setattr(poly_mod, "_PACKED_THRESHOLD", 0)
    assert f ** 3 == big
    monkeypatch.setattr(poly_mod, "_PACKED_THRESHOLD", 10 ** 12)
    assert f ** 3 == big
