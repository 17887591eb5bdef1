"""Cross-check the reduced Gröbner basis against sympy."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hesspatch.groebner import reduced_groebner_basis
from hesspatch.hessenberg import HessenbergFunction, hess_generators
from hesspatch.poly import QQ, PolynomialRing

sympy = pytest.importorskip("sympy")


def sympy_basis(gens, names):
    """Reduced lex basis from sympy, as a set of sorted term tuples."""
    syms = sympy.symbols(names)

    def rational(c):
        c = Fraction(c)
        return sympy.Rational(c.numerator, c.denominator)

    exprs = [sympy.Poly.from_dict({m: rational(c) for m, c in g.terms.items()}, *syms).as_expr()
             for g in gens]
    out = set()
    for p in sympy.groebner(exprs, *syms, order="lex").exprs:
        poly = sympy.Poly(p, *syms)
        lc = poly.coeffs()[0]
        terms = ((m, c / lc) for m, c in poly.as_dict().items())
        out.add(tuple(sorted((m, Fraction(int(c.p), int(c.q))) for m, c in terms)))
    return out


def our_basis(gens):
    return {tuple(sorted(g.terms.items())) for g in reduced_groebner_basis(gens)}


@st.composite
def small_ideals(draw, R):
    polys = []
    for _ in range(draw(st.integers(1, 3))):
        f = R.zero
        for _ in range(draw(st.integers(1, 3))):
            mono = tuple(draw(st.integers(0, 2)) for _ in range(R.nvars))
            f = f + R.monomial(mono, draw(st.integers(-3, 3)))
        if f:
            polys.append(f)
    return polys


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_reduced_basis_matches_sympy(data):
    R = PolynomialRing(["a", "b", "c"], QQ)
    gens = data.draw(small_ideals(R))
    if gens:
        assert our_basis(gens) == sympy_basis(gens, ["a", "b", "c"])


def test_h1_basis_matches_sympy():
    I = hess_generators(5, None, HessenbergFunction((2, 3, 4, 5, 5))).ideal()
    names = [f"x{i}{j}" for i, j in I.ring.variables]
    assert our_basis(list(I.gens)) == sympy_basis(list(I.gens), names)
