import json

import pytest

from hesspatch.groebner import (Ideal, buchberger, coprime_leads_gb_check, ideal_equal,
                                monomial_dimension)
from hesspatch.gvd import (STEP_CHECKS, CertificateError, NotTriangularError,
                           NotYCompatibleError, certify_w0_chain, detect_tci, gvd_decompose,
                           gvd_gb_lift, initial_y_form, linkage_2minors_check, tci_conclusions,
                           y_split)
from hesspatch.hessenberg import (HessenbergError, HessenbergFunction, chain_ideal, chart_ring,
                                  hess_generators, hessenberg_functions)
from hesspatch.poly import QQ, MonomialOrder, PolynomialRing

from oracles import H1, H1_CHAIN_Y, H1_INITIAL_VARS, H1_RELABEL, H2, INDECOMPOSABLE_COUNTS


@pytest.fixture
def xyz():
    return PolynomialRing(["x", "y", "z"], QQ)


def test_initial_y_form(xyz):
    R5 = chart_ring(5, field=QQ)
    assert initial_y_form(R5("-x[1,4] + x[2,3]"), (1, 4)) == R5("-x[1,4]")
    assert initial_y_form(xyz("x + z"), "y") == xyz("x + z")
    assert initial_y_form(xyz("y^2*x + y*z + 1"), "y") == xyz("y^2*x")


def test_y_split(xyz):
    d, q, r = y_split(xyz("y^2*x + y^2 + y*z + 1"), "y")
    assert (d, q, r) == (2, xyz("x + 1"), xyz("y*z + 1"))


def test_detect_tci_textbook_example():
    R = PolynomialRing(["x1", "x2", "x3", "x4"], QQ)
    gens = [R("x1 + x2^2 + x2*x3"), R("x2 + x3*x4"), R("x3 + x4^2")]
    w = detect_tci(gens)
    assert w.lead_names() == ["x1", "x2", "x3"]
    assert w.units == (1, 1, 1)
    c = tci_conclusions(w)
    assert c.dimension == 1
    assert monomial_dimension(c.initial_ideal) == 1


def test_detect_tci_failures(xyz):
    with pytest.raises(NotTriangularError) as err:
        detect_tci([xyz("x + y"), xyz("x - y")])
    assert (err.value.j, err.value.m) == (1, 2)
    with pytest.raises(NotTriangularError) as err:
        detect_tci([xyz("x*y + z")])
    assert err.value.j == 1
    with pytest.raises(ValueError):
        detect_tci([xyz.zero])


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_patch_generators_are_tci(n):
    R = chart_ring(n, field=QQ)
    for h in hessenberg_functions(n):
        gens = [g.change_ring(R) for g in hess_generators(n, None, h).polys()]
        if not gens:
            continue
        w = detect_tci(gens)
        assert coprime_leads_gb_check(gens)
        assert all(u == -1 for u in w.units)
        if n <= 5:
            # Buchberger adds nothing to a TCI
            assert len(buchberger(gens)) == len(gens)


def test_tci_conclusions_h1():
    I = hess_generators(5, None, HessenbergFunction(H1)).ideal()
    c = tci_conclusions(detect_tci(I.gens))
    assert c.dimension == 4
    assert {v for g in c.initial_ideal.polys() for v in g.variables()} == H1_INITIAL_VARS
    assert c.groebner_basis == buchberger(list(I.gens))


def test_tci_height_one(xyz):
    c = tci_conclusions(detect_tci([xyz("x + y*z")]))
    assert c.dimension == 2 and len(c.groebner_basis) == 1


def test_gvd_example_step_two():
    h = HessenbergFunction(H1)
    I2 = chain_ideal(5, h, 2)
    step = gvd_decompose(I2, (1, 4))
    assert step.accepted
    assert Ideal(I2.ring, step.C).is_unit()
    assert ideal_equal(Ideal(I2.ring, step.N), chain_ideal(5, h, 3))
    assert step.kind == "degenerate"


def test_gvd_principal_variable(xyz):
    step = gvd_decompose(Ideal(xyz, [xyz("y")]), "y", MonomialOrder.lex(xyz, ["y", "x", "z"]))
    assert step.accepted and step.kind == "degenerate"
    assert Ideal(xyz, step.C).is_unit() and Ideal(xyz, step.N).is_zero()


def test_gvd_non_degenerate(xyz):
    step = gvd_decompose(Ideal(xyz, [xyz("x*y + z")]), "x")
    assert step.accepted and step.kind == "non-degenerate"
    assert step.C == [xyz("y")] and step.N == []


def test_gvd_rejects_incompatible_order(xyz):
    with pytest.raises(NotYCompatibleError):
        gvd_decompose(Ideal(xyz, [xyz("x*y + z")]), "y")


def test_certificate_h1():
    cert = certify_w0_chain(5, HessenbergFunction(H1))
    assert cert.accepted
    ys = cert.y_sequence()
    assert ys[:3] == [(5, v) for v in H1_CHAIN_Y]
    assert ys[3:] == [(4, (1, 2)), (4, (1, 3)), (3, (1, 2))]
    n, h = cert.relabel_checks[0][0]
    assert (n, h.values) == H1_RELABEL
    assert [str(h) for (_, h), _ in cert.relabel_checks] == ["(2,3,4,4)", "(2,3,3)", "(2,2)"]
    assert cert.base_case == "empty" and cert.relabel_depth == 3
    for s in cert.steps:
        assert set(s.checks) == set(STEP_CHECKS)
        assert s.complete_intersection
    assert cert.unmixedness == "unverified"


def test_certificate_serialises():
    cert = certify_w0_chain(5, HessenbergFunction(H2))
    data = json.loads(cert.to_json())
    assert data["root"]["h"] == list(H2)
    assert data["terminal"]["base_case"] == "empty"
    first = data["steps"][0]
    assert first["y"] == "x[1,2]" and first["kind"] == "degenerate"
    assert set(first["checks"]) == set(STEP_CHECKS)


def test_single_generator_chain():
    # n = 4, h = (3,4,4,4) has the single generator f_{4,1} and mu = 1
    cert = certify_w0_chain(4, HessenbergFunction((3, 4, 4, 4)))
    assert cert.accepted
    assert cert.y_sequence() == [(4, (1, 2))]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_all_certificates_accepted(n):
    hs = hessenberg_functions(n)
    assert len(hs) == INDECOMPOSABLE_COUNTS[n]
    for h in hs:
        cert = certify_w0_chain(n, h)
        assert cert.accepted
        # the TCI route agrees: the initial ideal is generated by variables
        gens = hess_generators(n, None, h).polys()
        if gens:
            assert tci_conclusions(detect_tci(gens)).initial_ideal.is_indeterminates()


def test_full_function_has_empty_certificate():
    cert = certify_w0_chain(4, HessenbergFunction((4, 4, 4, 4)))
    assert cert.accepted and cert.steps == [] and cert.base_case == "empty"


def test_certificate_errors():
    with pytest.raises(HessenbergError):
        certify_w0_chain(2, HessenbergFunction((2, 2)))
    with pytest.raises(HessenbergError):
        certify_w0_chain(4, HessenbergFunction((1, 3, 4, 4)))
    assert issubclass(CertificateError, AssertionError)


def test_lift_from_chain_step():
    h = HessenbergFunction(H1)
    R = chart_ring(5, field=QQ)
    N = chain_ideal(5, h, 3)
    I = chain_ideal(5, h, 2)
    f = next(g for g in I.gens if g not in N.gens)
    y = R.index((1, 4))
    _, q, r = y_split(-f, y)
    res = gvd_gb_lift([R.one], N.groebner_basis(), [(q, r)], (1, 4), dmax=6)
    assert res and res.hilbert_shift
    assert ideal_equal(Ideal(R, res.basis), I)


def test_lift_degenerate_toy(xyz):
    res = gvd_gb_lift([xyz.one], [], [(xyz.one, xyz("y*z"))], "x")
    assert res.basis == [xyz("x + y*z")] and res


def test_lift_hilbert_shift_n4():
    h = HessenbergFunction((2, 3, 4, 4))
    I, N = chain_ideal(4, h, 0), chain_ideal(4, h, 1)
    R = I.ring
    f = next(g for g in I.gens if g not in N.gens)
    _, q, r = y_split(-f, (1, 2))
    res = gvd_gb_lift([R.one], N.groebner_basis(), [(q, r)], (1, 2), dmax=8)
    assert res.is_groebner and res.hilbert_shift


def test_lift_rejects_y_in_pairs(xyz):
    with pytest.raises(ValueError):
        gvd_gb_lift([xyz.one], [], [(xyz("x"), xyz.zero)], "x")


def test_linkage(xyz):
    N = Ideal(xyz, [xyz("x^2 - y^2")])
    rep = linkage_2minors_check([xyz("x"), xyz("y")], [xyz("y"), xyz("x")], N, y="z")
    assert rep and rep.heights_ok
    assert linkage_2minors_check([xyz.one], [xyz("y")], Ideal(xyz, []))
    bad = linkage_2minors_check([xyz("x"), xyz("y")], [xyz("z"), xyz("x")], N)
    assert not bad
    with pytest.raises(ValueError):
        linkage_2minors_check([xyz("x")], [], N)
