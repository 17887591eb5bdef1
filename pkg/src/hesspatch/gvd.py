"""Triangular complete intersections and geometric vertex decompositions."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import combinations

from .groebner import (Ideal, MonomialIdeal, coprime_leads_gb_check, hilbert_function,
                       ideal_equal, ideal_intersection, ideal_quotient, initial_ideal,
                       is_groebner_basis, leading_term, monic, monomial_dimension)
from .hessenberg import (HessenbergError, HessenbergFunction, Permutation, chain_ideal,
                         chart_ring, f_entry, hess_generators, mu, reduced_hessenberg,
                         relabel_down)
from .poly import QQ, MonomialOrder, Polynomial, format_variable

STEP_CHECKS = ("squarefree", "gb_y_free", "unit_y_coeff", "nzd_colon",
               "sum_decomposition", "intersection_identity")


class NotTriangularError(ValueError):
    """Raised by :func:`detect_tci`; ``j`` and ``m`` are 1-based generator positions."""

    def __init__(self, message, j=None, m=None):
        super().__init__(message)
        self.j = j
        self.m = m


class NotYCompatibleError(ValueError):
    pass


class CertificateError(AssertionError):
    """A certificate check failed; ``step`` and ``check`` name the culprit."""

    def __init__(self, message, step=None, check=None):
        super().__init__(message)
        self.step = step
        self.check = check


def _var_index(ring, y) -> int:
    return y if isinstance(y, int) else ring.index(y)


def initial_y_form(f: Polynomial, y) -> Polynomial:
    """Sum of the terms of ``f`` carrying the highest power of ``y``."""
    i = _var_index(f.ring, y)
    d = f.degree_in(i)
    if d <= 0:
        return f
    return Polynomial(f.ring, {m: c for m, c in f.terms.items() if m[i] == d})


def y_split(f: Polynomial, y):
    """``(d, q, r)`` with ``f = y^d q + r``, ``q`` free of ``y`` and ``deg_y r < d``."""
    i = _var_index(f.ring, y)
    d = max(f.degree_in(i), 0)
    q, r = {}, {}
    for m, c in f.terms.items():
        if m[i] == d:
            q[m[:i] + (0,) + m[i + 1:]] = c
        else:
            r[m] = c
    return d, Polynomial(f.ring, q), Polynomial(f.ring, r)


# ---------------------------------------------------------------------------
# Triangular complete intersections
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TCIWitness:
    gens: tuple
    lead_vars: tuple  # variable indices
    units: tuple
    order: MonomialOrder

    @property
    def ring(self):
        return self.gens[0].ring

    @property
    def height(self) -> int:
        return len(self.gens)

    def lead_names(self) -> list:
        return [self.ring.variables[i] for i in self.lead_vars]


def detect_tci(gens, order: MonomialOrder | None = None) -> TCIWitness:
    """Witness that the ordered ``gens`` form a triangular complete intersection."""
    gens = list(gens)
    if not gens:
        raise NotTriangularError("empty generator list")
    if any(not g for g in gens):
        raise ValueError("zero generator")
    ring = gens[0].ring
    order = order or ring.order
    leads, units = [], []
    for j, g in enumerate(gens, 1):
        lm, lc = leading_term(g, order)
        if sum(lm) != 1:
            raise NotTriangularError(f"generator {j} has non-variable lead {g}", j=j)
        leads.append(lm.index(1))
        units.append(lc)
    for j, i in enumerate(leads, 1):
        for m in range(j + 1, len(gens) + 1):
            if gens[m - 1].degree_in(i) > 0:
                name = format_variable(ring.variables[i])
                raise NotTriangularError(
                    f"lead variable {name} of generator {j} occurs in generator {m}", j=j, m=m)
    return TCIWitness(tuple(gens), tuple(leads), tuple(units), order)


@dataclass(frozen=True)
class TCIConclusions:
    groebner_basis: list
    initial_ideal: MonomialIdeal
    dimension: int


def tci_conclusions(w: TCIWitness) -> TCIConclusions:
    """Gröbner basis, initial ideal and dimension read off a TCI witness."""
    gens = list(w.gens)
    if not coprime_leads_gb_check(gens, w.order):
        raise AssertionError("TCI witness with non-coprime leads")
    ring = w.ring
    gb = [monic(g, w.order) for g in gens]
    monos = []
    for i in w.lead_vars:
        m = [0] * ring.nvars
        m[i] = 1
        monos.append(tuple(m))
    return TCIConclusions(gb, MonomialIdeal(ring, monos), ring.nvars - w.height)


# ---------------------------------------------------------------------------
# Geometric vertex decomposition
# ---------------------------------------------------------------------------


@dataclass
class GVDStep:
    y: tuple | str
    C: list
    N: list
    kind: str
    checks: dict
    witness: Polynomial | None = None
    m: int | None = None
    n: int | None = None
    complete_intersection: bool | None = None

    @property
    def accepted(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        out = {"m": self.m, "n": self.n, "y": format_variable(self.y),
               "witness": None if self.witness is None else str(self.witness),
               "C": [str(g) for g in self.C], "N": [str(g) for g in self.N],
               "checks": dict(self.checks), "kind": self.kind}
        if self.complete_intersection is not None:
            out["complete_intersection"] = self.complete_intersection
        return out


def y_is_top_variable(G: list, y, order: MonomialOrder) -> bool:
    """Sufficient y-compatibility test: ``y`` is the greatest variable occurring in ``G``."""
    if not G:
        return True
    ring = G[0].ring
    i = _var_index(ring, y)
    occurring = set()
    for g in G:
        occurring |= g.support()
    if i not in occurring:
        return True
    return next(p for p in order.priority if p in occurring) == i


def gvd_decompose(I: Ideal, y, order: MonomialOrder | None = None) -> GVDStep:
    """Decompose ``I`` along ``y`` from its reduced Gröbner basis and verify the identity."""
    ring = I.ring
    order = order or ring.order
    i = _var_index(ring, y)
    G = I.groebner_basis(order)
    if not y_is_top_variable(G, i, order):
        raise NotYCompatibleError(f"{format_variable(ring.variables[i])} is not the greatest "
                                  "variable of the Gröbner basis")
    splits = [y_split(g, i) for g in G]
    C = Ideal(ring, [q for _, q, _ in splits])
    N = Ideal(ring, [g for g, (d, _, _) in zip(G, splits) if d == 0])
    y_poly = ring.var(ring.variables[i])
    in_y = Ideal(ring, [initial_y_form(g, i) for g in G])
    rhs = ideal_intersection(C, N + y_poly, order)
    checks = {
        "squarefree": all(d <= 1 for d, _, _ in splits),
        "N_in_I": all(I.contains(g, order) for g in N.gens),
        "N_in_C": all(C.contains(g, order) for g in N.gens),
        "intersection_identity": ideal_equal(in_y, rhs, order),
    }
    unit = C.is_unit()
    kind = "degenerate" if unit or ideal_equal(C, N, order) else "non-degenerate"
    return GVDStep(ring.variables[i], list(C.gens), list(N.gens), kind, checks)


@dataclass
class GVDCertificate:
    n: int
    h: HessenbergFunction
    steps: list
    base_case: str
    relabel_depth: int
    relabel_checks: list = field(default_factory=list)
    unmixedness: str = "unverified"

    @property
    def accepted(self) -> bool:
        return (all(s.accepted for s in self.steps)
                and all(ok for _, ok in self.relabel_checks))

    def y_sequence(self) -> list:
        return [(s.n, s.y) for s in self.steps]

    def to_dict(self) -> dict:
        return {
            "root": {"n": self.n, "h": list(self.h.values), "w": "w0"},
            "steps": [s.to_dict() for s in self.steps],
            "relabels": [{"n": n, "h": list(h.values), "matches_patch_generators": ok}
                         for (n, h), ok in self.relabel_checks],
            "terminal": {"base_case": self.base_case, "relabel_depth": self.relabel_depth},
            "unmixedness": self.unmixedness,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _chain_step(n: int, h: HessenbergFunction, m: int) -> GVDStep:
    I = chain_ideal(n, h, m)
    N = chain_ideal(n, h, m + 1)
    ring = I.ring
    order = ring.order
    y = (1, m + 2)
    yi = ring.index(y)
    f = -f_entry(n, n, m + 1).change_ring(ring)

    G_N = N.groebner_basis(order)
    dec = gvd_decompose(I, y, order)
    checks = {
        "squarefree": all(g.degree_in(yi) <= 1 for g in I.gens),
        "gb_y_free": all(g.degree_in(yi) <= 0 for g in G_N),
        "unit_y_coeff": initial_y_form(f, yi) == ring.var(y),
        "nzd_colon": ideal_equal(ideal_quotient(N, f, order), N, order),
        "sum_decomposition": ideal_equal(I, N + f, order),
        "intersection_identity": (dec.checks["intersection_identity"]
                                  and Ideal(ring, dec.C).is_unit()
                                  and ideal_equal(Ideal(ring, dec.N), N, order)
                                  and dec.checks["N_in_I"]),
    }
    codim = ring.nvars - monomial_dimension(initial_ideal(I, order))
    return GVDStep(y, [ring.one], list(N.gens), "degenerate", checks, witness=f, m=m, n=n,
                   complete_intersection=codim == len(I.gens))


def certify_w0_chain(n: int, h: HessenbergFunction, strict: bool = True) -> GVDCertificate:
    """Certificate that every chain ideal ``I_{w0,h}(m)`` is GVD.

    Steps ``m = 0 .. mu(h) - 1`` peel off the bottom-row generators with
    ``y = x[1,m+2]``; the remaining ideal is relabelled into the chart of size
    ``n - 1`` and the chain restarts there, until the ideal is zero.  The full
    function ``(n,...,n)`` has the zero ideal and gets an empty certificate.
    With ``strict`` a failed check raises :class:`CertificateError`.
    """
    if n < 3:
        raise HessenbergError("certify_w0_chain needs n >= 3")
    if h.n != n or not h.indecomposable:
        raise HessenbergError(f"{h} must be an indecomposable function on [{n}]")
    steps, relabels = [], []
    if h.is_full:
        return GVDCertificate(n, h, steps, "empty", 0, relabels)
    cur_n, cur_h, depth = n, h, 0
    while True:
        u = mu(cur_h)
        for m in range(u):
            step = _chain_step(cur_n, cur_h, m)
            steps.append(step)
            if strict and not step.accepted:
                bad = next(k for k, v in step.checks.items() if not v)
                raise CertificateError(f"step n={cur_n}, m={m} failed {bad}", step=step, check=bad)
        rest = chain_ideal(cur_n, cur_h, u)
        new_h = reduced_hessenberg(cur_h)
        down = [relabel_down(g, cur_n) for g in rest.gens]
        expected = hess_generators(cur_n - 1, None, new_h).polys()
        target = chart_ring(cur_n - 1, Permutation.w0(cur_n - 1), QQ)
        ok = sorted(map(str, down)) == sorted(str(g.change_ring(target)) for g in expected)
        relabels.append(((cur_n - 1, new_h), ok))
        if strict and not ok:
            raise CertificateError(f"relabelled generators differ from I_(w0,{new_h})",
                                   check="relabel")
        cur_n, cur_h, depth = cur_n - 1, new_h, depth + 1
        if not down:
            base = "empty"
            break
        if all(sum(leading_term(g)[0]) == 1 and len(g) == 1 for g in down):
            base = "ideal_of_indeterminates"
            break
    return GVDCertificate(n, h, steps, base, depth, relabels)


# ---------------------------------------------------------------------------
# Gröbner bases from decompositions
# ---------------------------------------------------------------------------


@dataclass
class LiftResult:
    basis: list
    is_groebner: bool
    hilbert_shift: bool | None = None

    def __bool__(self):
        return self.is_groebner and self.hilbert_shift is not False


def _standard_counts(M: MonomialIdeal, grading, dmax: int) -> list:
    return hilbert_function(M, grading, dmax)


def gvd_gb_lift(C_gb: list, N_gb: list, pairs: list, y, order: MonomialOrder | None = None,
                dmax: int | None = None) -> LiftResult:
    """Candidate basis ``{y q_i + r_i} ∪ N_gb`` for ``I``, verified by S-pair reduction.

    With ``dmax`` set, also compares ``HF(in(N)) - HF(in(I))`` in degree ``d``
    with ``HF(in(N)) - HF(in(C))`` in degree ``d - deg(y)`` for ``d <= dmax``.
    """
    polys = [p for pair in pairs for p in pair] + list(C_gb) + list(N_gb)
    ring = polys[0].ring
    order = order or ring.order
    i = _var_index(ring, y)
    yv = ring.var(ring.variables[i])
    for q, r in pairs:
        if q.degree_in(i) > 0 or r.degree_in(i) > 0:
            raise ValueError("q_i and r_i must be free of y")
    basis = [yv * q + r for q, r in pairs] + list(N_gb)
    ok = is_groebner_basis(basis, order)
    shift = None
    if dmax is not None:
        grading = ring.grading
        e = grading.degree(tuple(1 if k == i else 0 for k in range(ring.nvars)))

        def leads(G):
            return MonomialIdeal(ring, [leading_term(g, order)[0] for g in G if g])

        hI = _standard_counts(leads(basis), grading, dmax)
        hC = _standard_counts(leads(C_gb), grading, dmax)
        hN = _standard_counts(leads(N_gb), grading, dmax)
        shift = all(hN[d] - hI[d] == ((hN[d - e] - hC[d - e]) if d >= e else 0)
                    for d in range(dmax + 1))
    return LiftResult(basis, ok, shift)


@dataclass
class LinkageReport:
    minors_in_N: bool
    height_I: float
    height_C: float
    height_N: float

    @property
    def heights_ok(self) -> bool:
        return self.height_I > self.height_N and self.height_C > self.height_N

    def __bool__(self):
        return self.minors_in_N


def _height(I: Ideal, order) -> float:
    if I.is_zero():
        return 0
    d = monomial_dimension(initial_ideal(I, order))
    return math.inf if d < 0 else I.ring.nvars - d


def linkage_2minors_check(qs: list, rs: list, N: Ideal, y=None,
                          order: MonomialOrder | None = None) -> LinkageReport:
    """Every 2-minor ``q_i r_j - q_j r_i`` lies in ``N``.

    Heights of ``I``, ``C`` and ``N`` come from their initial ideals; ``I``
    needs ``y`` (it is ``<y q_i + r_i> + N``).  Truthiness is the minor test.
    """
    if len(qs) != len(rs):
        raise ValueError("qs and rs differ in length")
    order = order or N.ring.order
    minors = all(N.contains(qs[a] * rs[b] - qs[b] * rs[a], order)
                 for a, b in combinations(range(len(qs)), 2))
    ring = N.ring
    C = Ideal(ring, list(qs) + list(N.gens))
    if y is None:
        hI = math.nan
    else:
        yv = ring.var(ring.variables[_var_index(ring, y)])
        hI = _height(Ideal(ring, [yv * q + r for q, r in zip(qs, rs)] + list(N.gens)), order)
    return LinkageReport(minors, hI, _height(C, order), _height(N, order))
