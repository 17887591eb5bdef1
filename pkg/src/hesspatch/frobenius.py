"""Trace maps, Frobenius splittings over GF(p) and compatibility checks."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .groebner import Ideal, _Reducer, coprime_leads_gb_check, leading_term, monic
from .gvd import TCIWitness
from .hessenberg import (HessenbergFunction, Permutation, chart_ring, f_entry, hess_generators,
                         hessenberg_functions)
from .poly import GF, ZZ, MonomialOrder, Polynomial, PolynomialRing


def _require_prime_field(ring: PolynomialRing):
    if not ring.modulus:
        raise ValueError(f"expected coefficients in GF(p), got {ring.field!r}")
    return ring.modulus


def trace(g: Polynomial) -> Polynomial:
    """``x^a -> x^((a+1)/p - 1)`` when every ``a_i + 1`` is divisible by ``p``, else 0."""
    p = _require_prime_field(g.ring)
    out = {}
    for m, c in g.terms.items():
        if all((a + 1) % p == 0 for a in m):
            out[tuple((a + 1) // p - 1 for a in m)] = c
    return Polynomial(g.ring, out)


def phi_std(g: Polynomial) -> Polynomial:
    """The standard splitting: ``x^a -> x^(a/p)`` when ``p`` divides every ``a_i``."""
    p = _require_prime_field(g.ring)
    out = {}
    for m, c in g.terms.items():
        if all(a % p == 0 for a in m):
            out[tuple(a // p for a in m)] = c
    return Polynomial(g.ring, out)


def frobenius_power(I: Ideal, p: int) -> Ideal:
    """``I^[p]``, generated by the p-th powers of the generators of ``I``."""
    ring = I.ring if I.ring.modulus == p else I.ring.change_field(GF(p))
    return Ideal(ring, [g.change_ring(ring) ** p for g in I.gens])


@dataclass
class SplittingElement:
    """``f`` in ``GF(p)[x]`` defining ``phi_f(g) = Tr(f g)``.

    For the power provenances ``f = base^(p-1)`` and ``factors`` lists the
    factors of ``base`` (with ``base`` their product).
    """

    p: int
    f: Polynomial
    provenance: str = "user"
    base: Polynomial | None = None
    factors: list = field(default_factory=list)
    _unit: bool | None = field(default=None, repr=False)

    @classmethod
    def standard(cls, ring: PolynomialRing) -> "SplittingElement":
        p = _require_prime_field(ring)
        return cls(p, ring.monomial((p - 1,) * ring.nvars), "standard")

    @classmethod
    def from_factors(cls, factors: list, p: int, provenance: str) -> "SplittingElement":
        ring = factors[0].ring.change_field(GF(p))
        factors = [g.change_ring(ring) for g in factors]
        base = ring.one
        for g in factors:
            base = base * g
        return cls(p, base ** (p - 1), provenance, base, factors)

    @property
    def ring(self) -> PolynomialRing:
        return self.f.ring

    def unit_check(self) -> bool:
        """``Tr(f) = 1``, i.e. ``phi_f(1) = 1``."""
        if self._unit is None:
            self._unit = trace(self.f) == self.ring.one
        return self._unit

    def __call__(self, g: Polynomial) -> Polynomial:
        return phi_f(self, g)


def phi_f(s: SplittingElement, g: Polynomial) -> Polynomial:
    if g.ring != s.ring:
        g = g.change_ring(s.ring)
    return trace(s.f * g)


@dataclass(frozen=True)
class UnitCheck:
    passed: bool
    hypothesis: bool

    def __bool__(self):
        return self.passed


def splitting_unit_check(g: Polynomial, order: MonomialOrder | None = None,
                         p: int | None = None) -> UnitCheck:
    """Whether ``Tr(g^(p-1)) = 1``, plus whether ``in(g)`` is the product of all variables."""
    p = p or _require_prime_field(g.ring)
    ring = g.ring if g.ring.modulus == p else g.ring.change_field(GF(p))
    gp = g.change_ring(ring)
    hyp = bool(gp) and leading_term(gp, order)[0] == (1,) * ring.nvars
    passed = bool(gp) and trace(gp ** (p - 1)) == ring.one
    return UnitCheck(passed, hyp)


# ---------------------------------------------------------------------------
# The splitting elements F_I and F_n
# ---------------------------------------------------------------------------


def _check_full_lead(F: Polynomial, order, what: str):
    lm, lc = leading_term(F, order)
    if lm != (1,) * F.ring.nvars:
        raise AssertionError(f"{what} does not lead with the product of all variables")
    return lc


def F_I_factors(w: TCIWitness) -> list:
    """Factors of ``F_I``: the variables that lead no generator, then ``u_j^-1 f_j``."""
    ring = w.ring
    leads = set(w.lead_vars)
    out = [ring.var(v) for i, v in enumerate(ring.variables) if i not in leads]
    out += [g.scale(ring.field.inv(u)) for g, u in zip(w.gens, w.units)]
    return out


def build_F_I(w: TCIWitness) -> Polynomial:
    F = w.ring.one
    for g in F_I_factors(w):
        F = F * g
    _check_full_lead(F, w.order, "F_I")
    return F


def F_n_factors(n: int) -> tuple:
    """``(sign, factors)`` with ``F_n = sign * prod(factors)`` over ZZ."""
    if n < 3:
        raise ValueError("F_n needs n >= 3")
    ring = chart_ring(n, Permutation.w0(n), ZZ)
    factors = [ring.x(i, 1) for i in range(1, n)]
    factors += [f_entry(n, k, l) for (k, l) in HessenbergFunction.peterson(n).index_set()]
    sign = -1 if ((n - 1) * (n - 2) // 2) % 2 else 1
    return sign, factors


def build_F_n(n: int) -> Polynomial:
    sign, factors = F_n_factors(n)
    F = factors[0].ring.constant(sign)
    for g in factors:
        F = F * g
    lc = _check_full_lead(F, None, f"F_{n}")
    if lc != 1:
        raise AssertionError(f"F_{n} has leading coefficient {lc}")
    return F


def F_n_splitting(n: int, p: int) -> SplittingElement:
    """``phi`` for ``F_n^(p-1)``; the sign is folded into the first factor."""
    sign, factors = F_n_factors(n)
    factors = [factors[0].scale(sign)] + factors[1:]
    return SplittingElement.from_factors(factors, p, "F_n-power")


# ---------------------------------------------------------------------------
# Compatibility
# ---------------------------------------------------------------------------


def _product_normal_form(factors: list, G: list, order) -> Polynomial:
    """Normal form of a product, reducing after every multiplication."""
    ring = G[0].ring
    red = _Reducer(G, order)
    acc = red.pack_terms(ring.one.terms)
    packed = {}
    for g in factors:
        if id(g) not in packed:
            packed[id(g)] = red.pack_terms(g.terms)
        acc = red.reduce_packed(red.multiply(acc, packed[id(g)], ring.modulus), ring.field)
        if not acc:
            break
    return Polynomial(ring, red.unpack_terms(acc))


@dataclass
class CompatReport:
    p: int
    generators: list
    frob_power_membership: bool
    per_generator: list
    sampled: int = 0
    failures: int = 0
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return self.frob_power_membership

    def to_dict(self) -> dict:
        return {"generators": [str(g) for g in self.generators],
                "frob_power_membership": self.frob_power_membership,
                "criterion": "sufficient",
                "sampled_direct_checks": {"count": self.sampled, "failures": self.failures,
                                          "seed": self.seed}}


def compat_check(s: SplittingElement, I: Ideal, p: int | None = None, samples: int = 0,
                 seed: int = 0, margin: int = 2) -> CompatReport:
    """Check that ``phi_f`` compatibly splits ``I``.

    The pass criterion is ``f g_i ∈ I^[p]`` for every generator ``g_i``, which
    is sufficient because ``Tr(I^[p] R) ⊆ I``.  With ``samples > 0``, also
    reduces ``phi_f(m g_i)`` modulo ``I`` for random monomials ``m`` with
    exponents below ``p``.
    """
    p = p or s.p
    if p != s.p:
        raise ValueError("prime does not match the splitting element")
    if not s.unit_check():
        raise ValueError("splitting element fails Tr(f) = 1")
    ring = s.ring
    gens = [g.change_ring(ring) for g in I.gens]
    if not gens:
        return CompatReport(p, [], True, [], 0, 0, seed)
    order = ring.order
    Ip = [g ** p for g in gens]
    if coprime_leads_gb_check(Ip, order):
        G = [monic(g, order) for g in Ip]
    else:
        G = Ideal(ring, Ip).groebner_basis(order, reduced=False)
    per = []
    for g in gens:
        if s.factors:
            factors = [h for h in s.factors for _ in range(p - 1)] + [g]
            r = _product_normal_form(factors, G, order)
        else:
            r = _product_normal_form([s.f, g], G, order)
        per.append(not r)
    report = CompatReport(p, gens, all(per), per, seed=seed)
    if samples:
        report.sampled, report.failures = _direct_samples(s, gens, samples, seed, margin)
    return report


def _direct_samples(s: SplittingElement, gens: list, samples: int, seed: int, margin: int):
    ring = s.ring
    p = s.p
    rng = random.Random(seed)
    I_gb = Ideal(ring, gens).groebner_basis(reduced=False)
    red = _Reducer(I_gb, ring.order)
    fdeg = s.f.total_degree()
    products = {}
    failures = 0
    for t in range(samples):
        j = t % len(gens)
        g = gens[j]
        if j not in products:
            products[j] = s.f * g
        bound = (fdeg + g.total_degree()) // p + margin
        while True:
            m = tuple(rng.randrange(p) for _ in range(ring.nvars))
            if sum(m) <= bound:
                break
        val = trace(products[j].mul_term(m, 1))
        if red.reduce(val.terms, ring.field):
            failures += 1
    return samples, failures


# ---------------------------------------------------------------------------
# The poset of Hessenberg patch ideals
# ---------------------------------------------------------------------------


@dataclass
class SplitPoset:
    n: int
    p: int
    unit_check: bool
    nodes: dict  # h -> CompatReport
    edges: list  # (h, h') with I_{h'} ⊆ I_h
    edges_certified: bool = True

    @property
    def checks(self) -> dict:
        return {
            "unit_check": self.unit_check,
            "frob_power_membership": all(r.passed for r in self.nodes.values()),
            "sampled_direct_checks": all(not r.failures for r in self.nodes.values()),
            "edges_certified": self.edges_certified,
        }

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def maximum(self):
        """The node whose ideal contains every other one."""
        return max(self.nodes, key=lambda h: len(h.index_set()))

    def minimum(self):
        return min(self.nodes, key=lambda h: len(h.index_set()))

    def to_dict(self) -> dict:
        return {
            "n": self.n, "p": self.p, "splitting": "F_n^(p-1)", "field": f"GF({self.p})",
            "unit_check": self.unit_check,
            "checks": self.checks,
            "nodes": [dict(h=str(h), **r.to_dict()) for h, r in self.nodes.items()],
            "edges": [[str(a), str(b)] for a, b in self.edges],
        }


def split_poset(n: int, p: int, samples: int = 0, seed: int = 0,
                strict: bool = True) -> SplitPoset:
    """Check every indecomposable ``I_{w0,h}`` against ``phi`` for ``F_n^(p-1)``.

    Edges ``(h, h')`` record ``I_{h'} ⊆ I_h`` from index-set containment, each
    confirmed by generator membership.  With ``strict`` any failure raises.
    """
    s = F_n_splitting(n, p)
    unit = s.unit_check()
    if strict and not unit:
        raise AssertionError(f"Tr(F_{n}^{p - 1}) != 1")
    hs = hessenberg_functions(n)
    nodes = {}
    ideals = {}
    for h in hs:
        I = hess_generators(n, None, h).ideal(GF(p))
        ideals[h] = I
        nodes[h] = compat_check(s, I, p, samples=samples, seed=seed)
        if strict and not nodes[h].passed:
            raise AssertionError(f"I_(w0,{h}) failed the compatibility criterion for p={p}")
    edges = []
    edges_ok = True
    for a in hs:
        for b in hs:
            if a == b or not set(b.index_set()) <= set(a.index_set()):
                continue
            if not all(ideals[a].contains(g) for g in ideals[b].gens):
                edges_ok = False
                if strict:
                    raise AssertionError(f"inclusion I_{b} in I_{a} not confirmed")
            edges.append((a, b))
    return SplitPoset(n, p, unit, nodes, edges, edges_ok)
