"""Division, Buchberger's algorithm and the ideal operations built on it."""

from __future__ import annotations

import heapq
from itertools import combinations

from .poly import (Grading, MonomialOrder, Polynomial, PolynomialRing, RingMismatchError,
                   format_monomial, leading_term)


# ---------------------------------------------------------------------------
# Monomial helpers
# ---------------------------------------------------------------------------


def divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_div(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def coprime(a: tuple, b: tuple) -> bool:
    return not any(x and y for x, y in zip(a, b))


# exponent field width inside packed monomial keys; the top bit of each field
# is a guard that catches failed divisibility tests and overflow
_FIELD_BITS = 24


class _Reducer:
    """Lead data of a divisor list, prepared once for repeated reductions.

    Monomials are packed into Python ints, most significant field first in the
    order's priority, so integer comparison is the monomial order and monomial
    multiplication is integer addition.
    """

    def __init__(self, polys: list, order: MonomialOrder):
        self.order = order
        self.polys = polys
        nv = len(order.priority)
        W = _FIELD_BITS
        self.nv = nv
        self.shifts = [0] * nv
        for pos, i in enumerate(order.priority):
            self.shifts[i] = W * (nv - 1 - pos)
        self.mask = (1 << W) - 1
        self.guard = sum(1 << (W * k + W - 1) for k in range(nv))
        self.entries = []
        for g in polys:
            lm, lc = leading_term(g, order)
            tail = [(self.pack(m), c) for m, c in g.terms.items() if m != lm]
            self.entries.append((self.pack(lm), lc, tail))

    def pack(self, m: tuple) -> int:
        if any(e >> (_FIELD_BITS - 1) for e in m):
            raise OverflowError("exponent too large for packed reduction")
        return sum(e << s for e, s in zip(m, self.shifts))

    def unpack(self, k: int) -> tuple:
        mask = self.mask
        return tuple([(k >> s) & mask for s in self.shifts])

    def find(self, k: int):
        guard = self.guard
        kg = k | guard
        for idx, entry in enumerate(self.entries):
            if (kg - entry[0]) & guard == guard:
                return idx
        return None

    def pack_terms(self, terms: dict) -> dict:
        return {self.pack(m): c for m, c in terms.items()}

    def unpack_terms(self, pterms: dict) -> dict:
        return {self.unpack(k): c for k, c in pterms.items()}

    def multiply(self, a: dict, b: dict, mod: int) -> dict:
        """Product of two packed term dicts."""
        if len(a) < len(b):
            a, b = b, a
        guard = self.guard
        out = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        if any(k & guard for k in out):
            raise OverflowError("exponent too large for packed reduction")
        if mod:
            return {k: c % mod for k, c in out.items() if c % mod}
        return {k: c for k, c in out.items() if c}

    def reduce(self, terms: dict, field, quotients: list | None = None,
               tail_only: tuple | None = None) -> dict:
        """Full reduction of ``terms``; optionally records quotient terms."""
        skip = None if tail_only is None else self.pack(tail_only)
        rem = self.reduce_packed(self.pack_terms(terms), field, quotients, skip)
        return self.unpack_terms(rem)

    def reduce_packed(self, p: dict, field, quotients: list | None = None,
                      skip: int | None = None) -> dict:
        mod = field.characteristic
        guard = self.guard
        p = dict(p)
        heap = [-k for k in p]
        heapq.heapify(heap)
        queued = set(p)
        rem = {}
        while heap:
            k = -heapq.heappop(heap)
            queued.discard(k)
            c = p.pop(k, 0)
            if not c:
                continue
            idx = None if k == skip else self.find(k)
            if idx is None:
                rem[k] = c
                continue
            lk, lc, tail = self.entries[idx]
            q = c * pow(lc, -1, mod) % mod if mod else field.div(c, lc)
            shift = k - lk
            if quotients is not None:
                qd = quotients[idx]
                sm = self.unpack(shift)
                v = qd.get(sm, 0) + q
                if mod:
                    v %= mod
                if v:
                    qd[sm] = v
                else:
                    qd.pop(sm, None)
            for gk, gc in tail:
                nk = gk + shift
                if nk & guard:
                    raise OverflowError("exponent too large for packed reduction")
                v = p.get(nk, 0) - q * gc
                if mod:
                    v %= mod
                if v:
                    p[nk] = v
                    if nk not in queued:
                        queued.add(nk)
                        heapq.heappush(heap, -nk)
                else:
                    p.pop(nk, None)
        return rem


def _check_same_ring(ring: PolynomialRing, polys):
    for g in polys:
        if g.ring != ring:
            raise RingMismatchError(f"{g.ring!r} differs from {ring!r}")


# ---------------------------------------------------------------------------
# Division
# ---------------------------------------------------------------------------


def normal_form(f: Polynomial, G: list, order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of ``f`` on division by ``G`` (first divisor in list order wins)."""
    G = [g for g in G if g]
    _check_same_ring(f.ring, G)
    if not G or not f:
        return f
    order = order or f.ring.order
    rem = _Reducer(G, order).reduce(f.terms, f.ring.field)
    return Polynomial(f.ring, rem)


def divide(f: Polynomial, G: list, order: MonomialOrder | None = None):
    """Return ``(quotients, remainder)`` with ``f = sum q_i G_i + remainder``."""
    G = list(G)
    if any(not g for g in G):
        raise ValueError("divisors must be nonzero")
    _check_same_ring(f.ring, G)
    order = order or f.ring.order
    qs = [dict() for _ in G]
    rem = _Reducer(G, order).reduce(f.terms, f.ring.field, qs) if G else dict(f.terms)
    return [Polynomial(f.ring, q) for q in qs], Polynomial(f.ring, rem)


def exact_quotient(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    """``f / g`` when ``g`` divides ``f``; raises otherwise."""
    (q,), r = divide(f, [g], order)
    if r:
        raise ValueError(f"{g} does not divide {f}")
    return q


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    order = order or f.ring.order
    field = f.ring.field
    lf, cf = leading_term(f, order)
    lg, cg = leading_term(g, order)
    L = mono_lcm(lf, lg)
    return (f.mul_term(mono_div(L, lf), field.inv(cf))
            - g.mul_term(mono_div(L, lg), field.inv(cg)))


def monic(f: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    if not f:
        return f
    _, c = leading_term(f, order)
    return f.scale(f.ring.field.inv(c))


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------


def _require_field(ring: PolynomialRing):
    if not ring.field.is_field:
        raise ValueError(f"Gröbner computations need a field, not {ring.field!r}; "
                         "use ring.change_field(QQ)")


def buchberger(gens: list, order: MonomialOrder | None = None, *, reduced: bool = False,
               track: bool = False):
    """Gröbner basis of ``gens`` by Buchberger's algorithm.

    Pairs are processed by the normal strategy (smallest lcm degree first,
    ties broken by the order) and skipped by the coprime-lead and chain
    criteria.  The result is always monic and minimal.  With ``reduced=False``
    input generators that survive minimalisation are returned as given (up to
    scaling), in input order, followed by new elements; with ``reduced=True``
    tails are interreduced and the basis is sorted by decreasing lead.

    With ``track=True`` also returns, for every basis element, cofactors
    ``c`` with ``element = sum(c[i] * gens[i])`` over the nonzero inputs.
    """
    gens = [g for g in gens if g]
    if not gens:
        return ([], []) if track else []
    ring = gens[0].ring
    _check_same_ring(ring, gens)
    _require_field(ring)
    order = order or ring.order
    key = order.key
    field = ring.field

    basis = list(gens)
    leads = [leading_term(g, order) for g in basis]
    reps = None
    if track:
        reps = [[ring.one if i == j else ring.zero for j in range(len(gens))]
                for i in range(len(gens))]

    pending = set()
    heap = []

    def push(i, j):
        L = mono_lcm(leads[i][0], leads[j][0])
        pending.add((i, j))
        heapq.heappush(heap, (sum(L), key(L), i, j))

    for i, j in combinations(range(len(basis)), 2):
        push(i, j)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        li, lj = leads[i][0], leads[j][0]
        if coprime(li, lj):
            continue
        L = mono_lcm(li, lj)
        if any(k != i and k != j and divides(leads[k][0], L)
               and (min(i, k), max(i, k)) not in pending
               and (min(j, k), max(j, k)) not in pending
               for k in range(len(basis))):
            continue
        ai = (mono_div(L, li), field.inv(leads[i][1]))
        aj = (mono_div(L, lj), field.inv(leads[j][1]))
        s = basis[i].mul_term(*ai) - basis[j].mul_term(*aj)
        if track:
            qs = [dict() for _ in basis]
            rem = _Reducer(basis, order).reduce(s.terms, field, qs)
        else:
            rem = _Reducer(basis, order).reduce(s.terms, field)
        if not rem:
            continue
        r = Polynomial(ring, rem)
        if track:
            rep = [a.mul_term(*ai) - b.mul_term(*aj) for a, b in zip(reps[i], reps[j])]
            for k, q in enumerate(qs):
                if q:
                    qp = Polynomial(ring, q)
                    rep = [x - qp * y for x, y in zip(rep, reps[k])]
            reps.append(rep)
        basis.append(r)
        leads.append(leading_term(r, order))
        new = len(basis) - 1
        for k in range(new):
            push(k, new)

    # minimalise: drop elements whose lead is divisible by an earlier kept lead
    # or by a strictly smaller lead
    keep = []
    for i, (li, _) in enumerate(leads):
        dominated = False
        for j, (lj, _) in enumerate(leads):
            if j == i or not divides(lj, li):
                continue
            if lj != li or j < i:
                dominated = True
                break
        if not dominated:
            keep.append(i)

    out = []
    out_reps = []
    for i in keep:
        inv = field.inv(leads[i][1])
        out.append(basis[i].scale(inv))
        if track:
            out_reps.append([c.scale(inv) for c in reps[i]])

    if reduced:
        out, out_reps = _interreduce(out, out_reps if track else None, order)
        idx = sorted(range(len(out)), key=lambda t: key(leading_term(out[t], order)[0]),
                     reverse=True)
        out = [out[t] for t in idx]
        if track:
            out_reps = [out_reps[t] for t in idx]
    return (out, out_reps) if track else out


def _interreduce(G: list, reps, order):
    """Reduce every tail of a minimal monic basis against the other elements."""
    ring = G[0].ring
    out = list(G)
    for i in range(len(out)):
        others = out[:i] + out[i + 1:]
        if not others:
            continue
        lm, _ = leading_term(out[i], order)
        red = _Reducer(others, order)
        if reps is not None:
            qs = [dict() for _ in others]
            rem = red.reduce(out[i].terms, ring.field, qs, tail_only=lm)
            other_reps = reps[:i] + reps[i + 1:]
            rep = reps[i]
            for q, orep in zip(qs, other_reps):
                if q:
                    qp = Polynomial(ring, q)
                    rep = [x - qp * y for x, y in zip(rep, orep)]
            reps = reps[:i] + [rep] + reps[i + 1:]
        else:
            rem = red.reduce(out[i].terms, ring.field, tail_only=lm)
        out[i] = Polynomial(ring, rem)
    return out, reps


def reduced_groebner_basis(gens: list, order: MonomialOrder | None = None) -> list:
    return buchberger(gens, order, reduced=True)


def is_groebner_basis(G: list, order: MonomialOrder | None = None) -> bool:
    """Every S-polynomial of ``G`` reduces to zero (no criteria applied)."""
    G = [g for g in G if g]
    for f, g in combinations(G, 2):
        if normal_form(s_polynomial(f, g, order), G, order):
            return False
    return True


def is_reduced_basis(G: list, order: MonomialOrder | None = None) -> bool:
    leads = [leading_term(g, order) for g in G]
    for i, g in enumerate(G):
        if leads[i][1] != 1:
            return False
        for j, (lj, _) in enumerate(leads):
            if j != i and any(divides(lj, m) for m in g.terms):
                return False
    return True


def coprime_leads_gb_check(gens: list, order: MonomialOrder | None = None) -> bool:
    """True iff the lead monomials are pairwise coprime (then ``gens`` is a GB)."""
    gens = [g for g in gens if g]
    leads = [leading_term(g, order)[0] for g in gens]
    return all(coprime(a, b) for a, b in combinations(leads, 2))


# ---------------------------------------------------------------------------
# Monomial ideals
# ---------------------------------------------------------------------------


class MonomialIdeal:
    """Monomial ideal stored by its minimal generators (exponent tuples)."""

    def __init__(self, ring: PolynomialRing, monomials):
        self.ring = ring
        mons = sorted(set(tuple(m) for m in monomials), key=lambda m: (sum(m), m))
        minimal = []
        for m in mons:
            if not any(divides(g, m) for g in minimal):
                minimal.append(m)
        self.gens = tuple(sorted(minimal, key=ring.order.key, reverse=True))

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.ring == other.ring \
            and set(self.gens) == set(other.gens)

    def __hash__(self):
        return hash((self.ring, frozenset(self.gens)))

    def __contains__(self, mono) -> bool:
        if isinstance(mono, Polynomial):
            return all(any(divides(g, m) for g in self.gens) for m in mono.terms)
        return any(divides(g, tuple(mono)) for g in self.gens)

    def __len__(self):
        return len(self.gens)

    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def is_indeterminates(self) -> bool:
        return all(sum(g) == 1 for g in self.gens)

    def polys(self) -> list:
        return [self.ring.monomial(g) for g in self.gens]

    def strings(self) -> list:
        return [format_monomial(self.ring, g) or "1" for g in self.gens]

    def __repr__(self):
        return "<" + ", ".join(self.strings()) + ">"


def monomial_dimension(M: MonomialIdeal) -> int:
    """Krull dimension of ``R/M``: variables minus a minimum hitting set.

    Exhaustive branch-and-bound over the supports of the generators.
    """
    n = M.ring.nvars
    if M.is_unit():
        return -1
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in M.gens]
    # minimal supports suffice
    supports = [s for s in supports if not any(t < s for t in supports)]
    supports = sorted(set(supports), key=len)
    best = [len({i for s in supports for i in s})]

    def search(chosen: frozenset, size: int):
        if size >= best[0]:
            return
        for s in supports:
            if not (s & chosen):
                break
        else:
            best[0] = size
            return
        for v in sorted(s):
            search(chosen | {v}, size + 1)

    search(frozenset(), 0)
    return n - best[0]


def _monomials_of_degree(weights: tuple, d: int):
    n = len(weights)

    def rec(i, remaining, acc):
        if i == n:
            if remaining == 0:
                yield tuple(acc)
            return
        w = weights[i]
        for e in range(remaining // w + 1):
            acc.append(e)
            yield from rec(i + 1, remaining - e * w, acc)
            acc.pop()

    yield from rec(0, d, [])


def hilbert_function(M: MonomialIdeal, grading: Grading | None = None, dmax: int = 0) -> list:
    """Counts of standard monomials of ``R/M`` in weighted degrees ``0..dmax``."""
    grading = grading or M.ring.grading
    if grading is None or not grading.positive:
        raise ValueError("hilbert_function needs a positive grading")
    if dmax < 0:
        raise ValueError("dmax must be nonnegative")
    out = []
    for d in range(dmax + 1):
        out.append(sum(1 for m in _monomials_of_degree(grading.weights, d)
                       if not any(divides(g, m) for g in M.gens)))
    return out


# ---------------------------------------------------------------------------
# Ideals
# ---------------------------------------------------------------------------


class Ideal:
    """Ideal given by generators, with Gröbner bases cached per order."""

    def __init__(self, ring: PolynomialRing, gens=()):
        gens = [ring(g) if isinstance(g, str) else g for g in gens]
        _check_same_ring(ring, gens)
        self.ring = ring
        self.gens = tuple(g for g in gens if g)
        self._gb = {}
        self._reduced = {}

    def __repr__(self):
        return "Ideal<" + ", ".join(str(g) for g in self.gens) + ">"

    def __len__(self):
        return len(self.gens)

    def groebner_basis(self, order: MonomialOrder | None = None, reduced: bool = True) -> list:
        order = order or self.ring.order
        if order in self._reduced:
            return self._reduced[order]
        if not reduced:
            if order not in self._gb:
                if coprime_leads_gb_check(list(self.gens), order):
                    self._gb[order] = [monic(g, order) for g in self.gens]
                else:
                    self._gb[order] = buchberger(list(self.gens), order)
            return self._gb[order]
        G = buchberger(list(self.gens), order, reduced=True)
        self._reduced[order] = G
        return G

    def contains(self, f: Polynomial, order: MonomialOrder | None = None) -> bool:
        if isinstance(f, str):
            f = self.ring(f)
        if not f:
            return True
        G = self.groebner_basis(order, reduced=False)
        return not normal_form(f, G, order)

    def __contains__(self, f) -> bool:
        return self.contains(f)

    def contains_ideal(self, other: "Ideal", order=None) -> bool:
        return all(self.contains(g, order) for g in other.gens)

    def equals(self, other: "Ideal", order=None) -> bool:
        return self.contains_ideal(other, order) and other.contains_ideal(self, order)

    def is_unit(self) -> bool:
        return self.contains(self.ring.one)

    def is_zero(self) -> bool:
        return not self.gens

    def __add__(self, other):
        if isinstance(other, Polynomial):
            other = Ideal(self.ring, [other])
        if other.ring != self.ring:
            raise RingMismatchError("ideals live in different rings")
        return Ideal(self.ring, self.gens + other.gens)

    def change_ring(self, ring: PolynomialRing) -> "Ideal":
        return Ideal(ring, [g.change_ring(ring) for g in self.gens])


def ideal_member(f: Polynomial, I: Ideal, order: MonomialOrder | None = None) -> bool:
    return I.contains(f, order)


def ideal_equal(I: Ideal, J: Ideal, order: MonomialOrder | None = None) -> bool:
    return I.equals(J, order)


def initial_ideal(I: Ideal, order: MonomialOrder | None = None) -> MonomialIdeal:
    G = I.groebner_basis(order, reduced=False)
    return MonomialIdeal(I.ring, [leading_term(g, order)[0] for g in G])


def radical_certificate(I: Ideal, order: MonomialOrder | None = None) -> str:
    """``"radical_by_squarefree_initial"`` if ``in(I)`` is squarefree, else ``"unknown"``."""
    if initial_ideal(I, order).is_squarefree():
        return "radical_by_squarefree_initial"
    return "unknown"


def _fresh_name(ring: PolynomialRing, base="_t"):
    name = base
    while ring.has_variable(name):
        name += "_"
    return name


def _extend_with_greatest(ring: PolynomialRing, order: MonomialOrder | None, names: list):
    """Ring with ``names`` prepended and a lex order ranking them above ``order``."""
    order = order or ring.order
    k = len(names)
    big = PolynomialRing(list(names) + list(ring.variables), ring.field)
    priority = tuple(range(k)) + tuple(p + k for p in order.priority)
    return big, MonomialOrder(priority)


def _drop_leading(g: Polynomial, ring: PolynomialRing, k: int) -> Polynomial:
    return Polynomial(ring, {m[k:]: c for m, c in g.terms.items()})


def eliminate(I: Ideal, variables, order: MonomialOrder | None = None) -> Ideal:
    """``I ∩ K[remaining variables]`` using a lex order with ``variables`` greatest."""
    ring = I.ring
    _require_field(ring)
    order = order or ring.order
    elim = [ring.index(v) for v in variables]
    rest = [p for p in order.priority if p not in elim]
    elim_order = MonomialOrder(tuple(elim) + tuple(rest))
    G = buchberger(list(I.gens), elim_order, reduced=True)
    keep = [g for g in G if not any(g.degree_in(i) > 0 for i in elim)]
    return Ideal(ring, keep)


def ideal_intersection(I: Ideal, J: Ideal, order: MonomialOrder | None = None) -> Ideal:
    """``I ∩ J`` via ``t I + (1 - t) J`` with ``t`` eliminated."""
    if I.ring != J.ring:
        raise RingMismatchError("ideals live in different rings")
    ring = I.ring
    _require_field(ring)
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    t = _fresh_name(ring)
    big, big_order = _extend_with_greatest(ring, order, [t])
    T = big.var(t)
    gens = [T * g.change_ring(big) for g in I.gens]
    gens += [(big.one - T) * g.change_ring(big) for g in J.gens]
    G = buchberger(gens, big_order, reduced=True)
    keep = [_drop_leading(g, ring, 1) for g in G if g.degree_in(0) == 0]
    return Ideal(ring, keep)


def ideal_quotient(I: Ideal, f: Polynomial, order: MonomialOrder | None = None) -> Ideal:
    """``(I : f) = (1/f)(I ∩ <f>)``."""
    if not f:
        raise ValueError("cannot take the quotient by zero")
    if f.ring != I.ring:
        raise RingMismatchError("f is not in the ring of I")
    J = ideal_intersection(I, Ideal(I.ring, [f]), order)
    return Ideal(I.ring, [exact_quotient(g, f, order) for g in J.gens])
