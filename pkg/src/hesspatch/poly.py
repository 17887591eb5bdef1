"""Sparse multivariate polynomials over QQ, ZZ and prime fields.

A polynomial is an immutable map from exponent tuples to nonzero
coefficients.  Monomials are plain tuples of nonnegative integers, one slot
per ring variable.  Variables are arbitrary hashable names; Hessenberg chart
variables are ``(i, j)`` pairs and print as ``x[i,j]``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from operator import itemgetter

import numpy as np


class RingMismatchError(ValueError):
    """Raised when polynomials from different rings are combined."""


class PolynomialSyntaxError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Coefficient domains
# ---------------------------------------------------------------------------


class Field:
    """Coefficient domain descriptor.  Values are plain Python numbers."""

    name = "?"
    characteristic = 0
    is_field = True

    def __call__(self, value):
        raise NotImplementedError

    def div(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        return self.div(1, a)

    def format(self, c) -> str:
        return str(c)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


class RationalField(Field):
    name = "QQ"

    def __call__(self, value):
        if isinstance(value, int):
            return value
        value = Fraction(value)
        return value.numerator if value.denominator == 1 else value

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        q = Fraction(a) / b
        return q.numerator if q.denominator == 1 else q

    def inv(self, a):
        if a == 1 or a == -1:
            return int(a)
        return self.div(1, a)

    def format(self, c) -> str:
        c = Fraction(c)
        if c.denominator == 1:
            return str(c.numerator)
        return f"{c.numerator}/{c.denominator}"


class IntegerRing(Field):
    name = "ZZ"
    is_field = False

    def __call__(self, value):
        if isinstance(value, int):
            return value
        value = Fraction(value)
        if value.denominator != 1:
            raise ValueError(f"{value} is not an integer")
        return value.numerator

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in ZZ")
        q, r = divmod(a, b)
        if r:
            raise ValueError(f"{a} is not divisible by {b} in ZZ")
        return q


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def __call__(self, value):
        if isinstance(value, int):
            return value % self.p
        value = Fraction(value)
        return value.numerator * pow(value.denominator, -1, self.p) % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return a * pow(b, -1, self.p) % self.p


QQ = RationalField()
ZZ = IntegerRing()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_name(name: str) -> Field:
    """Parse ``QQ``, ``ZZ`` or ``GF(p)``."""
    name = name.strip()
    if name in ("QQ", "Q"):
        return QQ
    if name in ("ZZ", "Z"):
        return ZZ
    m = re.fullmatch(r"(?:GF|F)\(?\s*(\d+)\s*\)?", name)
    if m:
        return GF(int(m.group(1)))
    raise ValueError(f"unknown field {name!r}")


# ---------------------------------------------------------------------------
# Orders and gradings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonomialOrder:
    """Lexicographic order induced by a priority list of variable indices.

    ``priority[0]`` is the largest variable.
    """

    priority: tuple

    def __post_init__(self):
        if sorted(self.priority) != list(range(len(self.priority))):
            raise ValueError("priority must be a permutation of variable indices")

    @classmethod
    def lex(cls, ring: "PolynomialRing", variables=None) -> "MonomialOrder":
        """Lex order on ``ring``; ``variables`` lists names from largest down."""
        if variables is None:
            return cls(tuple(range(ring.nvars)))
        idx = [ring.index(v) for v in variables]
        if sorted(idx) != list(range(ring.nvars)):
            raise ValueError("variable list must name every ring variable exactly once")
        return cls(tuple(idx))

    @property
    def key(self):
        return _order_key(self.priority)

    def compare(self, a: tuple, b: tuple) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def variables(self, ring) -> list:
        return [ring.variables[i] for i in self.priority]


@lru_cache(maxsize=256)
def _order_key(priority: tuple):
    if priority == tuple(range(len(priority))):
        return _identity
    if len(priority) == 1:
        return _identity
    return itemgetter(*priority)


def _identity(m):
    return m


@dataclass(frozen=True)
class Grading:
    """Integer weight per variable."""

    weights: tuple

    @property
    def positive(self) -> bool:
        return all(w >= 1 for w in self.weights)

    def degree(self, mono: tuple) -> int:
        return sum(w * e for w, e in zip(self.weights, mono))


@dataclass(frozen=True)
class Inhomogeneous:
    """Returned by :func:`weighted_degree` for inhomogeneous input."""

    pairs: tuple  # ((mono_a, deg_a), (mono_b, deg_b)) witnesses

    def __repr__(self):
        return "inhomogeneous"


# ---------------------------------------------------------------------------
# Rings and polynomials
# ---------------------------------------------------------------------------


def format_variable(name) -> str:
    if isinstance(name, tuple):
        return "x[" + ",".join(str(i) for i in name) + "]"
    return str(name)


class PolynomialRing:
    """Polynomial ring over ``field`` in a fixed ordered list of variables.

    Two rings compare equal when their variable lists and fields agree; the
    optional grading and display order are metadata.
    """

    def __init__(self, variables, field: Field = QQ, grading: Grading | None = None,
                 order: MonomialOrder | None = None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be unique")
        self.field = field
        self.nvars = len(self.variables)
        self._index = {v: i for i, v in enumerate(self.variables)}
        if grading is not None and len(grading.weights) != self.nvars:
            raise ValueError("grading needs one weight per variable")
        self.grading = grading
        self.order = order or MonomialOrder(tuple(range(self.nvars)))
        self.modulus = field.characteristic
        self._zero_mono = (0,) * self.nvars

    def __eq__(self, other):
        return (isinstance(other, PolynomialRing) and self.variables == other.variables
                and self.field == other.field)

    def __hash__(self):
        return hash((self.variables, self.field))

    def __repr__(self):
        names = ", ".join(format_variable(v) for v in self.variables)
        return f"PolynomialRing([{names}], {self.field!r})"

    def index(self, name) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {format_variable(name)}") from None

    def has_variable(self, name) -> bool:
        return name in self._index

    def change_field(self, field: Field) -> "PolynomialRing":
        return PolynomialRing(self.variables, field, self.grading, self.order)

    def with_order(self, order: MonomialOrder) -> "PolynomialRing":
        return PolynomialRing(self.variables, self.field, self.grading, order)

    # constructors
    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {self._zero_mono: c} if c else {})

    def monomial(self, mono, coeff=1) -> "Polynomial":
        mono = tuple(mono)
        if len(mono) != self.nvars or any(e < 0 for e in mono):
            raise ValueError("bad exponent vector")
        c = self.field(coeff)
        return Polynomial(self, {mono: c} if c else {})

    def var(self, name) -> "Polynomial":
        i = self.index(name)
        mono = [0] * self.nvars
        mono[i] = 1
        return Polynomial(self, {tuple(mono): 1})

    def x(self, i: int, j: int) -> "Polynomial":
        return self.var((i, j))

    def gens(self) -> list:
        return [self.var(v) for v in self.variables]

    def from_dict(self, terms: dict) -> "Polynomial":
        """Build from ``{mono: coeff}`` coercing coefficients and pruning zeros."""
        out = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != self.nvars:
                raise ValueError("exponent vector has wrong length")
            c = self.field(c)
            if c:
                out[m] = c
        return Polynomial(self, out)

    def parse(self, text: str) -> "Polynomial":
        return parse_poly(text, self)

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value.change_ring(self)
        if isinstance(value, str):
            return parse_poly(value, self)
        return self.constant(value)


class Polynomial:
    """Immutable sparse polynomial.  ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolynomialRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # --- basic queries ---------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_mono in self.terms)

    def constant_term(self):
        return self.terms.get(self.ring._zero_mono, 0)

    def sorted_terms(self, order: MonomialOrder | None = None) -> list:
        """Terms descending under ``order`` (default: the ring's order)."""
        key = (order or self.ring.order).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def monomials(self, order=None) -> list:
        return [m for m, _ in self.sorted_terms(order)]

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def degree_in(self, var) -> int:
        i = var if isinstance(var, int) else self.ring.index(var)
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def support(self) -> set:
        """Indices of variables occurring in some term."""
        out = set()
        for m in self.terms:
            out.update(i for i, e in enumerate(m) if e)
        return out

    def variables(self) -> list:
        return [self.ring.variables[i] for i in sorted(self.support())]

    # --- comparison / hashing --------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == (self.ring.constant(other).terms)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # --- arithmetic ------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        return Polynomial(self.ring, _add_terms(self.terms, other.terms, 1, self.ring.modulus))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return Polynomial(self.ring, _add_terms(self.terms, other.terms, -1, self.ring.modulus))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        mod = self.ring.modulus
        if mod:
            return Polynomial(self.ring, {m: (-c) % mod for m, c in self.terms.items()})
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        return Polynomial(self.ring, _mul_terms(self.terms, other.terms, self.ring.modulus))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        c = self.ring.field(c)
        if not c:
            return self.ring.zero
        mod = self.ring.modulus
        if mod:
            return Polynomial(self.ring, {m: v * c % mod for m, v in self.terms.items()})
        return Polynomial(self.ring, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, mono: tuple, c) -> "Polynomial":
        """Multiply by the single term ``c * x^mono``."""
        mod = self.ring.modulus
        out = {}
        for m, v in self.terms.items():
            w = v * c % mod if mod else v * c
            if w:
                out[tuple(a + b for a, b in zip(m, mono))] = w
        return Polynomial(self.ring, out)

    # --- ring changes ----------------------------------------------------
    def change_ring(self, ring: PolynomialRing) -> "Polynomial":
        """Reinterpret in ``ring``: same variables by name, coefficients coerced."""
        if ring.variables == self.ring.variables:
            return ring.from_dict(self.terms)
        idx = [ring.index(v) for v in self.ring.variables]
        out = {}
        for m, c in self.terms.items():
            mono = [0] * ring.nvars
            for i, e in zip(idx, m):
                mono[i] = e
            out[tuple(mono)] = c
        return ring.from_dict(out)

    def rename(self, ring: PolynomialRing, mapping) -> "Polynomial":
        """Substitute variables by variables: ``mapping(name) -> name in ring``."""
        idx = [ring.index(mapping(v)) for v in self.ring.variables]
        out = {}
        for m, c in self.terms.items():
            mono = [0] * ring.nvars
            for i, e in zip(idx, m):
                mono[i] += e
            out[tuple(mono)] = c
        return ring.from_dict(out)

    def evaluate(self, values: dict):
        """Evaluate at ``{name: value}`` (all variables must be given)."""
        vals = [values[v] for v in self.ring.variables]
        total = 0
        for m, c in self.terms.items():
            t = c
            for v, e in zip(vals, m):
                if e:
                    t = t * v**e
            total += t
        return self.ring.field(total)

    # --- printing --------------------------------------------------------
    def format(self, order: MonomialOrder | None = None) -> str:
        return format_poly(self, order)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


def _add_terms(a: dict, b: dict, sign: int, mod: int) -> dict:
    out = dict(a)
    for m, c in b.items():
        v = out.get(m, 0) + (c if sign > 0 else -c)
        if mod:
            v %= mod
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


# products larger than this go through the packed numpy kernel (prime fields only)
_PACKED_THRESHOLD = 200_000


def _mul_terms(a: dict, b: dict, mod: int) -> dict:
    if len(a) < len(b):
        a, b = b, a
    if mod and mod < 1 << 20 and len(a) * len(b) > _PACKED_THRESHOLD:
        out = _mul_terms_packed(a, b, mod)
        if out is not None:
            return out
    if len(a) * len(b) > 64:
        return _mul_terms_intkeys(a, b, mod)
    out = {}
    get = out.get
    for mb, cb in b.items():
        for ma, ca in a.items():
            m = tuple([x + y for x, y in zip(ma, mb)])
            out[m] = get(m, 0) + ca * cb
    if mod:
        return {m: c % mod for m, c in out.items() if c % mod}
    return {m: c for m, c in out.items() if c}


def _field_shifts(top) -> list:
    shifts, s = [], 0
    for t in top:
        shifts.append(s)
        s += max(1, int(t).bit_length())
    return shifts


def _mul_terms_intkeys(a: dict, b: dict, mod: int) -> dict:
    """Dict product with exponent vectors packed into Python ints (no overflow)."""
    nv = len(next(iter(a)))
    top = [max(m[i] for m in a) + max(m[i] for m in b) for i in range(nv)]
    shifts = _field_shifts(top)
    pa = [(sum(e << s for e, s in zip(m, shifts)), c) for m, c in a.items()]
    pb = [(sum(e << s for e, s in zip(m, shifts)), c) for m, c in b.items()]
    out = {}
    get = out.get
    for kb, cb in pb:
        for ka, ca in pa:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    masks = [(1 << max(1, int(t).bit_length())) - 1 for t in top]
    res = {}
    for k, c in out.items():
        if mod:
            c %= mod
        if c:
            res[tuple([(k >> s) & mk for s, mk in zip(shifts, masks)])] = c
    return res


def _mul_terms_packed(a: dict, b: dict, mod: int, chunk: int = 4_000_000):
    """Exact product over GF(mod) with exponent vectors packed into int64 keys.

    Returns ``None`` when the exponents do not fit in 62 bits.
    """
    nv = len(next(iter(a)))
    if nv == 0:
        return None
    A = np.array(list(a), dtype=np.int64).reshape(len(a), nv)
    B = np.array(list(b), dtype=np.int64).reshape(len(b), nv)
    top = A.max(axis=0) + B.max(axis=0)
    widths = np.array([max(1, int(t).bit_length()) for t in top], dtype=np.int64)
    if widths.sum() > 62:
        return None
    shifts = np.concatenate([[0], np.cumsum(widths[:-1])]).astype(np.int64)
    ka = (A << shifts).sum(axis=1)
    kb = (B << shifts).sum(axis=1)
    ca = np.array([c % mod for c in a.values()], dtype=np.int64)
    cb = np.array([c % mod for c in b.values()], dtype=np.int64)
    keys = np.empty(0, dtype=np.int64)
    vals = np.empty(0, dtype=np.int64)
    rows = max(1, chunk // len(ka))
    for s in range(0, len(kb), rows):
        k = (kb[s:s + rows, None] + ka[None, :]).ravel()
        v = (cb[s:s + rows, None] * ca[None, :]).ravel() % mod
        keys = np.concatenate([keys, k])
        vals = np.concatenate([vals, v])
        order = np.argsort(keys, kind="stable")
        keys, vals = keys[order], vals[order]
        starts = np.flatnonzero(np.concatenate([[True], keys[1:] != keys[:-1]]))
        keys = keys[starts]
        vals = np.add.reduceat(vals, starts) % mod
        nz = vals != 0
        keys, vals = keys[nz], vals[nz]
    masks = (np.int64(1) << widths) - 1
    E = (keys[:, None] >> shifts) & masks
    return {tuple(row): c for row, c in zip(E.tolist(), vals.tolist())}


# ---------------------------------------------------------------------------
# Leading terms, degrees
# ---------------------------------------------------------------------------


def leading_term(f: Polynomial, order: MonomialOrder | None = None):
    """Return ``(monomial, coefficient)`` of the order-largest term."""
    if not f.terms:
        raise ValueError("zero polynomial has no leading term")
    key = (order or f.ring.order).key
    m = max(f.terms, key=key)
    return m, f.terms[m]


def leading_monomial(f: Polynomial, order: MonomialOrder | None = None) -> tuple:
    return leading_term(f, order)[0]


def weighted_degree(f: Polynomial, grading: Grading | None = None):
    """Common weighted degree of all terms of ``f``.

    Returns ``None`` for the zero polynomial and an :class:`Inhomogeneous`
    report listing a witness pair of terms with different degrees otherwise.
    """
    grading = grading or f.ring.grading
    if grading is None:
        raise ValueError("no grading given")
    if not f.terms:
        return None
    first = None
    for m in sorted(f.terms):
        d = grading.degree(m)
        if first is None:
            first = (m, d)
        elif d != first[1]:
            return Inhomogeneous(((first[0], first[1]), (m, d)))
    return first[1]


def is_homogeneous(f: Polynomial, grading: Grading | None = None) -> bool:
    return isinstance(weighted_degree(f, grading), int) or f.is_zero()


def ring_arithmetic(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        if not isinstance(b, Polynomial) or a.ring != b.ring:
            raise RingMismatchError("operands live in different rings")
        return a * b
    raise ValueError(f"unknown op {op!r}")


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------


def format_monomial(ring: PolynomialRing, mono: tuple) -> str:
    parts = []
    for v, e in zip(ring.variables, mono):
        if e == 1:
            parts.append(format_variable(v))
        elif e > 1:
            parts.append(f"{format_variable(v)}^{e}")
    return "*".join(parts)


def format_poly(f: Polynomial, order: MonomialOrder | None = None) -> str:
    if not f.terms:
        return "0"
    field = f.ring.field
    out = []
    for i, (m, c) in enumerate(f.sorted_terms(order)):
        neg = field.characteristic == 0 and c < 0
        a = -c if neg else c
        mono = format_monomial(f.ring, m)
        if not mono:
            body = field.format(a)
        elif a == 1:
            body = mono
        else:
            body = f"{field.format(a)}*{mono}"
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"""
    \s*(?:
      (?P<num>\d+(?:\s*/\s*\d+)?)
    | (?P<var>[A-Za-z_]\w*\s*\[\s*\d+\s*(?:,\s*\d+\s*)*\]|[A-Za-z_]\w*)
    | (?P<op>[-+*^()])
    )""", re.VERBOSE)


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        pos = m.end()
        kind = m.lastgroup
        tokens.append((kind, m.group(kind)))
    return tokens


def _variable_name(token: str):
    token = re.sub(r"\s+", "", token)
    m = re.fullmatch(r"x\[(\d+(?:,\d+)*)\]", token)
    if m:
        return tuple(int(i) for i in m.group(1).split(","))
    return token


class _Parser:
    def __init__(self, tokens, ring):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise PolynomialSyntaxError(f"expected {op!r}, got {val!r}")

    def expr(self):
        kind, val = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                acc = acc + t if val == "+" else acc - t
            else:
                return acc

    def term(self):
        acc = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            elif kind in ("num", "var") or (kind == "op" and val == "("):
                raise PolynomialSyntaxError("implicit multiplication is not allowed; use '*'")
            else:
                return acc

    def factor(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val = self.take()
            if kind != "num" or "/" in val:
                raise PolynomialSyntaxError("exponent must be a nonnegative integer")
            base = base ** int(val)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            if "/" in val:
                a, b = (int(s) for s in val.split("/"))
                if b == 0:
                    raise PolynomialSyntaxError("zero denominator")
                c = Fraction(a, b)
            else:
                c = int(val)
            try:
                return self.ring.constant(c)
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"coefficient {val} is not in {self.ring.field!r}") from exc
        if kind == "var":
            name = _variable_name(val)
            if not self.ring.has_variable(name):
                raise KeyError(f"unknown variable {val}")
            return self.ring.var(name)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise PolynomialSyntaxError(f"unexpected token {val!r}")


def parse_poly(text: str, ring: PolynomialRing) -> Polynomial:
    """Parse the textual polynomial grammar (``x[i,j]``, ``a/b``, ``+ - * ^``)."""
    tokens = _tokenize(text)
    if not tokens:
        raise PolynomialSyntaxError("empty polynomial text")
    parser = _Parser(tokens, ring)
    result = parser.expr()
    if parser.pos != len(tokens):
        kind, val = parser.peek()
        if kind in ("num", "var") or val == "(":
            raise PolynomialSyntaxError("implicit multiplication is not allowed; use '*'")
        raise PolynomialSyntaxError(f"trailing input at token {val!r}")
    return result
