"""Flag-variety charts, Hessenberg patch ideals and the chain ideals.

Chart variables are named by their matrix position ``(row, column)`` in
``wM``.  For the longest permutation ``w0`` these are the ``x[i,j]`` with
``i + j <= n``, listed row-major so that the ring's default lex order is the
order in which ``x[1,1] > x[1,2] > ... > x[2,1] > ...``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .poly import ZZ, Field, Grading, MonomialOrder, Polynomial, PolynomialRing


class HessenbergError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Permutations and Hessenberg functions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    """One-line notation ``(w(1), ..., w(n))``."""

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if sorted(self.values) != list(range(1, len(self.values) + 1)):
            raise HessenbergError(f"{list(self.values)} is not a permutation of [n]")

    @classmethod
    def w0(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Permutation":
        text = text.strip()
        if text == "w0":
            if n is None:
                raise HessenbergError("w0 needs n")
            return cls.w0(n)
        perm = cls(tuple(int(t) for t in text.replace("[", "").replace("]", "").split(",")))
        if n is not None and len(perm) != n:
            raise HessenbergError(f"permutation has length {len(perm)}, expected {n}")
        return perm

    def __len__(self):
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.values)
        for i, v in enumerate(self.values, start=1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    @property
    def is_longest(self) -> bool:
        return self.values == tuple(range(len(self.values), 0, -1))

    def contains_321(self) -> bool:
        """True iff some ``i < j < k`` has ``w(i) > w(j) > w(k)``."""
        v = self.values
        n = len(v)
        for j in range(1, n - 1):
            if any(v[i] > v[j] for i in range(j)) and any(v[k] < v[j] for k in range(j + 1, n)):
                return True
        return False

    def __str__(self):
        return "[" + ",".join(map(str, self.values)) + "]"


@dataclass(frozen=True)
class HessenbergFunction:
    values: tuple

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        n = len(vals)
        for i, v in enumerate(vals, start=1):
            if not i <= v <= n:
                raise HessenbergError(f"h({i}) = {v} must lie in [{i}, {n}]")
        if any(a > b for a, b in zip(vals, vals[1:])):
            raise HessenbergError(f"h = {list(vals)} is not nondecreasing")

    @classmethod
    def parse(cls, text: str) -> "HessenbergFunction":
        return cls(tuple(int(t) for t in text.replace("(", "").replace(")", "").split(",")))

    @classmethod
    def peterson(cls, n: int) -> "HessenbergFunction":
        return cls(tuple(min(i + 1, n) for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    @property
    def indecomposable(self) -> bool:
        return all(self(i) >= i + 1 for i in range(1, self.n))

    @property
    def is_full(self) -> bool:
        return all(v == self.n for v in self.values)

    def index_set(self) -> list:
        """``{(k, l) : k > h(l)}`` in bottom-to-top, left-to-right order."""
        n = self.n
        return [(k, l) for k in range(n, 0, -1) for l in range(1, n + 1) if k > self(l)]

    def __le__(self, other):
        return all(a <= b for a, b in zip(self.values, other.values))

    def __str__(self):
        return "(" + ",".join(map(str, self.values)) + ")"


def hessenberg_functions(n: int, indecomposable_only: bool = True) -> list:
    """All Hessenberg functions on ``[n]`` by brute-force enumeration."""
    out = []
    for vals in product(range(1, n + 1), repeat=n):
        try:
            h = HessenbergFunction(vals)
        except HessenbergError:
            continue
        if h.indecomposable or not indecomposable_only:
            out.append(h)
    return out


# ---------------------------------------------------------------------------
# Charts
# ---------------------------------------------------------------------------


def chart_variables(n: int, w: Permutation) -> list:
    """Positions ``(w(i), j)`` with ``i > j``, sorted row-major."""
    return sorted((w(i), j) for i in range(1, n + 1) for j in range(1, i))


def chart_grading(n: int) -> Grading:
    """Weight ``n + 1 - i - j`` on ``x[i,j]`` of the w0 chart."""
    return Grading(tuple(n + 1 - i - j for i, j in chart_variables(n, Permutation.w0(n))))


@lru_cache(maxsize=None)
def chart_ring(n: int, w: Permutation | None = None, field: Field = ZZ) -> PolynomialRing:
    w = w or Permutation.w0(n)
    grading = chart_grading(n) if w.is_longest else None
    return PolynomialRing(chart_variables(n, w), field, grading)


def order_n(n: int) -> MonomialOrder:
    """Lex order on the w0 chart: ``x[i,j] > x[i',j']`` iff ``(i, j) < (i', j')``."""
    return MonomialOrder(tuple(range(n * (n - 1) // 2)))


@dataclass
class ChartMatrix:
    n: int
    w: Permutation
    ring: PolynomialRing
    entries: list  # 0-based list of rows of Polynomial

    def __getitem__(self, pos):
        i, j = pos
        return self.entries[i - 1][j - 1]


def build_chart(n: int, w: Permutation | None = None, field: Field = ZZ) -> ChartMatrix:
    if n < 2:
        raise HessenbergError("n must be at least 2")
    w = w or Permutation.w0(n)
    if len(w) != n:
        raise HessenbergError(f"permutation length {len(w)} does not match n = {n}")
    ring = chart_ring(n, w, field)
    rows = [[ring.zero] * n for _ in range(n)]
    for i in range(1, n + 1):
        rows[w(i) - 1][i - 1] = ring.one
        for j in range(1, i):
            rows[w(i) - 1][j - 1] = ring.x(w(i), j)
    return ChartMatrix(n, w, ring, rows)


def mat_mul(a: list, b: list, ring: PolynomialRing) -> list:
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = ring.zero
            for t in range(k):
                if a[i][t] and b[t][j]:
                    acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def identity_matrix(n: int, ring: PolynomialRing) -> list:
    return [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]


def invert_chart(C: ChartMatrix) -> list:
    """``(wM)^{-1} = M^{-1} w^{-1}`` with ``M^{-1} = sum_k (-L)^k``.

    Returns a 0-based list of rows.
    """
    n, w, ring = C.n, C.w, C.ring
    # M[i][j] = (wM)[w(i)][j]
    M = [C.entries[w(i) - 1] for i in range(1, n + 1)]
    negL = [[-M[i][j] if i > j else ring.zero for j in range(n)] for i in range(n)]
    inv = identity_matrix(n, ring)
    power = identity_matrix(n, ring)
    for _ in range(1, n):
        power = mat_mul(power, negL, ring)
        inv = [[inv[i][j] + power[i][j] for j in range(n)] for i in range(n)]
    winv = w.inverse()
    # (M^{-1} W^T)[a][b] = M^{-1}[a][w^{-1}(b)]
    return [[inv[a][winv(b + 1) - 1] for b in range(n)] for a in range(n)]


def y_entry(C: ChartMatrix, i: int, j: int) -> Polynomial:
    """``y_{i,j}``: entry ``(n+1-i, n+1-j)`` of ``(w0 M)^{-1}``."""
    inv = invert_chart(C)
    return inv[C.n - i][C.n - j]


def determinant(mat: list, ring: PolynomialRing) -> Polynomial:
    """Laplace expansion along rows with memoisation on the remaining columns."""
    size = len(mat)
    memo = {}

    def minor(row: int, cols: tuple) -> Polynomial:
        if row == size:
            return ring.one
        key = (row, cols)
        if key in memo:
            return memo[key]
        acc = ring.zero
        for pos, c in enumerate(cols):
            entry = mat[row][c]
            if not entry:
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            if sub:
                term = entry * sub
                acc = acc - term if pos % 2 else acc + term
        memo[key] = acc
        return acc

    return minor(0, tuple(range(size)))


def cofactor_y(C: ChartMatrix, i: int, j: int) -> Polynomial:
    """``y_{i,j} = (-1)^{n(n-1)/2} (-1)^{i+j} det M'_{n+1-j, n+1-i}`` on the w0 chart."""
    n = C.n
    if not C.w.is_longest:
        raise HessenbergError("cofactor formula is stated for the w0 chart")
    if not (1 <= i <= n and 1 <= j <= n):
        raise HessenbergError(f"index ({i},{j}) out of range")
    drop_row, drop_col = n + 1 - j, n + 1 - i
    sub = [[C.entries[r][c] for c in range(n) if c != drop_col - 1]
           for r in range(n) if r != drop_row - 1]
    det = determinant(sub, C.ring)
    sign = (-1) ** (n * (n - 1) // 2) * (-1) ** (i + j)
    return det if sign > 0 else -det


# ---------------------------------------------------------------------------
# Generators f^w_{k,l}
# ---------------------------------------------------------------------------


def conjugated_nilpotent(C: ChartMatrix) -> list:
    """The full matrix ``(wM)^{-1} N (wM)`` (0-based rows)."""
    n, ring = C.n, C.ring
    inv = invert_chart(C)
    # (N A)[r] = A[r+1] for r < n, last row zero
    shifted = [C.entries[r + 1] for r in range(n - 1)] + [[ring.zero] * n]
    return mat_mul(inv, shifted, ring)


@dataclass
class PatchIdeal:
    n: int
    w: Permutation
    h: HessenbergFunction
    ring: PolynomialRing
    generators: dict  # (k, l) -> Polynomial, in bottom-to-top, left-to-right order
    matrix: list = field(repr=False, default=None)

    def entry(self, k: int, l: int) -> Polynomial:
        """Any entry of ``(wM)^{-1} N (wM)``, generator or not."""
        return self.matrix[k - 1][l - 1]

    def polys(self) -> list:
        return list(self.generators.values())

    def ideal(self, field: Field | None = None):
        from .groebner import Ideal
        from .poly import QQ
        ring = self.ring.change_field(field or QQ)
        return Ideal(ring, [g.change_ring(ring) for g in self.generators.values()])


@lru_cache(maxsize=None)
def _conjugated(n: int, w: Permutation, field: Field) -> tuple:
    C = build_chart(n, w, field)
    return C.ring, conjugated_nilpotent(C)


def hess_generators(n: int, w: Permutation | None, h: HessenbergFunction,
                    field: Field = ZZ) -> PatchIdeal:
    w = w or Permutation.w0(n)
    if h.n != n:
        raise HessenbergError(f"h has length {h.n}, expected {n}")
    ring, mat = _conjugated(n, w, field)
    gens = {(k, l): mat[k - 1][l - 1] for (k, l) in h.index_set()}
    return PatchIdeal(n, w, h, ring, gens, mat)


def f_entry(n: int, k: int, l: int, field: Field = ZZ) -> Polynomial:
    """``f^{w0}_{k,l}`` computed from the matrix product."""
    _, mat = _conjugated(n, Permutation.w0(n), field)
    return mat[k - 1][l - 1]


def recursion_f(n: int, k: int, l: int, field: Field = ZZ) -> Polynomial:
    """``f_{k,l} = x_{n+2-k,l} - sum_{p=l+1}^{k-1} x_{n+1-k,p} f_{p,l}``, ``f_{l+1,l} = 1``."""
    if k <= l + 1:
        raise HessenbergError("recursion needs k > l + 1")
    ring = chart_ring(n, Permutation.w0(n), field)

    @lru_cache(maxsize=None)
    def f(kk: int) -> Polynomial:
        if kk == l + 1:
            return ring.one
        acc = ring.x(n + 2 - kk, l)
        for p in range(l + 1, kk):
            acc = acc - ring.x(n + 1 - kk, p) * f(p)
        return acc

    return f(k)


def initial_variable(n: int, k: int, l: int) -> tuple:
    """The variable ``x_{n+1-k, l+1}`` leading ``f^{w0}_{k,l}`` under ``<_n``."""
    return (n + 1 - k, l + 1)


# ---------------------------------------------------------------------------
# Chain ideals I_{w0,h}(m)
# ---------------------------------------------------------------------------


def mu(h: HessenbergFunction) -> int:
    """``max{L : h(L) < n}``."""
    ls = [L for L in range(1, h.n + 1) if h(L) < h.n]
    if not ls:
        raise HessenbergError("mu(h) is undefined for h = (n,...,n)")
    return max(ls)


def chain_index_set(h: HessenbergFunction, m: int) -> list:
    """``H(h, m)`` in bottom-to-top, left-to-right order."""
    n = h.n
    bottom = [(n, l) for l in range(1, n + 1) if h(l) < n and l > m]
    upper = [(k, l) for k in range(n - 1, 0, -1) for l in range(1, n + 1) if h(l) < k]
    return bottom + upper


def _check_chain_args(h: HessenbergFunction, m: int | None = None):
    if not h.indecomposable:
        raise HessenbergError(f"h = {h} is decomposable")
    if h.is_full:
        raise HessenbergError("h = (n,...,n) is excluded (trivial Hessenberg variety)")
    if m is not None and not 0 <= m <= mu(h):
        raise HessenbergError(f"m = {m} outside [0, mu(h) = {mu(h)}]")


def chain_ideal(n: int, h: HessenbergFunction, m: int, field: Field | None = None):
    """``I_{w0,h}(m)`` as an :class:`~hesspatch.groebner.Ideal` (QQ by default)."""
    from .groebner import Ideal
    from .poly import QQ
    if h.n != n:
        raise HessenbergError(f"h has length {h.n}, expected {n}")
    _check_chain_args(h, m)
    ring = chart_ring(n, Permutation.w0(n), field or QQ)
    gens = [f_entry(n, k, l).change_ring(ring) for (k, l) in chain_index_set(h, m)]
    return Ideal(ring, gens)


def reduced_hessenberg(h: HessenbergFunction) -> HessenbergFunction:
    """``h-bar`` on ``[n-1]``: ``h(l)`` if ``h(l) < n`` else ``n - 1``."""
    n = h.n
    return HessenbergFunction(tuple(h(l) if h(l) < n else n - 1 for l in range(1, n)))


def relabel_up(f: Polynomial, n: int) -> Polynomial:
    """The embedding of the (n-1)-chart ring sending ``x[i,j]`` to ``x[i+1,j]``."""
    target = chart_ring(n, Permutation.w0(n), f.ring.field)
    return f.rename(target, lambda v: (v[0] + 1, v[1]))


def relabel_down(f: Polynomial, n: int) -> Polynomial:
    """Inverse of :func:`relabel_up`; ``f`` must avoid every row-1 variable."""
    for v in f.variables():
        if v[0] == 1:
            raise HessenbergError(f"{f} involves the row-1 variable x[1,{v[1]}]")
    target = chart_ring(n - 1, Permutation.w0(n - 1), f.ring.field)
    src = f.ring
    idx = [target.index((v[0] - 1, v[1])) if v[0] > 1 else None for v in src.variables]
    out = {}
    for mono, c in f.terms.items():
        new = [0] * target.nvars
        for i, e in zip(idx, mono):
            if e:
                new[i] = e
        out[tuple(new)] = c
    return target.from_dict(out)
