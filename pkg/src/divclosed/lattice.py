"""Exact integer linear algebra over Z.

Matrices are plain lists of row lists holding Python ints, so every
computation is arbitrary precision. Subgroups of Z^p are stored as
:class:`LatticeBasis` objects whose rows are kept in row Hermite normal
form, which makes equality of subgroups a plain ``==`` on the basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

IntMatrix = list[list[int]]
IntVector = tuple[int, ...]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(u, v))


def primitive(v: Sequence[int]) -> IntVector:
    """Divide ``v`` by the gcd of its coordinates (sign is kept)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def det(m: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss elimination)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank(rows: Iterable[Sequence[int]]) -> int:
    """Rank over Q of the given rows."""
    work = [[Fraction(x) for x in r] for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        p = work[r][c]
        for i in range(r + 1, len(work)):
            f = work[i][c]
            if f:
                f /= p
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return r


def _shape(m: Sequence[Sequence[int]], ncols: int | None) -> tuple[int, int]:
    nrows = len(m)
    if nrows:
        width = len(m[0])
        if any(len(row) != width for row in m):
            raise ValueError("ragged matrix")
        if ncols is not None and ncols != width:
            raise ValueError(f"expected {ncols} columns, got {width}")
        return nrows, width
    return 0, ncols or 0


def hnf(m: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns ``(h, u)`` with ``u`` unimodular and ``u @ m == h``. Pivots of
    ``h`` are positive, entries above a pivot lie in ``[0, pivot)`` and zero
    rows come last.
    """
    nrows, width = _shape(m, ncols)
    h = [list(row) for row in m]
    u = identity(nrows)

    def sub(i: int, k: int, q: int) -> None:
        # row_i -= q * row_k, mirrored on the transform
        h[i] = [x - q * y for x, y in zip(h[i], h[k])]
        u[i] = [x - q * y for x, y in zip(u[i], u[k])]

    p = 0
    for c in range(width):
        if p == nrows:
            break
        while True:
            live = [i for i in range(p, nrows) if h[i][c] != 0]
            if not live:
                break
            best = min(live, key=lambda i: abs(h[i][c]))
            h[p], h[best] = h[best], h[p]
            u[p], u[best] = u[best], u[p]
            clean = True
            for i in range(p + 1, nrows):
                if h[i][c]:
                    sub(i, p, h[i][c] // h[p][c])
                    if h[i][c]:
                        clean = False
            if clean:
                break
        if h[p][c] == 0:
            continue
        if h[p][c] < 0:
            h[p] = [-x for x in h[p]]
            u[p] = [-x for x in u[p]]
        for i in range(p):
            q = h[i][c] // h[p][c]
            if q:
                sub(i, p, q)
        p += 1
    return h, u


def snf(m: Sequence[Sequence[int]], ncols: int | None = None
        ) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``(s, u, v)`` with ``u @ m @ v == s``.

    ``u`` and ``v`` are unimodular and the diagonal of ``s`` is nonnegative
    with each entry dividing the next.
    """
    nrows, width = _shape(m, ncols)
    s = [list(row) for row in m]
    u = identity(nrows)
    v = identity(width)

    def row_axpy(i: int, k: int, q: int) -> None:
        s[i] = [x - q * y for x, y in zip(s[i], s[k])]
        u[i] = [x - q * y for x, y in zip(u[i], u[k])]

    def col_axpy(j: int, k: int, q: int) -> None:
        for row in s:
            row[j] -= q * row[k]
        for row in v:
            row[j] -= q * row[k]

    def swap_cols(a: int, b: int) -> None:
        for row in s:
            row[a], row[b] = row[b], row[a]
        for row in v:
            row[a], row[b] = row[b], row[a]

    t = 0
    while t < min(nrows, width):
        cands = [(abs(s[i][j]), i, j) for i in range(t, nrows)
                 for j in range(t, width) if s[i][j]]
        if not cands:
            break
        _, i, j = min(cands)
        s[t], s[i] = s[i], s[t]
        u[t], u[i] = u[i], u[t]
        swap_cols(t, j)
        dirty = False
        for i in range(t + 1, nrows):
            if s[i][t]:
                row_axpy(i, t, s[i][t] // s[t][t])
                dirty = dirty or s[i][t] != 0
        for j in range(t + 1, width):
            if s[t][j]:
                col_axpy(j, t, s[t][j] // s[t][t])
                dirty = dirty or s[t][j] != 0
        if dirty:
            continue
        piv = s[t][t]
        bad = next((i for i in range(t + 1, nrows)
                    if any(s[i][j] % piv for j in range(t + 1, width))), None)
        if bad is not None:
            row_axpy(t, bad, -1)
            continue
        if piv < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return s, u, v


def _canonical(dim: int, rows: Iterable[Sequence[int]]) -> tuple[IntVector, ...]:
    rows = [tuple(int(x) for x in r) for r in rows]
    for r in rows:
        if len(r) != dim:
            raise ValueError(f"vector {r} does not have length {dim}")
    h, _ = hnf(rows, dim)
    return tuple(tuple(r) for r in h if any(r))


@dataclass(frozen=True)
class LatticeBasis:
    """A subgroup of Z^dim given by generating rows.

    The rows are replaced by the nonzero rows of their Hermite normal form on
    construction, so two instances compare equal exactly when they generate
    the same subgroup.
    """

    dim: int
    basis: tuple[IntVector, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "basis", _canonical(self.dim, self.basis))

    @classmethod
    def full(cls, dim: int) -> "LatticeBasis":
        return cls(dim, tuple(identity(dim)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def is_trivial(self) -> bool:
        return not self.basis

    def __contains__(self, x: Sequence[int]) -> bool:
        x = list(x)
        if len(x) != self.dim:
            return False
        # HNF rows have strictly increasing pivots: reduce greedily.
        for row in self.basis:
            c = next(i for i, e in enumerate(row) if e)
            if x[c] % row[c]:
                return False
            q = x[c] // row[c]
            if q:
                x = [a - q * b for a, b in zip(x, row)]
        return not any(x)


@dataclass(frozen=True)
class EquationSystem:
    """Defining equations of a subgroup of Z^dim.

    ``congruences`` holds pairs ``(coeffs, d)`` meaning ``coeffs . x = 0 mod d``
    and ``equations`` holds rows ``a`` meaning ``a . x = 0``. Congruence
    coefficients are reduced into ``[0, d)``; congruences with ``d == 1`` or
    with all coefficients zero are dropped, as are zero equations.
    """

    dim: int
    congruences: tuple[tuple[IntVector, int], ...] = ()
    equations: tuple[IntVector, ...] = ()

    def __post_init__(self) -> None:
        congs = []
        for coeffs, d in self.congruences:
            d = int(d)
            if d < 1:
                raise ValueError(f"modulus must be positive, got {d}")
            if len(coeffs) != self.dim:
                raise ValueError(f"congruence {coeffs} does not have length {self.dim}")
            reduced = tuple(int(a) % d for a in coeffs)
            if d > 1 and any(reduced):
                congs.append((reduced, d))
        eqs = []
        for a in self.equations:
            if len(a) != self.dim:
                raise ValueError(f"equation {a} does not have length {self.dim}")
            a = tuple(int(x) for x in a)
            if any(a):
                eqs.append(a)
        object.__setattr__(self, "congruences", tuple(congs))
        object.__setattr__(self, "equations", tuple(eqs))

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.congruences)

    def is_empty(self) -> bool:
        return not self.congruences and not self.equations

    def satisfied_by(self, x: Sequence[int]) -> bool:
        return (all(dot(a, x) % d == 0 for a, d in self.congruences)
                and all(dot(a, x) == 0 for a in self.equations))


def kernel_basis(a: Sequence[Sequence[int]], ncols: int | None = None) -> LatticeBasis:
    """Basis of ``{x in Z^ncols : a @ x == 0}``.

    ``ncols`` is only needed when ``a`` has no rows.
    """
    _, width = _shape(a, ncols)
    at = transpose(a, width)
    h, u = hnf(at, len(a))
    return LatticeBasis(width, tuple(u[i] for i in range(width) if not any(h[i])))


def generators_to_equations(m: LatticeBasis) -> EquationSystem:
    """Defining congruences and equations of ``m`` via its Smith form.

    With ``U B V = D`` for the basis matrix ``B``, an integer vector ``x`` lies
    in ``m`` iff the i-th coordinate of ``x V`` is divisible by the i-th
    invariant factor (and vanishes past the rank).
    """
    p = m.dim
    s, _, v = snf(m.basis, p)
    congs, eqs = [], []
    for i in range(p):
        d = s[i][i] if i < len(s) else 0
        col = [v[k][i] for k in range(p)]
        if d == 0:
            eqs.append(col)
        elif d > 1:
            congs.append((tuple(col), d))
    h, _ = hnf(eqs, p)
    return EquationSystem(p, tuple(congs), tuple(tuple(r) for r in h if any(r)))


def equations_to_generators(system: EquationSystem) -> LatticeBasis:
    """The integer solution set of ``system`` as a lattice."""
    p = system.dim
    r = len(system.congruences)
    rows = []
    for i, (coeffs, d) in enumerate(system.congruences):
        slack = [0] * r
        slack[i] = -d
        rows.append(list(coeffs) + slack)
    for a in system.equations:
        rows.append(list(a) + [0] * r)
    ker = kernel_basis(rows, p + r)
    return LatticeBasis(p, tuple(row[:p] for row in ker.basis))


def lattice_intersect_coords(m: LatticeBasis, keep: Iterable[int]) -> LatticeBasis:
    """``m`` intersected with the coordinate subspace spanned by ``keep``.

    ``keep`` holds 0-based coordinate indices; the result stays in Z^dim.
    """
    keep = set(keep)
    if not keep <= set(range(m.dim)):
        raise ValueError(f"indices {sorted(keep)} out of range for dimension {m.dim}")
    if not m.basis:
        return m
    drop = [i for i in range(m.dim) if i not in keep]
    # coefficient vectors y with (y B)_i == 0 for every dropped i
    c_t = [[row[i] for row in m.basis] for i in drop]
    ys = kernel_basis(c_t, len(m.basis))
    return LatticeBasis(m.dim, tuple(matmul(ys.basis, m.basis))) if ys.basis else LatticeBasis(m.dim)


def lattice_equal(a: LatticeBasis, b: LatticeBasis) -> bool:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return a.basis == b.basis


def is_reduced(m: LatticeBasis | EquationSystem) -> bool:
    """True iff the only nonnegative vector in ``m`` is zero."""
    from .diophantine import DiophantineSystem, find_nonzero_solution

    system = m if isinstance(m, EquationSystem) else generators_to_equations(m)
    # congruences never obstruct: a multiple of any solution satisfies them
    return find_nonzero_solution(
        DiophantineSystem(system.dim, equalities=system.equations)) is None
