"""Hilbert bases of homogeneous linear Diophantine systems over N.

A system mixes equalities ``a . x = 0``, inequalities ``a . x <= 0`` and
congruences ``a . x = 0 mod d``. Everything is reduced to a pure equality
system by adding nonnegative slack unknowns, whose minimal solutions are then
found with the Contejean-Devie completion procedure.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence

from .lattice import IntVector, dot, kernel_basis, primitive


@dataclass(frozen=True)
class DiophantineSystem:
    n: int
    equalities: tuple[IntVector, ...] = ()
    inequalities: tuple[IntVector, ...] = ()
    congruences: tuple[tuple[IntVector, int], ...] = ()

    def __post_init__(self) -> None:
        def norm(rows):
            out = []
            for a in rows:
                a = tuple(int(x) for x in a)
                if len(a) != self.n:
                    raise ValueError(f"row {a} does not have length {self.n}")
                out.append(a)
            return tuple(out)

        congs = []
        for a, d in self.congruences:
            if d < 1:
                raise ValueError(f"modulus must be positive, got {d}")
            (a,) = norm([a])
            if d > 1:
                congs.append((tuple(x % d for x in a), int(d)))
        object.__setattr__(self, "equalities", norm(self.equalities))
        object.__setattr__(self, "inequalities", norm(self.inequalities))
        object.__setattr__(self, "congruences", tuple(congs))

    def is_solution(self, x: Sequence[int]) -> bool:
        return (len(x) == self.n and all(v >= 0 for v in x)
                and all(dot(a, x) == 0 for a in self.equalities)
                and all(dot(a, x) <= 0 for a in self.inequalities)
                and all(dot(a, x) % d == 0 for a, d in self.congruences))


@dataclass(frozen=True)
class HilbertBasis:
    elements: tuple[IntVector, ...]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return tuple(x) in self.elements


def minimal_elements(vectors: Iterable[Sequence[int]]) -> list[IntVector]:
    """The componentwise-minimal vectors, sorted lexicographically."""
    vs = sorted(set(tuple(v) for v in vectors), key=lambda v: (sum(v), v))
    keep: list[IntVector] = []
    for v in vs:
        if not any(all(a <= b for a, b in zip(k, v)) for k in keep):
            keep.append(v)
    return sorted(keep)


def _contejean_devie(rows: list[IntVector], n: int) -> list[IntVector]:
    """Minimal nonzero solutions of ``rows @ x == 0`` over N^n."""
    cols = [tuple(r[j] for r in rows) for j in range(n)]
    zero = (0,) * len(rows)
    frontier: dict[IntVector, IntVector] = {}
    for j in range(n):
        e = tuple(int(i == j) for i in range(n))
        frontier[e] = cols[j]
    sols: list[IntVector] = []
    while frontier:
        # candidates of one total degree: a new solution cannot dominate another
        for x, ax in frontier.items():
            if ax == zero:
                sols.append(x)
        nxt: dict[IntVector, IntVector] = {}
        for x, ax in frontier.items():
            if ax == zero:
                continue
            for j in range(n):
                if dot(ax, cols[j]) >= 0:
                    continue
                y = x[:j] + (x[j] + 1,) + x[j + 1:]
                if y in nxt:
                    continue
                if any(all(a <= b for a, b in zip(s, y)) for s in sols):
                    continue
                nxt[y] = tuple(a + b for a, b in zip(ax, cols[j]))
        frontier = nxt
    return sols


def hilbert_basis(system: DiophantineSystem) -> HilbertBasis:
    """The irreducible nonzero solutions of ``system`` in N^n.

    Each inequality gets a slack ``s >= 0`` with ``a . x + s = 0``; each
    congruence (coefficients already reduced into ``[0, d)``, so ``a . x >= 0``)
    gets a slack ``t >= 0`` with ``a . x - d t = 0``. Slacks are functions of
    ``x``, so the extended solution monoid is isomorphic to the original one
    and its minimal solutions project onto the irreducibles.

    Without inequalities the result is exactly the set of componentwise
    minimal nonzero solutions. With inequalities it may contain comparable
    elements: for ``x1 <= x2`` both ``(0, 1)`` and ``(1, 1)`` are needed.
    """
    n = system.n
    n_ineq = len(system.inequalities)
    n_cong = len(system.congruences)
    width = n + n_ineq + n_cong
    rows: list[IntVector] = []
    for a in system.equalities:
        rows.append(a + (0,) * (n_ineq + n_cong))
    for i, a in enumerate(system.inequalities):
        slack = [0] * (n_ineq + n_cong)
        slack[i] = 1
        rows.append(a + tuple(slack))
    for i, (a, d) in enumerate(system.congruences):
        slack = [0] * (n_ineq + n_cong)
        slack[n_ineq + i] = -d
        rows.append(a + tuple(slack))
    rows = [r for r in rows if any(r)]

    if not rows:
        sols = [tuple(int(i == j) for i in range(width)) for j in range(width)]
    else:
        sols = _contejean_devie(rows, width)
    return HilbertBasis(tuple(sorted(s[:n] for s in sols)))


def cone_lattice_generators(a: Sequence[Sequence[int]], ncols: int | None = None) -> HilbertBasis:
    """Minimal generators of the monoid ``{x in N^n : a @ x <= 0}``."""
    n = len(a[0]) if a else ncols
    if n is None:
        raise ValueError("ncols is required when the matrix has no rows")
    return hilbert_basis(DiophantineSystem(n, inequalities=tuple(map(tuple, a))))


def exists_solution_with_support_outside(system: DiophantineSystem, inside: Iterable[int],
                                         block: Iterable[int] | None = None) -> bool:
    """Whether some solution has a positive coordinate in ``block`` but not in ``inside``.

    Solutions are N-sums of Hilbert basis elements, so such a solution exists
    iff some basis element has that support. Computing the basis is not
    needed, though: the system is homogeneous, so a rational solution
    ``x >= 0`` scaled by its denominator times the lcm of the moduli is an
    integer solution of everything, congruences included. The question is
    therefore decided on the extreme rays of the rational solution cone.
    ``block`` defaults to all unknowns; indices are 0-based.
    """
    inside = set(inside)
    block = set(range(system.n)) if block is None else set(block)
    forbidden = sorted(block - inside)
    if not forbidden:
        return False
    return any(any(r[j] > 0 for j in forbidden) for r in solution_cone_rays(system))


def solution_cone_rays(system: DiophantineSystem) -> list[IntVector]:
    """Extreme rays of the rational cone ``{x >= 0}`` cut out by the equalities
    and inequalities of ``system`` (congruences are ignored).

    The cone is parametrized by an integer basis of the equality kernel, where
    it is pointed, and its rays are found by double description.
    """
    from .cone import extreme_rays

    n = system.n
    ker = kernel_basis(system.equalities, n).basis
    if not ker:
        return []
    k = len(ker)
    cons = [tuple(row[i] for row in ker) for i in range(n)]
    for a in system.inequalities:
        cons.append(tuple(-dot(a, row) for row in ker))
    out = []
    for lam in extreme_rays(cons, k):
        out.append(primitive([sum(l * row[i] for l, row in zip(lam, ker)) for i in range(n)]))
    return sorted(out)


def find_nonzero_solution(system: DiophantineSystem) -> IntVector | None:
    """Some nonzero solution in N^n, or ``None`` if only zero solves ``system``."""
    rays = solution_cone_rays(system)
    if not rays:
        return None
    m = lcm(*(d for _, d in system.congruences)) if system.congruences else 1
    return tuple(m * x for x in rays[0])
