"""Rational polyhedral cones spanned by nonnegative integer vectors.

Facet normals follow the convention ``f . x >= 0`` on the cone. All rays and
normals are primitive integer vectors, so no rational arithmetic leaks out of
this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .lattice import IntVector, dot, hnf, kernel_basis, primitive, rank


def _solve_unit_columns(rows: list[IntVector]) -> list[IntVector]:
    """Columns of ``rows^-1`` scaled to primitive integer vectors."""
    k = len(rows)
    aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(k)]
           for i, r in enumerate(rows)]
    for c in range(k):
        piv = next(i for i in range(c, k) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(k):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    cols = []
    for j in range(k):
        col = [aug[i][k + j] for i in range(k)]
        den = lcm(*(x.denominator for x in col))
        cols.append(primitive([int(x * den) for x in col]))
    return cols


def extreme_rays(constraints: Iterable[Sequence[int]], k: int) -> list[IntVector]:
    """Extreme rays of the pointed cone ``{x in Q^k : c . x >= 0}``.

    Double description: start from the simplicial cone cut out by the first
    ``k`` independent constraints, then insert the remaining constraints in
    order. Two rays are combined only when they are adjacent, i.e. their
    common active constraints have rank ``k - 2``.

    Raises ``ValueError`` if the constraints do not span Q^k (the cone would
    contain a line).
    """
    cons = [tuple(c) for c in constraints if any(c)]
    if k == 0:
        return []
    chosen: list[int] = []
    for i, c in enumerate(cons):
        if rank([cons[j] for j in chosen] + [c]) > len(chosen):
            chosen.append(i)
            if len(chosen) == k:
                break
    if len(chosen) < k:
        raise ValueError("constraints do not define a pointed cone")

    base = [cons[i] for i in chosen]
    rays: list[tuple[IntVector, frozenset[int]]] = []
    for j, r in enumerate(_solve_unit_columns(base)):
        rays.append((r, frozenset(chosen[:j] + chosen[j + 1:])))

    chosen_set = set(chosen)
    for i, c in enumerate(cons):
        if i in chosen_set:
            continue
        pos, zero, neg = [], [], []
        for r, z in rays:
            v = dot(c, r)
            if v > 0:
                pos.append((r, z, v))
            elif v < 0:
                neg.append((r, z, v))
            else:
                zero.append((r, z | {i}))
        nxt = [(r, z) for r, z, _ in pos] + zero
        for rp, zp, vp in pos:
            for rn, zn, vn in neg:
                common = zp & zn
                if len(common) < k - 2 or rank([cons[j] for j in common]) != k - 2:
                    continue
                new = primitive([vp * a - vn * b for a, b in zip(rn, rp)])
                nxt.append((new, common | {i}))
        rays = nxt
    return sorted({r for r, _ in rays})


@dataclass(frozen=True)
class Cone:
    """The cone ``Q+ g_1 + ... + Q+ g_p``.

    ``facet_normals`` describe the cone inside its linear span; ``equations``
    are integer vectors orthogonal to the span (so the full inequality
    description is the facets plus each equation with both signs, see
    :meth:`inequalities`).
    """

    ambient_dim: int
    generators: tuple[IntVector, ...]
    rays: tuple[IntVector, ...]
    facet_normals: tuple[IntVector, ...]
    equations: tuple[IntVector, ...]
    dim: int

    def inequalities(self) -> list[IntVector]:
        neg = [tuple(-x for x in e) for e in self.equations]
        return list(self.facet_normals) + list(self.equations) + neg

    def contains(self, x: Sequence[int]) -> bool:
        return (all(dot(f, x) >= 0 for f in self.facet_normals)
                and all(dot(e, x) == 0 for e in self.equations))

    def facet_rays(self, facet: int) -> frozenset[int]:
        f = self.facet_normals[facet]
        return frozenset(i for i, r in enumerate(self.rays) if dot(f, r) == 0)

    def facet_generators(self, facet: int) -> frozenset[int]:
        f = self.facet_normals[facet]
        return frozenset(i for i, g in enumerate(self.generators) if dot(f, g) == 0)


def cone_from_generators(gens: Iterable[Sequence[int]], ambient_dim: int | None = None) -> Cone:
    gens = tuple(tuple(int(x) for x in g) for g in gens)
    if gens:
        n = len(gens[0])
        if ambient_dim is not None and ambient_dim != n:
            raise ValueError(f"generators have length {n}, expected {ambient_dim}")
    elif ambient_dim is None:
        raise ValueError("ambient_dim is required when there are no generators")
    else:
        n = ambient_dim
    for g in gens:
        if len(g) != n:
            raise ValueError(f"generator {g} does not have length {n}")
        if any(x < 0 for x in g):
            raise ValueError(f"generator {g} has a negative coordinate")

    equations = kernel_basis(gens, n).basis if gens else tuple(
        tuple(int(i == j) for j in range(n)) for i in range(n))
    h, _ = hnf(gens, n)
    span = [tuple(r) for r in h if any(r)]
    k = len(span)
    if k == 0:
        return Cone(n, gens, (), (), equations, 0)

    # facets of the cone are the rays of its dual taken inside the span
    coords = [tuple(dot(w, g) for w in span) for g in gens if any(g)]
    facets = []
    for lam in extreme_rays(coords, k):
        f = [sum(l * w[t] for l, w in zip(lam, span)) for t in range(n)]
        facets.append(primitive(f))
    facets = sorted(set(facets))

    rays = set()
    for g in gens:
        if not any(g):
            continue
        active = [f for f in facets if dot(f, g) == 0]
        if rank(active) == k - 1:
            rays.add(primitive(g))
    return Cone(n, gens, tuple(sorted(rays)), tuple(facets), equations, k)


@dataclass(frozen=True)
class Face:
    active_facets: frozenset[int]
    generator_indices: frozenset[int]
    ray_indices: frozenset[int]
    dim: int

    def supporting_functional(self, cone: Cone) -> IntVector:
        """A vector ``w`` with ``w . x <= 0`` on the cone and ``= 0`` exactly on the face."""
        w = [0] * cone.ambient_dim
        for i in self.active_facets:
            w = [a - b for a, b in zip(w, cone.facet_normals[i])]
        return tuple(w)


@dataclass(frozen=True)
class FaceLattice:
    faces: tuple[Face, ...]
    hasse_edges: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.faces)


def _face_from_rays(cone: Cone, ray_set: frozenset[int]) -> Face:
    active = frozenset(i for i in range(len(cone.facet_normals))
                       if ray_set <= cone.facet_rays(i))
    gens = frozenset(j for j, g in enumerate(cone.generators)
                     if all(dot(cone.facet_normals[i], g) == 0 for i in active))
    return Face(active, gens, ray_set, rank([cone.rays[i] for i in ray_set]))


def hasse_diagram(sets: Sequence[frozenset[int]]) -> list[tuple[int, int]]:
    """Covering pairs ``(i, j)`` with ``sets[i]`` a maximal proper subset of ``sets[j]``."""
    edges = []
    for j, upper in enumerate(sets):
        below = [i for i, s in enumerate(sets) if s < upper]
        for i in below:
            if not any(sets[i] < sets[m] for m in below):
                edges.append((i, j))
    return sorted(edges)


def enumerate_faces(cone: Cone) -> FaceLattice:
    """All faces, closing the whole cone under intersection with facets."""
    top = frozenset(range(len(cone.rays)))
    seen = {top}
    stack = [top]
    facet_sets = [cone.facet_rays(i) for i in range(len(cone.facet_normals))]
    while stack:
        cur = stack.pop()
        for fs in facet_sets:
            nxt = cur & fs
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    faces = sorted((_face_from_rays(cone, s) for s in seen),
                   key=lambda f: (f.dim, sorted(f.generator_indices), sorted(f.ray_indices)))
    edges = hasse_diagram([f.ray_indices for f in faces])
    return FaceLattice(tuple(faces), tuple(edges))


def smallest_face(cone: Cone, points: Iterable[Sequence[int]]) -> Face:
    """The smallest face containing all ``points`` (which must lie in the cone)."""
    points = [tuple(x) for x in points]
    active = frozenset(i for i, f in enumerate(cone.facet_normals)
                       if all(dot(f, x) == 0 for x in points))
    ray_set = frozenset(r for r in range(len(cone.rays))
                        if all(r in cone.facet_rays(i) for i in active))
    return _face_from_rays(cone, ray_set)


def is_simplicial(cone: Cone) -> bool:
    return len(cone.rays) == cone.dim
