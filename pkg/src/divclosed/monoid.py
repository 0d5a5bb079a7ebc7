"""Divisor-closed submonoids, factorizations and sets of minimal distances.

Two kinds of input are handled:

* an :class:`AffineSemigroup`, i.e. a submonoid of N^n given by generators,
  whose divisor-closed submonoids are the intersections with the faces of its
  rational cone;
* a :class:`MonoidPresentation` N^p / ~M for a subgroup M of Z^p, which is
  first turned into an :class:`AffineModel` (an affine semigroup projecting
  onto the monoid) and whose divisor-closed submonoids are the images of the
  faces that survive :func:`check_dc_projection`.

Generator index sets are 0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterable, Sequence

from .cone import Cone, FaceLattice, cone_from_generators, enumerate_faces, hasse_diagram, smallest_face
from .diophantine import DiophantineSystem, exists_solution_with_support_outside, solution_cone_rays
from .lattice import (
    EquationSystem,
    IntVector,
    LatticeBasis,
    dot,
    equations_to_generators,
    generators_to_equations,
    is_reduced,
    kernel_basis,
    lattice_intersect_coords,
    rank,
    transpose,
)


class NotReducedError(ValueError):
    """The presentation has nontrivial units, so sets of lengths are unbounded."""


class InvariantError(RuntimeError):
    """An internal consistency check failed."""


@dataclass(frozen=True)
class AffineSemigroup:
    generators: tuple[IntVector, ...]

    def __post_init__(self) -> None:
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        if gens and len({len(g) for g in gens}) != 1:
            raise ValueError("generators have different lengths")
        for g in gens:
            if any(x < 0 for x in g):
                raise ValueError(f"generator {g} has a negative coordinate")
            if not any(g):
                raise ValueError("the zero vector is not allowed as a generator")
        object.__setattr__(self, "generators", gens)

    @property
    def ambient_dim(self) -> int:
        return len(self.generators[0]) if self.generators else 0

    @property
    def p(self) -> int:
        return len(self.generators)

    def value(self, x: Sequence[int]) -> IntVector:
        """The element ``sum x_j g_j``."""
        return tuple(sum(c * g[i] for c, g in zip(x, self.generators))
                     for i in range(self.ambient_dim))

    @cached_property
    def cone(self) -> Cone:
        return cone_from_generators(self.generators, self.ambient_dim)


@dataclass(frozen=True)
class MonoidPresentation:
    """The monoid N^p / ~M, where ``a ~M b`` iff ``a - b`` lies in M."""

    p: int
    relations: LatticeBasis | EquationSystem

    def __post_init__(self) -> None:
        if self.relations.dim != self.p:
            raise ValueError(f"relations live in Z^{self.relations.dim}, expected Z^{self.p}")

    @classmethod
    def from_affine(cls, h: AffineSemigroup) -> "MonoidPresentation":
        return cls(h.p, kernel_basis(transpose(h.generators, h.ambient_dim), h.p))

    @cached_property
    def lattice(self) -> LatticeBasis:
        if isinstance(self.relations, LatticeBasis):
            return self.relations
        return equations_to_generators(self.relations)

    @cached_property
    def equations(self) -> EquationSystem:
        if isinstance(self.relations, EquationSystem):
            return self.relations
        return generators_to_equations(self.relations)

    @cached_property
    def reduced(self) -> bool:
        return is_reduced(self.equations)

    def require_reduced(self) -> None:
        if not self.reduced:
            raise NotReducedError("not reduced: sets of lengths unbounded")


@dataclass(frozen=True)
class AffineModel:
    """Nonnegative integer matrix whose columns generate an affine semigroup
    ``h`` mapping onto the presented monoid.

    The first ``len(moduli)`` rows are read modulo the corresponding modulus,
    the last ``k`` rows are free.
    """

    a_matrix: tuple[IntVector, ...]
    moduli: tuple[int, ...]
    k: int
    h: AffineSemigroup
    witness_b: IntVector

    @property
    def r(self) -> int:
        return len(self.moduli)

    def project(self, v: Sequence[int]) -> IntVector:
        """The map pi: reduce the modular coordinates of ``v``."""
        return tuple(x % d for x, d in zip(v, self.moduli)) + tuple(v[self.r:])


@dataclass(frozen=True)
class DCSubmonoid:
    generator_indices: frozenset[int]
    face_ref: int | None = None


@dataclass(frozen=True)
class DCLattice:
    nodes: tuple[DCSubmonoid, ...]
    hasse_edges: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.nodes)

    def index_sets(self) -> list[frozenset[int]]:
        return [n.generator_indices for n in self.nodes]


@dataclass(frozen=True)
class DeltaStarReport:
    per_submonoid: tuple[tuple[DCSubmonoid, int | None], ...]
    delta_star: tuple[int, ...]


def _lattice_from_sets(sets: list[frozenset[int]], refs: list[int | None]) -> DCLattice:
    order = sorted(range(len(sets)), key=lambda i: (len(sets[i]), sorted(sets[i])))
    nodes = tuple(DCSubmonoid(sets[i], refs[i]) for i in order)
    edges = hasse_diagram([n.generator_indices for n in nodes])
    return DCLattice(nodes, tuple(edges))


def _face_lattice(h: AffineSemigroup) -> FaceLattice:
    if not h.generators:
        return FaceLattice((), ())
    return enumerate_faces(h.cone)


def dc_lattice_affine(h: AffineSemigroup) -> DCLattice:
    """One node per face of the cone of ``h``: the generators lying on it."""
    if not h.generators:
        return DCLattice((DCSubmonoid(frozenset()),), ())
    sets, refs = [], []
    for i, face in enumerate(_face_lattice(h).faces):
        if face.generator_indices not in sets:
            sets.append(face.generator_indices)
            refs.append(i)
    return _lattice_from_sets(sets, refs)


def _in_monoid(target: IntVector, gens: list[IntVector]) -> bool:
    @lru_cache(maxsize=None)
    def reach(t: IntVector, start: int) -> bool:
        if not any(t):
            return True
        for j in range(start, len(gens)):
            rest = tuple(a - b for a, b in zip(t, gens[j]))
            if min(rest) >= 0 and reach(rest, j):
                return True
        return False

    return reach(tuple(target), 0)


def is_divisor_closed_affine(h: AffineSemigroup, j: Iterable[int]) -> bool:
    """Whether the submonoid generated by ``{g_i : i in j}`` is divisor-closed.

    It is iff it equals F ∩ h for the smallest face F containing those
    generators, i.e. iff every generator of h on F already lies in it.
    """
    j = frozenset(j)
    if not j <= set(range(h.p)):
        raise ValueError(f"generator indices {sorted(j)} out of range")
    if not j:
        return True
    sub = [h.generators[i] for i in sorted(j)]
    face = smallest_face(h.cone, sub)
    return all(_in_monoid(h.generators[i], sub) for i in face.generator_indices - j)


def positive_witness(m: LatticeBasis) -> IntVector:
    """A vector with positive entries orthogonal to ``m``.

    It is the sum of the extreme rays of ``{b >= 0 : b . x = 0 for x in m}``
    and exists exactly when ``m`` meets N^p only in 0.
    """
    rays = solution_cone_rays(DiophantineSystem(m.dim, equalities=m.basis))
    b = tuple(sum(col) for col in zip(*rays)) if rays else (0,) * m.dim
    if any(x <= 0 for x in b):
        raise InvariantError(f"no positive vector orthogonal to {m.basis}")
    return b


def build_affine_model(pres: MonoidPresentation) -> AffineModel:
    """Rewrite the defining equations of M with nonnegative coefficients.

    Congruence rows are reduced into ``[0, d)``. A linear row with a negative
    entry gets the smallest multiple of ``witness_b`` that makes it
    nonnegative; rows that are already nonnegative are left alone.
    """
    pres.require_reduced()
    eqs = pres.equations
    b = positive_witness(pres.lattice)
    rows = [list(a) for a in eqs.equations]
    target_rank = rank(rows)
    for i, row in enumerate(rows):
        if min(row) >= 0:
            continue
        c = max(-(-(-x) // y) for x, y in zip(row, b) if x < 0)
        while True:
            cand = [x + c * y for x, y in zip(row, b)]
            if rank(rows[:i] + [cand] + rows[i + 1:]) == target_rank:
                rows[i] = cand
                break
            c += 1
    a_matrix = tuple(tuple(a) for a, _ in eqs.congruences) + tuple(tuple(r) for r in rows)
    cols = transpose(a_matrix, pres.p)
    if any(not any(col) for col in cols):
        raise InvariantError("zero column in a reduced presentation")
    h = AffineSemigroup(tuple(tuple(c) for c in cols))
    model = AffineModel(a_matrix, eqs.moduli, len(rows), h, b)
    if equations_to_generators(EquationSystem(
            pres.p, tuple(zip(a_matrix[:model.r], model.moduli)), a_matrix[model.r:])) != pres.lattice:
        raise InvariantError("normalized equations do not define M")
    return model


def _projection_system(model: AffineModel, j: Sequence[int]) -> DiophantineSystem:
    # unknowns: x_1..x_p, then y_i for i in j
    p = model.h.p
    eqs, congs = [], []
    for i, row in enumerate(model.a_matrix):
        coeffs = tuple(row) + tuple(-row[t] for t in j)
        if i < model.r:
            congs.append((coeffs, model.moduli[i]))
        else:
            eqs.append(coeffs)
    return DiophantineSystem(p + len(j), equalities=tuple(eqs), congruences=tuple(congs))


def _projection_closed(model: AffineModel, j: frozenset[int]) -> bool:
    j_sorted = sorted(j)
    system = _projection_system(model, j_sorted)
    return not exists_solution_with_support_outside(system, inside=j, block=range(model.h.p))


def check_dc_projection(model: AffineModel, j: Iterable[int]) -> bool:
    """Whether pi(S) is divisor-closed, for S the face submonoid of ``model.h``
    generated by the columns in ``j``.

    pi(S) is divisor-closed iff no element of H with the same image as an
    element of S lies off the face. With ``h = sum x_t a_t`` and
    ``s = sum_{t in j} y_t a_t`` this is a homogeneous system in ``(x, y)``;
    ``h`` is off the face iff ``x_t > 0`` for some ``t`` outside ``j``, which
    the Hilbert basis of the system decides.
    """
    j = frozenset(j)
    if j not in dc_lattice_affine(model.h).index_sets():
        raise ValueError(f"{sorted(j)} is not the generator set of a face")
    return _projection_closed(model, j)


def dc_lattice_presentation(pres: MonoidPresentation) -> DCLattice:
    model = build_affine_model(pres)
    affine = dc_lattice_affine(model.h)
    kept = [node for node in affine.nodes if _projection_closed(model, node.generator_indices)]
    return _lattice_from_sets([n.generator_indices for n in kept], [n.face_ref for n in kept])


def _as_presentation(monoid: MonoidPresentation | AffineSemigroup) -> MonoidPresentation:
    if isinstance(monoid, AffineSemigroup):
        return MonoidPresentation.from_affine(monoid)
    return monoid


def enumerate_factorizations(monoid: MonoidPresentation | AffineSemigroup,
                             x0: Sequence[int]) -> list[IntVector]:
    """All ``x`` in N^p with ``x - x0`` in M, sorted.

    ``b . x`` is constant on the set for the positive witness ``b``, which
    bounds the search to a finite simplex.
    """
    pres = _as_presentation(monoid)
    pres.require_reduced()
    x0 = tuple(int(v) for v in x0)
    if len(x0) != pres.p or min(x0, default=0) < 0:
        raise ValueError(f"{x0} is not a vector in N^{pres.p}")
    b = positive_witness(pres.lattice)
    total = dot(b, x0)
    m = pres.lattice
    found: list[IntVector] = []

    def walk(i: int, left: int, prefix: list[int]) -> None:
        if i == pres.p - 1:
            if left % b[i] == 0:
                x = tuple(prefix) + (left // b[i],)
                if tuple(u - v for u, v in zip(x, x0)) in m:
                    found.append(x)
            return
        for v in range(left // b[i] + 1):
            prefix.append(v)
            walk(i + 1, left - v * b[i], prefix)
            prefix.pop()

    if pres.p == 0:
        return [()]
    walk(0, total, [])
    return sorted(found)


def lengths(monoid: MonoidPresentation | AffineSemigroup, x0: Sequence[int]) -> list[int]:
    return sorted({sum(x) for x in enumerate_factorizations(monoid, x0)})


def delta_set_of_element(monoid: MonoidPresentation | AffineSemigroup,
                         x0: Sequence[int]) -> set[int]:
    ls = lengths(monoid, x0)
    return {b - a for a, b in zip(ls, ls[1:])}


def min_delta_submonoid(monoid: MonoidPresentation | AffineSemigroup,
                        j: Iterable[int]) -> int | None:
    """min Δ of the submonoid generated by the generators in ``j``.

    It is the gcd of the coordinate sums of a basis of M restricted to the
    coordinates in ``j``; ``None`` when that gcd is 0 (Δ is empty).
    """
    pres = _as_presentation(monoid)
    pres.require_reduced()
    g = 0
    for m in lattice_intersect_coords(pres.lattice, j).basis:
        g = gcd(g, sum(m))
    return g or None


def delta_star(monoid: MonoidPresentation | AffineSemigroup) -> DeltaStarReport:
    """The set of minimal distances together with the per-submonoid values."""
    if isinstance(monoid, AffineSemigroup):
        lattice = dc_lattice_affine(monoid)
    else:
        lattice = dc_lattice_presentation(monoid)
    pres = _as_presentation(monoid)
    per = tuple((node, min_delta_submonoid(pres, node.generator_indices)) for node in lattice.nodes)
    values = tuple(sorted({d for _, d in per if d is not None}))
    full = min_delta_submonoid(pres, range(pres.p))
    if values and values[0] != full:
        raise InvariantError(f"min of {values} differs from min Δ(H) = {full}")
    return DeltaStarReport(per, values)
