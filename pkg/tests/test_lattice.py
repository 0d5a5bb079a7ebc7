import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divclosed.lattice import (
    EquationSystem,
    LatticeBasis,
    det,
    equations_to_generators,
    generators_to_equations,
    hnf,
    identity,
    is_reduced,
    kernel_basis,
    lattice_equal,
    lattice_intersect_coords,
    matmul,
    snf,
)

from oracles import box, dot, in_row_lattice, rational_rank

PLANE_GENS = [(5, 9, 0), (10, 11, 0), (15, 5, 0), (0, 0, 1), (10, 0, 1)]
PLANE_M = [(-2, 18, -36, -37, 37), (-23, 202, -403, -414, 414)]
PROJ_M = [(-5, -7, 5, 7), (12, 1, -1, -12), (-5, 0, 0, 5)]
TORSION_M = [(-4, -2, 4, 4), (5, 2, -5, -4), (2, 2, -2, -4)]

small_matrices = st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=0, max_size=4)
    .map(lambda rows: (rows, c)))


def gen_matrix_columns(cols):
    return [list(r) for r in zip(*cols)]


def test_hnf_identity():
    h, u = hnf(identity(2))
    assert h == identity(2) and u == identity(2)


def test_hnf_small_example():
    h, _ = hnf([[2, 4], [1, 1]])
    assert h == [[1, 1], [0, 2]]


def test_hnf_zero():
    h, u = hnf([[0, 0], [0, 0]])
    assert h == [[0, 0], [0, 0]]
    assert abs(det(u)) == 1


@given(small_matrices)
@settings(max_examples=150, deadline=None)
def test_hnf_properties(mc):
    m, c = mc
    h, u = hnf(m, c)
    assert abs(det(u)) == 1 if m else u == []
    if not m:
        return
    assert matmul(u, m) == h
    nonzero = [r for r in h if any(r)]
    # zero rows last, positive pivots, entries above each pivot reduced
    assert h[:len(nonzero)] == nonzero
    pivots = [next(j for j, v in enumerate(r) if v) for r in nonzero]
    assert pivots == sorted(set(pivots))
    for i, (r, p) in enumerate(zip(nonzero, pivots)):
        assert r[p] > 0
        for above in nonzero[:i]:
            assert 0 <= above[p] < r[p]
    # same row lattice, by mutual membership
    indep = [r for r in nonzero]
    assert rational_rank(m) == len(indep)
    for row in m:
        assert in_row_lattice(indep, row)


def test_snf_examples():
    s, u, v = snf([[2, 4], [6, 8]])
    assert s == [[2, 0], [0, 4]]
    assert abs(det(u)) == 1 and abs(det(v)) == 1
    assert snf([[0]]) == ([[0]], [[1]], [[1]])
    assert snf(identity(3))[0] == identity(3)


@given(small_matrices)
@settings(max_examples=150, deadline=None)
def test_snf_properties(mc):
    m, c = mc
    if not m:
        return
    s, u, v = snf(m, c)
    assert abs(det(u)) == 1 and abs(det(v)) == 1
    assert matmul(matmul(u, m), v) == s
    diag = [s[i][i] for i in range(min(len(m), c))]
    assert all(s[i][j] == 0 for i in range(len(m)) for j in range(c) if i != j)
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else b % a == 0


def test_kernel_examples():
    assert lattice_equal(kernel_basis([[5, 7]]), LatticeBasis(2, ((7, -5),)))
    assert kernel_basis(identity(3)).is_trivial
    assert lattice_equal(kernel_basis(gen_matrix_columns(PLANE_GENS)), LatticeBasis(5, PLANE_M))


@pytest.mark.parametrize("seed", range(25))
def test_kernel_against_box(seed):
    rng = random.Random(seed)
    c = rng.randint(2, 4)
    a = [[rng.randint(-3, 3) for _ in range(c)] for _ in range(rng.randint(1, 2))]
    k = kernel_basis(a, c)
    for r in k.basis:
        assert all(dot(row, r) == 0 for row in a)
    assert k.rank == c - rational_rank(a)
    rows = list(k.basis)
    for x in box(c, -4, 4):
        if all(dot(row, x) == 0 for row in a):
            assert in_row_lattice(rows, x)


def test_generators_to_equations_examples():
    sys1 = generators_to_equations(LatticeBasis(4, PROJ_M))
    listed1 = EquationSystem(4, (((8, 5, 1, 0), 10),), ((1, 1, 1, 1),))
    assert equations_to_generators(sys1) == equations_to_generators(listed1)
    assert sys1.moduli == (10,)

    sys2 = generators_to_equations(LatticeBasis(4, TORSION_M))
    listed2 = EquationSystem(4, (((0, 1, 0, 0), 2),), ((1, 0, 1, 0), (0, 2, 0, 1)))
    assert equations_to_generators(sys2) == equations_to_generators(listed2)

    assert generators_to_equations(LatticeBasis.full(2)).is_empty


def test_equations_to_generators_examples():
    assert equations_to_generators(EquationSystem(2)) == LatticeBasis.full(2)
    assert equations_to_generators(EquationSystem(2, (), ((1, 1),))) == LatticeBasis(2, ((1, -1),))
    listed1 = EquationSystem(4, (((8, 5, 1, 0), 10),), ((1, 1, 1, 1),))
    assert lattice_equal(equations_to_generators(listed1), LatticeBasis(4, PROJ_M))


def test_equation_system_normalizes():
    s = EquationSystem(2, (((12, -3), 5), ((4, 4), 1), ((0, 10), 5)), ((0, 0),))
    assert s.congruences == (((2, 2), 5),)
    assert s.equations == ()
    with pytest.raises(ValueError):
        EquationSystem(2, (((1, 1), 0),))


def random_lattice(rng, p, k, bound=10):
    return LatticeBasis(p, tuple(tuple(rng.randint(-bound, bound) for _ in range(p)) for _ in range(k)))


@pytest.mark.parametrize("seed", range(40))
def test_round_trip(seed):
    rng = random.Random(seed)
    m = random_lattice(rng, rng.randint(1, 5), rng.randint(0, 4))
    sys = generators_to_equations(m)
    assert lattice_equal(equations_to_generators(sys), m)
    for r in m.basis:
        assert sys.satisfied_by(r)


@pytest.mark.parametrize("seed", range(15))
def test_equations_membership_in_box(seed):
    rng = random.Random(100 + seed)
    p = rng.randint(1, 3)
    m = random_lattice(rng, p, rng.randint(1, 3), bound=4)
    sys = generators_to_equations(m)
    rows = list(m.basis)
    for x in box(p, -3, 3):
        assert sys.satisfied_by(x) == in_row_lattice(rows, x)


def test_intersect_examples():
    m = LatticeBasis(5, PLANE_M)
    assert lattice_equal(lattice_intersect_coords(m, [0, 1, 2]), LatticeBasis(5, ((23, -22, 7, 0, 0),)))
    assert lattice_intersect_coords(m, []).is_trivial
    assert lattice_intersect_coords(m, range(5)) == m
    with pytest.raises(ValueError):
        lattice_intersect_coords(m, [5])


@pytest.mark.parametrize("seed", range(20))
def test_intersect_against_box(seed):
    rng = random.Random(200 + seed)
    p = rng.randint(2, 4)
    m = random_lattice(rng, p, rng.randint(1, p), bound=3)
    keep = [i for i in range(p) if rng.random() < 0.6]
    got = lattice_intersect_coords(m, keep)
    for r in got.basis:
        assert r in m
        assert all(r[i] == 0 for i in range(p) if i not in keep)
    rows = list(got.basis)
    for x in box(p, -4, 4):
        if all(x[i] == 0 for i in range(p) if i not in keep) and x in m:
            assert in_row_lattice(rows, x)


def test_lattice_equal_examples():
    assert lattice_equal(LatticeBasis(2, ((7, -5),)), LatticeBasis(2, ((-7, 5),)))
    assert lattice_equal(LatticeBasis(2, ((1, 1), (0, 2))), LatticeBasis(2, ((2, 4), (1, 1))))
    assert not lattice_equal(LatticeBasis(2, ((1, 0),)), LatticeBasis(2, ((2, 0),)))
    with pytest.raises(ValueError):
        lattice_equal(LatticeBasis(2, ()), LatticeBasis(3, ()))


def test_is_reduced_examples():
    assert not is_reduced(LatticeBasis(2, ((1, 1),)))
    assert is_reduced(LatticeBasis(2, ()))
    assert is_reduced(LatticeBasis(2, ((7, -5),)))


@pytest.mark.parametrize("seed", range(30))
def test_is_reduced_against_box(seed):
    rng = random.Random(300 + seed)
    p = rng.randint(1, 3)
    m = random_lattice(rng, p, rng.randint(1, 2), bound=3)
    # a nonzero element of M in N^p has a small witness when entries are tiny
    found = any(any(x) and x in m for x in box(p, 0, 12))
    assert is_reduced(m) == (not found)
