"""Divisor-closed submonoids and sets of minimal distances of finitely
generated cancellative commutative monoids, in exact integer arithmetic."""

from .cone import Cone, Face, FaceLattice, cone_from_generators, enumerate_faces, is_simplicial
from .diophantine import (
    DiophantineSystem,
    HilbertBasis,
    cone_lattice_generators,
    exists_solution_with_support_outside,
    hilbert_basis,
)
from .lattice import (
    EquationSystem,
    LatticeBasis,
    equations_to_generators,
    generators_to_equations,
    hnf,
    is_reduced,
    kernel_basis,
    lattice_equal,
    lattice_intersect_coords,
    snf,
)
from .monoid import (
    AffineModel,
    AffineSemigroup,
    DCLattice,
    DCSubmonoid,
    DeltaStarReport,
    InvariantError,
    MonoidPresentation,
    NotReducedError,
    build_affine_model,
    check_dc_projection,
    dc_lattice_affine,
    dc_lattice_presentation,
    delta_set_of_element,
    delta_star,
    enumerate_factorizations,
    is_divisor_closed_affine,
    min_delta_submonoid,
)

__version__ = "0.1.0"
