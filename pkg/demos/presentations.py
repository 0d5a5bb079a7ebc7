"""Monoids with torsion, given as quotients N^p / ~M.

Such a monoid need not be an affine semigroup, but it is the image of one
under a map that reduces some coordinates modulo fixed integers. The faces of
the affine model are candidates; a candidate is divisor closed in the
quotient only if its preimage under that map is still spanned by the
candidate's generators.

    python demos/presentations.py
"""

import json
from pathlib import Path

from divclosed import (
    LatticeBasis,
    MonoidPresentation,
    NotReducedError,
    build_affine_model,
    check_dc_projection,
    dc_lattice_affine,
    dc_lattice_presentation,
    delta_star,
)
from divclosed.cli import parse_input

data = Path(__file__).parent / "data"

for name in ("projection.json", "torsion.json"):
    pres = parse_input(json.loads((data / name).read_text()))
    model = build_affine_model(pres)
    print(f"== {name}")
    print("affine model generators:", model.h.generators)
    print("moduli:", model.moduli, " free rows:", model.k)
    for node in dc_lattice_affine(model.h).nodes:
        j = sorted(node.generator_indices)
        print(f"    face {j!s:14} divisor closed after projection: {check_dc_projection(model, j)}")
    lattice = dc_lattice_presentation(pres)
    print("divisor-closed submonoids:", [sorted(s) for s in lattice.index_sets()])
    print("Delta* =", list(delta_star(pres).delta_star))
    print()

# a presentation with units has unbounded sets of lengths and is rejected
units = MonoidPresentation(2, LatticeBasis(2, ((1, 1),)))
try:
    delta_star(units)
except NotReducedError as exc:
    print("M = <(1, 1)>:", exc)
