"""Factorizations, sets of lengths and Delta sets in the numerical
semigroup generated by 5 and 7, plus a lattice round trip.

35 = 7*5 = 5*7, so it has factorizations of lengths 7 and 5 and nothing in
between: Delta(35) = {2}. Neither <5> nor <7> is divisor closed, since 35
lies in both and has a factorization using the other generator.

    python demos/factorizations.py
"""

import json
from pathlib import Path

from divclosed import (
    AffineSemigroup,
    MonoidPresentation,
    dc_lattice_affine,
    delta_set_of_element,
    delta_star,
    enumerate_factorizations,
    equations_to_generators,
    generators_to_equations,
    lattice_equal,
)
from divclosed.monoid import lengths

doc = json.loads((Path(__file__).parent / "data" / "five_seven.json").read_text())
h = AffineSemigroup(doc["generators"])
x0 = doc["element"]

print("element:", h.value(x0))
print("factorizations:", enumerate_factorizations(h, x0))
print("lengths:", lengths(h, x0))
print("Delta:", delta_set_of_element(h, x0))
print("divisor-closed submonoids:", [sorted(s) for s in dc_lattice_affine(h).index_sets()])
print("Delta* =", list(delta_star(h).delta_star))

# equations of the relation lattice and back again
m = MonoidPresentation.from_affine(h).lattice
eqs = generators_to_equations(m)
print("\nrelations:", m.basis)
print("as equations:", eqs.equations, " congruences:", eqs.congruences)
print("round trip equal:", lattice_equal(equations_to_generators(eqs), m))
