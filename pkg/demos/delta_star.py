"""The set Delta*(H) of minimal distances, computed submonoid by submonoid.

For each divisor-closed submonoid S, min Delta(S) is the gcd of the
coordinate sums of a basis of the relation lattice of S. Here the top
submonoid has min Delta = 4, but the plane face spanned by the first three
generators is more rigid: its relations are multiples of (23, -22, 7),
whose coordinates add up to 8.

    python demos/delta_star.py
"""

import json
from pathlib import Path

from divclosed import AffineSemigroup, MonoidPresentation, delta_star

doc = json.loads((Path(__file__).parent / "data" / "plane.json").read_text())
h = AffineSemigroup(doc["generators"])

print("relation lattice of H:", MonoidPresentation.from_affine(h).lattice.basis)
report = delta_star(h)
for node, d in report.per_submonoid:
    print(f"    {sorted(node.generator_indices)!s:18} min Delta = {d}")
print("Delta*(H) =", list(report.delta_star))
