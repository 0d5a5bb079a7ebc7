"""Faces of a 3-dimensional cone and the divisor-closed submonoids they give.

Nine generators in N^3 span a cone with four extremal rays. Every face of
that cone picks out the generators lying on it, and those generators span a
divisor-closed submonoid. Run from the repository root:

    python demos/faces_and_dc.py
"""

import json
from pathlib import Path

from divclosed import AffineSemigroup, dc_lattice_affine, enumerate_faces

doc = json.loads((Path(__file__).parent / "data" / "nine_generators.json").read_text())
h = AffineSemigroup(doc["generators"])
cone = h.cone

print("extremal rays:", cone.rays)
print("facet normals (w . x >= 0 on the cone):")
for w in cone.facet_normals:
    print("   ", w)

faces = enumerate_faces(cone)
print(f"\n{len(faces.faces)} faces, by dimension:")
for face in faces.faces:
    print(f"    dim {face.dim}: rays {sorted(face.ray_indices)}")

dc = dc_lattice_affine(h)
print(f"\n{len(dc)} divisor-closed submonoids:")
for node in dc.nodes:
    gens = [h.generators[i] for i in sorted(node.generator_indices)]
    print("   ", sorted(node.generator_indices), gens)
print("Hasse edges:", list(dc.hasse_edges))
