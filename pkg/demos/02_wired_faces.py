"""Wires, wired faces and the exact-cover condition.

Run:  python3 demos/02_wired_faces.py
"""

from __future__ import annotations

from wiredcx import corpus
from wiredcx.wired import PartialWiredComplex, corners, normalize_face, wires_compatible

v1 = corpus.load_v(1)
face = v1.faces[0]
print("first face of V01:", face)
# A corner joins the end of one wire to the start of the next; it must be a link edge.
print("its corners:", corners(face))

# Two sides of the complex may only coexist if they are the same CW edge
# (equal or inverse wires) or do not touch at all.
print("(1,0) ~ (0,1):", wires_compatible((1, 0), (0, 1)))
print("(1,0) ~ (1,5):", wires_compatible((1, 0), (1, 5)))

# Faces are stored up to rotation and reflection of the triangle.
print("normal form:", normalize_face(face))

# Adding the faces one at a time covers the 24 link edges exactly once.
p = PartialWiredComplex(v1.arrangement)
for f in v1.faces:
    p.add_face(f)
    print(f"  + {f}  uncovered edges left: {len(p.uncovered_edges())}")
print("complete:", p.is_complete())
print("wire classes (= CW edges):", p.wire_classes())
