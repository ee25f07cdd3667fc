"""From wired complexes to presentation complexes and back to links.

Run:  python3 demos/04_presentations.py
"""

from __future__ import annotations

from wiredcx import corpus
from wiredcx.graphs import builtin_graph, graphs_isomorphic
from wiredcx.presentation import PresentationComplex, infer_vertices, links_of, wire_labels, wired_to_presentation

wc = corpus.get("conv-8").load()
p = wired_to_presentation(wc)
# Edge labels are handed out in order of first appearance; the first wire
# seen on a class fixes the edge's direction.
print("presentation:", p.format_words())
for label, wire in wire_labels(wc).items():
    print(f"  edge {label} = wire {wire}")

# Forget the vertices and recover them from the words alone.
bare = PresentationComplex(p.edge_count, p.faces)
print("inferred vertex count:", len(set(v for pair in infer_vertices(bare).values() for v in pair)))

# The link at the vertex, rebuilt from face corners, is the Moebius-Kantor graph again.
link = links_of(p).links[0].graph
print("link:", link.n, "vertices,", len(link.edges), "edges;",
      "isomorphic to mk16:", graphs_isomorphic(link, builtin_graph("mk16")) is not None)
