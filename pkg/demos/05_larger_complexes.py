"""Two larger complexes: the 7-vertex B2 example and a 24-vertex Moebius-Kantor complex.

Run:  python3 demos/05_larger_complexes.py
"""

from __future__ import annotations

from collections import Counter

from wiredcx import corpus
from wiredcx.graphs import builtin_graph
from wiredcx.presentation import links_of, verify_links

# The B2 complex is given as coloured triangles; colours are vertices.
b2 = corpus.get("b2-45").presentation()
ok, verdicts = verify_links(b2, {"k33": builtin_graph("k33"), "gq22": builtin_graph("gq22")})
print(f"B2: {b2.vertex_count} vertices, {len(b2.faces)} faces, {b2.edge_count} edges")
print("  link types:", dict(Counter(v.match for v in verdicts)), " all recognised:", ok)

# The large complex is only a list of 192 all-positive words; every vertex is inferred.
big = corpus.get("mk-192").presentation()
links = links_of(big).links
print(f"mk-192: {len(big.faces)} faces, {big.edge_count} edges, {big.vertex_count} vertices")
ok, verdicts = verify_links(big, {"mk16": builtin_graph("mk16")})
print("  every link is mk16:", ok, " link sizes:", sorted({(lk.graph.n, len(lk.graph.edges)) for lk in links}))
# Euler characteristic V - E + F of the quotient complex
print("  Euler characteristic:", big.vertex_count - big.edge_count + len(big.faces))
