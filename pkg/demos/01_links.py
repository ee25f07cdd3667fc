"""Links: the graphs a vertex is allowed to see.

Run:  python3 demos/01_links.py
"""

from __future__ import annotations

from wiredcx.graphs import automorphisms, builtin_graph, girth, graph_info

# The Moebius-Kantor graph, numbered cyclically 0..15 by the LCF code [5,-5]^8:
# every vertex i is joined to i-1, i+1 and, alternately, i+5 / i-5.
mk = builtin_graph("mk16")
print("mk16:", graph_info(mk))
print("neighbours of 0:", mk.neighbors(0), " neighbours of 1:", mk.neighbors(1))

# Bipartite with girth 6 - this is what makes a complex with these links
# nonpositively curved when its triangles are equilateral.
print("bipartite:", mk.is_bipartite(), " girth:", girth(mk))

# Its symmetry group has 96 elements; the rotation i -> i+2 is one of them.
group = automorphisms(mk)
shift = tuple((i + 2) % 16 for i in range(16))
print("|Aut(mk16)| =", len(group), " shift by 2 is an automorphism:", shift in set(group))

# The other two link types used by the B2 example.
for name in ("k33", "gq22"):
    print(f"{name}:", graph_info(builtin_graph(name)))
