"""The single-vertex Moebius-Kantor census.

Exhaustive search for every way of wiring triangles onto one mk16 link,
followed by isomorphism rejection. Takes a few seconds.

Run:  python3 demos/03_census.py [jobs]
"""

from __future__ import annotations

import sys
from collections import Counter

from wiredcx import corpus
from wiredcx.enumerator import SearchConfig, enumerate_complexes
from wiredcx.graphs import builtin_graph
from wiredcx.isomorphism import canonical_key
from wiredcx.presentation import positively_orientable
from wiredcx.wired import LinkArrangement

jobs = int(sys.argv[1]) if len(sys.argv) > 1 else 1
arr = LinkArrangement((builtin_graph("mk16"),), ("mk16",))
run = enumerate_complexes(arr, SearchConfig(jobs=jobs))
print("\n".join(run.stats.as_lines()))

# Raw solutions fall into orbits under the 96 link automorphisms.
print("orbit sizes:", sorted(Counter(run.multiplicities).items()))

# Match every class against the bundled table V01..V27.
table = {canonical_key(corpus.load_v(i)): f"V{i:02d}" for i in range(1, 28)}
names = [table.get(canonical_key(wc), "?") for wc in run.complexes]
print("classes found:", " ".join(sorted(names)))

positive = sorted(n for n, wc in zip(names, run.complexes) if positively_orientable(wc))
print(f"positively orientable ({len(positive)}):", " ".join(positive))
