"""Finite simple graphs used as prescribed vertex links.

Vertices are always ``0..n-1``. Besides the container type this module
ships builders for the link types that show up in practice (the
Moebius-Kantor graph, K_{3,3}, the incidence graph of the generalized
quadrangle GQ(2,2) and plain cycles), plus girth, automorphism group and
isomorphism routines sized for graphs with a few dozen vertices.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]

DEFAULT_AUT_BOUND = 10**6
INFINITE_GIRTH = math.inf


class CapacityError(RuntimeError):
    """Raised when an automorphism group exceeds the configured bound."""


def _edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset[Edge]
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise ValueError(f"edge ({a}, {b}) out of range for n={self.n}")
            normalized.add(_edge(a, b))
        object.__setattr__(self, "edges", frozenset(normalized))
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(x)) for x in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], name: str = "") -> Graph:
        """Build a graph, rejecting duplicate edges (simple graphs only)."""
        seen: set[Edge] = set()
        for a, b in edges:
            e = _edge(int(a), int(b))
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen), name)

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj  # type: ignore[attr-defined]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]  # type: ignore[attr-defined]

    def degree(self, v: int) -> int:
        return len(self._adj[v])  # type: ignore[attr-defined]

    def has_edge(self, a: int, b: int) -> bool:
        return _edge(a, b) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def regular_degree(self) -> int | None:
        """Common degree of all vertices, or ``None`` if irregular."""
        degs = {self.degree(v) for v in range(self.n)}
        if len(degs) == 1:
            return degs.pop()
        if not degs:
            return 0
        return None

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Image of the graph under the vertex map ``v -> perm[v]``."""
        return Graph(self.n, frozenset(_edge(perm[a], perm[b]) for a, b in self.edges), self.name)

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] >= 0:
                continue
            color[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.neighbors(u):
                    if color[w] < 0:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return False
        return True


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------

def lcf_graph(n: int, shifts: Sequence[int], repeats: int) -> Graph:
    """Hamiltonian cubic graph from LCF notation ``[shifts]^repeats``."""
    if len(shifts) * repeats != n:
        raise ValueError("LCF sequence length must equal the vertex count")
    edges = {_edge(i, (i + 1) % n) for i in range(n)}
    seq = list(shifts) * repeats
    for i, s in enumerate(seq):
        edges.add(_edge(i, (i + s) % n))
    return Graph(n, frozenset(edges))


def moebius_kantor() -> Graph:
    g = lcf_graph(16, [5, -5], 8)
    return Graph(g.n, g.edges, "mk16")


def complete_bipartite(p: int, q: int) -> Graph:
    edges = frozenset((i, p + j) for i in range(p) for j in range(q))
    return Graph(p + q, edges, f"k{p}{q}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, frozenset(_edge(i, (i + 1) % n) for i in range(n)), f"cycle:{n}")


def gq22_incidence() -> Graph:
    """Incidence graph of GQ(2,2) in its duad/syntheme model.

    Points are the 15 two-element subsets of {0..5}, lines the 15 perfect
    matchings of {0..5}; a point lies on a line when the pair belongs to
    the matching. Points come first, each block sorted lexicographically.
    """
    points = list(itertools.combinations(range(6), 2))
    lines = sorted(_perfect_matchings(tuple(range(6))))
    index = {p: i for i, p in enumerate(points)}
    edges = set()
    for j, matching in enumerate(lines):
        for pair in matching:
            edges.add((index[pair], len(points) + j))
    return Graph(len(points) + len(lines), frozenset(edges), "gq22")


def _perfect_matchings(items: tuple[int, ...]) -> Iterator[tuple[Edge, ...]]:
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for m in _perfect_matchings(remaining):
            yield ((first, partner),) + m


def builtin_graph(name: str) -> Graph:
    """Look up a named link graph: ``mk16``, ``k33``, ``gq22`` or ``cycle:n``."""
    if name == "mk16":
        return moebius_kantor()
    if name == "k33":
        return complete_bipartite(3, 3)
    if name == "gq22":
        return gq22_incidence()
    if name.startswith("cycle:"):
        try:
            n = int(name.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad cycle length in {name!r}") from None
        return cycle(n)
    raise ValueError(f"unknown graph name {name!r}")


def read_graph_file(path: str | Path) -> Graph:
    """Parse the ``graph <name> <n>`` / ``edge <a> <b>`` text format."""
    name = ""
    n: int | None = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "graph" and len(parts) == 3 and n is None:
            name, n = parts[1], int(parts[2])
        elif parts[0] == "edge" and len(parts) == 3 and n is not None:
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise ValueError(f"{path}:{lineno}: cannot parse {raw!r}")
    if n is None:
        raise ValueError(f"{path}: missing 'graph' header")
    return Graph.from_edges(n, edges, name)


def write_graph_file(g: Graph, path: str | Path) -> None:
    lines = [f"graph {g.name or 'g'} {g.n}"]
    lines += [f"edge {a} {b}" for a, b in g.sorted_edges()]
    Path(path).write_text("\n".join(lines) + "\n")


def resolve_graph(spec: str) -> Graph:
    """A builtin name, or otherwise a path to a graph file."""
    try:
        return builtin_graph(spec)
    except ValueError:
        if Path(spec).is_file():
            return read_graph_file(spec)
        raise


# ---------------------------------------------------------------------------
# Invariants
# ---------------------------------------------------------------------------

def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests.

    BFS from every root; a non-tree edge between levels d(u) and d(w)
    closes a cycle of length at most d(u) + d(w) + 1, and the minimum over
    all roots is exact.
    """
    best = INFINITE_GIRTH
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.neighbors(u):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w and parent[w] != u:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def _search_order(g: Graph) -> list[int]:
    """BFS order over all components so most vertices have an earlier neighbour."""
    order: list[int] = []
    seen = [False] * g.n
    for s in sorted(range(g.n), key=lambda v: (-g.degree(v), v)):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def _isomorphisms(g: Graph, h: Graph) -> Iterator[list[int]]:
    """Yield every vertex bijection carrying the edges of ``g`` onto those of ``h``."""
    if g.n != h.n or len(g.edges) != len(h.edges):
        return
    if sorted(map(g.degree, range(g.n))) != sorted(map(h.degree, range(h.n))):
        return
    n = g.n
    order = _search_order(g)
    # earlier-placed neighbours of each vertex in search order
    pos = {v: i for i, v in enumerate(order)}
    back = [[w for w in g.neighbors(v) if pos[w] < pos[v]] for v in order]
    image = [-1] * n
    used = [False] * n

    def extend(k: int) -> Iterator[list[int]]:
        if k == n:
            yield list(image)
            return
        v = order[k]
        if back[k]:
            candidates = h.neighbors(image[back[k][0]])
        else:
            candidates = range(n)
        for w in candidates:
            if used[w] or h.degree(w) != g.degree(v):
                continue
            ok = True
            for u in back[k]:
                if not h.has_edge(image[u], w):
                    ok = False
                    break
            if not ok:
                continue
            # non-edges to placed vertices must stay non-edges: degree counts
            # of placed neighbours already agree, so compare them
            placed_nbrs = sum(1 for x in h.neighbors(w) if used[x])
            if placed_nbrs != len(back[k]):
                continue
            image[v] = w
            used[w] = True
            yield from extend(k + 1)
            used[w] = False
            image[v] = -1

    yield from extend(0)


def automorphisms(g: Graph, bound: int = DEFAULT_AUT_BOUND) -> list[tuple[int, ...]]:
    """The full automorphism group, sorted lexicographically by image array.

    Raises:
        CapacityError: the group has more than ``bound`` elements.
    """
    group = []
    for perm in _isomorphisms(g, g):
        group.append(tuple(perm))
        if len(group) > bound:
            raise CapacityError(f"automorphism group of {g.name or 'graph'} exceeds {bound}")
    group.sort()
    return group


def graphs_isomorphic(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """An isomorphism ``g -> h`` as an image array, or ``None``."""
    for perm in _isomorphisms(g, h):
        return tuple(perm)
    return None


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """``p after q``: ``v -> p[q[v]]``."""
    return tuple(p[x] for x in q)


def invert(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def graph_info(g: Graph) -> dict[str, object]:
    deg = g.regular_degree()
    gir = girth(g)
    return {
        "vertices": g.n,
        "edges": len(g.edges),
        "regular": deg if deg is not None else "no",
        "girth": "inf" if gir == INFINITE_GIRTH else int(gir),
        "aut": len(automorphisms(g)),
    }
