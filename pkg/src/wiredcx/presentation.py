"""Presentation complexes: triangle faces as cyclic words in signed edge labels.

A side ``+e`` runs along edge ``e`` from its initial to its terminal end,
``-e`` the other way. Each edge has two *slots* (edge-ends), ``(e, 0)`` for
the initial end and ``(e, 1)`` for the terminal end; the link of a vertex
has the slots at that vertex as its vertices and one edge per face corner.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from scipy.cluster.hierarchy import DisjointSet

from .graphs import Graph, graphs_isomorphic
from .wired import Face, WiredComplex

Slot = tuple[int, int]
INITIAL, TERMINAL = 0, 1


class MalformedComplex(ValueError):
    pass


@dataclass
class PresentationComplex:
    edge_count: int
    faces: list[tuple[int, int, int]]
    # label -> (initial vertex, terminal vertex); None means "infer"
    vertices: dict[int, tuple[int, int]] | None = None

    def __post_init__(self) -> None:
        self.faces = [tuple(int(x) for x in w) for w in self.faces]  # type: ignore[misc]
        seen = set()
        for w in self.faces:
            if len(w) != 3:
                raise MalformedComplex(f"face {w} is not a triangle")
            for s in w:
                if s == 0 or abs(s) > self.edge_count:
                    raise MalformedComplex(f"label {s} outside 1..{self.edge_count}")
                seen.add(abs(s))
        missing = set(range(1, self.edge_count + 1)) - seen
        if missing:
            raise MalformedComplex(f"labels never used: {sorted(missing)[:5]}")
        if self.vertices is not None:
            for w in self.faces:
                for s, t in zip(w, w[1:] + w[:1]):
                    if self._end(s, self.vertices) != self._start(t, self.vertices):
                        raise MalformedComplex(f"sides {s}, {t} of face {w} do not meet")

    @staticmethod
    def _start(s: int, vertices: dict[int, tuple[int, int]]) -> int:
        init, term = vertices[abs(s)]
        return init if s > 0 else term

    @staticmethod
    def _end(s: int, vertices: dict[int, tuple[int, int]]) -> int:
        init, term = vertices[abs(s)]
        return term if s > 0 else init

    def with_vertices(self) -> PresentationComplex:
        if self.vertices is not None:
            return self
        return PresentationComplex(self.edge_count, self.faces, infer_vertices(self))

    @property
    def vertex_count(self) -> int:
        v = self.with_vertices().vertices
        assert v is not None
        return len({x for pair in v.values() for x in pair})

    def format_words(self) -> str:
        return "[" + ",".join("[" + ",".join(str(s) for s in w) + "]" for w in self.faces) + "]"


def end_slot(s: int) -> Slot:
    """Slot where side ``s`` arrives."""
    return (abs(s), TERMINAL if s > 0 else INITIAL)


def start_slot(s: int) -> Slot:
    """Slot where side ``s`` departs."""
    return (abs(s), INITIAL if s > 0 else TERMINAL)


def corner_slots(word: Sequence[int]) -> list[tuple[Slot, Slot]]:
    return [(end_slot(s), start_slot(t)) for s, t in zip(word, list(word[1:]) + [word[0]])]


def from_word_list(words: Sequence[Sequence[int]]) -> tuple[PresentationComplex, dict[int, int]]:
    """Build a presentation from all-positive words with arbitrary labels.

    Labels are renumbered ``1..m`` in increasing order; the mapping from the
    original labels is returned alongside.
    """
    labels = sorted({int(x) for w in words for x in w})
    if any(x < 0 for x in labels):
        raise MalformedComplex("word lists with raw labels must be all positive")
    mapping = {x: i + 1 for i, x in enumerate(labels)}
    faces = [tuple(mapping[int(x)] for x in w) for w in words]
    return PresentationComplex(len(labels), faces), mapping  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# Conversions
# ---------------------------------------------------------------------------

def wired_to_presentation(wc: WiredComplex) -> PresentationComplex:
    """Label wire classes in order of first occurrence.

    The first wire met on a class fixes its label and positive direction.
    Vertices are explicit: edge-end ``v`` sits at the CW vertex of its link.
    """
    arr = wc.arrangement
    label: dict[tuple[int, int], int] = {}
    faces = []
    vertices: dict[int, tuple[int, int]] = {}
    for f in wc.faces:
        word = []
        for a, b in f:
            if (a, b) in label:
                word.append(label[(a, b)])
            elif (b, a) in label:
                word.append(-label[(b, a)])
            else:
                e = len(vertices) + 1
                label[(a, b)] = e
                vertices[e] = (arr.owner[a], arr.owner[b])  # type: ignore[attr-defined]
                word.append(e)
        faces.append(tuple(word))
    return PresentationComplex(len(vertices), faces, vertices)  # type: ignore[arg-type]


def wire_labels(wc: WiredComplex) -> dict[int, tuple[int, int]]:
    """Edge label -> wire (initial end, terminal end) under :func:`wired_to_presentation`."""
    out: dict[int, tuple[int, int]] = {}
    seen: set[tuple[int, int]] = set()
    for f in wc.faces:
        for a, b in f:
            if (a, b) not in seen and (b, a) not in seen:
                seen.add((a, b))
                out[len(out) + 1] = (a, b)
    return out


def infer_vertices(p: PresentationComplex) -> dict[int, tuple[int, int]]:
    """Merge arriving and departing slots at every corner; classes become vertices.

    Vertices are numbered by the least slot they contain.
    """
    slots = [(e, end) for e in range(1, p.edge_count + 1) for end in (INITIAL, TERMINAL)]
    ds = DisjointSet(slots)
    for w in p.faces:
        for x, y in corner_slots(w):
            ds.merge(x, y)
    number: dict[Slot, int] = {}
    for s in slots:  # slots are already in increasing order
        root = ds[s]
        if root not in number:
            number[root] = len(number)
    return {e: (number[ds[(e, INITIAL)]], number[ds[(e, TERMINAL)]]) for e in range(1, p.edge_count + 1)}


def typed_triangles_to_presentation(
    triangles: Sequence[tuple[Sequence[int], Sequence[int]]],
) -> PresentationComplex:
    """Triangles given as (edge labels, vertex ids); edge ``e_i`` joins ``v_i`` to ``v_{i+1}``.

    Every edge is directed from its lower-numbered endpoint to the higher one.
    """
    ends: dict[int, tuple[int, int]] = {}
    faces = []
    for labels, verts in triangles:
        word = []
        for i in range(3):
            e, u, v = int(labels[i]), int(verts[i]), int(verts[(i + 1) % 3])
            if u == v:
                raise MalformedComplex(f"edge {e} is a loop at vertex {u}; use the wired format")
            pair = (min(u, v), max(u, v))
            if ends.setdefault(e, pair) != pair:
                raise MalformedComplex(f"edge {e} joins {ends[e]} elsewhere but {pair} here")
            word.append(e if u < v else -e)
        faces.append(tuple(word))
    labels = sorted(ends)
    if labels != list(range(1, len(labels) + 1)):
        raise MalformedComplex("edge labels must be exactly 1..m")
    return PresentationComplex(len(labels), faces, dict(ends))  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# Links
# ---------------------------------------------------------------------------

@dataclass
class VertexLink:
    vertex: int
    slots: list[Slot]
    graph: Graph | None  # None when the corners do not form a simple graph
    corners: int
    problem: str = ""


@dataclass
class LinkComputation:
    links: list[VertexLink] = field(default_factory=list)

    def graphs(self) -> list[Graph | None]:
        return [lk.graph for lk in self.links]


def links_of(p: PresentationComplex) -> LinkComputation:
    """Link graph at every vertex.

    Raises:
        MalformedComplex: a corner joins an edge-end to itself.
    """
    vertices = p.with_vertices().vertices
    assert vertices is not None
    at: dict[int, list[Slot]] = {}
    for e in range(1, p.edge_count + 1):
        init, term = vertices[e]
        at.setdefault(init, []).append((e, INITIAL))
        at.setdefault(term, []).append((e, TERMINAL))
    slot_vertex = {s: v for v, ss in at.items() for s in ss}
    corner_lists: dict[int, list[tuple[Slot, Slot]]] = {v: [] for v in at}
    for w in p.faces:
        for x, y in corner_slots(w):
            if x == y:
                raise MalformedComplex(f"face {w} has a corner joining slot {x} to itself")
            corner_lists[slot_vertex[x]].append((x, y))
    out = LinkComputation()
    for v in sorted(at):
        slots = sorted(at[v])
        index = {s: i for i, s in enumerate(slots)}
        pairs = [tuple(sorted((index[x], index[y]))) for x, y in corner_lists[v]]
        dup = [e for e, c in Counter(pairs).items() if c > 1]
        if dup:
            out.links.append(VertexLink(v, slots, None, len(pairs), f"repeated link edge {dup[0]}"))
            continue
        out.links.append(VertexLink(v, slots, Graph(len(slots), frozenset(pairs)), len(pairs)))  # type: ignore[arg-type]
    return out


@dataclass
class LinkVerdict:
    vertex: int
    match: str | None
    problem: str = ""


def verify_links(p: PresentationComplex, targets: dict[str, Graph]) -> tuple[bool, list[LinkVerdict]]:
    """Which target graph (if any) each vertex link is isomorphic to."""
    verdicts = []
    for lk in links_of(p).links:
        if lk.graph is None:
            verdicts.append(LinkVerdict(lk.vertex, None, lk.problem))
            continue
        hit = None
        for name, g in targets.items():
            if graphs_isomorphic(lk.graph, g) is not None:
                hit = name
                break
        verdicts.append(LinkVerdict(lk.vertex, hit, "" if hit else "no target matches"))
    return all(v.match is not None for v in verdicts), verdicts


# ---------------------------------------------------------------------------
# Positive orientability
# ---------------------------------------------------------------------------

def _side_constraints(faces: Sequence[Face]) -> tuple[list[tuple[int, int, int]], int]:
    """(face, class, parity) per side: the side runs against the class's
    reference direction (lower end first) iff parity is 1."""
    classes: dict[tuple[int, int], int] = {}
    out = []
    for k, f in enumerate(faces):
        for a, b in f:
            key = (min(a, b), max(a, b))
            c = classes.setdefault(key, len(classes))
            out.append((k, c, 0 if a < b else 1))
    return out, len(classes)


def positively_orientable(wc: WiredComplex, allow_reflection: bool = True) -> bool:
    """Can edges be directed (and faces read) so every side is positive?

    With ``f_k`` the reading of face k (1 = reflected) and ``d_c`` the
    direction of class c, a side of parity ``p`` is positive iff
    ``d_c = p xor f_k``. The system is solved as a parity 2-colouring of the
    face/class incidence graph. Without reflection every ``f_k`` is 0.
    """
    sides, nclass = _side_constraints(wc.faces)
    nface = len(wc.faces)
    # nodes: faces 0..nface-1, classes nface..; edge parity p between them
    adj: list[list[tuple[int, int]]] = [[] for _ in range(nface + nclass)]
    for k, c, par in sides:
        adj[k].append((nface + c, par))
        adj[nface + c].append((k, par))
    color = [-1] * len(adj)

    def spread(starts) -> bool:
        stack = list(starts)
        while stack:
            u = stack.pop()
            for w, par in adj[u]:
                want = color[u] ^ par
                if color[w] < 0:
                    color[w] = want
                    stack.append(w)
                elif color[w] != want:
                    return False
        return True

    if not allow_reflection:
        color[:nface] = [0] * nface
        if not spread(range(nface)):
            return False
    for s in range(len(adj)):
        if color[s] < 0:
            color[s] = 0
            if not spread([s]):
                return False
    return True
