"""Wired complexes: links, wires, triangle faces and partial complexes.

A CW vertex is represented by its link graph. All link vertices of an
arrangement share one global numbering (link blocks are consecutive). A
*wire* ``(a, b)`` is one CW edge traversed from the edge-end ``a`` to the
edge-end ``b``; a *wired face* is a triple of wires, read cyclically, whose
corners ``{b1, a2}``, ``{b2, a3}``, ``{b3, a1}`` are edges of link graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graphs import Graph

Wire = tuple[int, int]
Face = tuple[Wire, Wire, Wire]
LinkEdge = tuple[int, int, int]  # (link index, lower local vertex, higher local vertex)


class MalformedFace(ValueError):
    pass


class IncompatibleFace(ValueError):
    pass


@dataclass(frozen=True)
class LinkArrangement:
    """An ordered list of link graphs with global link-vertex numbering."""

    links: tuple[Graph, ...]
    names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        links = tuple(self.links)
        object.__setattr__(self, "links", links)
        if not self.names:
            object.__setattr__(self, "names", tuple(g.name or f"link{i}" for i, g in enumerate(links)))
        offsets = [0]
        for g in links:
            offsets.append(offsets[-1] + g.n)
        owner = []
        for i, g in enumerate(links):
            owner.extend([i] * g.n)
        edges: list[LinkEdge] = []
        for i, g in enumerate(links):
            edges.extend((i, a, b) for a, b in g.sorted_edges())
        index = {}
        for k, (i, a, b) in enumerate(edges):
            index[(offsets[i] + a, offsets[i] + b)] = k
            index[(offsets[i] + b, offsets[i] + a)] = k
        object.__setattr__(self, "offsets", tuple(offsets))
        object.__setattr__(self, "owner", tuple(owner))
        object.__setattr__(self, "link_edges", tuple(edges))
        object.__setattr__(self, "_edge_index", index)

    @classmethod
    def of(cls, *links: Graph) -> LinkArrangement:
        return cls(tuple(links))

    @property
    def total(self) -> int:
        return self.offsets[-1]  # type: ignore[attr-defined]

    @property
    def edge_count(self) -> int:
        return len(self.link_edges)  # type: ignore[attr-defined]

    def locate(self, v: int) -> tuple[int, int]:
        """Global link vertex -> (link index, local vertex)."""
        i = self.owner[v]  # type: ignore[attr-defined]
        return i, v - self.offsets[i]  # type: ignore[attr-defined]

    def global_id(self, link: int, local: int) -> int:
        return self.offsets[link] + local  # type: ignore[attr-defined]

    def edge_id(self, a: int, b: int) -> int | None:
        """Index of the link edge joining global vertices ``a`` and ``b``, if any."""
        return self._edge_index.get((a, b))  # type: ignore[attr-defined]


# ---------------------------------------------------------------------------
# Wires and faces
# ---------------------------------------------------------------------------

def wires_compatible(u: Wire, v: Wire) -> bool:
    """Equal, mutually inverse, or vertex-disjoint."""
    if u == v or (u[0] == v[1] and u[1] == v[0]):
        return True
    return u[0] not in v and u[1] not in v


def corners(f: Face) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
    """The three corner pairs ``(b1, a2), (b2, a3), (b3, a1)``."""
    (a1, b1), (a2, b2), (a3, b3) = f
    return (b1, a2), (b2, a3), (b3, a1)


def reflect(f: Face) -> Face:
    (a1, b1), (a2, b2), (a3, b3) = f
    return ((b3, a3), (b2, a2), (b1, a1))


def face_variants(f: Face) -> list[Face]:
    """The 6 readings of a triangle boundary: 3 rotations of it and of its reflection."""
    r = reflect(f)
    return [f, (f[1], f[2], f[0]), (f[2], f[0], f[1]), r, (r[1], r[2], r[0]), (r[2], r[0], r[1])]


def normalize_face(f: Face) -> Face:
    return min(face_variants(f))


def flat(f: Face) -> tuple[int, int, int, int, int, int]:
    return (f[0][0], f[0][1], f[1][0], f[1][1], f[2][0], f[2][1])


def unflat(t: Sequence[int]) -> Face:
    return ((int(t[0]), int(t[1])), (int(t[2]), int(t[3])), (int(t[4]), int(t[5])))


def corner_edge_ids(arr: LinkArrangement, f: Face) -> tuple[int, int, int] | None:
    """Link-edge indices of the three corners, or ``None`` if a corner is not a link edge."""
    ids = []
    for x, y in corners(f):
        k = arr.edge_id(x, y)
        if k is None:
            return None
        ids.append(k)
    return tuple(ids)  # type: ignore[return-value]


def check_face(arr: LinkArrangement, f: Face) -> tuple[int, int, int]:
    """Validate a wired face and return its corner edge ids.

    Raises:
        MalformedFace: degenerate wire, corner not a link edge, repeated
            corner edge, or mutually incompatible wires.
    """
    for a, b in f:
        if not (0 <= a < arr.total and 0 <= b < arr.total):
            raise MalformedFace(f"wire ({a},{b}) out of range")
        if a == b:
            raise MalformedFace(f"wire ({a},{b}) glues an edge-end to itself")
    ids = corner_edge_ids(arr, f)
    if ids is None:
        raise MalformedFace(f"face {f} has a corner that is not a link edge")
    if len(set(ids)) != 3:
        raise MalformedFace(f"face {f} covers a link edge twice")
    for i in range(3):
        for j in range(i + 1, 3):
            if not wires_compatible(f[i], f[j]):
                raise MalformedFace(f"face {f} has incompatible wires {f[i]} and {f[j]}")
    return ids


def is_well_formed(arr: LinkArrangement, f: Face) -> bool:
    try:
        check_face(arr, f)
    except MalformedFace:
        return False
    return True


# ---------------------------------------------------------------------------
# Partial complexes
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class PartialWiredComplex:
    """Links plus a pairwise compatible face list.

    ``coverage[k]`` is ``(face index, corner index)`` for a covered link
    edge ``k`` and ``None`` otherwise. ``partner[v]`` is the other end of
    the wire class through ``v`` (``-1`` while unassigned); ``uses[v]``
    counts wire occurrences through ``v`` so removal can roll back.
    """

    arrangement: LinkArrangement
    faces: list[Face] = field(default_factory=list)
    coverage: list[tuple[int, int] | None] = field(init=False)
    partner: list[int] = field(init=False)
    uses: list[int] = field(init=False)

    def __post_init__(self) -> None:
        initial = list(self.faces)
        self.faces = []
        self.coverage = [None] * self.arrangement.edge_count
        self.partner = [-1] * self.arrangement.total
        self.uses = [0] * self.arrangement.total
        for f in initial:
            self.add_face(f)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialWiredComplex):
            return NotImplemented
        return (
            self.arrangement == other.arrangement
            and self.faces == other.faces
            and self.coverage == other.coverage
            and self.partner == other.partner
            and self.uses == other.uses
        )

    def copy(self) -> PartialWiredComplex:
        p = PartialWiredComplex.__new__(PartialWiredComplex)
        p.arrangement = self.arrangement
        p.faces = list(self.faces)
        p.coverage = list(self.coverage)
        p.partner = list(self.partner)
        p.uses = list(self.uses)
        return p

    def wire_ok(self, w: Wire) -> bool:
        a, b = w
        pa, pb = self.partner[a], self.partner[b]
        return (pa == -1 or pa == b) and (pb == -1 or pb == a)

    def face_compatible(self, f: Face) -> bool:
        try:
            ids = check_face(self.arrangement, f)
        except MalformedFace:
            return False
        if any(self.coverage[k] is not None for k in ids):
            return False
        return all(self.wire_ok(w) for w in f)

    def add_face(self, f: Face) -> None:
        if not self.face_compatible(f):
            raise IncompatibleFace(f"face {f} is not compatible with the complex")
        ids = check_face(self.arrangement, f)
        idx = len(self.faces)
        self.faces.append(f)
        for c, k in enumerate(ids):
            self.coverage[k] = (idx, c)
        for a, b in f:
            self.partner[a], self.partner[b] = b, a
            self.uses[a] += 1
            self.uses[b] += 1

    def remove_last_face(self) -> Face:
        if not self.faces:
            raise IndexError("no face to remove")
        f = self.faces.pop()
        for k in check_face(self.arrangement, f):
            self.coverage[k] = None
        for a, b in f:
            for v in (a, b):
                self.uses[v] -= 1
                if self.uses[v] == 0:
                    self.partner[v] = -1
        return f

    def is_complete(self) -> bool:
        return all(c is not None for c in self.coverage)

    def uncovered_edges(self) -> list[int]:
        return [k for k, c in enumerate(self.coverage) if c is None]

    def wire_classes(self) -> list[tuple[int, int]]:
        """Registered wire classes as sorted pairs, in increasing order."""
        return sorted({(min(v, p), max(v, p)) for v, p in enumerate(self.partner) if p >= 0})

    def normalized_faces(self) -> list[Face]:
        return sorted(normalize_face(f) for f in self.faces)


@dataclass
class WiredComplex:
    """A complete wired complex: arrangement plus faces in their input order."""

    arrangement: LinkArrangement
    faces: list[Face]

    def normalized_faces(self) -> list[Face]:
        return sorted(normalize_face(f) for f in self.faces)

    def face_set(self) -> frozenset[Face]:
        return frozenset(self.normalized_faces())

    def partial(self) -> PartialWiredComplex:
        return PartialWiredComplex(self.arrangement, list(self.faces))

    def is_complete(self) -> bool:
        try:
            return self.partial().is_complete()
        except (IncompatibleFace, MalformedFace):
            return False


def wire_class_occurrences(faces: Iterable[Face]) -> dict[tuple[int, int], int]:
    """How many face sides run along each wire class (with multiplicity)."""
    counts: dict[tuple[int, int], int] = {}
    for f in faces:
        for a, b in f:
            key = (min(a, b), max(a, b))
            counts[key] = counts.get(key, 0) + 1
    return counts
