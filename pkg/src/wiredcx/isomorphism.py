"""Isomorphism of wired complexes.

Two complete complexes over the same kind of links are isomorphic when a
relabeling of link vertices (link automorphisms, possibly swapping links
of the same isomorphism type) carries one normalized face set onto the
other. Small groups are materialized and yield canonical keys; for large
groups there is an exact backtracking test guided by wires and link
adjacency.
"""

from __future__ import annotations

import itertools
import math
import struct
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import facearrays as fa
from .graphs import DEFAULT_AUT_BOUND, automorphisms, graphs_isomorphic, invert
from .wired import Face, LinkArrangement, WiredComplex, flat, normalize_face, unflat


class GroupTooLarge(RuntimeError):
    """The relabeling group exceeds the bound; use pairwise testing instead."""


def _type_classes(arr: LinkArrangement) -> tuple[list[list[int]], list[tuple[int, ...]]]:
    """Partition links by graph isomorphism type, with witnesses ``link -> class representative``."""
    classes: list[list[int]] = []
    witness: list[tuple[int, ...]] = [()] * len(arr.links)
    for i, g in enumerate(arr.links):
        for members in classes:
            rep = members[0]
            w = graphs_isomorphic(g, arr.links[rep])
            if w is not None:
                members.append(i)
                witness[i] = w
                break
        else:
            classes.append([i])
            witness[i] = tuple(range(g.n))
    return classes, witness


@dataclass
class IsoGroup:
    """Relabeling group of an arrangement: per-type automorphisms and same-type link swaps."""

    arrangement: LinkArrangement
    classes: list[list[int]]
    witness: list[tuple[int, ...]]
    auts: list[list[tuple[int, ...]]]  # automorphisms of each class representative

    @classmethod
    def for_arrangement(cls, arr: LinkArrangement) -> IsoGroup:
        classes, witness = _type_classes(arr)
        auts = [automorphisms(arr.links[members[0]]) for members in classes]
        return cls(arr, classes, witness, auts)

    @property
    def order(self) -> int:
        total = 1
        for members, aut in zip(self.classes, self.auts):
            total *= math.factorial(len(members)) * len(aut) ** len(members)
        return total

    def _class_elements(self, c: int) -> tuple[np.ndarray, np.ndarray]:
        """Columns (global vertices of the class) and all images of them, shape ``(g, cols)``."""
        arr = self.arrangement
        members = self.classes[c]
        auts = np.array(self.auts[c], dtype=np.int64)
        offsets = arr.offsets  # type: ignore[attr-defined]
        cols = np.concatenate([np.arange(offsets[i], offsets[i + 1]) for i in members])
        w = {i: np.array(self.witness[i], dtype=np.int64) for i in members}
        winv = {i: np.array(invert(self.witness[i]), dtype=np.int64) for i in members}
        blocks = []
        for perm in itertools.permutations(members):
            # per member: (|aut|, n) table of images into link perm[k]
            parts = [offsets[j] + winv[j][auts[:, w[i]]] for i, j in zip(members, perm)]
            rows = parts[0]
            for p in parts[1:]:
                rows = np.concatenate(
                    [np.repeat(rows, len(p), axis=0), np.tile(p, (len(rows), 1))], axis=1
                )
            blocks.append(rows)
        return cols, np.concatenate(blocks)

    def elements(self, bound: int = DEFAULT_AUT_BOUND) -> np.ndarray:
        """All group elements as global image arrays, shape ``(order, total)``.

        The first row is the identity.
        """
        if self.order > bound:
            raise GroupTooLarge(f"group order {self.order} exceeds bound {bound}")
        total = self.arrangement.total
        out = np.zeros((1, total), dtype=np.int64)
        for c in range(len(self.classes)):
            cols, rows = self._class_elements(c)
            expanded = np.repeat(out, len(rows), axis=0)
            expanded[:, cols] = np.tile(rows, (len(out), 1))
            out = expanded
        return out


def relabel_faces(faces: Iterable[Face], perm: Sequence[int]) -> list[Face]:
    return [tuple((perm[a], perm[b]) for a, b in f) for f in faces]  # type: ignore[misc]


def relabel(wc: WiredComplex, perm: Sequence[int], arrangement: LinkArrangement | None = None) -> WiredComplex:
    return WiredComplex(arrangement or wc.arrangement, relabel_faces(wc.faces, perm))


_CHUNK = 4096


def _canonical(wc: WiredComplex, elems: np.ndarray) -> tuple[bytes, int]:
    base = max(wc.arrangement.total, 1)
    faces = np.array([flat(f) for f in wc.faces], dtype=np.int64).reshape(-1, 6)
    best_codes = None
    best_rows = None
    best_idx = 0
    for start in range(0, len(elems), _CHUNK):
        chunk = elems[start:start + _CHUNK]
        rows = fa.normalize_rows(chunk[:, faces], base)  # (g, F, 6)
        codes = fa.encode(rows, base)  # (g, F)
        order = np.argsort(codes, axis=1, kind="stable")
        codes = np.take_along_axis(codes, order, axis=1)
        rows = np.take_along_axis(rows, order[..., None], axis=1)
        k = int(np.lexsort(codes.T[::-1])[0]) if codes.shape[1] else 0
        cand = codes[k].tolist()
        if best_codes is None or cand < best_codes:
            best_codes, best_rows, best_idx = cand, rows[k], start + k
    payload = b"".join(struct.pack(">I", int(x)) for x in best_rows.ravel()) if best_rows is not None else b""
    return payload, best_idx


def canonical_key(wc: WiredComplex, group: IsoGroup | None = None, bound: int = DEFAULT_AUT_BOUND) -> bytes:
    """Least encoding of the sorted normalized face list over the relabeling group.

    Raises:
        GroupTooLarge: the group order exceeds ``bound``.
    """
    group = group or IsoGroup.for_arrangement(wc.arrangement)
    return _canonical(wc, group.elements(bound))[0]


def dedup_key_or_none(wc: WiredComplex, group: IsoGroup, bound: int = DEFAULT_AUT_BOUND) -> bytes | None:
    try:
        return canonical_key(wc, group, bound)
    except GroupTooLarge:
        return None


# ---------------------------------------------------------------------------
# Exact isomorphism test
# ---------------------------------------------------------------------------

def _partners(wc: WiredComplex) -> list[int]:
    partner = [-1] * wc.arrangement.total
    for f in wc.faces:
        for a, b in f:
            partner[a], partner[b] = b, a
    return partner


def _link_type_map(arr_a: LinkArrangement, arr_b: LinkArrangement) -> list[list[bool]] | None:
    """``allowed[i][j]``: link i of A and link j of B are isomorphic; ``None`` if type multisets differ."""
    ka, kb = len(arr_a.links), len(arr_b.links)
    if ka != kb:
        return None
    allowed = [[graphs_isomorphic(arr_a.links[i], arr_b.links[j]) is not None for j in range(kb)] for i in range(ka)]
    # multiset equality: a perfect matching must exist between the two link lists
    match_b: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        for j in range(kb):
            if allowed[i][j] and j not in seen:
                seen.add(j)
                if j not in match_b or augment(match_b[j], seen):
                    match_b[j] = i
                    return True
        return False

    if not all(augment(i, set()) for i in range(ka)):
        return None
    return allowed


def _backtrack_isomorphism(A: WiredComplex, B: WiredComplex) -> tuple[int, ...] | None:
    arr_a, arr_b = A.arrangement, B.arrangement
    allowed = _link_type_map(arr_a, arr_b)
    if allowed is None or len(A.faces) != len(B.faces) or arr_a.total != arr_b.total:
        return None
    n = arr_a.total
    if n == 0:
        return ()
    pa, pb = _partners(A), _partners(B)
    target = {flat(normalize_face(f)) for f in B.faces}
    faces_a = [flat(f) for f in A.faces]
    incident: list[list[int]] = [[] for _ in range(n)]
    for k, f in enumerate(faces_a):
        for v in set(f):
            incident[v].append(k)
    need = [len(set(f)) for f in faces_a]
    have = [0] * len(faces_a)

    def nbrs(arr: LinkArrangement, v: int) -> list[int]:
        i, x = arr.locate(v)
        return [arr.global_id(i, y) for y in arr.links[i].neighbors(x)]

    nb_a = [nbrs(arr_a, v) for v in range(n)]
    nb_b = [nbrs(arr_b, v) for v in range(n)]
    phi = [-1] * n
    psi = [-1] * n
    sigma = [-1] * len(arr_a.links)
    sigma_used = [False] * len(arr_b.links)
    trail: list[tuple[str, int]] = []

    def undo(mark: int) -> None:
        while len(trail) > mark:
            kind, x = trail.pop()
            if kind == "v":
                psi[phi[x]] = -1
                phi[x] = -1
                for k in incident[x]:
                    have[k] -= 1
            else:
                sigma_used[sigma[x]] = False
                sigma[x] = -1

    def face_ok(k: int) -> bool:
        f = faces_a[k]
        img = unflat([phi[x] for x in f])
        return flat(normalize_face(img)) in target

    def assign(v: int, w: int) -> bool:
        queue = [(v, w)]
        while queue:
            v, w = queue.pop()
            if phi[v] != -1:
                if phi[v] != w:
                    return False
                continue
            if psi[w] != -1:
                return False
            i, j = arr_a.owner[v], arr_b.owner[w]  # type: ignore[attr-defined]
            if sigma[i] == -1:
                if not allowed[i][j] or sigma_used[j]:
                    return False
                sigma[i] = j
                sigma_used[j] = True
                trail.append(("l", i))
            elif sigma[i] != j:
                return False
            if len(nb_a[v]) != len(nb_b[w]):
                return False
            for u in nb_a[v]:
                if phi[u] != -1 and phi[u] not in nb_b[w]:
                    return False
            for x in nb_b[w]:
                if psi[x] != -1 and psi[x] not in nb_a[v]:
                    return False
            phi[v], psi[w] = w, v
            trail.append(("v", v))
            for k in incident[v]:
                have[k] += 1
                if have[k] == need[k] and not face_ok(k):
                    return False
            if pa[v] >= 0 and pb[w] >= 0:
                queue.append((pa[v], pb[w]))
            elif (pa[v] >= 0) != (pb[w] >= 0):
                return False
        return True

    def choose() -> tuple[int, list[int]] | None:
        for v in range(n):
            if phi[v] != -1:
                continue
            for u in nb_a[v]:
                if phi[u] != -1:
                    return v, [x for x in nb_b[phi[u]] if psi[x] == -1]
        for v in range(n):
            if phi[v] == -1:
                i = arr_a.owner[v]  # type: ignore[attr-defined]
                links = [sigma[i]] if sigma[i] != -1 else [j for j in range(len(arr_b.links)) if allowed[i][j] and not sigma_used[j]]
                cands = []
                for j in links:
                    lo, hi = arr_b.offsets[j], arr_b.offsets[j + 1]  # type: ignore[attr-defined]
                    cands.extend(x for x in range(lo, hi) if psi[x] == -1)
                return v, cands
        return None

    def solve() -> bool:
        pick = choose()
        if pick is None:
            return True
        v, cands = pick
        for w in cands:
            mark = len(trail)
            if assign(v, w) and solve():
                return True
            undo(mark)
        return False

    if solve():
        return tuple(phi)
    return None


def complexes_isomorphic(
    A: WiredComplex, B: WiredComplex, bound: int = DEFAULT_AUT_BOUND, group: IsoGroup | None = None
) -> tuple[int, ...] | None:
    """A global vertex bijection carrying A's faces onto B's, or ``None``.

    Uses canonical forms when both complexes share one arrangement and the
    group is small, the backtracking search otherwise. Any witness returned
    is verified against the face sets.
    """
    witness: tuple[int, ...] | None
    if A.arrangement == B.arrangement:
        group = group or IsoGroup.for_arrangement(A.arrangement)
        if group.order <= bound:
            elems = group.elements(bound)
            key_a, ia = _canonical(A, elems)
            key_b, ib = _canonical(B, elems)
            if key_a != key_b:
                return None
            inv_b = np.empty_like(elems[ib])
            inv_b[elems[ib]] = np.arange(len(inv_b))
            witness = tuple(int(x) for x in inv_b[elems[ia]])
        else:
            witness = _backtrack_isomorphism(A, B)
    else:
        witness = _backtrack_isomorphism(A, B)
    if witness is not None and not verify_witness(A, B, witness):
        raise AssertionError("isomorphism witness failed verification")
    return witness


def verify_witness(A: WiredComplex, B: WiredComplex, witness: Sequence[int]) -> bool:
    image = sorted(normalize_face(f) for f in relabel_faces(A.faces, witness))
    return image == B.normalized_faces()


class ClassRegistry:
    """Online isomorphism-class registry with first-found representatives.

    Keys are used while the group order is within ``bound``; otherwise each
    newcomer is tested pairwise against the known representatives.
    """

    def __init__(self, arr: LinkArrangement, bound: int = DEFAULT_AUT_BOUND):
        self.group = IsoGroup.for_arrangement(arr)
        self.bound = bound
        self.by_key: dict[bytes, int] = {}
        self.reps: list[WiredComplex] = []
        self.counts: list[int] = []
        self._elems = self.group.elements(bound) if self.group.order <= bound else None

    def key(self, wc: WiredComplex) -> bytes | None:
        if self._elems is None:
            return None
        return _canonical(wc, self._elems)[0]

    def add(self, wc: WiredComplex, key: bytes | None = None) -> bool:
        """Register ``wc``; True when it opens a new class."""
        if key is None:
            key = self.key(wc)
        if key is not None:
            idx = self.by_key.get(key)
            if idx is None:
                self.by_key[key] = len(self.reps)
                self.reps.append(wc)
                self.counts.append(1)
                return True
            self.counts[idx] += 1
            return False
        for i, rep in enumerate(self.reps):
            if _backtrack_isomorphism(rep, wc) is not None:
                self.counts[i] += 1
                return False
        self.reps.append(wc)
        self.counts.append(1)
        return True


def dedup_classes(
    complexes: Iterable[WiredComplex], bound: int = DEFAULT_AUT_BOUND
) -> list[tuple[WiredComplex, int]]:
    """One representative per isomorphism class (first found) with raw multiplicities."""
    registry: ClassRegistry | None = None
    for wc in complexes:
        if registry is None:
            registry = ClassRegistry(wc.arrangement, bound)
        registry.add(wc)
    if registry is None:
        return []
    return list(zip(registry.reps, registry.counts))
