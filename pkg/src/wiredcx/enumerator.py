"""Exhaustive search for complete wired complexes.

Potential faces are generated once, vectorised with numpy. The search is
exact-cover style: at every node it branches over the candidate faces
covering the least uncovered link edge, and the inherited candidate list
is trimmed by compatibility with the face just added. Every complete face
set is therefore reached along exactly one path.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from . import facearrays as fa
from .isomorphism import ClassRegistry
from .wired import (
    Face,
    IncompatibleFace,
    LinkArrangement,
    MalformedFace,
    PartialWiredComplex,
    WiredComplex,
    check_face,
    unflat,
)

log = logging.getLogger(__name__)

JOBS_ENV = "WIREDCX_JOBS"


@dataclass(frozen=True)
class FacePattern:
    """Corner ``i`` of a face must lie in link ``corner_links[i]``."""

    corner_links: tuple[int, int, int]

    def variants(self) -> set[tuple[int, int, int]]:
        # corner order under the six readings of a face: rotations of
        # (c1, c2, c3) and of the reflected order (c2, c1, c3)
        x, y, z = self.corner_links
        return {(x, y, z), (y, z, x), (z, x, y), (y, x, z), (x, z, y), (z, y, x)}


@dataclass
class SearchConfig:
    seed_faces: list[Face] = field(default_factory=list)
    patterns: list[FacePattern] | None = None  # None means every face
    max_solutions: int | None = None
    dedup: bool = True
    jobs: int = 1
    split_depth: int = 1
    aut_bound: int = 10**6


@dataclass
class SearchStats:
    nodes: int = 0
    faces_generated: int = 0
    solutions: int = 0
    classes: int = 0
    truncated: bool = False
    wall_time: float = 0.0

    def as_lines(self) -> list[str]:
        return [
            f"nodes={self.nodes}",
            f"faces_generated={self.faces_generated}",
            f"solutions={self.solutions}",
            f"classes={self.classes}",
            f"truncated={'yes' if self.truncated else 'no'}",
            f"wall_time={self.wall_time:.3f}",
        ]


@dataclass
class SearchRun:
    arrangement: LinkArrangement
    complexes: list[WiredComplex]
    multiplicities: list[int]
    stats: SearchStats


# ---------------------------------------------------------------------------
# Potential faces
# ---------------------------------------------------------------------------

def _directed_edges(arr: LinkArrangement, link: int) -> np.ndarray:
    off = arr.offsets[link]  # type: ignore[attr-defined]
    rows = []
    for a, b in arr.links[link].sorted_edges():
        rows.append((off + a, off + b))
        rows.append((off + b, off + a))
    return np.array(rows, dtype=np.int64).reshape(-1, 2)


def _edge_ids(arr: LinkArrangement, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.array([arr.edge_id(int(p), int(q)) for p, q in zip(x, y)], dtype=np.int64)


def _faces_for_corner_links(arr: LinkArrangement, links: tuple[int, int, int]) -> np.ndarray:
    d1, d2, d3 = (_directed_edges(arr, i) for i in links)
    if min(len(d1), len(d2), len(d3)) == 0:
        return np.zeros((0, 6), dtype=np.int64)
    id2 = _edge_ids(arr, d2[:, 0], d2[:, 1])
    id3 = _edge_ids(arr, d3[:, 0], d3[:, 1])
    # corner2 = (b2, a3), corner3 = (b3, a1); product over both
    b2 = np.repeat(d2[:, 0], len(d3))
    a3 = np.repeat(d2[:, 1], len(d3))
    e2 = np.repeat(id2, len(d3))
    b3 = np.tile(d3[:, 0], len(d2))
    a1 = np.tile(d3[:, 1], len(d2))
    e3 = np.tile(id3, len(d2))
    base_ok = (a3 != b3) & (e2 != e3)
    out = []
    for (b1, a2) in d1:
        e1 = arr.edge_id(int(b1), int(a2))
        ok = base_ok & (a1 != b1) & (a2 != b2) & (e1 != e2) & (e1 != e3)
        ok &= fa.wires_compatible_rows(a1, b1, a2, b2)
        ok &= fa.wires_compatible_rows(a2, b2, a3, b3)
        ok &= fa.wires_compatible_rows(a1, b1, a3, b3)
        if not ok.any():
            continue
        n = int(ok.sum())
        rows = np.column_stack(
            [a1[ok], np.full(n, b1), np.full(n, a2), b2[ok], a3[ok], b3[ok]]
        )
        out.append(rows[fa.is_canonical(rows, max(arr.total, 1))])
    if not out:
        return np.zeros((0, 6), dtype=np.int64)
    return np.concatenate(out)


def generate_potential_faces_array(
    arr: LinkArrangement, patterns: Sequence[FacePattern] | None = None
) -> np.ndarray:
    """All normalized well-formed faces as a sorted ``(F, 6)`` array."""
    k = len(arr.links)
    if patterns is None:
        orders = {(x, y, z) for x in range(k) for y in range(k) for z in range(k)}
    else:
        orders = set()
        for p in patterns:
            if any(not 0 <= i < k for i in p.corner_links):
                raise ValueError(f"pattern {p.corner_links} refers to a missing link")
            orders |= p.variants()
    chunks = [_faces_for_corner_links(arr, o) for o in sorted(orders)]
    chunks = [c for c in chunks if len(c)]
    if not chunks:
        return np.zeros((0, 6), dtype=np.int64)
    rows = np.unique(np.concatenate(chunks), axis=0)
    return fa.lex_sort_rows(rows)


def generate_potential_faces(
    arr: LinkArrangement, patterns: Sequence[FacePattern] | None = None
) -> list[Face]:
    return [unflat(r) for r in generate_potential_faces_array(arr, patterns)]


# ---------------------------------------------------------------------------
# Backtracking engine
# ---------------------------------------------------------------------------

class _Engine:
    """Mutable search state over a fixed potential-face table."""

    def __init__(self, arr: LinkArrangement, faces: np.ndarray, seeds: Sequence[Face]):
        self.arr = arr
        self.faces = faces.astype(np.int64).reshape(-1, 6)
        self.A = self.faces[:, 0::2]
        self.B = self.faces[:, 1::2]
        lut = np.full((arr.total, arr.total), -1, dtype=np.int64)
        for k, (i, a, b) in enumerate(arr.link_edges):  # type: ignore[attr-defined]
            x, y = arr.global_id(i, a), arr.global_id(i, b)
            lut[x, y] = lut[y, x] = k
        # corner i joins the end of wire i to the start of wire i+1
        self.C = lut[self.B, np.roll(self.A, -1, axis=1)].reshape(-1, 3)
        self.seeds = list(seeds)
        seed = PartialWiredComplex(arr)
        for f in self.seeds:
            if not seed.face_compatible(f):
                raise IncompatibleFace(f"seed face {f} is malformed or incompatible with earlier seeds")
            seed.add_face(f)
        self._seed_covered = np.array([c is not None for c in seed.coverage], dtype=bool)
        self._seed_partner = np.array(seed.partner, dtype=np.int64)
        self.reset()

    def reset(self) -> None:
        self.covered = self._seed_covered.copy()
        self.partner = self._seed_partner.copy()
        self.nodes = 0

    def initial_candidates(self) -> np.ndarray:
        return self.trim(np.arange(len(self.faces)))

    def trim(self, cands: np.ndarray) -> np.ndarray:
        if len(cands) == 0:
            return cands
        ok = ~self.covered[self.C[cands]].any(axis=1)
        A, B = self.A[cands], self.B[cands]
        pa, pb = self.partner[A], self.partner[B]
        ok &= ((pa == -1) | (pa == B)).all(axis=1)
        ok &= ((pb == -1) | (pb == A)).all(axis=1)
        return cands[ok]

    def push(self, f: int) -> tuple[np.ndarray, np.ndarray]:
        touched = np.concatenate([self.A[f], self.B[f]])
        saved = self.partner[touched].copy()
        self.covered[self.C[f]] = True
        self.partner[self.A[f]] = self.B[f]
        self.partner[self.B[f]] = self.A[f]
        return touched, saved

    def pop(self, f: int, undo: tuple[np.ndarray, np.ndarray]) -> None:
        touched, saved = undo
        self.covered[self.C[f]] = False
        self.partner[touched] = saved

    def branch_list(self, cands: np.ndarray) -> np.ndarray | None:
        """Candidates covering the least uncovered edge; ``None`` at completion."""
        uncovered = np.flatnonzero(~self.covered)
        if len(uncovered) == 0:
            return None
        if len(cands) == 0:
            return cands
        reach = np.zeros(len(self.covered), dtype=bool)
        reach[self.C[cands].ravel()] = True
        if not reach[uncovered].all():
            return cands[:0]
        e0 = uncovered[0]
        return cands[(self.C[cands] == e0).any(axis=1)]

    def search(self, cands: np.ndarray, stack: list[int]) -> Iterator[list[int]]:
        self.nodes += 1
        branch = self.branch_list(cands)
        if branch is None:
            yield list(stack)
            return
        for f in branch:
            f = int(f)
            undo = self.push(f)
            stack.append(f)
            yield from self.search(self.trim(cands), stack)
            stack.pop()
            self.pop(f, undo)

    def prefixes(self, cands: np.ndarray, depth: int, stack: list[int]) -> Iterator[tuple[list[int], np.ndarray | None]]:
        """Split the tree ``depth`` levels down.

        Yields ``(prefix, candidates)`` per open subtree and ``(prefix, None)``
        for a prefix that is already complete.
        """
        self.nodes += 1
        branch = self.branch_list(cands)
        if branch is None:
            yield list(stack), None
            return
        if depth == 0:
            self.nodes -= 1  # the worker re-counts this node
            yield list(stack), cands
            return
        for f in branch:
            f = int(f)
            undo = self.push(f)
            stack.append(f)
            yield from self.prefixes(self.trim(cands), depth - 1, stack)
            stack.pop()
            self.pop(f, undo)

    def replay(self, prefix: Sequence[int]) -> None:
        for f in prefix:
            self.push(f)

    def to_complex(self, chosen: Sequence[int]) -> WiredComplex:
        faces = list(self.seeds) + [unflat(self.faces[i]) for i in chosen]
        return WiredComplex(self.arr, faces)


# ---------------------------------------------------------------------------
# Parallel workers
# ---------------------------------------------------------------------------

_WORKER: dict = {}


def _worker_init(arr, faces, seeds, bound):
    _WORKER["engine"] = _Engine(arr, faces, seeds)
    _WORKER["registry"] = ClassRegistry(arr, bound) if bound is not None else None


def _worker_run(batch: list[tuple[list[int], np.ndarray | None]], limit: int | None):
    """Solve a contiguous batch of subtrees; complete prefixes pass straight through."""
    eng = _WORKER["engine"]
    registry = _WORKER["registry"]
    out = []
    for prefix, cands in batch:
        eng.reset()
        if cands is None:
            sols = [prefix]
        else:
            sols = []
            eng.replay(prefix)
            for chosen in eng.search(cands, list(prefix)):
                sols.append(chosen)
                if limit is not None and len(sols) >= limit:
                    break
        keys = [registry.key(eng.to_complex(c)) for c in sols] if registry is not None else None
        out.append((sols, keys, eng.nodes))
    return out


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------

def iter_solutions(arr: LinkArrangement, cfg: SearchConfig | None = None) -> Iterator[WiredComplex]:
    """Stream every complete complex extending the seed, sequentially."""
    cfg = cfg or SearchConfig()
    faces = generate_potential_faces_array(arr, cfg.patterns)
    eng = _Engine(arr, faces, cfg.seed_faces)
    for chosen in eng.search(eng.initial_candidates(), []):
        yield eng.to_complex(chosen)


def enumerate_complexes(arr: LinkArrangement, cfg: SearchConfig | None = None) -> SearchRun:
    """Run the full search and collect (optionally deduplicated) results.

    Raises:
        IncompatibleFace: the seed faces are malformed or not pairwise compatible.
    """
    cfg = cfg or SearchConfig()
    t0 = time.perf_counter()
    for f in cfg.seed_faces:
        try:
            check_face(arr, f)
        except MalformedFace as exc:
            raise IncompatibleFace(f"seed face rejected: {exc}") from exc
    faces = generate_potential_faces_array(arr, cfg.patterns)
    stats = SearchStats(faces_generated=len(faces))
    eng = _Engine(arr, faces, cfg.seed_faces)
    dedup = ClassRegistry(arr, cfg.aut_bound) if cfg.dedup else None
    raw: list[WiredComplex] = []

    def accept(wc: WiredComplex, key: bytes | None = None) -> bool:
        stats.solutions += 1
        if dedup is None:
            raw.append(wc)
        else:
            dedup.add(wc, key)
        if cfg.max_solutions is not None and stats.solutions >= cfg.max_solutions:
            stats.truncated = True
            return False
        return True

    jobs = cfg.jobs if cfg.jobs > 0 else (os.cpu_count() or 1)
    if jobs == 1:
        for chosen in eng.search(eng.initial_candidates(), []):
            if not accept(eng.to_complex(chosen)):
                break
        stats.nodes = eng.nodes
    else:
        _run_parallel(arr, faces, cfg, eng, jobs, accept, stats, dedup is not None)

    if dedup is None:
        complexes, mult = raw, [1] * len(raw)
    else:
        complexes, mult = dedup.reps, dedup.counts
    stats.classes = len(complexes)
    stats.wall_time = time.perf_counter() - t0
    log.info("search finished: %s", " ".join(stats.as_lines()))
    return SearchRun(arr, complexes, mult, stats)


def _run_parallel(arr, faces, cfg, eng, jobs, accept, stats, want_keys) -> None:
    tasks = list(eng.prefixes(eng.initial_candidates(), max(cfg.split_depth, 1), []))
    stats.nodes = eng.nodes
    nbatch = min(len(tasks), jobs * 8) or 1
    size = -(-len(tasks) // nbatch)
    batches = [tasks[i:i + size] for i in range(0, len(tasks), size)]
    bound = cfg.aut_bound if want_keys else None
    with ProcessPoolExecutor(
        max_workers=jobs, initializer=_worker_init, initargs=(arr, faces, cfg.seed_faces, bound)
    ) as pool:
        futures = [pool.submit(_worker_run, b, cfg.max_solutions) for b in batches]
        # consume in task order so representatives match the sequential run
        for fut in futures:
            for sols, keys, nodes in fut.result():
                stats.nodes += nodes
                for j, chosen in enumerate(sols):
                    key = keys[j] if keys is not None else None
                    if not accept(eng.to_complex(chosen), key):
                        for f in futures:
                            f.cancel()
                        return


def default_jobs() -> int:
    try:
        return int(os.environ.get(JOBS_ENV, "1"))
    except ValueError:
        return 1
