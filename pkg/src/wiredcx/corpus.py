"""Bundled reference complexes and their expected properties.

* ``V01``..``V27`` - the single-vertex Moebius-Kantor complexes (wired form)
* ``conv-8`` - a single-vertex complex with a known presentation (wired form)
* ``b2-45`` - a 7-vertex, 45-face complex with K_{3,3} and GQ(2,2) links (typed triangles)
* ``mk-192`` - a 24-vertex Moebius-Kantor complex given by 192 words
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable

from .graphs import builtin_graph, graphs_isomorphic
from .io import parse_presentation, parse_typed_triangles, parse_wired, parse_word_list
from .presentation import PresentationComplex, links_of, verify_links, wired_to_presentation
from .wired import WiredComplex, wire_class_occurrences

CONV8_WORDS = "[[1,1,2],[3,1,4],[2,5,4],[2,6,7],[3,3,8],[6,4,5],[6,5,8],[7,7,8]]"
MANIFEST = "MANIFEST.sha256"


@dataclass(frozen=True)
class Fixture:
    id: str
    format: str  # wired | typed-triangle | words
    filename: str

    @property
    def path(self) -> Path:
        return Path(str(resources.files("wiredcx") / "fixtures" / self.filename))

    def text(self) -> str:
        return self.path.read_text()

    def load(self) -> WiredComplex | PresentationComplex:
        if self.format == "wired":
            return parse_wired(self.text(), self.path.parent)
        if self.format == "typed-triangle":
            return parse_typed_triangles(self.text())
        return parse_word_list(self.text())

    def presentation(self) -> PresentationComplex:
        obj = self.load()
        if isinstance(obj, WiredComplex):
            return wired_to_presentation(obj)
        return obj


V_IDS = [f"V{i:02d}" for i in range(1, 28)]

FIXTURES: dict[str, Fixture] = {
    **{vid: Fixture(vid, "wired", f"{vid}.wired") for vid in V_IDS},
    "conv-8": Fixture("conv-8", "wired", "conv-8.wired"),
    "b2-45": Fixture("b2-45", "typed-triangle", "b2-45.tri"),
    "mk-192": Fixture("mk-192", "words", "mk-192.words"),
}


def get(fixture_id: str) -> Fixture:
    try:
        return FIXTURES[fixture_id]
    except KeyError:
        raise KeyError(f"no bundled fixture {fixture_id!r}") from None


def load_v(i: int) -> WiredComplex:
    obj = FIXTURES[f"V{i:02d}"].load()
    assert isinstance(obj, WiredComplex)
    return obj


def resolve_path(ref: str) -> Path:
    """An existing file path, else a bundled fixture named by ``ref`` (``fixtures/b2-45`` works too)."""
    p = Path(ref)
    if p.is_file():
        return p
    key = p.name
    for fx in FIXTURES.values():
        if key in (fx.id, fx.filename):
            return fx.path
    raise FileNotFoundError(ref)


def sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def read_manifest() -> dict[str, str]:
    text = (resources.files("wiredcx") / "fixtures" / MANIFEST).read_text()
    out = {}
    for line in text.splitlines():
        if line.strip():
            digest, name = line.split()
            out[name] = digest
    return out


def write_manifest() -> None:
    lines = [f"{sha256(fx.path)}  {fx.filename}" for fx in sorted(FIXTURES.values(), key=lambda f: f.filename)]
    (FIXTURES["V01"].path.parent / MANIFEST).write_text("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# Expected-property records
# ---------------------------------------------------------------------------

def _check_mk_wired(fx: Fixture) -> list[str]:
    wc = fx.load()
    assert isinstance(wc, WiredComplex)
    problems = []
    mk = builtin_graph("mk16")
    if [g.edges for g in wc.arrangement.links] != [mk.edges]:
        problems.append("links are not a single mk16")
    if len(wc.faces) != 8:
        problems.append(f"{len(wc.faces)} faces, expected 8")
    if not wc.is_complete():
        problems.append("not a complete wired complex")
    if set(wire_class_occurrences(wc.faces).values()) != {3}:
        problems.append("some wire class does not occur exactly 3 times")
    ok, _ = verify_links(wired_to_presentation(wc), {"mk16": mk})
    if not ok:
        problems.append("computed link is not mk16")
    return problems


def _check_conv8(fx: Fixture) -> list[str]:
    problems = _check_mk_wired(fx)
    words = fx.presentation().format_words()
    if words != CONV8_WORDS:
        problems.append(f"presentation {words} differs from {CONV8_WORDS}")
    return problems


def _check_b2(fx: Fixture) -> list[str]:
    p = fx.presentation()
    problems = []
    if p.vertex_count != 7:
        problems.append(f"{p.vertex_count} vertices, expected 7")
    if len(p.faces) != 45:
        problems.append(f"{len(p.faces)} faces, expected 45")
    ok, verdicts = verify_links(p, {"k33": builtin_graph("k33"), "gq22": builtin_graph("gq22")})
    counts = Counter(v.match for v in verdicts)
    if not ok or counts != Counter({"k33": 5, "gq22": 2}):
        problems.append(f"link types {dict(counts)}, expected k33:5 gq22:2")
    return problems


def _check_mk192(fx: Fixture) -> list[str]:
    p = fx.presentation()
    problems = []
    if len(p.faces) != 192:
        problems.append(f"{len(p.faces)} faces, expected 192")
    if p.vertex_count != 24:
        problems.append(f"{p.vertex_count} vertices, expected 24")
    mk = builtin_graph("mk16")
    bad = [lk.vertex for lk in links_of(p).links if lk.graph is None or graphs_isomorphic(lk.graph, mk) is None]
    if bad:
        problems.append(f"links at vertices {bad[:5]} are not mk16")
    return problems


CHECKS: dict[str, Callable[[Fixture], list[str]]] = {
    **{vid: _check_mk_wired for vid in V_IDS},
    "conv-8": _check_conv8,
    "b2-45": _check_b2,
    "mk-192": _check_mk192,
}


def check_all() -> dict[str, list[str]]:
    """Run checksum and expected-property checks; map fixture id -> problems."""
    from .isomorphism import canonical_key

    manifest = read_manifest()
    report: dict[str, list[str]] = {}
    for fid, fx in FIXTURES.items():
        problems = []
        if manifest.get(fx.filename) != sha256(fx.path):
            problems.append("checksum mismatch against manifest")
        try:
            problems += CHECKS[fid](fx)
        except Exception as exc:  # a broken fixture is a finding, not a crash
            problems.append(f"{type(exc).__name__}: {exc}")
        report[fid] = problems
    keys = {}
    for vid in V_IDS:
        if report[vid]:
            continue
        key = canonical_key(load_v(int(vid[1:])))
        if key in keys:
            report[vid].append(f"isomorphic to {keys[key]}")
        keys.setdefault(key, vid)
    return report
