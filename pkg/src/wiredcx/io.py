"""Text formats: wired complexes, presentations, typed triangles, word lists."""

from __future__ import annotations

import re
from pathlib import Path
from typing import Sequence

from .graphs import Graph, read_graph_file, builtin_graph
from .presentation import (
    MalformedComplex,
    PresentationComplex,
    from_word_list,
    typed_triangles_to_presentation,
    wired_to_presentation,
)
from .wired import Face, LinkArrangement, WiredComplex

_WIRE = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


class FormatError(ValueError):
    pass


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((n, line))
    return out


def resolve_link(spec: str, base: Path | None = None) -> Graph:
    """Builtin graph name, or a graph file (relative paths against ``base``)."""
    try:
        return builtin_graph(spec)
    except ValueError:
        pass
    for path in (Path(spec), (base or Path.cwd()) / spec):
        if path.is_file():
            return read_graph_file(path)
    raise FormatError(f"unknown link {spec!r}: not a builtin graph or a readable file")


def arrangement_from_specs(specs: Sequence[str], base: Path | None = None) -> LinkArrangement:
    links = tuple(resolve_link(s, base) for s in specs)
    return LinkArrangement(links, tuple(specs))


# ---------------------------------------------------------------------------
# Wired complexes
# ---------------------------------------------------------------------------

def parse_face(line: str) -> Face:
    pairs = _WIRE.findall(line)
    if len(pairs) != 3 or _WIRE.sub("", line).strip():
        raise FormatError(f"expected three wires '(a,b)(c,d)(e,f)', got {line!r}")
    return tuple((int(a), int(b)) for a, b in pairs)  # type: ignore[return-value]


def parse_wired(text: str, base: Path | None = None) -> WiredComplex:
    lines = _lines(text)
    if not lines or not lines[0][1].startswith("links"):
        raise FormatError("wired file must start with a 'links' line")
    specs = lines[0][1].split()[1:]
    arr = arrangement_from_specs(specs, base)
    faces = []
    for n, line in lines[1:]:
        try:
            faces.append(parse_face(line))
        except FormatError as exc:
            raise FormatError(f"line {n}: {exc}") from None
    return WiredComplex(arr, faces)


def read_wired(path: str | Path) -> WiredComplex:
    path = Path(path)
    return parse_wired(path.read_text(), path.parent)


def format_wired(wc: WiredComplex, faces: Sequence[Face] | None = None) -> str:
    names = wc.arrangement.names
    out = ["links " + " ".join(names)]
    for f in faces if faces is not None else wc.faces:
        out.append("".join(f"({a},{b})" for a, b in f))
    return "\n".join(out) + "\n"


def write_wired(wc: WiredComplex, path: str | Path) -> None:
    Path(path).write_text(format_wired(wc))


# ---------------------------------------------------------------------------
# Presentations
# ---------------------------------------------------------------------------

def parse_presentation(text: str) -> PresentationComplex:
    lines = _lines(text)
    if not lines or lines[0][1].split()[0] != "edges":
        raise FormatError("presentation file must start with 'edges <m>'")
    head = lines[0][1].split()
    if len(head) != 2:
        raise FormatError("expected 'edges <m>'")
    m = int(head[1])
    faces = []
    vertices: dict[int, tuple[int, int]] = {}
    for n, line in lines[1:]:
        parts = line.split()
        try:
            if parts[0] == "vertex":
                if len(parts) != 4:
                    raise FormatError("expected 'vertex <label> <init> <term>'")
                vertices[int(parts[1])] = (int(parts[2]), int(parts[3]))
            else:
                if len(parts) != 3:
                    raise FormatError("a face is three signed labels")
                faces.append(tuple(int(x) for x in parts))
        except ValueError as exc:
            raise FormatError(f"line {n}: {exc}") from None
    if vertices and set(vertices) != set(range(1, m + 1)):
        raise FormatError("vertex lines must cover every label or none")
    try:
        return PresentationComplex(m, faces, vertices or None)  # type: ignore[arg-type]
    except MalformedComplex as exc:
        raise FormatError(str(exc)) from None


def format_presentation(p: PresentationComplex) -> str:
    out = [f"edges {p.edge_count}"]
    out += [" ".join(str(s) for s in w) for w in p.faces]
    if p.vertices is not None:
        out += [f"vertex {e} {p.vertices[e][0]} {p.vertices[e][1]}" for e in sorted(p.vertices)]
    return "\n".join(out) + "\n"


def parse_typed_triangles(text: str) -> PresentationComplex:
    tris = []
    for n, line in _lines(text):
        parts = line.split()
        if parts[0] != "tri" or len(parts) != 7:
            raise FormatError(f"line {n}: expected 'tri e1 e2 e3 v1 v2 v3'")
        nums = [int(x) for x in parts[1:]]
        tris.append((nums[:3], nums[3:]))
    try:
        return typed_triangles_to_presentation(tris)
    except MalformedComplex as exc:
        raise FormatError(str(exc)) from None


def parse_word_list(text: str) -> PresentationComplex:
    """Bracketed list ``[[a,b,c], ...]`` of all-positive words with arbitrary labels."""
    body = re.sub(r"\s+", "", "".join(line for _, line in _lines(text)))
    if not re.fullmatch(r"\[(\[\d+,\d+,\d+\](,\[\d+,\d+,\d+\])*)?\]", body):
        raise FormatError("expected a list of three-letter words like [[1,2,3],...]")
    words = [tuple(int(x) for x in w) for w in re.findall(r"\[(\d+),(\d+),(\d+)\]", body)]
    return from_word_list(words)[0]


def detect_format(text: str) -> str:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty file")
    head = lines[0][1]
    if head.startswith("links"):
        return "wired"
    if head.startswith("edges"):
        return "presentation"
    if head.startswith("tri"):
        return "typed-triangle"
    if head.startswith("["):
        return "words"
    raise FormatError(f"cannot recognise file format from {head!r}")


def read_any_presentation(path: str | Path) -> PresentationComplex:
    """Load any supported file as a presentation complex."""
    path = Path(path)
    text = path.read_text()
    kind = detect_format(text)
    if kind == "wired":
        return wired_to_presentation(parse_wired(text, path.parent))
    if kind == "presentation":
        return parse_presentation(text)
    if kind == "typed-triangle":
        return parse_typed_triangles(text)
    return parse_word_list(text)
