"""Command-line driver. Exit codes: 0 success, 1 negative verdict, 2 usage/format error."""

from __future__ import annotations

import argparse
import logging
import sys
from collections import Counter
from pathlib import Path
from typing import Sequence

from . import corpus
from .enumerator import FacePattern, SearchConfig, default_jobs, enumerate_complexes
from .graphs import CapacityError, builtin_graph, graph_info, resolve_graph
from .io import (
    FormatError,
    arrangement_from_specs,
    format_presentation,
    format_wired,
    read_any_presentation,
    read_wired,
)
from .isomorphism import canonical_key, complexes_isomorphic, GroupTooLarge
from .presentation import (
    MalformedComplex,
    PresentationComplex,
    infer_vertices,
    positively_orientable,
    verify_links,
    wired_to_presentation,
)
from .wired import IncompatibleFace, MalformedFace

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _path(ref: str) -> Path:
    try:
        return corpus.resolve_path(ref)
    except FileNotFoundError:
        raise UsageError(f"no such file or fixture: {ref}") from None


def _emit(lines: Sequence[str]) -> None:
    for line in lines:
        print(line)


def cmd_enumerate(args: argparse.Namespace) -> int:
    specs = [s for s in args.links.split(",") if s]
    arr = arrangement_from_specs(specs)
    patterns = None
    if args.pattern:
        patterns = []
        for p in args.pattern:
            idx = tuple(int(x) for x in p.split(","))
            if len(idx) != 3:
                raise UsageError(f"pattern {p!r} needs three link indices")
            patterns.append(FacePattern(idx))  # type: ignore[arg-type]
    seeds = []
    if args.seed_file:
        seeds = read_wired(_path(args.seed_file)).faces
    cfg = SearchConfig(
        seed_faces=seeds,
        patterns=patterns,
        max_solutions=args.max_solutions,
        dedup=args.dedup == "on",
        jobs=args.jobs if args.jobs is not None else default_jobs(),
        split_depth=args.split_depth,
    )
    run = enumerate_complexes(arr, cfg)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        width = max(4, len(str(len(run.complexes))))
        for i, wc in enumerate(run.complexes, 1):
            (out / f"class-{i:0{width}d}.wired").write_text(format_wired(wc))
    lines = run.stats.as_lines()
    if args.stats:
        Path(args.stats).write_text("\n".join(lines) + "\n")
    _emit(lines)
    return EXIT_OK


def cmd_isomorphic(args: argparse.Namespace) -> int:
    a, b = read_wired(_path(args.a)), read_wired(_path(args.b))
    for wc, name in ((a, args.a), (b, args.b)):
        if not wc.is_complete():
            raise UsageError(f"{name} is not a complete wired complex")
    witness = complexes_isomorphic(a, b)
    print(f"isomorphic={'yes' if witness is not None else 'no'}")
    if witness is not None and args.witness:
        print("witness=" + ",".join(str(x) for x in witness))
    return EXIT_OK if witness is not None else EXIT_NO


def cmd_canonical(args: argparse.Namespace) -> int:
    wc = read_wired(_path(args.file))
    if not wc.is_complete():
        raise UsageError(f"{args.file} is not a complete wired complex")
    try:
        print(canonical_key(wc).hex())
    except GroupTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return EXIT_OK


def cmd_convert(args: argparse.Namespace) -> int:
    wc = read_wired(_path(args.wired))
    if not wc.is_complete():
        raise UsageError(f"{args.wired} is not a complete wired complex")
    p = wired_to_presentation(wc)
    text = p.format_words() + "\n" if args.words else format_presentation(p)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _bare(p: PresentationComplex) -> PresentationComplex:
    return PresentationComplex(p.edge_count, p.faces)


def cmd_infer_vertices(args: argparse.Namespace) -> int:
    p = _bare(read_any_presentation(_path(args.file)))
    vertices = infer_vertices(p)
    count = len({x for pair in vertices.values() for x in pair})
    print(f"vertices={count}")
    for e in sorted(vertices):
        print(f"vertex {e} {vertices[e][0]} {vertices[e][1]}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    p = read_any_presentation(_path(args.file))
    targets = {}
    for name in args.targets.split(","):
        targets[name] = resolve_graph(name)
    ok, verdicts = verify_links(p, targets)
    for v in verdicts:
        print(f"vertex={v.vertex} link={v.match or 'none'}" + (f" problem={v.problem!r}" if v.problem else ""))
    counts = Counter(v.match for v in verdicts if v.match)
    print("counts=" + ",".join(f"{k}:{counts[k]}" for k in targets if counts[k]))
    print(f"pass={'yes' if ok else 'no'}")
    return EXIT_OK if ok else EXIT_NO


def cmd_orientable(args: argparse.Namespace) -> int:
    wc = read_wired(_path(args.file))
    if not wc.is_complete():
        raise UsageError(f"{args.file} is not a complete wired complex")
    ok = positively_orientable(wc, allow_reflection=not args.strict)
    print(f"orientable={'yes' if ok else 'no'}")
    return EXIT_OK if ok else EXIT_NO


def cmd_graph_info(args: argparse.Namespace) -> int:
    info = graph_info(resolve_graph(args.name))
    print(" ".join(f"{k}={v}" for k, v in info.items()))
    return EXIT_OK


def cmd_fixtures(args: argparse.Namespace) -> int:
    if not args.check:
        for fx in corpus.FIXTURES.values():
            print(f"{fx.id} {fx.format} {fx.path}")
        return EXIT_OK
    report = corpus.check_all()
    for fid, problems in report.items():
        print(f"{fid} {'ok' if not problems else 'FAIL ' + '; '.join(problems)}")
    return EXIT_OK if not any(report.values()) else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wiredcx", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="search for complete wired complexes")
    p.add_argument("--links", required=True, help="comma-separated link names or graph files")
    p.add_argument("--pattern", action="append", help="corner link indices i,j,k (repeatable)")
    p.add_argument("--seed-file")
    p.add_argument("--max-solutions", type=int)
    p.add_argument("--dedup", choices=("on", "off"), default="on")
    p.add_argument("--jobs", type=int)
    p.add_argument("--split-depth", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--stats")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("isomorphic", help="test two wired complexes for isomorphism")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_isomorphic)

    p = sub.add_parser("canonical", help="print the canonical key as hex")
    p.add_argument("file")
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("convert", help="wired complex -> presentation")
    p.add_argument("--wired", required=True)
    p.add_argument("--words", action="store_true", help="print the bracketed word list instead")
    p.add_argument("--out")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("infer-vertices", help="vertices from face words alone")
    p.add_argument("file")
    p.set_defaults(func=cmd_infer_vertices)

    p = sub.add_parser("verify", help="check vertex links against target graphs")
    p.add_argument("file")
    p.add_argument("--targets", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orientable", help="test positive orientability")
    p.add_argument("file")
    p.add_argument("--strict", action="store_true", help="faces must be read as listed")
    p.set_defaults(func=cmd_orientable)

    p = sub.add_parser("graph-info", help="counts, regularity, girth, automorphism group order")
    p.add_argument("name")
    p.set_defaults(func=cmd_graph_info)

    p = sub.add_parser("fixtures", help="list or check the bundled fixtures")
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (UsageError, FormatError, MalformedComplex, MalformedFace, IncompatibleFace,
            CapacityError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
