"""Enumeration of 2-complexes with triangle faces and prescribed vertex links."""

from .enumerator import FacePattern, SearchConfig, enumerate_complexes, generate_potential_faces, iter_solutions
from .graphs import Graph, automorphisms, builtin_graph, girth, graphs_isomorphic
from .isomorphism import IsoGroup, canonical_key, complexes_isomorphic, dedup_classes
from .presentation import (
    PresentationComplex,
    infer_vertices,
    links_of,
    positively_orientable,
    typed_triangles_to_presentation,
    verify_links,
    wired_to_presentation,
)
from .wired import LinkArrangement, PartialWiredComplex, WiredComplex, normalize_face, wires_compatible

__all__ = [
    "FacePattern", "SearchConfig", "enumerate_complexes", "generate_potential_faces", "iter_solutions",
    "Graph", "automorphisms", "builtin_graph", "girth", "graphs_isomorphic",
    "IsoGroup", "canonical_key", "complexes_isomorphic", "dedup_classes",
    "PresentationComplex", "infer_vertices", "links_of", "positively_orientable",
    "typed_triangles_to_presentation", "verify_links", "wired_to_presentation",
    "LinkArrangement", "PartialWiredComplex", "WiredComplex", "normalize_face", "wires_compatible",
]
