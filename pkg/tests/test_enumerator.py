from __future__ import annotations

import itertools

import pytest

from conftest import arrangement, face_set_key, k4
from oracles import classes_bruteforce, complexes_bruteforce, potential_faces_bruteforce, relabelings_bruteforce
from wiredcx import corpus
from wiredcx.enumerator import (
    FacePattern,
    SearchConfig,
    enumerate_complexes,
    generate_potential_faces,
    iter_solutions,
)
from wiredcx.graphs import builtin_graph
from wiredcx.isomorphism import canonical_key
from wiredcx.wired import IncompatibleFace, LinkArrangement, flat, normalize_face, wire_class_occurrences

# potential faces / raw complete complexes / isomorphism classes, from tests/oracles.py
ORACLE_COUNTS = {
    ("cycle:3",): (0, 0, 0),
    ("cycle:4",): (4, 0, 0),
    ("cycle:5",): (5, 0, 0),
    ("cycle:6",): (22, 7, 3),
    ("cycle:7",): (63, 0, 0),
    ("cycle:8",): (136, 0, 0),
    ("k33",): (84, 12, 1),
    ("cycle:3", "cycle:3"): (0, 0, 0),
    ("cycle:3", "cycle:6"): (238, 0, 0),
}


def links_of_names(names):
    return [builtin_graph(n) for n in names]


@pytest.mark.parametrize("names", list(ORACLE_COUNTS), ids=lambda n: "+".join(n))
def test_frozen_counts(names):
    arr = arrangement(*names)
    n_faces, n_raw, n_classes = ORACLE_COUNTS[names]
    assert len(generate_potential_faces(arr)) == n_faces
    raw = enumerate_complexes(arr, SearchConfig(dedup=False))
    assert raw.stats.solutions == len(raw.complexes) == n_raw
    assert enumerate_complexes(arr).stats.classes == n_classes


@pytest.mark.parametrize("names", list(ORACLE_COUNTS), ids=lambda n: "+".join(n))
def test_potential_faces_match_oracle(names):
    arr = arrangement(*names)
    ours = {flat(f) for f in generate_potential_faces(arr)}
    assert ours == potential_faces_bruteforce(links_of_names(names))


def test_cycle3_has_no_potential_face():
    # Three wires on three edge-ends: the pairwise compatibility rule forces
    # all of them into one class, so no corner survives as a proper edge.
    arr = arrangement("cycle:3")
    assert generate_potential_faces(arr, [FacePattern((0, 0, 0))]) == []


def test_mk16_potential_faces(mk16_arr, v_fixtures):
    faces = generate_potential_faces(mk16_arr)
    assert len(faces) == 8864
    table = set(faces)
    assert all(normalize_face(f) == f for f in faces)
    for wc in v_fixtures:
        assert {normalize_face(f) for f in wc.faces} <= table


def test_mk16_potential_faces_oracle(mk16_arr):
    ours = {flat(f) for f in generate_potential_faces(mk16_arr)}
    assert ours == potential_faces_bruteforce([builtin_graph("mk16")])


MULTI = {
    "k4": [k4()],
    "k4+k4": [k4(), k4()],
    "cycle:6+cycle:6": [builtin_graph("cycle:6")] * 2,
    "cycle:4x3": [builtin_graph("cycle:4")] * 3,
}
# raw solutions / classes from the oracle
MULTI_COUNTS = {"k4": (6, 1), "k4+k4": (36, 1), "cycle:6+cycle:6": (301, 11), "cycle:4x3": (128, 1)}


@pytest.mark.parametrize("name", list(MULTI))
def test_multi_link_against_oracle(name):
    links = MULTI[name]
    arr = LinkArrangement(tuple(links))
    run = enumerate_complexes(arr, SearchConfig(dedup=False))
    got = [face_set_key(wc) for wc in run.complexes]
    expected = complexes_bruteforce(links)
    assert len(got) == len(set(got)) == MULTI_COUNTS[name][0]
    assert set(got) == expected
    classes = enumerate_complexes(arr)
    assert classes.stats.classes == MULTI_COUNTS[name][1]
    assert sum(classes.multiplicities) == MULTI_COUNTS[name][0]


@pytest.mark.parametrize("n", range(3, 9))
def test_cycle_enumeration_matches_oracle(n):
    links = [builtin_graph(f"cycle:{n}")]
    arr = LinkArrangement(tuple(links))
    raw = enumerate_complexes(arr, SearchConfig(dedup=False))
    keys = [face_set_key(wc) for wc in raw.complexes]
    expected = complexes_bruteforce(links)
    assert len(keys) == len(set(keys))
    assert set(keys) == expected
    oracle_classes = classes_bruteforce(sorted(expected, key=sorted), relabelings_bruteforce(links))
    assert enumerate_complexes(arr).stats.classes == len(oracle_classes)


def test_every_output_is_complete():
    run = enumerate_complexes(arrangement("k33"), SearchConfig(dedup=False))
    for wc in run.complexes:
        assert wc.is_complete()
        assert set(wire_class_occurrences(wc.faces).values()) == {3}


def test_zero_links():
    run = enumerate_complexes(LinkArrangement(()))
    assert (run.stats.nodes, run.stats.solutions, run.stats.classes) == (1, 1, 1)
    assert run.complexes[0].faces == []


def test_mk16_stats(mk16_census, mk16_raw):
    s = mk16_census.stats
    assert s.classes == 27
    assert s.solutions >= s.classes
    assert s.solutions == mk16_raw.stats.solutions == 1400
    assert s.faces_generated == 8864
    assert sum(mk16_census.multiplicities) == s.solutions
    assert not s.truncated
    lines = s.as_lines()
    assert [ln.split("=")[0] for ln in lines] == ["nodes", "faces_generated", "solutions", "classes", "truncated", "wall_time"]


def test_mk16_raw_emits_each_face_set_once(mk16_raw):
    keys = [face_set_key(wc) for wc in mk16_raw.complexes]
    assert len(keys) == len(set(keys)) == 1400


def test_truncation():
    run = enumerate_complexes(arrangement("cycle:6"), SearchConfig(dedup=False, max_solutions=3))
    assert run.stats.truncated
    assert run.stats.solutions == 3 == len(run.complexes)


def test_seeds_respect_fixture_class(v_fixtures, mk16_arr):
    for idx in (1, 12, 26):
        target = v_fixtures[idx]
        seed = [target.faces[3]]
        run = enumerate_complexes(mk16_arr, SearchConfig(seed_faces=seed))
        keys = {canonical_key(wc) for wc in run.complexes}
        assert canonical_key(target) in keys
        for wc in run.complexes:
            assert wc.faces[0] == seed[0]
            assert wc.is_complete()


def test_bad_seeds_rejected(v1, mk16_arr):
    with pytest.raises(IncompatibleFace):
        enumerate_complexes(mk16_arr, SearchConfig(seed_faces=[v1.faces[0], v1.faces[0]]))
    with pytest.raises(IncompatibleFace):
        enumerate_complexes(mk16_arr, SearchConfig(seed_faces=[((0, 1), (1, 0), (0, 1))]))


def test_complete_seed_yields_itself(v1, mk16_arr):
    run = enumerate_complexes(mk16_arr, SearchConfig(seed_faces=list(v1.faces), dedup=False))
    assert run.stats.solutions == 1
    assert run.complexes[0].faces == v1.faces


def test_patterns_partition_faces():
    arr = arrangement("cycle:3", "cycle:6")
    everything = set(generate_potential_faces(arr))
    union = set()
    for triple in itertools.combinations_with_replacement(range(2), 3):
        union |= set(generate_potential_faces(arr, [FacePattern(triple)]))
    assert union == everything
    inner = generate_potential_faces(arr, [FacePattern((1, 1, 1))])
    assert len(inner) == 22  # the faces of the cycle:6 block alone


def test_pattern_order_is_up_to_normalization():
    arr = arrangement("cycle:3", "cycle:6")
    a = set(generate_potential_faces(arr, [FacePattern((0, 1, 1))]))
    b = set(generate_potential_faces(arr, [FacePattern((1, 0, 1))]))
    assert a == b


def test_iter_solutions_matches_enumerate():
    arr = arrangement("cycle:6")
    streamed = [face_set_key(wc) for wc in iter_solutions(arr)]
    run = enumerate_complexes(arr, SearchConfig(dedup=False))
    assert streamed == [face_set_key(wc) for wc in run.complexes]


def test_sequential_runs_are_identical():
    arr = LinkArrangement((builtin_graph("cycle:6"),) * 2)
    a = enumerate_complexes(arr, SearchConfig(dedup=False))
    b = enumerate_complexes(arr, SearchConfig(dedup=False))
    assert [wc.faces for wc in a.complexes] == [wc.faces for wc in b.complexes]
    assert a.stats.nodes == b.stats.nodes


@pytest.mark.parametrize("jobs, depth", [(2, 1), (3, 2)])
def test_parallel_matches_sequential_small(jobs, depth):
    arr = LinkArrangement((builtin_graph("cycle:6"),) * 2)
    seq = enumerate_complexes(arr, SearchConfig(dedup=False))
    par = enumerate_complexes(arr, SearchConfig(dedup=False, jobs=jobs, split_depth=depth))
    assert [wc.faces for wc in par.complexes] == [wc.faces for wc in seq.complexes]
    assert par.stats.nodes == seq.stats.nodes
    dedup_par = enumerate_complexes(arr, SearchConfig(jobs=jobs, split_depth=depth))
    assert dedup_par.stats.classes == 11


def test_parallel_truncation():
    arr = LinkArrangement((builtin_graph("cycle:6"),) * 2)
    run = enumerate_complexes(arr, SearchConfig(dedup=False, jobs=2, max_solutions=5))
    assert run.stats.truncated and run.stats.solutions == 5


def test_corpus_fixture_in_census(mk16_census):
    keys = {canonical_key(wc) for wc in mk16_census.complexes}
    assert canonical_key(corpus.get("conv-8").load()) in keys
