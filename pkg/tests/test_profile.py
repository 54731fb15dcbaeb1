
import pytest
from hypothesis import given, settings

from conftest import terminal_graphs
from mimicnet.exceptions import InvalidTerminalSetError, ProfileMismatchError
from mimicnet.graph import TerminalGraph, merge_vertices
from mimicnet.profile import (
    cut_profile,
    format_vector,
    hagerup_compress,
    mergeability_test,
    side_classes,
    side_vectors,
    validate_mimicking,
)


def test_profile_values(path_graph):
    prof = cut_profile(path_graph)
    assert prof.values == (3, 2, 1)
    assert prof.unique == (False, True, True)
    assert len(prof) == 3


def test_parallel_profile_matches_serial(path_graph):
    assert cut_profile(path_graph, jobs=2) == cut_profile(path_graph)


def test_side_vectors_and_classes(path_graph):
    g = path_graph
    vecs = side_vectors(g, cut_profile(g))
    got = {g.labels[x]: format_vector(v) for x, v in vecs.items()}
    assert got == {"a": "111", "b": "010", "c": "001", "x": "011", "y": "010"}
    classes = side_classes(g, cut_profile(g))
    assert [[g.labels[x] for x in c] for c in classes] == [["a"], ["b", "y"], ["c"], ["x"]]


def test_compress_merges_equal_vectors(path_graph):
    small, rep = hagerup_compress(path_graph)
    assert (rep.n_before, rep.n_after) == (5, 4)
    assert "merged: b y" in rep.render()
    assert [small.labels[t] for t in small.terminals] == ["a", "b", "c"]
    assert validate_mimicking(path_graph, small).passed


def test_validate_reports_mismatch(path_graph):
    g = path_graph
    bad = TerminalGraph.from_edges([("a", "b", 1), ("a", "c", 1), ("b", "c", 1)], ["a", "b", "c"])
    rep = validate_mimicking(g, bad)
    assert not rep.passed
    # every triangle cut is 2; only the middle bipartition agrees
    assert [m[0] for m in rep.data["mismatches"]] == [0, 2]
    assert "result: FAIL" in rep.render()


def test_validate_requires_same_terminals(path_graph):
    other = TerminalGraph.from_edges([("a", "b", 1), ("b", "d", 1)], ["a", "b", "d"])
    with pytest.raises(InvalidTerminalSetError):
        validate_mimicking(path_graph, other)


def test_profile_for_other_graph_is_rejected(path_graph, triangle):
    with pytest.raises(ProfileMismatchError):
        side_vectors(path_graph, cut_profile(triangle))


def test_mergeability(path_graph):
    # y and b share a side vector, so merging them is harmless
    assert mergeability_test(path_graph, "y", "b")
    # x and y straddle the cheapest cut separating b from {a, c}
    assert not mergeability_test(path_graph, "x", "y")


@given(terminal_graphs(max_n=9))
@settings(max_examples=120, deadline=None)
def test_compression_preserves_every_cut(g):
    prof = cut_profile(g)
    small, rep = hagerup_compress(g, prof)
    assert small.n == rep.n_after <= g.n
    assert small.k == g.k
    assert validate_mimicking(g, small, prof).passed


@given(terminal_graphs(max_n=7))
@settings(max_examples=60, deadline=None)
def test_merging_never_lowers_cuts(g):
    prof = cut_profile(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if u in g.terminal_set and v in g.terminal_set:
                continue
            merged_vals = cut_profile(merge_vertices(g, u, v)).values
            assert all(m >= o for m, o in zip(merged_vals, prof.values))
            assert mergeability_test(g, u, v, prof) == (merged_vals == prof.values)


def test_cut_components_contain_terminals():
    from conftest import dblexp2, planar
    from mimicnet.graph import induced_components

    # dblexp carries zero-weight edges, so this is not automatic there
    for g in (planar(5).primal, dblexp2().graph):
        for c in cut_profile(g).cuts:
            comps = induced_components(g, c.crossing_edges)
            assert all(comp & g.terminal_set for comp in comps)
