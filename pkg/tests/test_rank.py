import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mimicnet.exceptions import ParseError, PreconditionError
from mimicnet.profile import cut_profile
from mimicnet.rank import build_incidence_matrix, exact_rank, gf2_rank, loads_matrix, rational_rank

matrices = st.integers(1, 7).flatmap(
    lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=0, max_size=7)
)
zero_one = st.integers(1, 8).flatmap(
    lambda c: st.lists(st.lists(st.integers(0, 1), min_size=c, max_size=c), min_size=1, max_size=8)
)


def test_small_ranks():
    assert exact_rank([[1, 1], [1, 1]]) == 1
    odd_cycle = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    assert exact_rank(odd_cycle) == 3
    assert gf2_rank(odd_cycle) == 2
    assert exact_rank([]) == 0
    assert exact_rank([[0, 0, 0]]) == 0
    assert exact_rank([[2, 4], [1, 2]]) == 1


@given(matrices)
@settings(max_examples=300, deadline=None)
def test_bareiss_matches_fraction_elimination(m):
    assert exact_rank(m) == rational_rank(m)


@given(zero_one)
@settings(max_examples=200, deadline=None)
def test_mod2_rank_never_exceeds_rational_rank(m):
    assert gf2_rank(m) <= exact_rank(m) <= min(len(m), len(m[0]))


def test_row_modes(path_graph):
    g = path_graph
    prof = cut_profile(g)
    full = build_incidence_matrix(g, prof, "all")
    assert full.shape == (3, 4)
    assert full.row_for(2) == (0, 1, 0, 0)  # only x-y crosses {a,c}|{b}
    with pytest.warns(UserWarning):
        uniq = build_incidence_matrix(g, prof, "unique-only")
    assert uniq.row_masks == (1, 2)
    imp = build_incidence_matrix(g, prof, "important-only")
    assert imp.row_masks == (0, 2)
    with pytest.raises(PreconditionError):
        build_incidence_matrix(g, prof, "all", strict=True)
    with pytest.raises(ValueError):
        build_incidence_matrix(g, prof, "some")


def test_dump_round_trip(triangle):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        m = build_incidence_matrix(triangle, cut_profile(triangle))
    assert loads_matrix(m.dumps()) == [list(r) for r in m.rows]


@pytest.mark.parametrize("text", ["", "x y\n", "2 2\n10\n", "1 2\n1a\n"])
def test_bad_dumps(text):
    with pytest.raises(ParseError):
        loads_matrix(text)
