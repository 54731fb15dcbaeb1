from fractions import Fraction as F

import pytest

from conftest import planar
from mimicnet.exceptions import ParameterError
from mimicnet.geometry import segment_crossing, signed_area, sort_by_angle, winding_number
from mimicnet.planar import (
    bitstrings,
    claim_paths,
    dec,
    generate_planar_dual,
    important_cycle,
    layer_size,
    rev,
    verify_claim_paths,
    verify_crossings,
    verify_structure,
    verify_unique_cut_cycles,
    verify_weight_hierarchy,
    weight_table,
)


def test_bit_helpers():
    assert bitstrings(2) == ["00", "01", "10", "11"]
    assert bitstrings(0) == [""]
    assert dec("110") == 6 and dec((0, 1)) == 1
    assert rev((1, 0, 0)) == (0, 0, 1)


def test_weight_table_k4():
    c, big = weight_table(4)
    assert (c[2], c[1], big) == (1, 6, 18)


@pytest.mark.parametrize("j", range(1, 7))
def test_layer_size_formula(j):
    h = 2 ** (j - 1)
    assert layer_size(j, 9) == h * (h + 1)


def test_segment_crossing():
    p = segment_crossing((F(0), F(0)), (F(2), F(2)), (F(0), F(2)), (F(2), F(0)))
    assert p == (F(1, 2), F(1, 2), (F(1), F(1)))
    assert segment_crossing((F(0), F(0)), (F(1), F(0)), (F(0), F(1)), (F(1), F(1))) is None
    # shared endpoint is not a crossing
    assert segment_crossing((F(0), F(0)), (F(1), F(1)), (F(1), F(1)), (F(2), F(0))) is None
    with pytest.raises(ValueError):
        segment_crossing((F(0), F(0)), (F(2), F(0)), (F(1), F(0)), (F(1), F(1)))
    with pytest.raises(ValueError):
        segment_crossing((F(0), F(0)), (F(2), F(0)), (F(1), F(0)), (F(3), F(0)))


def test_polygon_helpers():
    sq = [(F(0), F(0)), (F(2), F(0)), (F(2), F(2)), (F(0), F(2))]
    assert signed_area(sq) == 4
    assert signed_area(sq[::-1]) == -4
    assert winding_number(sq, (F(1), F(1))) == 1
    assert winding_number(sq[::-1], (F(1), F(1))) == -1
    assert winding_number(sq, (F(3), F(1))) == 0
    dirs = [(1, 0), (0, -1), (-1, 0), (0, 1), (1, 1)]
    assert sort_by_angle(dirs, lambda d: d) == [(1, 0), (1, 1), (0, 1), (-1, 0), (0, -1)]


@pytest.mark.parametrize("k", [2, 11, "4"])
def test_bad_k(k):
    with pytest.raises(ParameterError):
        generate_planar_dual(k)


def test_k3_instance():
    inst = planar(3)
    assert (len(inst.dual.points), len(inst.dual.edges), len(inst.dual.faces)) == (4, 5, 3)
    assert inst.primal.n == 3
    assert verify_unique_cut_cycles(inst).data["values"] == [6, 6]


def test_k4_important_values():
    rep = verify_unique_cut_cycles(planar(4))
    assert rep.passed
    # all-0 and all-1 signatures use heavy edges only; the mixed ones add one c_2 edge
    assert rep.data["values"] == [72, 73, 73, 72]


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_all_checks_pass(k):
    inst = planar(k)
    for rep in (
        verify_structure(inst),
        verify_weight_hierarchy(inst),
        verify_crossings(inst),
        verify_claim_paths(inst),
        verify_unique_cut_cycles(inst),
    ):
        assert rep.passed, rep.render()


@pytest.mark.parametrize("k", [4, 5, 6])
def test_important_cycles_are_heavy_and_light_bounded(k):
    inst = planar(k)
    for sig, _ in inst.important():
        cyc = important_cycle(inst, sig)
        heavy = [i for i in cyc if inst.heavy(i)]
        assert len(heavy) == k
        assert inst.weight_of(cyc) - k * inst.C < inst.C


def test_primal_terminals_and_dual_edges():
    inst = planar(5)
    g = inst.primal
    assert [g.labels[t] for t in g.terminals] == ["f_n", "f_s", "f_1", "f_2", "f_3"]
    assert len(g.edges) == len(inst.dual.edges)
    assert [e.weight for e in g.edges] == [e.weight for e in inst.dual.edges]
    assert len(claim_paths(inst)) == 5


def test_signature_round_trip():
    inst = planar(5)
    for sig, b in inst.important():
        assert inst.bipartition(sig) == b
        assert inst.signature(b) == sig
    with pytest.raises(ParameterError):
        inst.bipartition((1, 0))


def test_generation_is_deterministic():
    assert generate_planar_dual(5).primal == planar(5).primal


def test_no_shear_needed_up_to_8():
    for k in range(3, 9):
        inst = planar(k)
        assert not inst.sheared
        assert verify_weight_hierarchy(inst).passed
        assert verify_crossings(inst).passed
