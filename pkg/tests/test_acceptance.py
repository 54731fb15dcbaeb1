"""Acceptance criteria, one test per criterion.

Each test records a one-line verdict that is printed in the pytest terminal
summary. Running this file directly prints the same lines.
"""

import random
import time
import warnings

import pytest

from conftest import dblexp2, planar, random_graph
from mimicnet.cuts import brute_force_min_cut, min_cut_value
from mimicnet.dblexp import verify_incompressibility, verify_side_assignment
from mimicnet.graph import merge_vertices
from mimicnet.partitions import enumerate_bipartitions
from mimicnet.planar import (
    verify_claim_paths,
    verify_crossings,
    verify_unique_cut_cycles,
    verify_weight_hierarchy,
    weight_table,
)
from mimicnet.profile import cut_profile, hagerup_compress, validate_mimicking
from mimicnet.rank import build_incidence_matrix, exact_rank, verify_identity_submatrix

RESULTS: dict[int, str] = {}


def record(n, ok, detail):
    RESULTS[n] = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    return ok


def criterion_1():
    start = time.perf_counter()
    bad = []
    for k in (3, 4, 5, 6):
        rep = verify_unique_cut_cycles(planar(k))
        if not (rep.passed and rep.data["ok"] == rep.data["total"] == 2 ** (k - 2)):
            bad.append(k)
    secs = time.perf_counter() - start
    ok = not bad and secs < 60
    return record(1, ok, f"important cuts unique and equal to cycles for k=3..6 ({secs:.1f}s), failing k: {bad}")


def criterion_2():
    bad = []
    for k in (3, 4, 5, 6):
        inst = planar(k)
        prof = cut_profile(inst.primal)
        imp = build_incidence_matrix(inst.primal, prof, "important-only")
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")  # non-unique rows are dropped on purpose
            uniq = build_incidence_matrix(inst.primal, prof, "unique-only")
        want = 2 ** (k - 2)
        if exact_rank(imp) != want or not verify_identity_submatrix(inst, imp).passed:
            bad.append(k)
        elif exact_rank(uniq) < want:
            bad.append(k)
    return record(2, not bad, f"important-row rank 2^(k-2) with identity submatrix for k=3..6, failing k: {bad}")


def criterion_3():
    bad = []
    for k in (3, 4, 5, 6):
        rep = verify_claim_paths(planar(k))
        want = [2**i for i in range(k - 1)] + [2 ** (k - 2)]
        if not rep.passed or rep.data["lengths"] != want:
            bad.append(k)
    return record(3, not bad, f"k edge-disjoint heavy paths with lengths 1,2,..,2^(k-2),2^(k-2) for k=3..6, failing k: {bad}")


def criterion_4():
    bad = []
    for k in range(3, 9):
        inst = planar(k)
        if not (verify_weight_hierarchy(inst).passed and verify_crossings(inst).passed):
            bad.append(k)
    return record(4, not bad, f"weight hierarchy and per-strip crossing counts for k=3..8, failing k: {bad}")


def criterion_5():
    start = time.perf_counter()
    rep = verify_side_assignment(dblexp2())
    secs = time.perf_counter() - start
    ok = rep.passed and rep.data["checks"] == 2520 and secs < 60
    return record(5, ok, f"r=2 side assignment, {rep.data['checks']} outer-vertex checks over 10 sets ({secs:.1f}s)")


def criterion_6():
    inst = dblexp2()
    prof = cut_profile(inst.graph)
    rep = verify_incompressibility(inst, mode="sampled", seed=0, n_pairs=500, n_outer_pairs=20, profile=prof)
    d = rep.data
    ok = (
        rep.passed
        and len(prof) == 31
        and d["distinct"] == 268
        and d["pairs"] >= 500
        and d["outer_pairs"] >= 20
        and not d["mergeable"]
    )
    return record(
        6,
        ok,
        f"{d['distinct']}/268 distinct side vectors over {len(prof)} bipartitions; "
        f"{d['pairs']} pairs ({d['outer_pairs']} W x W), {len(d['mergeable'])} mergeable",
    )


def criterion_7(n_graphs=1000):
    failures = []
    merges = 0
    for seed in range(n_graphs):
        g = random_graph(random.Random(seed))
        prof = cut_profile(g)
        small, _ = hagerup_compress(g, prof)
        if not validate_mimicking(g, small, prof).passed:
            failures.append((seed, "compress"))
        for c in prof.cuts:
            if brute_force_min_cut(g, c.bipartition)[0] != c.value:
                failures.append((seed, "oracle"))
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if u in g.terminal_set and v in g.terminal_set:
                    continue
                m = merge_vertices(g, u, v)
                merges += 1
                bips = enumerate_bipartitions(m.terminals)
                if any(min_cut_value(m, b) < c.value for b, c in zip(bips, prof.cuts)):
                    failures.append((seed, "merge"))
    return record(
        7,
        not failures,
        f"{n_graphs} random graphs: compression, brute-force agreement, {merges} single merges; failures: {failures[:5]}",
    )


def criterion_8():
    bad = []
    c, big = weight_table(4)
    if (c[2], c[1], big) != (1, 6, 18) or (planar(4).c[2], planar(4).c[1], planar(4).C) != (1, 6, 18):
        bad.append("k=4 weights")
    for k in range(3, 9):
        inst = planar(k)
        for j in range(1, k - 1):
            h = 2 ** (j - 1)
            if len(inst.layers[j]) != h * (h + 1):
                bad.append(f"|E_{j}| at k={k}")
        p = inst.dual
        if len(p.points) - len(p.edges) + len(p.faces) != 2:
            bad.append(f"Euler at k={k}")
    return record(8, not bad, f"layer sizes, Euler's formula for k=3..8 and k=4 weights (1, 6, 18); problems: {bad}")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("check", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 9)])
def test_criterion(check):
    assert check(), RESULTS[CRITERIA.index(check) + 1]


if __name__ == "__main__":
    for check in CRITERIA:
        check()
    for n in sorted(RESULTS):
        print(RESULTS[n])
