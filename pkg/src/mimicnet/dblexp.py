"""The doubly-exponential instance that merge-based compression cannot shrink.

Terminals are ``q1..q_{2r+1}`` followed by ``x``. The middle layer has one
vertex per r-subset of the q's, the outer layer one vertex per half-size
subset of the middle layer.
"""

from __future__ import annotations

import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable

from .cuts import min_cut
from .exceptions import ParameterError, SizeGuardError
from .graph import TerminalGraph
from .partitions import Bipartition, enumerate_bipartitions
from .profile import CutProfile, cut_profile, mergeability_test, side_vectors
from .report import Report

MAX_OUTER = 10**4


def check_ell_even(r: int) -> tuple[int, bool]:
    """``binom(2r+1, r)`` and whether it is even."""
    if not isinstance(r, int) or r < 2:
        raise ParameterError(f"r must be an integer >= 2, got {r!r}")
    ell = comb(2 * r + 1, r)
    return ell, ell % 2 == 0


def _subset_label(prefix, items) -> str:
    return prefix + "{" + ",".join(map(str, items)) + "}"


@dataclass
class DblExpInstance:
    r: int
    ell: int
    alpha: Fraction
    graph: TerminalGraph
    middle: dict[tuple[int, ...], int]  # r-subset of 1..2r+1 -> vertex id
    outer: dict[tuple[int, ...], int]  # half-size subset of middle indices -> vertex id
    middle_order: list[tuple[int, ...]]

    @property
    def k(self) -> int:
        return 2 * self.r + 2

    @property
    def x(self) -> int:
        return self.graph.terminals[-1]

    def q(self, i: int) -> int:
        """Vertex id of terminal ``q_i`` (1-based)."""
        return self.graph.terminals[i - 1]

    def heavy_cost(self) -> Fraction:
        r = self.r
        return (1 + Fraction(1, r) + Fraction(1, r * r)) * self.alpha

    def important_sets(self) -> list[tuple[int, ...]]:
        return list(self.middle_order)

    def bipartition(self, s0: Iterable[int]) -> Bipartition:
        """Canonical bipartition of the important set ``s0 + {x}``."""
        side = {self.q(i) for i in s0} | {self.x}
        return Bipartition.from_side(self.graph.terminals, side)


def generate_dblexp(r: int, alpha=None, max_outer: int = MAX_OUTER) -> DblExpInstance:
    if not isinstance(r, int) or r < 2 or r % 4 != 2:
        raise ParameterError(f"r must be 2 modulo 4, got {r!r}")
    ell, even = check_ell_even(r)
    if not even:
        raise ParameterError(f"binom({2 * r + 1}, {r}) = {ell} is odd")
    half = ell // 2
    m = comb(ell, half)
    if m > max_outer:
        raise SizeGuardError(
            f"outer layer would have binom({ell}, {half}) vertices "
            f"(about 10^{len(str(m)) - 1}), above max_outer={max_outer}"
        )
    bound = r * r * ell * m
    alpha = Fraction(bound + 1) if alpha is None else Fraction(alpha)
    if not alpha > bound:
        raise ParameterError(f"alpha must exceed r^2 * ell * |W| = {bound}, got {alpha}")

    nq = 2 * r + 1
    labels = [f"q{i}" for i in range(1, nq + 1)] + ["x"]
    terminals = list(range(nq + 1))
    x = nq
    middle_order = list(combinations(range(1, nq + 1), r))
    middle = {}
    for s in middle_order:
        middle[s] = len(labels)
        labels.append(_subset_label("u", s))
    outer = {}
    outer_order = list(combinations(range(ell), half))
    for z in outer_order:
        outer[z] = len(labels)
        labels.append(_subset_label("w", z))

    heavy = (1 + Fraction(1, r) + Fraction(1, r * r)) * alpha
    edges = []
    for s in middle_order:
        for i in range(1, nq + 1):
            edges.append((middle[s], i - 1, heavy if i in s else alpha))
    for z in outer_order:
        zs = set(z)
        for j, s in enumerate(middle_order):
            edges.append((middle[s], outer[z], 1 if j in zs else 0))
    for z in outer_order:
        edges.append((x, outer[z], half - 1))

    g = TerminalGraph(tuple(labels), tuple(terminals), tuple(edges))
    outer_ids = set(outer.values())
    outer_total = sum(e.weight for e in g.edges if e.u in outer_ids or e.v in outer_ids)
    if not outer_total < alpha / (r * r):
        raise ParameterError(f"outer-layer weight {outer_total} is not below alpha/r^2")
    return DblExpInstance(r, ell, alpha, g, middle, outer, middle_order)


def _check_subset(inst: DblExpInstance, s) -> tuple[int, ...]:
    s = tuple(sorted(int(i) for i in s))
    if s not in inst.middle:
        raise ParameterError(f"{s} is not an r-subset of 1..{2 * inst.r + 1}")
    return s


def balance(inst: DblExpInstance, s0, s_prime) -> Fraction:
    """Weight from ``u_{s_prime}`` into ``s0`` minus its weight into the other q's."""
    s0 = _check_subset(inst, s0)
    s_prime = _check_subset(inst, s_prime)
    g = inst.graph
    u = inst.middle[s_prime]
    inside = {inst.q(i) for i in s0}
    out = Fraction(0)
    for i in g.incidence[u]:
        e = g.edges[i]
        other = e.other(u)
        if other == inst.x or other not in g.terminal_set:
            continue
        out += e.weight if other in inside else -e.weight
    return out


def _s_side(cut, b: Bipartition, side_terminals, n):
    if b.source == frozenset(side_terminals):
        return cut.source_min_side
    return frozenset(range(n)) - cut.source_min_side


def forced_cut_value(inst: DblExpInstance, s0) -> Fraction:
    """Cut value when the middle layer sides follow the balance argument.

    ``u_{s0}`` joins the side of ``s0 + {x}``, all other middle vertices the
    opposite side, and each outer vertex independently takes the cheaper side.
    """
    s0 = _check_subset(inst, s0)
    side = {inst.q(i) for i in s0} | {inst.x, inst.middle[s0]}
    total = Fraction(0)
    for s in inst.middle_order:
        u = inst.middle[s]
        for i in range(1, 2 * inst.r + 2):
            w = inst.heavy_cost() if i in s else inst.alpha
            if (u in side) != (inst.q(i) in side):
                total += w
    j0 = inst.middle_order.index(s0)
    half = inst.ell // 2
    for z in inst.outer:
        has = j0 in z
        join_s = len(z) - (1 if has else 0)
        join_other = (half - 1) + (1 if has else 0)
        total += min(join_s, join_other)
    return total


def verify_side_assignment(inst: DblExpInstance) -> Report:
    """For each important set the outer vertices side with it exactly when ``u_{S0}`` is in their subset."""
    g = inst.graph
    rep = Report("side assignment: w_Z sides with S exactly when u_S0 is in Z", {"r": inst.r, "k": inst.k})
    expected_s = comb(inst.ell - 1, inst.ell // 2 - 1)
    checks = 0
    for s0 in inst.important_sets():
        b = inst.bipartition(s0)
        side_terms = {inst.q(i) for i in s0} | {inst.x}
        cut = min_cut(g, b)
        label = "{" + ",".join(f"q{i}" for i in s0) + "}"
        if not cut.unique:
            rep.fail(f"S0={label}: minimum cut is not unique")
        side = _s_side(cut, b, side_terms, g.n)
        on_s = [s for s in inst.middle_order if inst.middle[s] in side]
        if on_s != [s0]:
            rep.fail(f"S0={label}: middle vertices on the S side are {on_s}")
        j0 = inst.middle_order.index(s0)
        wrong = 0
        count_s = 0
        for z, wid in inst.outer.items():
            checks += 1
            if wid in side:
                count_s += 1
            if (wid in side) != (j0 in z):
                wrong += 1
        if wrong:
            rep.fail(f"S0={label}: {wrong} outer vertices on the wrong side")
        if count_s != expected_s:
            rep.fail(f"S0={label}: {count_s} outer vertices on the S side, expected {expected_s}")
        oracle = forced_cut_value(inst, s0)
        if cut.value != oracle:
            rep.fail(f"S0={label}: cut value {cut.value} differs from forced-side value {oracle}")
    half = inst.ell // 2
    rep.note(f"{len(inst.important_sets())} important sets, {checks} outer-vertex checks")
    rep.note(
        f"outer vertex costs: with u_S0 in Z join S for {half - 1}, else {half}; "
        f"without u_S0 join S for {half}, else {half - 1}"
    )
    rep.note(f"outer vertices on the S side per important set: {expected_s}")
    rep.data["checks"] = checks
    return rep


def eligible_pairs(g: TerminalGraph) -> list[tuple[int, int]]:
    terms = g.terminal_set
    return [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not (u in terms and v in terms)
    ]


def sample_pairs(inst: DblExpInstance, n_pairs: int = 500, n_outer_pairs: int = 20, seed: int = 0):
    rng = random.Random(seed)
    pairs = rng.sample(eligible_pairs(inst.graph), n_pairs)
    outer_ids = sorted(inst.outer.values())
    extra = set()
    while len(extra) < n_outer_pairs:
        a, b = rng.sample(outer_ids, 2)
        extra.add((min(a, b), max(a, b)))
    return pairs + sorted(extra)


def verify_incompressibility(
    inst: DblExpInstance,
    mode: str = "sampled",
    seed: int = 0,
    n_pairs: int = 500,
    n_outer_pairs: int = 20,
    profile: CutProfile | None = None,
    progress=None,
) -> Report:
    """No pair of vertices can be identified without raising some minimum cut."""
    if mode not in ("sampled", "full"):
        raise ValueError(f"mode must be 'sampled' or 'full', got {mode!r}")
    if mode == "full" and inst.r != 2:
        raise SizeGuardError("full pairwise mode is limited to r = 2")
    g = inst.graph
    rep = Report(
        "incompressibility: no two vertices can be merged",
        {"r": inst.r, "k": inst.k, "mode": mode, "seed": seed},
    )
    if profile is None:
        profile = cut_profile(g)
    vecs = side_vectors(g, profile)
    distinct = len(set(vecs.values()))
    rep.note(f"{distinct}/{g.n} distinct side vectors over {len(profile)} bipartitions")
    if distinct != g.n:
        rep.fail("some vertices share a side vector")

    pairs = eligible_pairs(g) if mode == "full" else sample_pairs(inst, n_pairs, n_outer_pairs, seed)
    outer_ids = set(inst.outer.values())
    n_outer = sum(1 for u, v in pairs if u in outer_ids and v in outer_ids)
    mergeable = []
    for n, (u, v) in enumerate(pairs, start=1):
        if mergeability_test(g, u, v, profile):
            mergeable.append((g.labels[u], g.labels[v]))
        if progress is not None and (n % 500 == 0 or n == len(pairs)):
            progress(n, len(pairs))
    rep.note(f"{len(pairs)} pairs tested ({n_outer} outer-outer), {len(mergeable)} mergeable")
    for a, b in mergeable[:20]:
        rep.fail(f"{a} and {b} can be merged")
    rep.data.update(pairs=len(pairs), outer_pairs=n_outer, mergeable=mergeable, distinct=distinct)
    return rep


def stderr_progress(done: int, total: int):
    print(f"  tested {done}/{total} pairs", file=sys.stderr, flush=True)


def important_count(inst: DblExpInstance) -> int:
    """Bipartitions whose canonical form comes from an important set."""
    masks = {inst.bipartition(s).mask for s in inst.important_sets()}
    return sum(1 for b in enumerate_bipartitions(inst.graph.terminals) if b.mask in masks)
