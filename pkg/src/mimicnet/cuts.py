"""Exact minimum terminal cuts.

Max-flow runs on integer capacities: every weight is multiplied by the lcm
of the denominators, so the arithmetic stays exact and fast. The flow is
found by shortest augmenting paths in Dinic's blocking-flow form, whose
running time does not depend on the size of the weights.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .exceptions import ConnectivityError, OracleTooLargeError
from .graph import TerminalGraph, crossing_edges, cut_value
from .partitions import Bipartition

ORACLE_LIMIT = 20


@dataclass(frozen=True)
class CanonicalCut:
    """A minimum cut for one bipartition, pinned to its source-minimal side."""

    bipartition: Bipartition
    value: Fraction
    crossing_edges: frozenset[int]
    source_min_side: frozenset[int]
    sink_min_complement: frozenset[int]

    @property
    def unique(self) -> bool:
        return self.source_min_side == self.sink_min_complement


@dataclass(frozen=True)
class FlowResult:
    value: Fraction
    edge_flow: tuple[Fraction, ...]  # signed, positive means from edge.u to edge.v
    source_reach: frozenset[int]
    sink_coreach: frozenset[int]


class _Network:
    __slots__ = ("n", "head", "res", "first", "nxt", "edge_arc")

    def __init__(self, n):
        self.n = n
        self.head: list[int] = []
        self.res: list[int] = []
        self.first = [-1] * n
        self.nxt: list[int] = []

    def add_undirected(self, u, v, cap):
        a = len(self.head)
        self.head += [v, u]
        self.res += [cap, cap]
        self.nxt += [self.first[u], self.first[v]]
        self.first[u] = a
        self.first[v] = a + 1
        return a

    def _levels(self, s, t):
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        head, res, nxt = self.head, self.res, self.nxt
        while q:
            x = q.popleft()
            a = self.first[x]
            while a >= 0:
                y = head[a]
                if res[a] > 0 and level[y] < 0:
                    level[y] = level[x] + 1
                    q.append(y)
                a = nxt[a]
        return level if level[t] >= 0 else None

    def max_flow(self, s, t) -> int:
        head, res, nxt = self.head, self.res, self.nxt
        total = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return total
            it = self.first[:]
            while True:
                # walk forward along admissible arcs until t or a dead end
                path: list[int] = []
                x = s
                while x != t:
                    a = it[x]
                    while a >= 0 and not (res[a] > 0 and level[head[a]] == level[x] + 1):
                        a = nxt[a]
                    it[x] = a
                    if a < 0:
                        if x == s:
                            break
                        level[x] = -1  # prune dead end
                        back = path.pop()
                        x = head[back ^ 1]
                        it[x] = nxt[it[x]]
                        continue
                    path.append(a)
                    x = head[a]
                if x != t:
                    break
                push = min(res[a] for a in path)
                for a in path:
                    res[a] -= push
                    res[a ^ 1] += push
                total += push

    def reach_from(self, s):
        seen = [False] * self.n
        seen[s] = True
        q = deque([s])
        while q:
            x = q.popleft()
            a = self.first[x]
            while a >= 0:
                y = self.head[a]
                if self.res[a] > 0 and not seen[y]:
                    seen[y] = True
                    q.append(y)
                a = self.nxt[a]
        return seen

    def coreach_to(self, t):
        seen = [False] * self.n
        seen[t] = True
        q = deque([t])
        while q:
            y = q.popleft()
            a = self.first[y]
            while a >= 0:
                x = self.head[a]
                if self.res[a ^ 1] > 0 and not seen[x]:
                    seen[x] = True
                    q.append(x)
                a = self.nxt[a]
        return seen


def _check_connected(g: TerminalGraph):
    if not g.connected:
        raise ConnectivityError("minimum cuts are only defined here for connected graphs")


def max_flow(g: TerminalGraph, b: Bipartition) -> FlowResult:
    """Maximum flow from the source terminals of ``b`` to its sink terminals."""
    _check_connected(g)
    src, snk = b.source, b.sink
    node = [0] * g.n
    nid = 2
    for x in range(g.n):
        if x in src:
            node[x] = 0
        elif x in snk:
            node[x] = 1
        else:
            node[x] = nid
            nid += 1
    scale, caps = g.integer_weights
    net = _Network(nid)
    arcs = []
    for e, cap in zip(g.edges, caps):
        a, c = node[e.u], node[e.v]
        arcs.append(net.add_undirected(a, c, cap) if a != c else None)
    value = net.max_flow(0, 1)

    flows = []
    for a, cap in zip(arcs, caps):
        if a is None:
            flows.append(Fraction(0))
        else:
            # res[a] + res[a^1] == 2*cap; net flow is half the imbalance
            flows.append(Fraction(net.res[a ^ 1] - net.res[a], 2 * scale))
    fwd = net.reach_from(0)
    bwd = net.coreach_to(1)
    return FlowResult(
        value=Fraction(value, scale),
        edge_flow=tuple(flows),
        source_reach=frozenset(x for x in range(g.n) if fwd[node[x]]),
        sink_coreach=frozenset(x for x in range(g.n) if bwd[node[x]]),
    )


def min_cut(g: TerminalGraph, b: Bipartition) -> CanonicalCut:
    """Source-minimal minimum cut separating ``b.source`` from ``b.sink``."""
    flow = max_flow(g, b)
    side = flow.source_reach
    comp = frozenset(range(g.n)) - flow.sink_coreach
    value = cut_value(g, side)
    if value != flow.value:
        raise AssertionError(f"cut {value} disagrees with flow {flow.value}")
    return CanonicalCut(
        bipartition=b,
        value=value,
        crossing_edges=crossing_edges(g, side),
        source_min_side=side,
        sink_min_complement=comp,
    )


def min_cut_value(g: TerminalGraph, b: Bipartition) -> Fraction:
    return max_flow(g, b).value


def is_unique(g: TerminalGraph, b: Bipartition) -> bool:
    return min_cut(g, b).unique


def brute_force_min_cut(g: TerminalGraph, b: Bipartition) -> tuple[Fraction, list[frozenset[int]]]:
    """Minimum cut by trying every side assignment of the non-terminals.

    Returns the minimum value and every source side attaining it, in
    enumeration order.
    """
    free = [x for x in range(g.n) if x not in g.terminal_set]
    if len(free) > ORACLE_LIMIT:
        raise OracleTooLargeError(
            f"{len(free)} non-terminals exceed the oracle bound of {ORACLE_LIMIT}"
        )
    base = set(b.source)
    best = None
    sides: list[frozenset[int]] = []
    for bits in product((0, 1), repeat=len(free)):
        side = frozenset(base.union(x for x, bit in zip(free, bits) if bit))
        val = sum((e.weight for e in g.edges if (e.u in side) != (e.v in side)), Fraction(0))
        if best is None or val < best:
            best, sides = val, [side]
        elif val == best:
            sides.append(side)
    return best, sides
