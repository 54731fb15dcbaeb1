"""Terminal graphs with exact rational edge weights."""

from __future__ import annotations

import math
import numbers
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .exceptions import (
    IllegalMergeError,
    InvalidSideError,
    InvalidTerminalSetError,
    VertexNotFoundError,
)

Weight = Fraction


def as_weight(value) -> Fraction:
    """Convert ``value`` to an exact nonnegative :class:`Fraction`.

    Floats are refused: every weight in the package stays exact.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"weights must be exact, got {type(value).__name__}")
    if isinstance(value, str):
        w = Fraction(value)
    elif isinstance(value, (Fraction, numbers.Integral)):
        w = Fraction(value)
    elif isinstance(value, numbers.Rational):
        w = Fraction(value.numerator, value.denominator)
    else:
        raise TypeError(f"cannot interpret {value!r} as a weight")
    if w < 0:
        raise ValueError(f"negative weight {w}")
    return w


class Edge(NamedTuple):
    u: int
    v: int
    weight: Fraction

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


@dataclass(frozen=True)
class TerminalGraph:
    """Undirected multigraph on vertices ``0..n-1`` with an ordered terminal list.

    The graph is immutable; every operation returns a new instance.
    ``coords`` optionally holds one exact ``(x, y)`` pair per vertex.
    """

    labels: tuple[str, ...]
    terminals: tuple[int, ...]
    edges: tuple[Edge, ...]
    coords: tuple[tuple[Fraction, Fraction], ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
        object.__setattr__(self, "terminals", tuple(int(t) for t in self.terminals))
        object.__setattr__(
            self, "edges", tuple(Edge(int(u), int(v), as_weight(w)) for u, v, w in self.edges)
        )
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValueError("vertex labels must be unique")
        if len(self.terminals) < 2:
            raise InvalidTerminalSetError(f"need at least 2 terminals, got {len(self.terminals)}")
        if len(set(self.terminals)) != len(self.terminals):
            raise InvalidTerminalSetError("terminals must be distinct")
        for t in self.terminals:
            if not 0 <= t < n:
                raise InvalidTerminalSetError(f"terminal {t} is not a vertex")
        for e in self.edges:
            if not (0 <= e.u < n and 0 <= e.v < n):
                raise VertexNotFoundError(f"edge {e} references a missing vertex")
            if e.u == e.v:
                raise ValueError(f"self-loop at vertex {self.labels[e.u]!r}")
        if self.coords is not None and len(self.coords) != n:
            raise ValueError("coords must list one point per vertex")

    @classmethod
    def from_edges(cls, edges, terminals, vertices=None, coords=None) -> "TerminalGraph":
        """Build a graph from ``(u_label, v_label, weight)`` triples.

        Vertices are numbered in order of first appearance in ``vertices``
        (if given), then ``terminals``, then the edge list.
        """
        index: dict[str, int] = {}
        labels: list[str] = []

        def ident(x):
            x = str(x)
            if x not in index:
                index[x] = len(labels)
                labels.append(x)
            return index[x]

        for x in vertices or ():
            ident(x)
        tids = [ident(t) for t in terminals]
        es = [(ident(u), ident(v), w) for u, v, w in edges]
        pts = None
        if coords is not None:
            pts = tuple(tuple(as_point(coords[lab])) for lab in labels)
        return cls(tuple(labels), tuple(tids), tuple(es), pts)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def k(self) -> int:
        return len(self.terminals)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise VertexNotFoundError(f"no vertex labelled {label!r}") from None

    def vertex(self, x) -> int:
        """Resolve a vertex id or label to a vertex id."""
        if isinstance(x, str):
            return self.index(x)
        x = int(x)
        if not 0 <= x < self.n:
            raise VertexNotFoundError(f"no vertex {x}")
        return x

    @cached_property
    def terminal_set(self) -> frozenset[int]:
        return frozenset(self.terminals)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids incident to each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            inc[e.u].append(i)
            inc[e.v].append(i)
        return tuple(tuple(x) for x in inc)

    def neighbors(self, x: int) -> list[int]:
        return [self.edges[i].other(x) for i in self.incidence[x]]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in self.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n

    @cached_property
    def connected(self) -> bool:
        return self.is_connected()

    @cached_property
    def integer_weights(self) -> tuple[int, tuple[int, ...]]:
        """``(scale, weights * scale)`` with ``scale`` the lcm of all denominators."""
        scale = 1
        for e in self.edges:
            scale = math.lcm(scale, e.weight.denominator)
        return scale, tuple(e.weight.numerator * (scale // e.weight.denominator) for e in self.edges)

    def total_weight(self) -> Fraction:
        return sum((e.weight for e in self.edges), Fraction(0))

    def edge_multiset(self) -> list[tuple[str, str, Fraction]]:
        """Sorted ``(label, label, weight)`` records, endpoints sorted."""
        out = []
        for e in self.edges:
            a, b = sorted((self.labels[e.u], self.labels[e.v]))
            out.append((a, b, e.weight))
        return sorted(out)


def as_point(p) -> tuple[Fraction, Fraction]:
    x, y = p
    return (Fraction(x), Fraction(y))


def cut_value(g: TerminalGraph, side: Iterable[int]) -> Fraction:
    """Total weight of the edges with exactly one endpoint in ``side``."""
    side = frozenset(g.vertex(x) for x in side)
    if not side or len(side) >= g.n:
        raise InvalidSideError("side and its complement must both be nonempty")
    return sum(
        (e.weight for e in g.edges if (e.u in side) != (e.v in side)), Fraction(0)
    )


def crossing_edges(g: TerminalGraph, side: Iterable[int]) -> frozenset[int]:
    side = frozenset(side)
    return frozenset(i for i, e in enumerate(g.edges) if (e.u in side) != (e.v in side))


def contract(g: TerminalGraph, classes: Iterable[Sequence[int]]) -> tuple[TerminalGraph, list[int]]:
    """Identify each vertex class into a single vertex.

    Returns the contracted graph and the map old vertex id -> new vertex id.
    A class may hold at most one terminal; the merged vertex takes that
    terminal's label, otherwise the label of its smallest member. Edges
    inside a class are dropped. Parallel edges touching a merged vertex are
    summed into one edge, other edges are copied unchanged.
    """
    rep = list(range(g.n))
    merged = set()
    for cls in classes:
        members = sorted({g.vertex(x) for x in cls})
        if len(members) < 2:
            continue
        terms = [x for x in members if x in g.terminal_set]
        if len(terms) > 1:
            raise IllegalMergeError(
                "cannot merge terminals "
                + ", ".join(repr(g.labels[t]) for t in terms)
            )
        for x in members:
            if rep[x] != x or x in merged:
                raise ValueError("vertex classes must be disjoint")
        head = terms[0] if terms else members[0]
        for x in members:
            rep[x] = head
            merged.add(x)

    # new ids: survivors keep their relative order, each merged class sits
    # at the position of its smallest member
    slot: dict[int, int] = {}
    order = []
    for x in range(g.n):
        r = rep[x]
        if r not in slot:
            slot[r] = len(order)
            order.append(r)
    new_id = [slot[rep[x]] for x in range(g.n)]
    labels = tuple(g.labels[r] for r in order)
    coords = None
    if g.coords is not None:
        coords = tuple(g.coords[r] for r in order)

    heads = {rep[x] for x in merged}
    edges: list[tuple[int, int, Fraction]] = []
    summed: dict[tuple[int, int], int] = {}
    for e in g.edges:
        a, b = new_id[e.u], new_id[e.v]
        if a == b:
            continue
        if rep[e.u] in heads or rep[e.v] in heads:
            key = (min(a, b), max(a, b))
            if key in summed:
                i = summed[key]
                u, v, w = edges[i]
                edges[i] = (u, v, w + e.weight)
                continue
            summed[key] = len(edges)
        edges.append((a, b, e.weight))
    terminals = tuple(new_id[t] for t in g.terminals)
    return TerminalGraph(labels, terminals, tuple(edges), coords), new_id


def merge_vertices(g: TerminalGraph, u, v) -> TerminalGraph:
    """Identify ``u`` and ``v``; they must not both be terminals."""
    u, v = g.vertex(u), g.vertex(v)
    if u == v:
        raise IllegalMergeError("cannot merge a vertex with itself")
    if u in g.terminal_set and v in g.terminal_set:
        raise IllegalMergeError(
            f"both {g.labels[u]!r} and {g.labels[v]!r} are terminals"
        )
    return contract(g, [(u, v)])[0]


def induced_components(g: TerminalGraph, removed_edges: Iterable[int]) -> list[set[int]]:
    removed = set(removed_edges)
    comp = [-1] * g.n
    out: list[set[int]] = []
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        cid = len(out)
        comp[s] = cid
        members = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for i in g.incidence[x]:
                if i in removed:
                    continue
                y = g.edges[i].other(x)
                if comp[y] < 0:
                    comp[y] = cid
                    members.add(y)
                    stack.append(y)
        out.append(members)
    return out


def adjacency_weights(g: TerminalGraph) -> dict[tuple[int, int], Fraction]:
    """Total weight between each unordered vertex pair."""
    acc: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
    for e in g.edges:
        acc[(min(e.u, e.v), max(e.u, e.v))] += e.weight
    return dict(acc)
