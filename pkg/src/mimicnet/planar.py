"""The planar hard instance: a layered, self-crossing binary tree and its dual.

The plane graph built here is drawn with exact rational coordinates. Every
crossing of two drawn segments becomes a degree-4 vertex, faces are traced
from the rotation system, and the primal terminal graph is read off as the
face-adjacency graph. Terminals are the north face, the outer (south) face
and the equator faces, in that order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cuts import min_cut
from .exceptions import ConstructionError, ParameterError
from .geometry import (
    Point,
    on_polyline,
    segment_crossing,
    signed_area,
    sort_by_angle,
    winding_number,
)
from .graph import TerminalGraph
from .partitions import Bipartition, enumerate_bipartitions
from .report import Report

MAX_K = 10
SHEAR_M = 1 << 20


def bitstrings(i: int) -> list[str]:
    """All bit strings of length ``i`` in lexicographic order."""
    if i == 0:
        return [""]
    return [format(n, f"0{i}b") for n in range(1 << i)]


def dec(bits: Sequence[int] | str) -> int:
    """Value of a bit string read as binary, first symbol most significant."""
    out = 0
    for b in bits:
        out = 2 * out + int(b)
    return out


def rev(bits):
    return bits[::-1]


def layer_size(j: int, k: int) -> int:
    """Closed form for the number of subdivided edges in layer ``j``."""
    if j == 0:
        return 1
    if j == k - 1:
        return 1 << (k - 2)
    h = 1 << (j - 1)
    return h * (h + 1)


def weight_table(k: int) -> tuple[dict[int, int], int]:
    """Light costs ``c_1..c_{k-2}`` and the heavy cost ``C``."""
    sizes = {j: layer_size(j, k) for j in range(1, k - 1)}
    c = {k - 2: 1}
    for i in range(k - 3, 0, -1):
        c[i] = sum(sizes[j] * c[j] for j in range(i + 1, k - 1))
    big = sum(sizes[j] * c[j] for j in range(1, k - 1))
    return c, big


@dataclass(frozen=True)
class PlaneEdge:
    u: int
    v: int
    weight: int
    layer: int
    tree_edge: str  # "e", the child index string, or "fan:" + leaf index
    via: tuple[Point, ...] = ()  # bend points from u to v


@dataclass
class PlaneGraph:
    points: list[Point]
    labels: list[str]
    edges: list[PlaneEdge]
    rotation: list[list[tuple[int, int]]] = field(default_factory=list)
    faces: list[list[tuple[int, int]]] = field(default_factory=list)
    face_of: dict[tuple[int, int], int] = field(default_factory=dict)
    outer_face: int = -1

    def half_edge_points(self, h) -> list[Point]:
        """Geometric points of half-edge ``h = (edge id, direction)`` without its head."""
        e = self.edges[h[0]]
        pts = [self.points[e.u], *e.via, self.points[e.v]]
        if h[1]:
            pts.reverse()
        return pts[:-1]

    def tail(self, h) -> int:
        e = self.edges[h[0]]
        return e.v if h[1] else e.u

    def head(self, h) -> int:
        e = self.edges[h[0]]
        return e.u if h[1] else e.v

    def face_polygon(self, f: int) -> list[Point]:
        out: list[Point] = []
        for h in self.faces[f]:
            out += self.half_edge_points(h)
        return out

    def build_rotation(self):
        out: list[list[tuple[int, int]]] = [[] for _ in self.points]
        for i in range(len(self.edges)):
            out[self.edges[i].u].append((i, 0))
            out[self.edges[i].v].append((i, 1))

        def direction(h):
            pts = self.half_edge_points(h) + [self.points[self.head(h)]]
            a, b = pts[0], pts[1]
            return (b[0] - a[0], b[1] - a[1])

        self.rotation = [sort_by_angle(hs, direction) for hs in out]
        for x, hs in enumerate(self.rotation):
            dirs = [direction(h) for h in hs]
            for i in range(len(dirs)):
                d1, d2 = dirs[i], dirs[(i + 1) % len(dirs)]
                if len(dirs) > 1 and d1[0] * d2[1] == d1[1] * d2[0] and (d1[0] * d2[0] + d1[1] * d2[1]) > 0:
                    raise ConstructionError(f"overlapping edges leave vertex {self.labels[x]}")

    def trace_faces(self):
        """Trace faces with the face on the left of every half-edge."""
        if not self.rotation:
            self.build_rotation()
        pos = {}
        for x, hs in enumerate(self.rotation):
            for i, h in enumerate(hs):
                pos[h] = (x, i)
        self.faces, self.face_of = [], {}
        for i in range(len(self.edges)):
            for d in (0, 1):
                start = (i, d)
                if start in self.face_of:
                    continue
                fid = len(self.faces)
                cycle = []
                h = start
                while h not in self.face_of:
                    self.face_of[h] = fid
                    cycle.append(h)
                    twin = (h[0], 1 - h[1])
                    y, j = pos[twin]
                    hs = self.rotation[y]
                    h = hs[(j - 1) % len(hs)]
                if h != start:
                    raise ConstructionError("face tracing did not close up")
                self.faces.append(cycle)
        outer = [f for f in range(len(self.faces)) if signed_area(self.face_polygon(f)) < 0]
        if len(outer) != 1:
            raise ConstructionError(f"expected one outer face, found {len(outer)}")
        self.outer_face = outer[0]

    def locate(self, p: Point) -> int:
        """Bounded face containing the point ``p``."""
        hits = []
        for f in range(len(self.faces)):
            if f == self.outer_face:
                continue
            poly = self.face_polygon(f)
            if on_polyline(poly, p):
                raise ConstructionError(f"probe {p} lies on the drawing")
            if winding_number(poly, p) != 0:
                hits.append(f)
        if len(hits) != 1:
            raise ConstructionError(f"probe {p} lies in {len(hits)} bounded faces")
        return hits[0]

    def euler_characteristic(self) -> int:
        return len(self.points) - len(self.edges) + len(self.faces)


@dataclass
class PlanarInstance:
    k: int
    dual: PlaneGraph
    primal: TerminalGraph
    face_to_primal: list[int]
    layers: list[list[int]]
    branching: dict[str, int]  # index string -> dual vertex; "" is the root
    apex: int
    c: dict[int, int]
    C: int
    tree_edges: dict[str, list[int]]  # dual edge ids from parent end to child end
    crossings: list[tuple[int, str, str, Point]]  # strip, 0-child key, 1-child key, point
    sheared: bool = False

    @property
    def terminal_names(self) -> list[str]:
        return ["f_n", "f_s"] + [f"f_{i}" for i in range(1, self.k - 1)]

    def signature(self, b: Bipartition) -> tuple[int, ...] | None:
        """Signature of an important bipartition, None for the others."""
        if b.mask & 1:
            return None
        return tuple(b.mask >> i & 1 for i in range(1, self.k - 1))

    def bipartition(self, sig: Sequence[int]) -> Bipartition:
        sig = _check_signature(sig, self.k)
        mask = sum(bit << (i + 1) for i, bit in enumerate(sig))
        return Bipartition(mask, self.primal.terminals)

    def important(self) -> list[tuple[tuple[int, ...], Bipartition]]:
        out = []
        for b in enumerate_bipartitions(self.primal.terminals):
            s = self.signature(b)
            if s is not None:
                out.append((s, b))
        return out

    def crossing_count(self, key: str) -> int:
        return len(self.tree_edges[key]) - 1

    def weight_of(self, edge_ids) -> int:
        return sum(self.dual.edges[i].weight for i in edge_ids)

    def heavy(self, i: int) -> bool:
        return self.dual.edges[i].weight == self.C


def _check_signature(sig, k):
    sig = tuple(int(b) for b in sig)
    if len(sig) != k - 2 or any(b not in (0, 1) for b in sig):
        raise ParameterError(f"signature must be a 0/1 vector of length {k - 2}, got {sig}")
    return sig


def _branching_points(k: int) -> dict[str, Point]:
    pts = {"": (Fraction(0), Fraction(0))}
    for i in range(1, k - 1):
        half = 1 << (i - 1)
        for a in bitstrings(i):
            r = dec(a)
            y = half - r if r < half else half - 1 - r
            pts[a] = (Fraction(i), Fraction(y))
    return pts


def _shear(p: Point) -> Point:
    return (p[0], p[1] * (1 + p[0] / SHEAR_M))


def _strip_crossings(k, pts):
    """Crossings per strip, keyed by the child index strings of both segments."""
    vertex_points = set(pts.values())
    seen: dict[Point, tuple] = {}
    out = []
    for i in range(k - 2):
        segs = [(b + a, pts[a], pts[b + a]) for a in bitstrings(i) for b in "01"]
        for x in range(len(segs)):
            for y in range(x + 1, len(segs)):
                kx, p1, p2 = segs[x]
                ky, q1, q2 = segs[y]
                hit = segment_crossing(p1, p2, q1, q2)
                if hit is None:
                    continue
                s, t, p = hit
                if p in seen:
                    raise ValueError(f"crossings {seen[p]} and {(kx, ky)} coincide at {p}")
                if p in vertex_points:
                    raise ValueError(f"crossing at vertex position {p}")
                seen[p] = (kx, ky)
                out.append((i, kx, ky, s, t, p))
    return out


def generate_planar_dual(k: int, max_k: int = MAX_K) -> PlanarInstance:
    """Build the plane graph, its faces and the primal terminal graph for ``k`` terminals."""
    if not isinstance(k, int) or k < 3 or k > max_k:
        raise ParameterError(f"k must be an integer in [3, {max_k}], got {k!r}")
    pts = _branching_points(k)
    apex = (Fraction(k - 1), Fraction(0))
    y_top = Fraction((1 << (k - 2)) + k)
    bends = ((Fraction(0), y_top), (Fraction(k - 1), y_top))
    north_probe = (Fraction(k - 1, 2), y_top - Fraction(1, 2))

    sheared = False
    try:
        raw = _strip_crossings(k, pts)
    except ValueError as first:
        sheared = True
        pts = {a: _shear(p) for a, p in pts.items()}
        apex = _shear(apex)
        bends = tuple(_shear(p) for p in bends)
        north_probe = _shear(north_probe)
        try:
            raw = _strip_crossings(k, pts)
        except ValueError as second:
            raise ConstructionError(
                f"general position fails before ({first}) and after shear ({second})"
            ) from second

    # vertices: branching vertices by layer, apex, then crossings
    labels: list[str] = []
    points: list[Point] = []
    branching: dict[str, int] = {}
    for i in range(k - 1):
        for a in bitstrings(i):
            branching[a] = len(points)
            labels.append("v" + a)
            points.append(pts[a])
    w = len(points)
    labels.append("w")
    points.append(apex)

    on_segment: dict[str, list[tuple[Fraction, int]]] = {}
    crossings = []
    for i, kx, ky, s, t, p in sorted(raw, key=lambda r: (r[0], r[5])):
        cid = len(points)
        zero, one = (kx, ky) if kx[0] == "0" else (ky, kx)
        labels.append(f"x{kx}/{ky}")
        points.append(p)
        on_segment.setdefault(kx, []).append((s, cid))
        on_segment.setdefault(ky, []).append((t, cid))
        crossings.append((i, zero, one, p))

    c, big = weight_table(k)
    edges: list[PlaneEdge] = []
    layers: list[list[int]] = [[] for _ in range(k)]
    tree_edges: dict[str, list[int]] = {}

    def add(u, v, weight, layer, name, via=()):
        layers[layer].append(len(edges))
        tree_edges.setdefault(name, []).append(len(edges))
        edges.append(PlaneEdge(u, v, weight, layer, name, tuple(via)))

    add(branching[""], w, big, 0, "e", bends)
    for j in range(1, k - 1):
        for a in bitstrings(j - 1):
            for b in "01":
                key = b + a
                chain = [branching[a]] + [cid for _, cid in sorted(on_segment.get(key, []))]
                chain.append(branching[key])
                for n in range(len(chain) - 1):
                    last = n == len(chain) - 2
                    add(chain[n], chain[n + 1], big if last else c[j], j, key)
    for a in bitstrings(k - 2):
        add(branching[a], w, big, k - 1, "fan:" + a)

    actual = [len(layer) for layer in layers]
    expected = [layer_size(j, k) for j in range(k)]
    if actual != expected:
        raise ConstructionError(f"layer sizes {actual} differ from {expected}")

    plane = PlaneGraph(points, labels, edges)
    plane.build_rotation()
    plane.trace_faces()
    if plane.euler_characteristic() != 2:
        raise ConstructionError(f"Euler characteristic {plane.euler_characteristic()} != 2")

    f_n = plane.locate(north_probe)
    equator = []
    for i in range(1, k - 1):
        probe = (Fraction(i), Fraction(0))
        equator.append(plane.locate(probe))
    terminal_faces = [f_n, plane.outer_face] + equator
    if len(set(terminal_faces)) != k:
        raise ConstructionError(f"terminal faces are not distinct: {terminal_faces}")

    primal, face_map = compute_dual(plane, terminal_faces, ["f_n", "f_s"] + [f"f_{i}" for i in range(1, k - 1)])
    return PlanarInstance(
        k=k,
        dual=plane,
        primal=primal,
        face_to_primal=face_map,
        layers=layers,
        branching=branching,
        apex=w,
        c=c,
        C=big,
        tree_edges=tree_edges,
        crossings=crossings,
        sheared=sheared,
    )


def compute_dual(plane: PlaneGraph, terminal_faces: Sequence[int], terminal_labels: Sequence[str]):
    """Face-adjacency graph of ``plane``: one vertex per face, one edge per edge.

    Primal edge ``i`` is dual to plane edge ``i`` and carries its weight.
    Terminal faces come first, in the given order; the remaining faces follow
    in tracing order and are labelled ``g<face id>``.
    """
    if not plane.faces:
        raise ConstructionError("faces must be traced before dualizing")
    order = list(terminal_faces) + [f for f in range(len(plane.faces)) if f not in set(terminal_faces)]
    face_map = [0] * len(plane.faces)
    for new, f in enumerate(order):
        face_map[f] = new
    labels = list(terminal_labels) + [f"g{f}" for f in order[len(terminal_faces):]]
    edges = []
    for i, e in enumerate(plane.edges):
        left = plane.face_of[(i, 0)]
        right = plane.face_of[(i, 1)]
        if left == right:
            raise ConstructionError(f"edge {i} is a bridge")
        edges.append((face_map[left], face_map[right], e.weight))
    coords = []
    for f in order:
        if f == plane.outer_face:
            ys = [p[1] for p in plane.points]
            xs = [p[0] for p in plane.points]
            coords.append(((min(xs) + max(xs)) / 2, min(ys) - 1))
        else:
            poly = plane.face_polygon(f)
            coords.append((sum(p[0] for p in poly) / len(poly), sum(p[1] for p in poly) / len(poly)))
    g = TerminalGraph(tuple(labels), tuple(range(len(terminal_faces))), tuple(edges), tuple(coords))
    return g, face_map


def plane_to_terminal_graph(plane: PlaneGraph) -> TerminalGraph:
    """The drawn graph itself, with the root and apex as nominal terminals."""
    edges = [(e.u, e.v, e.weight) for e in plane.edges]
    terms = (plane.labels.index("v"), plane.labels.index("w"))
    return TerminalGraph(tuple(plane.labels), terms, tuple(edges), tuple(plane.points))


def important_cycle(inst: PlanarInstance, sig: Sequence[int]) -> list[int]:
    """Dual edge ids of the important cycle for signature ``sig``.

    The cycle runs along edge ``e``, down the subdivided tree path from the
    root to the leaf indexed by the reversed signature, and back to the apex
    over that leaf's fan edge.
    """
    sig = _check_signature(sig, inst.k)
    leaf = "".join(map(str, rev(sig)))
    ids = list(inst.tree_edges["e"])
    for depth in range(1, inst.k - 1):
        ids += inst.tree_edges[leaf[-depth:]]
    ids += inst.tree_edges["fan:" + leaf]

    deg: dict[int, int] = {}
    for i in ids:
        e = inst.dual.edges[i]
        deg[e.u] = deg.get(e.u, 0) + 1
        deg[e.v] = deg.get(e.v, 0) + 1
    if any(d != 2 for d in deg.values()) or not _connected_edge_set(inst.dual, ids):
        raise ConstructionError(f"important cycle for {sig} is not a simple cycle")
    heavy = sum(1 for i in ids if inst.heavy(i))
    if heavy != inst.k:
        raise ConstructionError(f"important cycle for {sig} has {heavy} heavy edges, expected {inst.k}")
    return ids


def _connected_edge_set(plane: PlaneGraph, ids) -> bool:
    adj: dict[int, list[int]] = {}
    for i in ids:
        e = plane.edges[i]
        adj.setdefault(e.u, []).append(e.v)
        adj.setdefault(e.v, []).append(e.u)
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(adj)


def claim_paths(inst: PlanarInstance) -> list[list[int]]:
    """Heavy edges of each layer, ordered by the index of their deeper endpoint."""
    paths = [list(inst.tree_edges["e"])]
    for i in range(1, inst.k - 1):
        paths.append([inst.tree_edges[a][-1] for a in bitstrings(i)])
    paths.append([inst.tree_edges["fan:" + a][0] for a in bitstrings(inst.k - 2)])
    return paths


def _walk(g: TerminalGraph, start: int, edge_ids: list[int]):
    """Vertices visited when following ``edge_ids`` from ``start``, or None."""
    seq = [start]
    for i in edge_ids:
        e = g.edges[i]
        if seq[-1] == e.u:
            seq.append(e.v)
        elif seq[-1] == e.v:
            seq.append(e.u)
        else:
            return None
    return seq


def verify_claim_paths(inst: PlanarInstance) -> Report:
    """k edge-disjoint heavy paths from the north to the south terminal."""
    g = inst.primal
    k = inst.k
    f_n, f_s = g.terminals[0], g.terminals[1]
    rep = Report("heavy paths: k edge-disjoint north-south paths of weight-C edges", {"k": k})
    paths = claim_paths(inst)
    used: set[int] = set()
    lengths = []
    for i, ids in enumerate(paths):
        lengths.append(len(ids))
        expected = 1 << min(i, k - 2)
        if len(ids) != expected:
            rep.fail(f"pi_{i} has {len(ids)} edges, expected {expected}")
        if any(g.edges[x].weight != inst.C for x in ids):
            rep.fail(f"pi_{i} uses an edge lighter than C")
        if used & set(ids):
            rep.fail(f"pi_{i} shares edges with an earlier path")
        used |= set(ids)
        seq = _walk(g, f_n, ids)
        if seq is None:
            rep.fail(f"pi_{i} is not a walk starting at f_n")
            continue
        if seq[-1] != f_s:
            rep.fail(f"pi_{i} ends at {g.labels[seq[-1]]}, not f_s")
        if len(set(seq)) != len(seq):
            rep.fail(f"pi_{i} repeats a vertex")
        if 1 <= i <= k - 2:
            mid = 1 << (i - 1)
            if seq[mid] != g.terminals[i + 1]:
                rep.fail(f"pi_{i} does not pass f_{i} after {mid} edges")
        if i == k - 1:
            mid = 1 << (k - 3)
            through = seq[mid] == g.terminals[k - 1]
            rep.note(
                f"pi_{k - 1} has 2^{k - 2} = {len(ids)} edges (not 2^{k - 1}); "
                f"passes f_{k - 2} at its midpoint: {through}"
            )
    rep.data["lengths"] = lengths
    rep.note("lengths: " + ", ".join(map(str, lengths)))
    return rep


def verify_unique_cut_cycles(inst: PlanarInstance, max_k: int = 8) -> Report:
    """Every important minimum cut is unique and equals its important cycle."""
    if inst.k > max_k:
        raise ParameterError(f"k={inst.k} exceeds the verification guard {max_k}")
    g = inst.primal
    rep = Report("unique cycles: each important minimum cut is unique and equals its important cycle", {"k": inst.k})
    ok = 0
    values = []
    other_unique = other_total = 0
    for b in enumerate_bipartitions(g.terminals):
        cut = min_cut(g, b)
        sig = inst.signature(b)
        if sig is None:
            other_total += 1
            other_unique += cut.unique
            continue
        cyc = important_cycle(inst, sig)
        weight = inst.weight_of(cyc)
        values.append(cut.value)
        label = "".join(map(str, sig))
        if not cut.unique:
            rep.fail(f"signature [{label}]: minimum cut is not unique")
        elif cut.crossing_edges != frozenset(cyc):
            rep.fail(f"signature [{label}]: cut edges differ from the important cycle")
        elif cut.value != weight:
            rep.fail(f"signature [{label}]: value {cut.value} != cycle weight {weight}")
        else:
            ok += 1
    total = 1 << (inst.k - 2)
    rep.note(f"{ok}/{total} important cuts unique and equal to their cycles")
    rep.note("values: " + ", ".join(str(v) for v in values))
    rep.note(f"non-important bipartitions with a unique minimum cut: {other_unique}/{other_total}")
    rep.data.update(ok=ok, total=total, values=values, other_unique=other_unique, other_total=other_total)
    return rep


def verify_weight_hierarchy(inst: PlanarInstance) -> Report:
    rep = Report("weight hierarchy", {"k": inst.k})
    weights = [e.weight for e in inst.dual.edges]
    light = sum(x for x in weights if x != inst.C)
    if not inst.C > light:
        rep.fail(f"C={inst.C} does not exceed the non-C total {light}")
    for i, ci in sorted(inst.c.items()):
        below = sum(x for x in weights if x < ci)
        if not ci > below:
            rep.fail(f"c_{i}={ci} does not exceed the total {below} of lighter edges")
    rep.note(f"C={inst.C}, non-C total={light}")
    rep.note("c: " + ", ".join(f"c_{i}={v}" for i, v in sorted(inst.c.items())))
    return rep


def verify_crossings(inst: PlanarInstance) -> Report:
    """Crossing counts per subdivided tree edge and the partner order along 1-children."""
    rep = Report("crossing structure", {"k": inst.k})
    for i in range(inst.k - 2):
        for a in bitstrings(i):
            n0 = inst.crossing_count("0" + a)
            n1 = inst.crossing_count("1" + a)
            want0, want1 = dec(a), (1 << i) - 1 - dec(a)
            if (n0, n1) != (want0, want1):
                rep.fail(f"strip {i}, a='{a}': crossings ({n0}, {n1}), expected ({want0}, {want1})")
    for i, zero, one, _ in inst.crossings:
        if zero[0] != "0" or one[0] != "1":
            rep.fail(f"crossing in strip {i} pairs {zero} with {one}")
    for i in range(inst.k - 2):
        for a in bitstrings(i):
            r = dec(a)
            partners = [
                (p[0], dec(z[1:]))
                for s, z, o, p in inst.crossings
                if s == i and o == "1" + a
            ]
            partners.sort()
            got = [rp for _, rp in partners]
            want = list(range(r + 1, 1 << i))
            if got != want:
                rep.fail(f"strip {i}, 1-child of rank {r}: partners west to east {got}, expected {want}")
    rep.note(f"{len(inst.crossings)} crossings checked")
    return rep


def verify_structure(inst: PlanarInstance) -> Report:
    rep = Report("planar structure", {"k": inst.k})
    plane = inst.dual
    chi = plane.euler_characteristic()
    if chi != 2:
        rep.fail(f"V - E + F = {chi}")
    sizes = [len(layer) for layer in inst.layers]
    want = [layer_size(j, inst.k) for j in range(inst.k)]
    if sizes != want:
        rep.fail(f"layer sizes {sizes}, expected {want}")
    nf = len(plane.faces)
    if (inst.k == 3 and nf != 3) or (inst.k > 3 and nf <= inst.k):
        rep.fail(f"{nf} faces for k={inst.k}")
    for sig, _ in inst.important():
        cyc = important_cycle(inst, sig)
        per_layer = [sum(1 for i in cyc if inst.heavy(i) and plane.edges[i].layer == j) for j in range(inst.k)]
        if per_layer != [1] * inst.k:
            rep.fail(f"cycle {sig} heavy edges per layer {per_layer}")
    rep.note(f"V={len(plane.points)} E={len(plane.edges)} F={nf}; layers {sizes}")
    return rep
