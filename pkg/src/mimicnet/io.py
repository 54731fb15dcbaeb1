"""Graph documents, instance bundles and DOT export.

A graph document is line oriented::

    mimicnet-graph 1
    terminals t1 t2
    vertex t1 0/1 0/1
    vertex t2
    edge t1 t2 7/4
    meta {"kind": "example"}

Labels contain no whitespace. Weights and coordinates are always written as
``numerator/denominator``; a bare integer is rejected.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .exceptions import ParseError
from .graph import TerminalGraph

FORMAT = "mimicnet-graph"
VERSION = 1

_WEIGHT = re.compile(r"^(\d+)/(\d+)$")
_COORD = re.compile(r"^(-?\d+)/(\d+)$")


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_weight(text: str, line=None) -> Fraction:
    m = _WEIGHT.match(text)
    if not m:
        raise ParseError(f"weight {text!r} is not of the form n/d", line=line, field="weight")
    num, den = int(m.group(1)), int(m.group(2))
    if den == 0:
        raise ParseError(f"weight {text!r} has a zero denominator", line=line, field="weight")
    return Fraction(num, den)


def _parse_coord(text: str, line) -> Fraction:
    m = _COORD.match(text)
    if not m or int(m.group(2)) == 0:
        raise ParseError(f"coordinate {text!r} is not of the form n/d", line=line, field="coordinate")
    return Fraction(int(m.group(1)), int(m.group(2)))


def serialize_graph(g: TerminalGraph, meta: dict | None = None) -> bytes:
    out = [f"{FORMAT} {VERSION}", "terminals " + " ".join(g.labels[t] for t in g.terminals)]
    for i, lab in enumerate(g.labels):
        if g.coords is not None:
            x, y = g.coords[i]
            out.append(f"vertex {lab} {format_fraction(x)} {format_fraction(y)}")
        else:
            out.append(f"vertex {lab}")
    for e in g.edges:
        out.append(f"edge {g.labels[e.u]} {g.labels[e.v]} {format_fraction(e.weight)}")
    if meta is not None:
        out.append("meta " + json.dumps(meta, sort_keys=True, separators=(",", ":")))
    return ("\n".join(out) + "\n").encode()


def parse_document(data: bytes | str) -> tuple[TerminalGraph, dict | None]:
    text = data.decode() if isinstance(data, (bytes, bytearray)) else data
    lines = text.splitlines()
    header = None
    terminals = None
    labels: list[str] = []
    index: dict[str, int] = {}
    coords: list = []
    edges = []
    meta = None
    for n, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != FORMAT:
                raise ParseError(f"expected header '{FORMAT} {VERSION}'", line=n)
            if parts[1] != str(VERSION):
                raise ParseError(f"unsupported format version {parts[1]}", line=n, field="version")
            header = parts[1]
            continue
        kind, _, rest = line.partition(" ")
        fields = rest.split()
        if kind == "terminals":
            if terminals is not None:
                raise ParseError("duplicate terminals line", line=n)
            terminals = (n, fields)
        elif kind == "vertex":
            if len(fields) not in (1, 3):
                raise ParseError("vertex takes a label and optionally two coordinates", line=n)
            lab = fields[0]
            if lab in index:
                raise ParseError(f"duplicate label {lab!r}", line=n, field="label")
            index[lab] = len(labels)
            labels.append(lab)
            coords.append(
                (_parse_coord(fields[1], n), _parse_coord(fields[2], n)) if len(fields) == 3 else None
            )
        elif kind == "edge":
            if len(fields) != 3:
                raise ParseError("edge takes two labels and a weight", line=n)
            u, v, w = fields
            for lab in (u, v):
                if lab not in index:
                    raise ParseError(f"unknown vertex {lab!r}", line=n, field="endpoint")
            if u == v:
                raise ParseError(f"self-loop at {u!r}", line=n)
            edges.append((index[u], index[v], parse_weight(w, n)))
        elif kind == "meta":
            try:
                meta = json.loads(rest)
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad metadata: {exc}", line=n, field="meta") from None
        else:
            raise ParseError(f"unknown record {kind!r}", line=n)
    if header is None:
        raise ParseError("empty document")
    if terminals is None:
        raise ParseError("missing terminals line")
    tline, tlabels = terminals
    for lab in tlabels:
        if lab not in index:
            raise ParseError(f"unknown terminal {lab!r}", line=tline, field="terminals")
    if len(set(tlabels)) != len(tlabels):
        raise ParseError("repeated terminal", line=tline, field="terminals")
    if len(tlabels) < 2:
        raise ParseError("need at least two terminals", line=tline, field="terminals")
    has = [c is not None for c in coords]
    if any(has) and not all(has):
        raise ParseError("coordinates must be given for all vertices or none")
    g = TerminalGraph(
        tuple(labels),
        tuple(index[t] for t in tlabels),
        tuple(edges),
        tuple(coords) if labels and all(has) else None,
    )
    return g, meta


def parse_graph(data: bytes | str) -> TerminalGraph:
    return parse_document(data)[0]


def read_graph(path) -> TerminalGraph:
    return parse_graph(Path(path).read_bytes())


def write_graph(g: TerminalGraph, path, meta=None):
    Path(path).write_bytes(serialize_graph(g, meta))


# -- instance bundles -------------------------------------------------------

DUAL_FILE = "dual.graph"
PRIMAL_FILE = "primal.graph"
META_FILE = "meta"


def planar_meta(inst) -> dict:
    from .planar import important_cycle

    return {
        "kind": "planar",
        "k": inst.k,
        "weights": {"C": format_fraction(inst.C), "c": {str(i): format_fraction(v) for i, v in sorted(inst.c.items())}},
        "layers": inst.layers,
        "tree_edges": inst.tree_edges,
        "terminals": inst.terminal_names,
        "face_to_primal": inst.face_to_primal,
        "outer_face": inst.dual.outer_face,
        "sheared": inst.sheared,
        "e_bends": [[format_fraction(x), format_fraction(y)] for x, y in inst.dual.edges[0].via],
        "crossings": [[i, z, o, format_fraction(p[0]), format_fraction(p[1])] for i, z, o, p in inst.crossings],
        "cycles": {"".join(map(str, s)): important_cycle(inst, s) for s, _ in inst.important()},
    }


def dblexp_meta(inst) -> dict:
    return {
        "kind": "dblexp",
        "r": inst.r,
        "k": inst.k,
        "ell": inst.ell,
        "alpha": format_fraction(inst.alpha),
        "middle": [[list(s), inst.graph.labels[v]] for s, v in sorted(inst.middle.items())],
        "outer": [[list(z), inst.graph.labels[v]] for z, v in sorted(inst.outer.items())],
    }


def write_bundle(inst, directory) -> Path:
    from .dblexp import DblExpInstance
    from .planar import plane_to_terminal_graph

    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    if isinstance(inst, DblExpInstance):
        meta = dblexp_meta(inst)
        write_graph(inst.graph, d / PRIMAL_FILE)
    else:
        meta = planar_meta(inst)
        write_graph(plane_to_terminal_graph(inst.dual), d / DUAL_FILE)
        write_graph(inst.primal, d / PRIMAL_FILE)
    (d / META_FILE).write_text(json.dumps(meta, indent=1, sort_keys=True) + "\n")
    return d


def read_meta(directory) -> dict:
    path = Path(directory) / META_FILE
    try:
        return json.loads(path.read_text())
    except FileNotFoundError:
        raise ParseError(f"{path} not found") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None


def load_bundle(directory):
    """Regenerate the instance recorded in a bundle and check the stored graph matches."""
    from .dblexp import generate_dblexp
    from .planar import generate_planar_dual

    meta = read_meta(directory)
    kind = meta.get("kind")
    if kind == "planar":
        inst = generate_planar_dual(int(meta["k"]))
        graph = inst.primal
    elif kind == "dblexp":
        alpha = parse_weight(meta["alpha"])
        inst = generate_dblexp(int(meta["r"]), alpha=alpha, max_outer=max(len(meta.get("outer", [])), 1))
        graph = inst.graph
    else:
        raise ParseError(f"unknown instance kind {kind!r}", field="kind")
    stored = read_graph(Path(directory) / PRIMAL_FILE)
    if stored != graph:
        raise ParseError(f"{PRIMAL_FILE} does not match the instance parameters in {META_FILE}")
    return inst, meta


# -- DOT --------------------------------------------------------------------

def _decimal(x: Fraction, places: int = 4) -> str:
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    scaled = round(abs(x) * 10**places)
    whole, frac = divmod(scaled, 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(
    g: TerminalGraph,
    heavy_weight: Fraction | None = None,
    rank_groups: list[list[int]] | None = None,
    name: str = "G",
    scale: int = 1,
) -> bytes:
    """Undirected DOT document; terminals are boxes, heavy edges are bold.

    Vertex positions are pinned when the graph carries coordinates.
    """
    out = [f"graph {_quote(name)} {{", "  node [shape=circle, fontsize=10];"]
    terms = g.terminal_set
    for i, lab in enumerate(g.labels):
        attrs = []
        if i in terms:
            attrs += ["shape=box", "style=filled", "fillcolor=lightgray"]
        if g.coords is not None:
            x, y = g.coords[i]
            attrs.append(f'pos="{_decimal(x * scale)},{_decimal(y * scale)}!"')
        out.append(f"  {_quote(lab)} [{', '.join(attrs)}];" if attrs else f"  {_quote(lab)};")
    for group in rank_groups or ():
        out.append("  { rank=same; " + " ".join(_quote(g.labels[x]) for x in group) + " }")
    for e in g.edges:
        attrs = [f'label="{format_fraction(e.weight)}"']
        if heavy_weight is not None and e.weight == heavy_weight:
            attrs.append("penwidth=3")
        out.append(f"  {_quote(g.labels[e.u])} -- {_quote(g.labels[e.v])} [{', '.join(attrs)}];")
    out.append("}")
    return ("\n".join(out) + "\n").encode()


def export_instance_dot(inst, which: str = "primal") -> bytes:
    from .dblexp import DblExpInstance
    from .planar import plane_to_terminal_graph

    if isinstance(inst, DblExpInstance):
        g = inst.graph
        groups = [
            list(g.terminals[:-1]),
            sorted(inst.middle.values()),
            sorted(inst.outer.values()),
            [inst.x],
        ]
        return export_dot(g, rank_groups=groups, name=f"dblexp_r{inst.r}")
    if which == "dual":
        return export_dot(plane_to_terminal_graph(inst.dual), heavy_weight=Fraction(inst.C), name=f"dual_k{inst.k}")
    return export_dot(inst.primal, heavy_weight=Fraction(inst.C), name=f"primal_k{inst.k}")
