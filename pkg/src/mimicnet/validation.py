"""Input checks shared by the estimators and the command line."""

from __future__ import annotations

from pathlib import Path

from .exceptions import ConnectivityError, InvalidTerminalSetError
from .graph import TerminalGraph
from .partitions import Bipartition


def check_terminal_graph(g, require_connected: bool = False) -> TerminalGraph:
    """Return ``g`` as a :class:`TerminalGraph`.

    Accepts a graph, a graph document (``str``/``bytes``) or a path to one.
    """
    if isinstance(g, TerminalGraph):
        out = g
    elif isinstance(g, (bytes, bytearray)) or (isinstance(g, str) and "\n" in g):
        from .io import parse_graph

        out = parse_graph(g)
    elif isinstance(g, (str, Path)):
        from .io import read_graph

        out = read_graph(g)
    else:
        raise TypeError(f"expected a TerminalGraph or graph document, got {type(g).__name__}")
    if require_connected and not out.connected:
        raise ConnectivityError("graph is not connected")
    return out


def check_side(g: TerminalGraph, side) -> Bipartition:
    """Canonical bipartition for a terminal subset given as labels or ids.

    A comma-separated string of labels is accepted too.
    """
    if isinstance(side, str):
        side = [s.strip() for s in side.split(",") if s.strip()]
    ids = {g.vertex(s) for s in side}
    extra = ids - g.terminal_set
    if extra:
        raise InvalidTerminalSetError(
            "not terminals: " + ", ".join(g.labels[x] for x in sorted(extra))
        )
    try:
        return Bipartition.from_side(g.terminals, ids)
    except ValueError as exc:
        raise InvalidTerminalSetError(str(exc)) from None


def check_same_graph(fitted_labels, fitted_terminals, g: TerminalGraph):
    if tuple(g.labels) != tuple(fitted_labels) or tuple(g.terminals) != tuple(fitted_terminals):
        raise ValueError("graph differs from the one seen in fit")
