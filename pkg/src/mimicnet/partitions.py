"""Canonical terminal bipartitions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exceptions import InvalidTerminalSetError


@dataclass(frozen=True, order=True)
class Bipartition:
    """One split ``Q = S | S-bar`` in canonical form.

    ``mask`` bit ``j`` says whether terminal ``j + 2`` (1-based, in terminal
    list order) sits with the first terminal. The first terminal is always
    on the ``source`` side, and the all-ones mask is excluded.
    """

    mask: int
    terminals: tuple[int, ...]

    def __post_init__(self):
        k = len(self.terminals)
        if k < 2:
            raise InvalidTerminalSetError("a bipartition needs at least 2 terminals")
        if not 0 <= self.mask < (1 << (k - 1)) - 1:
            raise ValueError(f"mask {self.mask} is not a proper canonical split for k={k}")

    @classmethod
    def from_side(cls, terminals: Sequence[int], side) -> "Bipartition":
        """Canonicalize an arbitrary proper nonempty terminal subset."""
        terminals = tuple(terminals)
        side = set(side)
        if not side or not side < set(terminals):
            raise ValueError("side must be a nonempty proper subset of the terminals")
        if terminals[0] not in side:
            side = set(terminals) - side
        mask = 0
        for j, t in enumerate(terminals[1:]):
            if t in side:
                mask |= 1 << j
        return cls(mask, terminals)

    @property
    def source(self) -> frozenset[int]:
        """Terminals on the canonical side (always includes the first terminal)."""
        out = {self.terminals[0]}
        for j, t in enumerate(self.terminals[1:]):
            if self.mask >> j & 1:
                out.add(t)
        return frozenset(out)

    @property
    def sink(self) -> frozenset[int]:
        return frozenset(self.terminals) - self.source

    def __repr__(self):
        return f"Bipartition(mask={self.mask}, source={sorted(self.source)})"


def enumerate_bipartitions(terminals: Sequence[int]) -> list[Bipartition]:
    """All ``2**(k-1) - 1`` canonical bipartitions, ascending by mask."""
    terminals = tuple(terminals)
    k = len(terminals)
    if k < 2:
        raise InvalidTerminalSetError(f"need at least 2 terminals, got {k}")
    if len(set(terminals)) != k:
        raise InvalidTerminalSetError("terminals must be distinct")
    return [Bipartition(m, terminals) for m in range((1 << (k - 1)) - 1)]
