"""Cutset-edge incidence matrices and their exact rank."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import ParseError, PreconditionError
from .graph import TerminalGraph
from .profile import CutProfile, _check_profile
from .report import Report

ROW_MODES = ("all", "unique-only", "important-only")


@dataclass(frozen=True)
class IncidenceMatrix:
    rows: tuple[tuple[int, ...], ...]
    row_masks: tuple[int, ...]  # bipartition mask of each row
    row_unique: tuple[bool, ...]
    n_cols: int

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.n_cols

    def row_for(self, mask: int) -> tuple[int, ...]:
        return self.rows[self.row_masks.index(mask)]

    def dumps(self) -> str:
        out = [f"{len(self.rows)} {self.n_cols}"]
        out += ["".join(map(str, r)) for r in self.rows]
        return "\n".join(out) + "\n"


def build_incidence_matrix(
    g: TerminalGraph, profile: CutProfile, row_mode: str = "unique-only", strict: bool = False
) -> IncidenceMatrix:
    """0/1 matrix marking which edges cross the canonical cut of each bipartition.

    ``important-only`` keeps the bipartitions that put the second terminal
    on the sink side; on planar instances these are the important sets.
    """
    if row_mode not in ROW_MODES:
        raise ValueError(f"row_mode must be one of {ROW_MODES}, got {row_mode!r}")
    _check_profile(g, profile)
    bad = [c.bipartition.mask for c in profile.cuts if not c.unique]
    if strict and bad:
        raise PreconditionError(f"non-unique minimum cuts for bipartition masks {bad}")
    rows, masks, flags = [], [], []
    for cut in profile.cuts:
        b = cut.bipartition
        if row_mode == "unique-only" and not cut.unique:
            continue
        if row_mode == "important-only" and b.mask & 1:
            continue
        rows.append(tuple(1 if i in cut.crossing_edges else 0 for i in range(len(g.edges))))
        masks.append(b.mask)
        flags.append(cut.unique)
    if row_mode == "unique-only" and bad:
        warnings.warn(f"dropped {len(bad)} rows with non-unique minimum cuts", stacklevel=2)
    return IncidenceMatrix(tuple(rows), tuple(masks), tuple(flags), len(g.edges))


def loads_matrix(text: str) -> list[list[int]]:
    lines = [s for s in text.splitlines() if s.strip()]
    if not lines:
        raise ParseError("empty matrix dump")
    try:
        r, c = map(int, lines[0].split())
    except ValueError:
        raise ParseError("header must be 'rows cols'", line=1) from None
    if len(lines) - 1 != r:
        raise ParseError(f"expected {r} rows, found {len(lines) - 1}")
    out = []
    for n, s in enumerate(lines[1:], start=2):
        s = s.strip()
        if len(s) != c or set(s) - {"0", "1"}:
            raise ParseError(f"row must be {c} characters of 0/1", line=n)
        out.append([int(ch) for ch in s])
    return out


def _as_rows(m) -> list[list[int]]:
    if isinstance(m, IncidenceMatrix):
        return [list(r) for r in m.rows]
    return [list(r) for r in m]


def exact_rank(m) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    a = [[int(x) for x in r] for r in _as_rows(m)]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for i in range(rank + 1, nrows):
            ai = a[i]
            f = ai[col]
            for j in range(col + 1, ncols):
                ai[j] = (p * ai[j] - f * a[rank][j]) // prev
            ai[col] = 0
        prev = p
        rank += 1
    return rank


def rational_rank(m) -> int:
    """Rank by plain Gauss-Jordan elimination over :class:`Fraction`."""
    a = [[Fraction(x) for x in r] for r in _as_rows(m)]
    rank = 0
    ncols = len(a[0]) if a else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = 1 / a[rank][col]
        a[rank] = [x * inv for x in a[rank]]
        for i in range(len(a)):
            if i != rank and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def gf2_rank(m) -> int:
    rows = [int("".join(str(x & 1) for x in r) or "0", 2) for r in _as_rows(m)]
    rank = 0
    while rows:
        pivot = max(rows)
        rows.remove(pivot)
        if pivot == 0:
            break
        rank += 1
        top = pivot.bit_length() - 1
        rows = [r ^ pivot if r >> top & 1 else r for r in rows]
    return rank


def verify_identity_submatrix(inst, m: IncidenceMatrix) -> Report:
    """Important rows against heavy fan-edge columns form an identity matrix.

    Rows are ordered by the reversed signature read as binary, columns by
    the lexicographic index of the leaf each fan edge touches.
    """
    from .planar import bitstrings, dec, rev

    k = inst.k
    rep = Report("identity submatrix: important rows on fan-edge columns", {"k": k})
    if m.n_cols != len(inst.primal.edges):
        rep.fail(f"matrix has {m.n_cols} columns, instance has {len(inst.primal.edges)} edges")
        return rep
    important = sorted(inst.important(), key=lambda sb: dec(rev(sb[0])))
    cols = [inst.tree_edges["fan:" + a][0] for a in bitstrings(k - 2)]
    for r, (sig, b) in enumerate(important):
        label = "".join(map(str, sig))
        if b.mask not in m.row_masks:
            rep.fail(f"row for signature [{label}] is missing")
            continue
        got = [m.row_for(b.mask)[c] for c in cols]
        want = [1 if j == r else 0 for j in range(len(cols))]
        if got != want:
            rep.fail(f"row {r} (signature [{label}]) reads {''.join(map(str, got))}")
    n = len(cols)
    rep.note(f"{len(important)}x{n} submatrix checked against the identity")
    rep.data["size"] = n
    return rep
