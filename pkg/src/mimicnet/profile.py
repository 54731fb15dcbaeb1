"""Cut profiles, side vectors and merge-based compression."""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .cuts import CanonicalCut, min_cut, min_cut_value
from .exceptions import InvalidTerminalSetError, ProfileMismatchError
from .graph import TerminalGraph, contract, merge_vertices
from .partitions import Bipartition, enumerate_bipartitions
from .report import Report


@dataclass(frozen=True)
class CutProfile:
    bipartitions: tuple[Bipartition, ...]
    cuts: tuple[CanonicalCut, ...]
    n: int

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(c.value for c in self.cuts)

    @property
    def unique(self) -> tuple[bool, ...]:
        return tuple(c.unique for c in self.cuts)

    def __len__(self):
        return len(self.cuts)


def _cut_task(args):
    g, b = args
    return min_cut(g, b)


def cut_profile(g: TerminalGraph, jobs: int = 1) -> CutProfile:
    """Canonical minimum cut for every bipartition, in enumeration order."""
    bips = enumerate_bipartitions(g.terminals)
    if jobs > 1 and len(bips) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            cuts = list(pool.map(_cut_task, [(g, b) for b in bips], chunksize=4))
    else:
        cuts = [min_cut(g, b) for b in bips]
    return CutProfile(tuple(bips), tuple(cuts), g.n)


def _check_profile(g: TerminalGraph, profile: CutProfile):
    if profile.n != g.n or (profile.bipartitions and profile.bipartitions[0].terminals != g.terminals):
        raise ProfileMismatchError("profile was computed for a different graph")


def side_vectors(g: TerminalGraph, profile: CutProfile) -> dict[int, tuple[int, ...]]:
    """Bit ``i`` of vertex ``x`` is 1 iff ``x`` is on the source-minimal side of cut ``i``."""
    _check_profile(g, profile)
    return {
        x: tuple(1 if x in c.source_min_side else 0 for c in profile.cuts)
        for x in range(g.n)
    }


def format_vector(bits) -> str:
    return "".join(map(str, bits))


def side_classes(g: TerminalGraph, profile: CutProfile) -> list[list[int]]:
    """Vertices grouped by equal side vector, groups ordered by smallest member."""
    groups: dict[tuple[int, ...], list[int]] = defaultdict(list)
    for x, vec in side_vectors(g, profile).items():
        groups[vec].append(x)
    return sorted(groups.values(), key=lambda m: m[0])


@dataclass
class CompressionReport:
    classes: list[list[str]]
    n_before: int
    n_after: int
    edges_before: int
    edges_after: int

    def render(self) -> str:
        out = [
            f"vertices {self.n_before} -> {self.n_after}, "
            f"edges {self.edges_before} -> {self.edges_after}"
        ]
        for cls in self.classes:
            if len(cls) > 1:
                out.append("merged: " + " ".join(cls))
        return "\n".join(out) + "\n"


def hagerup_compress(g: TerminalGraph, profile: CutProfile | None = None):
    """Merge every group of vertices that share a side vector.

    Each group stays on one side of every chosen canonical cut, so those
    cuts keep their value after contraction and no cut can get cheaper.
    """
    if profile is None:
        profile = cut_profile(g)
    classes = side_classes(g, profile)
    out, _ = contract(g, classes)
    report = CompressionReport(
        classes=[[g.labels[x] for x in cls] for cls in classes],
        n_before=g.n,
        n_after=out.n,
        edges_before=len(g.edges),
        edges_after=len(out.edges),
    )
    return out, report


def _terminal_labels(g: TerminalGraph):
    return [g.labels[t] for t in g.terminals]


def validate_mimicking(g: TerminalGraph, g2: TerminalGraph, profile: CutProfile | None = None) -> Report:
    """Compare minimum cut values of ``g`` and ``g2`` on every bipartition."""
    if _terminal_labels(g) != _terminal_labels(g2):
        raise InvalidTerminalSetError(
            f"terminal lists differ: {_terminal_labels(g)} vs {_terminal_labels(g2)}"
        )
    rep = Report("mimicking network check", {"k": g.k, "n": g.n, "n'": g2.n})
    if profile is None:
        values = [min_cut_value(g, b) for b in enumerate_bipartitions(g.terminals)]
    else:
        _check_profile(g, profile)
        values = list(profile.values)
    mismatches = []
    for b, v1 in zip(enumerate_bipartitions(g2.terminals), values):
        v2 = min_cut_value(g2, b)
        if v1 != v2:
            side = ",".join(sorted(g2.labels[t] for t in b.source))
            mismatches.append((b.mask, v1, v2))
            rep.fail(f"S={{{side}}}: original {v1}, candidate {v2}")
    rep.data["mismatches"] = mismatches
    rep.note(f"{len(values) - len(mismatches)}/{len(values)} bipartitions agree")
    return rep


def mergeability_test(g: TerminalGraph, u, v, profile: CutProfile | None = None) -> bool:
    """True iff identifying ``u`` and ``v`` leaves every minimum cut value unchanged.

    With a profile, the bipartitions whose canonical cut separates ``u`` from
    ``v`` are tried first, since those are the likely witnesses.
    """
    u, v = g.vertex(u), g.vertex(v)
    merged = merge_vertices(g, u, v)
    if profile is None:
        profile = cut_profile(g)
    _check_profile(g, profile)
    order = sorted(
        range(len(profile.cuts)),
        key=lambda i: (u in profile.cuts[i].source_min_side) == (v in profile.cuts[i].source_min_side),
    )
    for i in order:
        b = Bipartition(profile.bipartitions[i].mask, merged.terminals)
        if min_cut_value(merged, b) != profile.cuts[i].value:
            return False
    return True
