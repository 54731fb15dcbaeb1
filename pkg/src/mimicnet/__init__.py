"""Exact construction, compression and certification of terminal-cut mimicking networks."""

from .cuts import CanonicalCut, brute_force_min_cut, is_unique, min_cut
from .dblexp import DblExpInstance, balance, check_ell_even, generate_dblexp
from .estimator import IncidenceRank, MimickingCompressor
from .graph import TerminalGraph, contract, cut_value, merge_vertices
from .io import export_dot, parse_graph, serialize_graph
from .partitions import Bipartition, enumerate_bipartitions
from .planar import PlanarInstance, generate_planar_dual, important_cycle
from .profile import (
    CutProfile,
    cut_profile,
    hagerup_compress,
    mergeability_test,
    side_vectors,
    validate_mimicking,
)
from .rank import build_incidence_matrix, exact_rank

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "CanonicalCut",
    "CutProfile",
    "DblExpInstance",
    "IncidenceRank",
    "MimickingCompressor",
    "PlanarInstance",
    "TerminalGraph",
    "balance",
    "brute_force_min_cut",
    "build_incidence_matrix",
    "check_ell_even",
    "contract",
    "cut_profile",
    "cut_value",
    "enumerate_bipartitions",
    "exact_rank",
    "export_dot",
    "generate_dblexp",
    "generate_planar_dual",
    "hagerup_compress",
    "important_cycle",
    "is_unique",
    "merge_vertices",
    "mergeability_test",
    "min_cut",
    "parse_graph",
    "serialize_graph",
    "side_vectors",
    "validate_mimicking",
]
