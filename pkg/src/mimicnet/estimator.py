"""scikit-learn style wrappers around profiling, compression and rank."""

from __future__ import annotations

from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .graph import TerminalGraph, contract
from .profile import CompressionReport, cut_profile, side_classes, side_vectors, validate_mimicking
from .rank import build_incidence_matrix, exact_rank, gf2_rank
from .validation import check_same_graph, check_terminal_graph


class MimickingCompressor(TransformerMixin, BaseEstimator):
    """Merge vertices that share a side vector across all canonical minimum cuts.

    ``fit`` computes the cut profile of a terminal graph; ``transform``
    contracts that same graph into a mimicking network.

    Parameters
    ----------
    verify : bool
        Re-check every minimum cut value on the output and raise if one moved.
    jobs : int
        Worker processes for the cut profile.
    """

    def __init__(self, verify=False, jobs=1):
        self.verify = verify
        self.jobs = jobs

    def fit(self, X, y=None):
        g = check_terminal_graph(X, require_connected=True)
        self.profile_ = cut_profile(g, jobs=self.jobs)
        self.side_vectors_ = side_vectors(g, self.profile_)
        self.classes_ = side_classes(g, self.profile_)
        self.labels_in_ = g.labels
        self.terminals_in_ = g.terminals
        self.n_vertices_in_ = g.n
        return self

    def transform(self, X) -> TerminalGraph:
        check_is_fitted(self, "classes_")
        g = check_terminal_graph(X)
        check_same_graph(self.labels_in_, self.terminals_in_, g)
        out, _ = contract(g, self.classes_)
        self.report_ = CompressionReport(
            classes=[[g.labels[x] for x in c] for c in self.classes_],
            n_before=g.n,
            n_after=out.n,
            edges_before=len(g.edges),
            edges_after=len(out.edges),
        )
        if self.verify:
            rep = validate_mimicking(g, out, self.profile_)
            if not rep.passed:
                raise AssertionError(rep.render())
        return out


class IncidenceRank(BaseEstimator):
    """Exact rank of the cutset-edge incidence matrix of a terminal graph."""

    def __init__(self, row_mode="unique-only", strict=False, jobs=1):
        self.row_mode = row_mode
        self.strict = strict
        self.jobs = jobs

    def fit(self, X, y=None):
        g = check_terminal_graph(X, require_connected=True)
        self.profile_ = cut_profile(g, jobs=self.jobs)
        self.matrix_ = build_incidence_matrix(g, self.profile_, self.row_mode, self.strict)
        self.rank_ = exact_rank(self.matrix_)
        self.gf2_rank_ = gf2_rank(self.matrix_)
        return self

    def score(self, X=None, y=None):
        check_is_fitted(self, "rank_")
        return self.rank_
