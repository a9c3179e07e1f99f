"""scikit-learn style front ends.

Graphs go in as a sequence of :class:`~chromroots.graph.Graph`, graph6
strings or square 0/1 adjacency matrices.  The estimators are stateless
(``fit`` only validates), so they compose with ``Pipeline`` and
``clone`` like any other transformer.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .census import STATISTICS, census
from .chrompoly import chromatic_polynomial
from .graph import Graph
from .io import parse_graph6
from .rootkit import find_roots, quadratic_disc_test, quartic_disc_test
from .sturm import all_real

METHODS = ("quadratic", "quartic", "both")


def as_graph(item) -> Graph:
    """Coerce one input item to a :class:`Graph`."""
    if isinstance(item, Graph):
        return item
    if isinstance(item, (str, bytes)):
        s = item.decode("ascii") if isinstance(item, bytes) else item
        return parse_graph6(s.strip())
    a = np.asarray(item)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("adjacency matrix must be symmetric")
    if np.any(np.diag(a)):
        raise ValueError("adjacency matrix must have a zero diagonal")
    if not np.isin(a, (0, 1)).all():
        raise ValueError("adjacency matrix entries must be 0 or 1")
    iu, ju = np.nonzero(np.triu(a, 1))
    return Graph(a.shape[0], zip(iu.tolist(), ju.tolist()))


def check_graphs(X: Iterable) -> list[Graph]:
    """Validate a collection of graphs; raises ``ValueError`` on an empty or malformed input."""
    if isinstance(X, (Graph, str, bytes)):
        raise ValueError("expected a sequence of graphs, got a single graph")
    gs = [as_graph(x) for x in X]
    if not gs:
        raise ValueError("no graphs given")
    return gs


class SubgraphCensus(TransformerMixin, BaseEstimator):
    """Map each graph to its nine subgraph statistics (``int64`` columns)."""

    def fit(self, X, y=None):
        check_graphs(X)
        self.n_features_out_ = len(STATISTICS)
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "n_features_out_")
        gs = check_graphs(X)
        return np.array([census(g).as_tuple() for g in gs], dtype=np.int64).reshape(len(gs), -1)

    def get_feature_names_out(self, input_features=None):
        return np.array(STATISTICS, dtype=object)


class NonRealRootCertifier(ClassifierMixin, BaseEstimator):
    """Predict ``True`` when a discriminant certificate proves a non-real chromatic root.

    ``method`` selects the quadratic test, the quartic test, or either.  A
    ``False`` prediction means "not certified", not "all roots real".
    """

    def __init__(self, method: str = "both"):
        self.method = method

    def _check_method(self):
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")

    def fit(self, X, y=None):
        self._check_method()
        check_graphs(X)
        self.classes_ = np.array([False, True])
        return self

    def decision_function(self, X) -> np.ndarray:
        """Signs of the two discriminants, shape ``(n_graphs, 2)``; 0 where not applicable."""
        check_is_fitted(self, "classes_")
        out = []
        for g in check_graphs(X):
            q = quadratic_disc_test(g.n, g.m, census(g).t).sign if g.n >= 3 else 0
            r = quartic_disc_test(census(g), g.n).sign if g.n >= 5 else 0
            out.append((q, r))
        return np.array(out, dtype=np.int64).reshape(-1, 2)

    def predict(self, X) -> np.ndarray:
        self._check_method()
        d = self.decision_function(X)
        if self.method == "quadratic":
            return d[:, 0] < 0
        if self.method == "quartic":
            return d[:, 1] < 0
        return (d[:, 0] < 0) | (d[:, 1] < 0)


class ChromaticRootFeatures(TransformerMixin, BaseEstimator):
    """Exact root features per graph: ``[all_real, max_imag, n_nonreal]``.

    Computes the full chromatic polynomial, so it is meant for small graphs.
    """

    def fit(self, X, y=None):
        check_graphs(X)
        self.n_features_out_ = 3
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "n_features_out_")
        rows = []
        for g in check_graphs(X):
            p = chromatic_polynomial(g)
            rs = find_roots(p)
            rows.append((float(all_real(p)), rs.max_imag, float(sum(1 for z in rs.roots if z.imag != 0))))
        return np.array(rows, dtype=float).reshape(-1, 3)

    def get_feature_names_out(self, input_features=None):
        return np.array(["all_real", "max_imag", "n_nonreal"], dtype=object)


def graphs_from_sequence(items: Sequence) -> list[Graph]:
    return check_graphs(items)
