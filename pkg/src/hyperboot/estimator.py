"""scikit-learn style wrappers around the process and the search."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .core import initial_state, is_contagious, run
from .search import min_contagious
from .validation import as_array, check_configuration, check_hypergraph, check_params


class InfectionProcess(TransformerMixin, BaseEstimator):
    """The (r, A0)-infection process on a k-uniform hypergraph.

    ``fit(A0)`` runs the process to its fixpoint; ``transform(A0)`` returns
    the final infected j-sets as an ``(m, j)`` array; ``predict`` maps a
    sequence of initial configurations to contagiousness flags.

    Parameters
    ----------
    n, k, j, r : int
        Vertex count, edge size, infected set size, infection threshold.
    edges : array-like of shape (E, k), optional
        Explicit edge list; the complete hypergraph when omitted.
    max_steps : int, optional
        Stop after this many steps and mark the result truncated.
    """

    def __init__(self, n=6, k=3, j=2, r=1, edges=None, max_steps=None):
        self.n = n
        self.k = k
        self.j = j
        self.r = r
        self.edges = edges
        self.max_steps = max_steps

    def _setup(self):
        check_params(self.n, self.k, self.j, self.r)
        return check_hypergraph(self.n, self.k, self.edges)

    def fit(self, X, y=None):
        H = self._setup()
        A0 = check_configuration(X, self.n, self.j)
        self.result_ = run(initial_state(A0, H, self.r), self.max_steps)
        self.initial_ = A0
        self.final_ = self.result_.final
        self.tau_ = self.result_.tau
        self.percolated_ = self.result_.percolated
        self.truncated_ = self.result_.truncated
        self.n_steps_ = self.result_.steps
        return self

    def transform(self, X):
        check_is_fitted(self, "result_")
        A0 = check_configuration(X, self.n, self.j)
        if A0 == self.initial_:
            return as_array(self.final_)
        return as_array(run(initial_state(A0, self._setup(), self.r), self.max_steps).final)

    def predict(self, X):
        """Contagiousness of each configuration in ``X``."""
        H = self._setup()
        return np.array([is_contagious(check_configuration(A, self.n, self.j), H, self.r) for A in X],
                        dtype=bool)


class MinimalContagiousSearch(BaseEstimator):
    """Exhaustive search for a smallest contagious configuration in the complete k-graph.

    After ``fit``: ``certificate_`` holds the full search record, ``size_``
    the minimum size (None unless found) and ``witness_`` a smallest
    contagious configuration as an ``(m, j)`` array.
    """

    def __init__(self, n=7, k=3, j=2, r=2, m_lo=None, m_hi=None, workers=1, max_orbits=None):
        self.n = n
        self.k = k
        self.j = j
        self.r = r
        self.m_lo = m_lo
        self.m_hi = m_hi
        self.workers = workers
        self.max_orbits = max_orbits

    def fit(self, X=None, y=None):
        check_params(self.n, self.k, self.j, self.r)
        cert = min_contagious(self.n, self.k, self.j, self.r, m_lo=self.m_lo, m_hi=self.m_hi,
                              workers=self.workers, max_orbits=self.max_orbits)
        self.certificate_ = cert
        self.size_ = cert.size if cert.verdict == "found" else None
        self.witness_ = as_array(cert.witness) if cert.witness is not None else None
        return self

    def predict(self, X=None):
        check_is_fitted(self, "certificate_")
        return self.size_
