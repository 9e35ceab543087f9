"""Input validation helpers shared by the estimators and the CLI."""
from __future__ import annotations

import warnings

import numpy as np

from .core import Configuration, HypergraphModel
from .encoding import DomainError


class ParameterWarning(UserWarning):
    """Parameters are valid but below the size where the known results apply."""


def check_params(n: int, k: int, j: int, r: int) -> None:
    for name, value in (("n", n), ("k", k), ("j", j), ("r", r)):
        if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
            raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    if k < 2:
        raise DomainError(f"k must be >= 2, got {k}")
    if not 1 <= j <= k - 1:
        raise DomainError(f"need 1 <= j <= k-1, got j={j}, k={k}")
    if n < k:
        raise DomainError(f"need n >= k, got n={n}, k={k}")
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    floor = max(k + r - 1, 2 * r + 1)
    if n < floor:
        warnings.warn(f"n={n} is below max(k+r-1, 2r+1)={floor}; results may be degenerate",
                      ParameterWarning, stacklevel=2)


def check_configuration(X, n: int, j: int) -> Configuration:
    """Coerce ``X`` to a :class:`Configuration` of j-sets over ``[n]``.

    Accepts a Configuration, an integer array of shape ``(m, j)``, or any
    iterable of vertex collections.  Duplicate rows are merged.
    """
    if isinstance(X, Configuration):
        if (X.n, X.j) != (n, j):
            raise DomainError(f"configuration is over (n={X.n}, j={X.j}), expected (n={n}, j={j})")
        return X
    arr = np.asarray(list(X) if not hasattr(X, "shape") else X)
    if arr.size == 0:
        return Configuration.empty(n, j)
    if arr.ndim != 2 or arr.shape[1] != j:
        raise DomainError(f"expected shape (m, {j}), got {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        if not np.all(np.equal(np.mod(arr, 1), 0)):
            raise DomainError("vertex ids must be integers")
        arr = arr.astype(np.int64)
    if arr.min() < 1 or arr.max() > n:
        raise DomainError(f"vertex ids must lie in [1, {n}]")
    return Configuration.from_sets((tuple(int(v) for v in row) for row in arr), n, j)


def check_hypergraph(n: int, k: int, edges=None) -> HypergraphModel:
    if edges is None:
        return HypergraphModel.complete(n, k)
    if isinstance(edges, HypergraphModel):
        return edges
    return HypergraphModel.explicit(n, k, [tuple(int(v) for v in e) for e in edges])


def as_array(config: Configuration) -> np.ndarray:
    return np.array(config.to_lists(), dtype=np.int64).reshape(len(config), config.j)
