"""Generators for the explicit contagious families.

All generators are deterministic: vertices are handed out lowest id first.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import ceil, comb

from .core import Configuration, PreconditionError
from .encoding import DomainError

__all__ = [
    "StarSpec",
    "augment",
    "make_clique_config",
    "make_recursive_tight",
    "make_star",
    "make_z_config",
    "recursive_vertex_budget",
    "z_star_sizes",
    "z_vertex_budget",
]


@dataclass(frozen=True)
class StarSpec:
    """An (m, j)-star: ``size`` j-sets meeting pairwise in exactly ``center``.

    ``center`` defaults to ``1..m`` and ``pool`` to the remaining vertices
    of ``[n]`` in increasing order.
    """

    m: int
    j: int
    size: int
    n: int
    center: tuple[int, ...] | None = None
    pool: tuple[int, ...] | None = None

    def resolved(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        if not 0 <= self.m <= self.j - 1:
            raise DomainError(f"need 0 <= m <= j-1, got m={self.m}, j={self.j}")
        if self.size < 0:
            raise DomainError("star size must be non-negative")
        center = tuple(range(1, self.m + 1)) if self.center is None else tuple(sorted(self.center))
        if len(center) != self.m or len(set(center)) != self.m:
            raise DomainError(f"center {center} is not an {self.m}-set")
        if self.pool is None:
            pool = tuple(v for v in range(1, self.n + 1) if v not in center)
        else:
            pool = tuple(self.pool)
            if set(pool) & set(center):
                raise DomainError("leaf pool overlaps the center")
        for v in center + pool:
            if not 1 <= v <= self.n:
                raise DomainError(f"vertex {v} outside [1, {self.n}]")
        return center, pool


def make_star(spec: StarSpec) -> Configuration:
    center, pool = spec.resolved()
    petal = spec.j - spec.m
    need = spec.size * petal
    if need > len(pool):
        raise DomainError(f"star needs {need} leaf vertices, pool has {len(pool)}")
    sets = [center + pool[i * petal:(i + 1) * petal] for i in range(spec.size)]
    return Configuration.from_sets(sets, spec.n, spec.j)


def z_star_sizes(r: int) -> list[int]:
    """Star sizes 1, 1, 2, 2, 3, 3, ... (r of them)."""
    return [ceil(i / 2) for i in range(1, r + 1)]


def z_vertex_budget(r: int) -> int:
    return sum(1 + s for s in z_star_sizes(r))


def _z_sets(r: int, vertices) -> tuple[list[tuple[int, ...]], list[int]]:
    vertices = list(vertices)
    if z_vertex_budget(r) > len(vertices):
        raise DomainError(f"Z_{r} needs {z_vertex_budget(r)} vertices, have {len(vertices)}")
    sets, centers = [], []
    pos = 0
    for size in z_star_sizes(r):
        c = vertices[pos]
        leaves = vertices[pos + 1:pos + 1 + size]
        pos += 1 + size
        centers.append(c)
        sets.extend(tuple(sorted((c, leaf))) for leaf in leaves)
    return sets, centers


def make_z_config(r: int, n: int, vertices=None) -> tuple[Configuration, list[int]]:
    """r vertex-disjoint graph stars of sizes 1, 1, 2, 2, ..., with their centers.

    Returns the 2-configuration and the centers ``v_1..v_r`` in star-size
    order.  ``vertices`` restricts (and orders) the ids that may be used.
    """
    if r < 0:
        raise DomainError("r must be non-negative")
    verts = range(1, n + 1) if vertices is None else vertices
    sets, centers = _z_sets(r, verts)
    return Configuration.from_sets(sets, n, 2), centers


def augment(B: Configuration, v: int) -> Configuration:
    """Add the master vertex ``v`` to every member of ``B``."""
    if any(v in s for s in B):
        raise PreconditionError(f"vertex {v} already occurs in the configuration")
    if not 1 <= v <= B.n:
        raise DomainError(f"vertex {v} outside [1, {B.n}]")
    return Configuration.from_sets((s + (v,) for s in B), B.n, B.j + 1)


def recursive_vertex_budget(k: int, r: int) -> int:
    """Vertices used by :func:`make_recursive_tight` (k >= 3)."""
    if k == 3:
        return z_vertex_budget(r)
    return r + max((recursive_vertex_budget(k - 1, s) for s in range(1, r + 1)), default=0)


def _recursive_sets(k: int, r: int, vertices: list[int]) -> list[tuple[int, ...]]:
    if k == 3:
        return _z_sets(r, vertices)[0]
    if len(vertices) < r:
        raise DomainError("not enough vertices for the master set")
    masters, rest = vertices[:r], vertices[r:]
    out = []
    for s, v in enumerate(masters, start=1):
        # all B_s share the non-master universe; distinct masters keep the copies apart
        out.extend(tuple(sorted(b + (v,))) for b in _recursive_sets(k - 1, s, rest))
    return out


def make_recursive_tight(k: int, r: int, n: int) -> Configuration:
    """Union of master-augmented recursive configurations, one per threshold s <= r.

    For k = 4 the building blocks are the ``Z_s``; for larger k they are
    this construction one level down.  Size is the recursive upper bound.
    """
    if k < 4:
        raise DomainError(f"recursive construction needs k >= 4, got {k}")
    if r < 1:
        raise DomainError("r must be >= 1")
    need = recursive_vertex_budget(k, r)
    if need > n:
        raise DomainError(f"construction needs n >= {need}, got {n}")
    sets = _recursive_sets(k, r, list(range(1, n + 1)))
    return Configuration.from_sets(sets, n, k - 1)


def make_clique_config(j: int, r: int, n: int) -> Configuration:
    """All j-subsets of ``{1, ..., j + r - 1}``."""
    if j < 1 or r < 1:
        raise DomainError("need j >= 1 and r >= 1")
    size = j + r - 1
    if size > n:
        raise DomainError(f"clique needs {size} vertices, n={n}")
    config = Configuration.from_sets(itertools.combinations(range(1, size + 1), j), n, j)
    assert len(config) == comb(size, j)
    return config
