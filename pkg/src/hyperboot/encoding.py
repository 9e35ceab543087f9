"""Colexicographic ranking of fixed-size vertex sets.

The rank of ``{a_1 < ... < a_j}`` (1-based vertices) is ``sum(C(a_i - 1, i))``,
so all j-subsets of ``[n]`` occupy the dense range ``[0, C(n, j))`` and the
subsets of ``[m]`` come before any subset that uses a vertex above ``m``.
"""
from __future__ import annotations

import os
from functools import lru_cache
from itertools import combinations
from math import comb

DEFAULT_MAX_CELLS = 1 << 21


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


def max_cells() -> int:
    """Budget for dense encodings, overridable with ``HYPERBOOT_MAX_CELLS``."""
    raw = os.environ.get("HYPERBOOT_MAX_CELLS")
    if raw is None:
        return DEFAULT_MAX_CELLS
    try:
        value = int(raw)
    except ValueError as exc:
        raise DomainError(f"HYPERBOOT_MAX_CELLS must be an integer, got {raw!r}") from exc
    if value < 1:
        raise DomainError("HYPERBOOT_MAX_CELLS must be positive")
    return value


def rank_jset(vertices, n: int | None = None) -> int:
    """Colex rank of a strictly increasing vertex sequence."""
    rank = 0
    prev = 0
    for i, v in enumerate(vertices, start=1):
        if v <= prev:
            raise DomainError(f"vertices must be strictly increasing and >= 1: {tuple(vertices)}")
        if n is not None and v > n:
            raise DomainError(f"vertex {v} outside [1, {n}]")
        rank += comb(v - 1, i)
        prev = v
    return rank


def unrank_jset(rank: int, n: int, j: int) -> tuple[int, ...]:
    """Inverse of :func:`rank_jset` for j-subsets of ``[n]``."""
    if j < 0 or j > n:
        raise DomainError(f"no {j}-subsets of [{n}]")
    if not 0 <= rank < comb(n, j):
        raise DomainError(f"rank {rank} outside [0, C({n},{j}))")
    out = []
    v = n
    for i in range(j, 0, -1):
        # largest v with C(v-1, i) <= rank
        while comb(v - 1, i) > rank:
            v -= 1
        out.append(v)
        rank -= comb(v - 1, i)
        v -= 1
    return tuple(reversed(out))


@lru_cache(maxsize=64)
def all_jsets(n: int, j: int) -> tuple[tuple[int, ...], ...]:
    """Every j-subset of ``[n]``, indexed by colex rank."""
    out = sorted(combinations(range(1, n + 1), j), key=lambda s: s[::-1])
    return tuple(out)


def vertex_mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m
