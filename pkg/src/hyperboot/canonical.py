"""Canonical forms of j-configurations under vertex relabeling.

The canonical form is the least sorted colex-rank tuple over all labelings
reachable by individualization-refinement: vertices are colored by degree,
colors are refined by the colors of their co-members until stable, and ties
are broken by individualizing each vertex of the first non-singleton cell in
turn.  Covered vertices get labels ``1..|V|`` in final color order, which
can only lower ranks compared with any labeling that skips an id.
"""
from __future__ import annotations

from math import comb

from .encoding import all_jsets, rank_jset

__all__ = ["canonical_form", "enumerate_canonical_configs", "orbit_representatives"]


def _refine(colors: dict, incidence: dict) -> dict:
    while True:
        sigs = {}
        for v, c in colors.items():
            around = sorted(tuple(sorted(colors[u] for u in s if u != v)) for s in incidence[v])
            sigs[v] = (c, tuple(around))
        order = {sig: i for i, sig in enumerate(sorted(set(sigs.values())))}
        new = {v: order[sigs[v]] for v in colors}
        if len(order) == len(set(colors.values())):
            return new
        colors = new


def canonical_form(sets) -> tuple[int, ...]:
    """Canonical sorted rank tuple of a configuration given as vertex tuples."""
    sets = [tuple(s) for s in sets]
    if not sets:
        return ()
    incidence: dict[int, list] = {}
    for s in sets:
        for v in s:
            incidence.setdefault(v, []).append(s)
    colors = _refine({v: len(incidence[v]) for v in incidence}, incidence)
    best = None
    stack = [colors]
    while stack:
        colors = stack.pop()
        cells: dict[int, list] = {}
        for v, c in colors.items():
            cells.setdefault(c, []).append(v)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            label = {v: c + 1 for v, c in colors.items()}
            cert = tuple(sorted(rank_jset(tuple(sorted(label[v] for v in s))) for s in sets))
            if best is None or cert < best:
                best = cert
            continue
        c0 = colors[target[0]]
        for v in sorted(target, reverse=True):
            branch = dict(colors)
            branch[v] = c0 - 0.5
            stack.append(_refine(branch, incidence))
    return best


_LEVELS: dict[tuple[int, int], list[list[tuple[int, ...]]]] = {}


def _expand(level: list[tuple[int, ...]], n: int, j: int) -> list[tuple[int, ...]]:
    table = all_jsets(n, j)
    total = comb(n, j)
    seen = set()
    for rep in level:
        have = set(rep)
        base = [table[q] for q in rep]
        for q in range(total):
            if q in have:
                continue
            seen.add(canonical_form(base + [table[q]]))
    return sorted(seen)


def orbit_representatives(n: int, j: int, m: int) -> list[tuple[int, ...]]:
    """Sorted canonical rank tuples, one per orbit of m-member configurations.

    Built by orderly augmentation: every orbit at size m arises from some
    orbit at size m - 1 by adding one j-set.
    """
    if m < 0 or m > comb(n, j):
        return []
    levels = _LEVELS.setdefault((n, j), [[()]])
    while len(levels) <= m:
        levels.append(_expand(levels[-1], n, j))
    return levels[m]


def enumerate_canonical_configs(n: int, j: int, m: int):
    """Yield one :class:`~hyperboot.core.Configuration` per isomorphism class."""
    from .core import Configuration

    for ranks in orbit_representatives(n, j, m):
        yield Configuration(n, j, ranks)
