"""Capped maximum bipartite matching (augmenting paths)."""
from __future__ import annotations


def matching_size(adjacency, cap: int | None = None) -> int:
    """Size of a maximum matching, stopping early once ``cap`` is reached.

    ``adjacency`` is a sequence whose i-th entry lists the right-hand
    vertices (any hashables) adjacent to left vertex i.
    """
    match_right: dict = {}

    def augment(u, seen) -> bool:
        for w in adjacency[u]:
            if w in seen:
                continue
            seen.add(w)
            owner = match_right.get(w)
            if owner is None or augment(owner, seen):
                match_right[w] = u
                return True
        return False

    size = 0
    for u in range(len(adjacency)):
        if cap is not None and size >= cap:
            break
        if augment(u, set()):
            size += 1
    return size
