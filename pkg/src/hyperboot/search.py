"""Isomorphism-reduced exhaustive search for minimum contagious configurations."""
from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from .bounds import best_known, exact_32
from .canonical import orbit_representatives
from .core import Configuration, HypergraphModel, ext_set, initial_state, is_contagious, run
from .encoding import DomainError, max_cells

__all__ = [
    "DisjointWitness",
    "SearchCertificate",
    "disjoint_witness",
    "min_contagious",
]

logger = logging.getLogger(__name__)

FOUND = "found"
EXHAUSTED = "exhausted_none"
INCONCLUSIVE = "inconclusive"


@dataclass
class SearchCertificate:
    """Outcome of :func:`min_contagious`.

    ``exhausted`` lists ``(size, orbits)`` for every size that was scanned
    completely without finding a contagious configuration.
    """

    n: int
    k: int
    j: int
    r: int
    verdict: str
    size: int | None
    witness: Configuration | None = None
    orbits_tested: int = 0
    exhausted: list = field(default_factory=list)
    bound_inconsistency: bool = False
    elapsed: float = 0.0

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "j": self.j,
            "r": self.r,
            "verdict": self.verdict,
            "size": self.size,
            "witness": self.witness.to_lists() if self.witness is not None else None,
            "orbits_tested": self.orbits_tested,
            "exhausted": [{"size": m, "orbits": c} for m, c in self.exhausted],
            "bound_inconsistency": self.bound_inconsistency,
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed * 1000)
        return out

    def exhausted_sizes(self) -> list[int]:
        return [m for m, _ in self.exhausted]


def _first_contagious(args) -> int | None:
    n, k, j, r, chunk = args
    H = HypergraphModel.complete(n, k)
    for i, ranks in enumerate(chunk):
        if is_contagious(Configuration(n, j, ranks), H, r):
            return i
    return None


def _scan(reps, n, k, j, r, workers: int) -> int | None:
    """Index of the first contagious representative, in canonical order."""
    if workers <= 1 or len(reps) < 64:
        return _first_contagious((n, k, j, r, reps))
    size = max(16, len(reps) // (workers * 8))
    chunks = [reps[i:i + size] for i in range(0, len(reps), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = pool.map(_first_contagious, [(n, k, j, r, c) for c in chunks])
        for ci, hit in enumerate(results):
            if hit is not None:
                # every earlier chunk came back empty, so this is the least index
                pool.shutdown(wait=False, cancel_futures=True)
                return ci * size + hit
    return None


def min_contagious(n: int, k: int, j: int, r: int, m_lo: int | None = None, m_hi: int | None = None,
                   workers: int = 1, max_orbits: int | None = None,
                   time_budget: float | None = None) -> SearchCertificate:
    """Smallest contagious j-configuration in the complete k-graph on ``[n]``.

    Sizes are scanned upward from ``m_lo``; within a size, orbit
    representatives are tested in canonical order so the reported witness
    does not depend on ``workers``.  Hitting ``max_orbits`` or
    ``time_budget`` yields an ``inconclusive`` certificate.
    """
    if not 1 <= j <= k - 1 or k > n:
        raise DomainError(f"need 1 <= j <= k-1 <= n-1, got n={n}, k={k}, j={j}")
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    if comb(n, j) > max_cells():
        raise DomainError(f"C({n},{j}) exceeds the encoding budget")
    if m_lo is None:
        m_lo = exact_32(r) if (k, j) == (3, 2) else r
    if m_hi is None:
        m_hi = best_known(k, j, r).upper
    m_hi = min(m_hi, comb(n, j))
    start = time.monotonic()
    cert = SearchCertificate(n, k, j, r, INCONCLUSIVE, None)
    tested = 0
    for m in range(m_lo, m_hi + 1):
        reps = orbit_representatives(n, j, m)
        if max_orbits is not None and tested + len(reps) > max_orbits:
            logger.info("orbit cap reached at size %d", m)
            cert.size = m
            break
        if time_budget is not None and time.monotonic() - start > time_budget:
            cert.size = m
            break
        hit = _scan(reps, n, k, j, r, workers)
        tested += len(reps)
        logger.info("size %d: %d orbits, %s", m, len(reps), "hit" if hit is not None else "none")
        if hit is not None:
            cert.verdict = FOUND
            cert.size = m
            cert.witness = Configuration(n, j, reps[hit])
            break
        cert.exhausted.append((m, len(reps)))
    else:
        if m_hi >= m_lo:
            cert.verdict = EXHAUSTED
            cert.size = m_hi
            # the upper bound promises a contagious set of size <= m_hi
            cert.bound_inconsistency = m_hi == best_known(k, j, r).upper
            if cert.bound_inconsistency:
                logger.error("no contagious set up to the known upper bound %d (n=%d may be too small)", m_hi, n)
    cert.orbits_tested = tested
    cert.elapsed = time.monotonic() - start
    return cert


@dataclass(frozen=True)
class DisjointWitness:
    pairs: tuple
    prefix_unions: tuple
    ext_counts: tuple


def disjoint_witness(A0: Configuration, H: HypergraphModel, r: int) -> DisjointWitness:
    """Matching of earliest-infected pairs and their extension counts from ``A0``.

    ``P_i`` is the first newly infected pair avoiding the vertices of
    ``P_1..P_{i-1}``; ties within a step go to the lowest colex rank.
    """
    if H.k != 3 or A0.j != 2 or not H.is_complete:
        raise DomainError("disjoint witness is defined for pairs in the complete 3-graph")
    result = run(initial_state(A0, H, r))
    newly = [s for frontier in result.trace for s in frontier]
    pairs, unions, counts = [], [()], []
    used: set[int] = set()
    for p in newly:
        if used.isdisjoint(p):
            counts.append(len(ext_set(p, A0, H) - used))
            pairs.append(p)
            used.update(p)
            unions.append(tuple(sorted(used)))
    return DisjointWitness(tuple(pairs), tuple(unions), tuple(counts))
