"""Hypergraph model, configurations, and the synchronous j-set infection process.

A j-set ``J`` outside the infected configuration becomes infected in the next
step when there are ``r`` pairwise distinct edges ``K_i`` and ``r`` pairwise
distinct infected j-sets ``J_i`` with ``J_i | J <= K_i``.  That is a bipartite
matching of size ``r`` between infected j-sets and edges under containment.
All j-sets of a step are decided against the configuration of the previous
step.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .encoding import DomainError, all_jsets, max_cells, rank_jset, unrank_jset, vertex_mask
from .matching import matching_size

__all__ = [
    "Configuration",
    "HypergraphModel",
    "PreconditionError",
    "ProcessState",
    "RunResult",
    "UnsupportedCaseError",
    "brute_force_infection_oracle",
    "ext_set",
    "infection_check",
    "initial_state",
    "is_contagious",
    "is_joker",
    "reduced_process",
    "restrict",
    "run",
    "star_of",
    "step",
]


class PreconditionError(ValueError):
    """An operation was called outside its precondition."""


class UnsupportedCaseError(ValueError):
    """The operation is only defined for a subset of parameters."""


class OracleSizeError(RuntimeError):
    """Instance too large for the brute-force oracle."""


def _as_vertex_tuple(vertices) -> tuple[int, ...]:
    out = tuple(sorted(int(v) for v in vertices))
    if len(set(out)) != len(out):
        raise DomainError(f"repeated vertex in {tuple(vertices)}")
    return out


class HypergraphModel:
    """A k-uniform hypergraph: complete (implicit edges) or explicit.

    Vertices keep their original ids after restriction; ``universe`` is the
    current vertex set, ``[1, n]`` unless the model was restricted.
    """

    __slots__ = ("n", "k", "edges", "universe", "_edge_masks", "_hash")

    def __init__(self, n: int, k: int, edges=None, universe=None):
        if k < 2:
            raise DomainError(f"edge uniformity k must be >= 2, got {k}")
        if n < k:
            raise DomainError(f"need n >= k, got n={n}, k={k}")
        self.n = n
        self.k = k
        if universe is None:
            universe = range(1, n + 1)
        self.universe = _as_vertex_tuple(universe)
        if self.universe and (self.universe[0] < 1 or self.universe[-1] > n):
            raise DomainError(f"universe must lie within [1, {n}]")
        uset = set(self.universe)
        if edges is not None:
            normed = set()
            for e in edges:
                e = _as_vertex_tuple(e)
                if len(e) != k:
                    raise DomainError(f"edge {e} is not a {k}-set")
                if not uset.issuperset(e):
                    raise DomainError(f"edge {e} leaves the vertex universe")
                normed.add(e)
            edges = frozenset(normed)
        self.edges = edges
        self._edge_masks = None
        self._hash = None

    @classmethod
    def complete(cls, n: int, k: int) -> "HypergraphModel":
        return cls(n, k)

    @classmethod
    def explicit(cls, n: int, k: int, edges) -> "HypergraphModel":
        return cls(n, k, edges=edges)

    @property
    def is_complete(self) -> bool:
        return self.edges is None

    @property
    def variant(self) -> str:
        return "Complete" if self.is_complete else "Explicit"

    def has_edge(self, kset) -> bool:
        kset = tuple(sorted(kset))
        if len(kset) != self.k or len(set(kset)) != self.k:
            return False
        if self.edges is None:
            return set(kset).issubset(self.universe)
        return kset in self.edges

    def iter_edges(self):
        if self.edges is None:
            return itertools.combinations(self.universe, self.k)
        return iter(sorted(self.edges))

    def edges_containing(self, vertices) -> list[tuple[int, ...]]:
        """All edges that contain the given vertex set."""
        base = _as_vertex_tuple(vertices)
        if len(base) > self.k:
            return []
        if self.edges is None:
            if not set(base).issubset(self.universe):
                return []
            rest = [v for v in self.universe if v not in base]
            return [tuple(sorted(base + extra))
                    for extra in itertools.combinations(rest, self.k - len(base))]
        bm = vertex_mask(base)
        return [e for e, em in self._masks() if em & bm == bm]

    def _masks(self):
        if self._edge_masks is None:
            self._edge_masks = [(e, vertex_mask(e)) for e in sorted(self.edges)]
        return self._edge_masks

    def _key(self):
        return (self.n, self.k, self.universe, self.edges)

    def __eq__(self, other):
        return isinstance(other, HypergraphModel) and self._key() == other._key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self):
        if self.edges is None:
            return f"HypergraphModel.complete(n={self.n}, k={self.k}, |V|={len(self.universe)})"
        return f"HypergraphModel.explicit(n={self.n}, k={self.k}, |E|={len(self.edges)})"


class Configuration:
    """An immutable, duplicate-free collection of j-sets over ``[1, n]``.

    Members are stored by colex rank.  Iteration yields sorted vertex tuples
    in rank order.
    """

    __slots__ = ("n", "j", "universe", "_ranks", "_mask", "_sets")

    def __init__(self, n: int, j: int, ranks=(), universe=None):
        if j < 0 or j > n:
            raise DomainError(f"need 0 <= j <= n, got j={j}, n={n}")
        self.n = n
        self.j = j
        self.universe = tuple(range(1, n + 1)) if universe is None else _as_vertex_tuple(universe)
        self._ranks = frozenset(ranks)
        self._mask = None
        self._sets = None

    @classmethod
    def from_sets(cls, sets, n: int, j: int, universe=None) -> "Configuration":
        ranks = []
        for s in sets:
            t = _as_vertex_tuple(s)
            if len(t) != j:
                raise DomainError(f"{t} is not a {j}-set")
            ranks.append(rank_jset(t, n))
        config = cls(n, j, ranks, universe)
        if universe is not None:
            uset = set(config.universe)
            for t in config:
                if not uset.issuperset(t):
                    raise DomainError(f"{t} leaves the vertex universe")
        return config

    @classmethod
    def empty(cls, n: int, j: int, universe=None) -> "Configuration":
        return cls(n, j, (), universe)

    @classmethod
    def full(cls, n: int, j: int, universe=None) -> "Configuration":
        if universe is None:
            return cls(n, j, range(comb(n, j)))
        return cls.from_sets(itertools.combinations(_as_vertex_tuple(universe), j), n, j, universe)

    @property
    def ranks(self) -> frozenset:
        return self._ranks

    @property
    def mask(self) -> int:
        """Dense bitset over colex ranks."""
        if self._mask is None:
            m = 0
            for r in self._ranks:
                m |= 1 << r
            self._mask = m
        return self._mask

    def size(self) -> int:
        return len(self._ranks)

    def __len__(self):
        return len(self._ranks)

    def __iter__(self):
        if self._sets is None:
            self._sets = tuple(unrank_jset(r, self.n, self.j) for r in sorted(self._ranks))
        return iter(self._sets)

    def __contains__(self, jset) -> bool:
        t = tuple(sorted(jset))
        if len(t) != self.j or (t and (t[0] < 1 or t[-1] > self.n)):
            return False
        try:
            return rank_jset(t, self.n) in self._ranks
        except DomainError:
            return False

    def insert(self, jset) -> "Configuration":
        """Copy with one more member."""
        t = _as_vertex_tuple(jset)
        if len(t) != self.j:
            raise DomainError(f"{t} is not a {self.j}-set")
        return Configuration(self.n, self.j, self._ranks | {rank_jset(t, self.n)}, self.universe)

    def union(self, other: "Configuration") -> "Configuration":
        self._check_compatible(other)
        return Configuration(self.n, self.j, self._ranks | other._ranks, self.universe)

    def difference(self, other: "Configuration") -> "Configuration":
        self._check_compatible(other)
        return Configuration(self.n, self.j, self._ranks - other._ranks, self.universe)

    def issubset(self, other: "Configuration") -> bool:
        self._check_compatible(other)
        return self._ranks <= other._ranks

    def vertices(self) -> set[int]:
        out = set()
        for s in self:
            out.update(s)
        return out

    def to_lists(self) -> list[list[int]]:
        return [list(s) for s in self]

    def _check_compatible(self, other):
        if (self.n, self.j) != (other.n, other.j):
            raise DomainError("configurations over different (n, j)")

    def __eq__(self, other):
        if not isinstance(other, Configuration):
            return NotImplemented
        return (self.n, self.j, self._ranks) == (other.n, other.j, other._ranks)

    def __hash__(self):
        return hash((self.n, self.j, self._ranks))

    def __repr__(self):
        body = ", ".join("{" + ",".join(map(str, s)) + "}" for s in itertools.islice(self, 8))
        more = ", ..." if len(self) > 8 else ""
        return f"Configuration(n={self.n}, j={self.j}, [{body}{more}])"


@dataclass(frozen=True)
class ProcessState:
    """A running (r, A_0)-infection process at step ``t``."""

    hypergraph: HypergraphModel
    j: int
    r: int
    infected: Configuration
    t: int = 0
    frontier: Configuration | None = None

    def __post_init__(self):
        k = self.hypergraph.k
        if not 1 <= self.j <= k - 1:
            raise DomainError(f"need 1 <= j <= k-1, got j={self.j}, k={k}")
        if self.r < 0:
            raise DomainError(f"threshold r must be >= 0, got {self.r}")
        if self.infected.j != self.j or self.infected.n != self.hypergraph.n:
            raise DomainError("infected configuration does not match (n, j)")
        uset = set(self.hypergraph.universe)
        for s in self.infected:
            if not uset.issuperset(s):
                raise DomainError(f"infected set {s} leaves the vertex universe")
        if self.frontier is None:
            object.__setattr__(self, "frontier", Configuration.empty(self.hypergraph.n, self.j, self.hypergraph.universe))

    @property
    def total(self) -> int:
        return comb(len(self.hypergraph.universe), self.j)


def initial_state(A0: Configuration, hypergraph: HypergraphModel, r: int) -> ProcessState:
    """State at ``t = 0`` for the (r, A0)-process on ``hypergraph``."""
    if A0.universe != hypergraph.universe:
        A0 = Configuration(A0.n, A0.j, A0.ranks, hypergraph.universe)
    return ProcessState(hypergraph, A0.j, r, A0)


@dataclass(frozen=True)
class RunResult:
    final: Configuration
    tau: int | None
    percolated: bool
    trace: tuple = field(default_factory=tuple)
    truncated: bool = False

    @property
    def steps(self) -> int:
        return len(self.trace)


# --------------------------------------------------------------------------
# Local infection rule


def _check_tight(H: HypergraphModel, j: int) -> None:
    if H.k != j + 1:
        raise UnsupportedCaseError(f"extension sets need k = j + 1, got k={H.k}, j={j}")


def ext_set(J, infected: Configuration, H: HypergraphModel) -> set[int]:
    """Vertices ``v`` such that the edge ``J + v`` holds another infected j-set."""
    _check_tight(H, infected.j)
    J = _as_vertex_tuple(J)
    others = [set(s) for s in infected if s != J]
    out = set()
    for v in H.universe:
        if v in J:
            continue
        K = set(J) | {v}
        if not H.has_edge(K):
            continue
        if any(s <= K for s in others):
            out.add(v)
    return out


def _matching_count(J: tuple, infected_sets, H: HypergraphModel, r: int) -> int:
    jm = vertex_mask(J)
    adjacency = []
    for s in infected_sets:
        if s == J:
            continue
        if bin(jm | vertex_mask(s)).count("1") > H.k:
            continue
        edges = H.edges_containing(set(J) | set(s))
        if edges:
            adjacency.append(edges)
    return matching_size(adjacency, cap=r)


def infection_check(J, infected: Configuration, H: HypergraphModel, r: int) -> bool:
    """Whether the uninfected j-set ``J`` gets infected from ``infected`` in one step."""
    J = _as_vertex_tuple(J)
    if J in infected:
        raise PreconditionError(f"{J} is already infected")
    if r <= 0:
        return True
    return _rule(H, infected.j, r).check(J, infected)


def brute_force_infection_oracle(J, infected: Configuration, H: HypergraphModel, r: int,
                                 cap: int = 50_000) -> bool:
    """Reference semantics: exhaustive search for r distinct (J_i, K_i) pairs.

    Edges of ``H`` are materialized; instances whose candidate pair count
    exceeds ``cap`` are refused.
    """
    J = _as_vertex_tuple(J)
    if J in infected:
        raise PreconditionError(f"{J} is already infected")
    if r <= 0:
        return True
    edges = [frozenset(e) for e in H.iter_edges()]
    Jset = frozenset(J)
    options = []
    for s in infected:
        union = Jset | frozenset(s)
        opts = [e for e in edges if union <= e]
        if opts:
            options.append(opts)
    if sum(len(o) for o in options) * max(1, len(options)) > cap:
        raise OracleSizeError("instance too large for the brute-force oracle")
    if len(options) < r:
        return False

    def extend(start: int, need: int, used: frozenset) -> bool:
        if need == 0:
            return True
        for i in range(start, len(options) - need + 1):
            for e in options[i]:
                if e not in used and extend(i + 1, need - 1, used | {e}):
                    return True
        return False

    return extend(0, r, frozenset())


class _Rule:
    """Precomputed infection test for one (hypergraph, j, r).

    Complete hypergraphs use a counting shortcut: an infected ``J'`` with
    ``|J | J'| < k`` (slack) can always be paired with a fresh edge, while
    ``|J | J'| = k`` (forced) pins the edge to the union, so the matching
    size is ``#slack + #distinct forced unions``, capped at r.  The slack
    part needs at least ``r + 1`` edges through every slack union, which holds
    when ``|V| >= k + r``; otherwise the explicit matching is used.
    """

    def __init__(self, H: HypergraphModel, j: int, r: int, dense: bool | None = None):
        self.H = H
        self.j = j
        self.r = r
        self.k = H.k
        N = len(H.universe)
        self.counting = H.is_complete and (self.k == j + 1 or N >= self.k + r)
        cells = comb(H.n, j)
        self.dense = cells <= max_cells() if dense is None else dense
        self._tables = None
        if self.dense:
            self.universe_ranks = sorted(rank_jset(s, H.n) for s in itertools.combinations(H.universe, j))
        else:
            self.universe_ranks = None

    # -- tables for the counting shortcut ----------------------------------

    def _build_tables(self):
        H, j, k = self.H, self.j, self.k
        n = H.n
        tables = {}
        others = H.universe
        for J in itertools.combinations(others, j):
            slack = 0
            forced = []
            outside = [v for v in others if v not in J]
            for d in range(1, min(k - j, j) + 1):
                for drop in itertools.combinations(J, d):
                    keep = [v for v in J if v not in drop]
                    for add in itertools.combinations(outside, d):
                        bit = 1 << rank_jset(tuple(sorted(keep + list(add))), n)
                        if d < k - j:
                            slack |= bit
                        else:
                            forced.append((add, bit))
            groups = {}
            for add, bit in forced:
                groups[add] = groups.get(add, 0) | bit
            tables[rank_jset(J, n)] = (slack, tuple(groups[a] for a in sorted(groups)))
        self._tables = tables

    def _count_tables(self, rank: int, mask: int) -> int:
        slack, groups = self._tables[rank]
        r = self.r
        count = bin(mask & slack).count("1") if slack else 0
        if count >= r:
            return count
        remaining = len(groups)
        for g in groups:
            if mask & g:
                count += 1
                if count >= r:
                    return count
            remaining -= 1
            if count + remaining < r:
                return count
        return count

    def _count_direct(self, J: tuple, infected_sets) -> int:
        """Counting shortcut without tables."""
        jm = vertex_mask(J)
        slack = 0
        forced = set()
        k = self.k
        for s in infected_sets:
            if s == J:
                continue
            um = jm | vertex_mask(s)
            size = bin(um).count("1")
            if size < k:
                slack += 1
            elif size == k:
                forced.add(um)
        return slack + len(forced)

    # -- public -------------------------------------------------------------

    def check(self, J: tuple, infected: Configuration) -> bool:
        r = self.r
        if r <= 0:
            return True
        if self.counting:
            if self.dense:
                if self._tables is None:
                    self._build_tables()
                return self._count_tables(rank_jset(J, self.H.n), infected.mask) >= r
            return self._count_direct(J, list(infected)) >= r
        return _matching_count(J, list(infected), self.H, r) >= r

    def candidates(self, infected: Configuration):
        """Uninfected j-sets that could possibly be infected next step (ranks)."""
        ranks = infected.ranks
        if self.dense:
            return [q for q in self.universe_ranks if q not in ranks]
        # neighborhood: J must satisfy |J | J'| <= k for some infected J'
        n, j, k = self.H.n, self.j, self.k
        universe = self.H.universe
        out = set()
        for s in infected:
            outside = [v for v in universe if v not in s]
            for d in range(1, min(k - j, j) + 1):
                for drop in itertools.combinations(s, d):
                    keep = [v for v in s if v not in drop]
                    for add in itertools.combinations(outside, d):
                        q = rank_jset(tuple(sorted(keep + list(add))), n)
                        if q not in ranks:
                            out.add(q)
        return sorted(out)

    def frontier(self, infected: Configuration) -> list[int]:
        r = self.r
        n, j = self.H.n, self.j
        cands = self.candidates(infected)
        if r <= 0:
            return cands
        if self.counting and self.dense:
            if self._tables is None:
                self._build_tables()
            mask = infected.mask
            return [q for q in cands if self._count_tables(q, mask) >= r]
        sets = list(infected)
        if self.counting:
            return [q for q in cands if self._count_direct(unrank_jset(q, n, j), sets) >= r]
        H = self.H
        return [q for q in cands if _matching_count(unrank_jset(q, n, j), sets, H, r) >= r]


@lru_cache(maxsize=128)
def _rule(H: HypergraphModel, j: int, r: int) -> _Rule:
    return _Rule(H, j, r)


# --------------------------------------------------------------------------
# Dynamics


def step(state: ProcessState) -> ProcessState:
    """Advance one synchronous step."""
    H, j = state.hypergraph, state.j
    new = _rule(H, j, state.r).frontier(state.infected)
    frontier = Configuration(H.n, j, new, H.universe)
    infected = Configuration(H.n, j, state.infected.ranks | frontier.ranks, H.universe)
    return ProcessState(H, j, state.r, infected, state.t + 1, frontier)


def run(state: ProcessState, max_steps: int | None = None) -> RunResult:
    """Iterate :func:`step` until a step infects nothing.

    ``tau`` is the index of that empty step.  If ``max_steps`` steps all
    infect something, the result is marked ``truncated`` and ``tau`` is None.
    """
    trace = []
    total = state.total
    while True:
        if max_steps is not None and len(trace) >= max_steps:
            return RunResult(state.infected, None, len(state.infected) == total, tuple(trace), True)
        state = step(state)
        trace.append(state.frontier)
        if len(state.frontier) == 0:
            return RunResult(state.infected, state.t, len(state.infected) == total, tuple(trace))


def is_contagious(A0: Configuration, H: HypergraphModel, r: int) -> bool:
    return run(initial_state(A0, H, r)).percolated


# --------------------------------------------------------------------------
# Stars of sets, jokers, restriction, reduction


def star_of(S, n: int, j: int, universe=None) -> Configuration:
    """All j-sets (within the universe) that contain ``S``."""
    S = _as_vertex_tuple(S)
    if len(S) >= j:
        raise DomainError(f"need |S| < j, got |S|={len(S)}, j={j}")
    if j > n:
        raise DomainError(f"need j <= n, got j={j}, n={n}")
    verts = tuple(range(1, n + 1)) if universe is None else _as_vertex_tuple(universe)
    if not set(S).issubset(verts):
        raise DomainError(f"{S} leaves the vertex universe")
    rest = [v for v in verts if v not in S]
    sets = (S + extra for extra in itertools.combinations(rest, j - len(S)))
    return Configuration.from_sets(sets, n, j, None if universe is None else verts)


def is_joker(S, C: Configuration) -> bool:
    """Whether every j-set containing ``S`` is a member of ``C``."""
    star = star_of(S, C.n, C.j, C.universe)
    return star.ranks <= C.ranks


def restrict(obj, R):
    """Remove the vertex set ``R``: keep only members disjoint from it.

    Works on a :class:`Configuration` or a :class:`HypergraphModel`; vertex
    ids are not re-indexed, the universe shrinks instead.
    """
    R = set(R)
    if isinstance(obj, Configuration):
        universe = tuple(v for v in obj.universe if v not in R)
        keep = [rank_jset(s, obj.n) for s in obj if R.isdisjoint(s)]
        return Configuration(obj.n, obj.j, keep, universe)
    if isinstance(obj, HypergraphModel):
        universe = tuple(v for v in obj.universe if v not in R)
        if obj.edges is None:
            return HypergraphModel(obj.n, obj.k, universe=universe)
        edges = [e for e in obj.edges if R.isdisjoint(e)]
        return HypergraphModel(obj.n, obj.k, edges=edges, universe=universe)
    raise TypeError(f"cannot restrict {type(obj).__name__}")


def reduced_process(A0: Configuration, S, H: HypergraphModel, r: int) -> ProcessState:
    """The (r - |S|, A0 - S)-process on ``H - S`` for a set ``S`` of joker vertices."""
    S = _as_vertex_tuple(S)
    if len(S) > r:
        raise PreconditionError(f"|S|={len(S)} exceeds r={r}")
    base = A0 if A0.universe == H.universe else Configuration(A0.n, A0.j, A0.ranks, H.universe)
    for v in S:
        if not is_joker((v,), base):
            raise PreconditionError(f"vertex {v} is not a joker for A0")
    return ProcessState(restrict(H, S), A0.j, r - len(S), restrict(base, S))
