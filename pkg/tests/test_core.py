import itertools
import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from conftest import all_sets, cfg
from hyperboot import (
    Configuration,
    HypergraphModel,
    brute_force_infection_oracle,
    ext_set,
    infection_check,
    initial_state,
    is_contagious,
    is_joker,
    reduced_process,
    restrict,
    run,
    star_of,
    step,
)
from hyperboot.core import PreconditionError, UnsupportedCaseError, _Rule
from hyperboot.encoding import DomainError
from hyperboot.verify import oracle_run, random_configuration, random_instance


def ext_by_definition(J, infected, n, k):
    out = set()
    for v in range(1, n + 1):
        K = set(J) | {v}
        if len(K) == k and any(set(s) <= K and s != tuple(J) for s in infected):
            out.add(v)
    return out


# ---- extension sets ---------------------------------------------------------

def test_ext_set_examples():
    H = HypergraphModel.complete(5, 3)
    assert ext_set((2, 3), cfg([(1, 2), (1, 3)], 5), H) == {1}
    A = cfg([(1, 2), (1, 3), (4, 5)], 5)
    assert ext_by_definition((2, 3), list(A), 5, 3) == {1}
    assert ext_set((2, 3), A, H) == {1}
    assert ext_set((2, 3), Configuration.empty(5, 2), H) == set()


def test_ext_set_rejects_non_tight():
    with pytest.raises(UnsupportedCaseError):
        ext_set((1, 2), cfg([(1, 3)], 6), HypergraphModel.complete(6, 4))


def test_ext_set_explicit_edges():
    H = HypergraphModel.explicit(5, 3, [(1, 2, 3)])
    A = cfg([(1, 2), (2, 4)], 5)
    assert ext_set((2, 3), A, H) == {1}


# ---- infection check and oracle ------------------------------------------------

def test_forced_edges_collide():
    H = HypergraphModel.complete(5, 3)
    A = cfg([(1, 2), (1, 3)], 5)
    assert brute_force_infection_oracle((2, 3), A, H, 2) is False
    assert infection_check((2, 3), A, H, 2) is False


def test_slack_edges_suffice():
    H = HypergraphModel.complete(7, 4)
    A = cfg([(1, 2), (1, 3)], 7)
    assert brute_force_infection_oracle((4, 5), A, H, 2) is True
    assert infection_check((4, 5), A, H, 2) is True


def test_empty_infected_never_infects():
    H = HypergraphModel.complete(6, 3)
    for r in (1, 2, 3):
        assert not infection_check((1, 2), Configuration.empty(6, 2), H, r)
        assert not brute_force_infection_oracle((1, 2), Configuration.empty(6, 2), H, r)


def test_oracle_small_examples():
    assert brute_force_infection_oracle((1, 3), cfg([(1, 2)], 4), HypergraphModel.complete(4, 3), 1)
    A = cfg([(1, 2), (1, 3), (1, 4)], 5)
    H = HypergraphModel.complete(5, 3)
    assert brute_force_infection_oracle((1, 5), A, H, 3)
    assert infection_check((1, 5), A, H, 3)


def test_precondition_already_infected():
    A = cfg([(1, 2)], 4)
    H = HypergraphModel.complete(4, 3)
    with pytest.raises(PreconditionError):
        infection_check((1, 2), A, H, 1)
    with pytest.raises(PreconditionError):
        brute_force_infection_oracle((1, 2), A, H, 1)


def test_matching_beats_greedy_count():
    # three infected sets but they can only use two distinct edges
    H = HypergraphModel.explicit(6, 3, [(1, 2, 3), (2, 3, 4)])
    A = cfg([(1, 2), (1, 3), (2, 4)], 6)
    assert not brute_force_infection_oracle((2, 3), A, H, 3)
    assert not infection_check((2, 3), A, H, 3)
    assert infection_check((2, 3), A, H, 2)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**9))
def test_infection_check_matches_oracle(seed):
    H, j, r, A0 = random_instance(random.Random(seed))
    for J in itertools.combinations(H.universe, j):
        if J not in A0:
            assert infection_check(J, A0, H, r) == brute_force_infection_oracle(J, A0, H, r)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_tight_case_uses_extension_count(seed):
    rng = random.Random(seed)
    j = rng.randint(1, 3)
    n = rng.randint(j + 1, 7)
    r = rng.randint(1, 4)
    H = HypergraphModel.complete(n, j + 1)
    A = random_configuration(rng, n, j, rng.uniform(0.05, 0.5))
    for J in itertools.combinations(range(1, n + 1), j):
        if J not in A:
            assert infection_check(J, A, H, r) == (len(ext_set(J, A, H)) >= r)
            assert ext_set(J, A, H) == ext_by_definition(J, list(A), n, j + 1)


# ---- step and run ------------------------------------------------------------

def test_step_on_full_configuration_is_fixpoint():
    H = HypergraphModel.complete(5, 3)
    full = Configuration.full(5, 2)
    s = step(initial_state(full, H, 2))
    assert len(s.frontier) == 0 and s.infected == full and s.t == 1


def test_step_r1_single_pair():
    s = step(initial_state(cfg([(1, 2)], 4), HypergraphModel.complete(4, 3), 1))
    # frozen from oracle_run
    assert list(s.frontier) == [(1, 3), (2, 3), (1, 4), (2, 4)]


def test_step_r2_two_pairs_sharing_vertex():
    s = step(initial_state(cfg([(1, 2), (1, 3)], 5), HypergraphModel.complete(5, 3), 2))
    # pairs {1,v} get two distinct edges {1,2,v}, {1,3,v}; {2,3} only one
    assert list(s.frontier) == [(1, 4), (1, 5)]


def test_run_examples():
    full = run(initial_state(Configuration.full(5, 2), HypergraphModel.complete(5, 3), 1))
    assert full.tau == 1 and full.percolated
    one = run(initial_state(cfg([(1, 2)], 6), HypergraphModel.complete(6, 3), 1))
    assert one.percolated
    stuck = run(initial_state(cfg([(1, 2), (1, 3)], 6), HypergraphModel.complete(6, 3), 2))
    assert not stuck.percolated
    assert stuck.tau == 2
    assert list(stuck.trace[0]) == [(1, 4), (1, 5), (1, 6)]


def test_tau_and_trace_relation():
    res = run(initial_state(cfg([(1, 2)], 4), HypergraphModel.complete(4, 3), 1))
    last_nonempty = max(t for t, f in enumerate(res.trace, start=1) if len(f))
    assert res.tau == 1 + last_nonempty == len(res.trace)
    assert len(res.trace[-1]) == 0


def test_truncated_run_is_marked():
    res = run(initial_state(cfg([(1, 2)], 6), HypergraphModel.complete(6, 3), 1), max_steps=1)
    assert res.truncated and res.tau is None
    assert not res.percolated


def test_max_steps_exactly_at_fixpoint():
    res = run(initial_state(Configuration.full(4, 2), HypergraphModel.complete(4, 3), 1), max_steps=1)
    assert not res.truncated and res.tau == 1


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9))
def test_run_matches_oracle_trace_and_grows(seed):
    H, j, r, A0 = random_instance(random.Random(seed))
    state = initial_state(A0, H, r)
    res = run(state)
    assert list(res.trace) == oracle_run(state)
    prev = A0
    for f in res.trace:
        assert f.ranks.isdisjoint(prev.ranks)
        prev = prev.union(f)
    assert prev == res.final
    assert res.tau <= comb(len(H.universe), j) + 1
    assert res.percolated == (len(res.final) == comb(H.n, j))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_sparse_candidates_equal_full_scan(seed):
    H, j, r, A0 = random_instance(random.Random(seed))
    dense = _Rule(H, j, r, dense=True)
    sparse = _Rule(H, j, r, dense=False)
    assert dense.frontier(A0) == sparse.frontier(A0)


def test_initial_set_monotonicity_exhaustive():
    # every pair of nested initial sets on n=5, k=3, r <= 2
    H = HypergraphModel.complete(5, 3)
    pairs = all_sets(5, 2)
    rng = random.Random(3)
    for r in (1, 2):
        for _ in range(150):
            small = [p for p in pairs if rng.random() < 0.2]
            big = small + [p for p in pairs if p not in small and rng.random() < 0.2]
            a, b = initial_state(cfg(small or [(1, 2)], 5), H, r), initial_state(cfg(big or [(1, 2)], 5), H, r)
            if not small:
                continue
            for _ in range(6):
                assert a.infected.issubset(b.infected)
                a, b = step(a), step(b)


# ---- contagiousness ----------------------------------------------------------

def test_is_contagious_examples():
    assert is_contagious(cfg([(1, 2), (3, 4)], 6), HypergraphModel.complete(6, 3), 2)
    assert not is_contagious(Configuration.empty(6, 2), HypergraphModel.complete(6, 3), 1)
    assert is_contagious(cfg([(1, 2), (1, 3), (1, 4)], 8), HypergraphModel.complete(8, 4), 3)


# ---- stars of sets and jokers --------------------------------------------------

def test_star_of():
    assert list(star_of((1,), 4, 2)) == [(1, 2), (1, 3), (1, 4)]
    assert len(star_of((), 4, 2)) == 6
    assert len(star_of((1, 2), 5, 3)) == comb(3, 1)
    with pytest.raises(DomainError):
        star_of((1, 2), 5, 2)


def test_is_joker():
    C = star_of((1,), 6, 2)
    assert is_joker((1,), C)
    missing = Configuration(6, 2, set(C.ranks) - {min(C.ranks)})
    assert not is_joker((1,), missing)
    with pytest.raises(DomainError):
        is_joker((1, 2), C)


# ---- restriction ---------------------------------------------------------------

def test_restrict_configuration():
    C = cfg([(1, 2), (2, 3), (4, 5)], 6)
    out = restrict(C, {2})
    assert list(out) == [(4, 5)]
    assert 2 not in out.universe and out.n == 6
    assert restrict(C, set()) == C


def test_restrict_hypergraph():
    H = restrict(HypergraphModel.complete(6, 3), {6})
    assert H.is_complete and H.universe == (1, 2, 3, 4, 5)
    assert sorted(H.iter_edges()) == list(itertools.combinations(range(1, 6), 3))
    E = restrict(HypergraphModel.explicit(5, 3, [(1, 2, 3), (3, 4, 5)]), {1})
    assert E.edges == frozenset({(3, 4, 5)})


def test_restricted_process_percolation_counts_universe():
    H = restrict(HypergraphModel.complete(6, 3), {6})
    A = Configuration.from_sets([(1, 2)], 6, 2, H.universe)
    res = run(initial_state(A, H, 1))
    assert res.percolated and len(res.final) == comb(5, 2)


# ---- reduction ------------------------------------------------------------------

def _paired(a, b, limit=50):
    yield a.infected, b.infected
    for _ in range(limit):
        na, nb = step(a), step(b)
        if not len(na.frontier) and not len(nb.frontier):
            return
        a, b = na, nb
        yield a.infected, b.infected


def test_reduction_empty_joker_set_is_identity():
    H = HypergraphModel.complete(6, 3)
    A = cfg([(1, 2), (3, 4)], 6)
    red = reduced_process(A, (), H, 2)
    assert red.r == 2 and red.infected == A and red.hypergraph.universe == H.universe


def test_reduction_tight_equality():
    H = HypergraphModel.complete(7, 3)
    A0 = star_of((1,), 7, 2).insert((2, 3))
    red = reduced_process(A0, (1,), H, 2)
    assert red.r == 1 and list(red.infected) == [(2, 3)]
    assert red.hypergraph.universe == (2, 3, 4, 5, 6, 7)
    for B, C in _paired(initial_state(A0, H, 2), red):
        assert C == restrict(B, {1})


def test_reduction_non_tight_containment():
    H = HypergraphModel.complete(7, 4)
    A0 = star_of((1,), 7, 2).union(cfg([(2, 3)], 7))
    red = reduced_process(A0, (1,), H, 2)
    for B, C in _paired(initial_state(A0, H, 2), red):
        assert C.issubset(restrict(B, {1}))


def test_reduction_requires_jokers():
    H = HypergraphModel.complete(6, 3)
    with pytest.raises(PreconditionError):
        reduced_process(cfg([(1, 2)], 6), (1,), H, 2)
    with pytest.raises(PreconditionError):
        reduced_process(star_of((1,), 6, 2), (1,), H, 0)


def test_threshold_zero_infects_everything():
    H = restrict(HypergraphModel.complete(6, 3), {1})
    A = Configuration.empty(6, 2, H.universe)
    s = step(initial_state(A, H, 0))
    assert len(s.infected) == comb(5, 2)


# ---- model validation -------------------------------------------------------------

def test_hypergraph_validation():
    with pytest.raises(DomainError):
        HypergraphModel.complete(3, 1)
    with pytest.raises(DomainError):
        HypergraphModel.complete(2, 3)
    with pytest.raises(DomainError):
        HypergraphModel.explicit(5, 3, [(1, 2)])
    with pytest.raises(DomainError):
        HypergraphModel.explicit(5, 3, [(1, 2, 6)])
    H = HypergraphModel.explicit(5, 3, [(3, 2, 1), (1, 2, 3)])
    assert H.edges == frozenset({(1, 2, 3)})


def test_configuration_membership_and_insert():
    C = cfg([(2, 1), (1, 2), (3, 4)], 5)
    assert len(C) == 2 and C.size() == 2
    assert (2, 1) in C and (1, 5) not in C and (9, 10) not in C
    D = C.insert((1, 5))
    assert len(D) == 3 and len(C) == 2
    assert list(D) == sorted(D, key=lambda s: s[::-1])


def test_process_state_validation():
    H = HypergraphModel.complete(5, 3)
    with pytest.raises(DomainError):
        initial_state(cfg([(1, 2, 3)], 5), H, 1)
