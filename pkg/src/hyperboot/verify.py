"""Seeded property suites checking the process against its structural facts.

Every suite takes a :class:`random.Random` and an instance count and returns
a :class:`SuiteReport`; a violation records a small reproducing instance.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from math import comb

from .constructions import StarSpec, augment, make_star, make_z_config, z_vertex_budget
from .core import (
    Configuration,
    HypergraphModel,
    ProcessState,
    brute_force_infection_oracle,
    ext_set,
    infection_check,
    initial_state,
    is_joker,
    reduced_process,
    restrict,
    run,
    star_of,
    step,
)
from .search import disjoint_witness

__all__ = ["SUITES", "SuiteReport", "oracle_run", "random_configuration", "random_instance", "run_suite"]


@dataclass
class SuiteReport:
    name: str
    seed: int
    checked: int = 0
    violations: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "seed": self.seed,
            "checked": self.checked,
            "violations": self.violations,
            "notes": self.notes,
            "ok": self.ok,
        }


def random_configuration(rng: random.Random, n: int, j: int, density: float, universe=None) -> Configuration:
    verts = list(range(1, n + 1)) if universe is None else list(universe)
    sets = [s for s in itertools.combinations(verts, j) if rng.random() < density]
    return Configuration.from_sets(sets, n, j, universe)


def random_instance(rng: random.Random, max_n: int = 7, max_k: int = 5, max_r: int = 3):
    """Random ``(H, j, r, A0)`` with n <= max_n and 1 <= j <= k-1 <= max_k-1."""
    k = rng.randint(2, max_k)
    n = rng.randint(k, max(k, max_n))
    j = rng.randint(1, k - 1)
    r = rng.randint(1, max_r)
    if rng.random() < 0.5:
        H = HypergraphModel.complete(n, k)
    else:
        edges = [e for e in itertools.combinations(range(1, n + 1), k) if rng.random() < rng.uniform(0.3, 0.9)]
        H = HypergraphModel.explicit(n, k, edges)
    A0 = random_configuration(rng, n, j, rng.uniform(0.05, 0.4))
    return H, j, r, A0


def oracle_run(state: ProcessState, max_steps: int | None = None) -> list[Configuration]:
    """Trace of frontiers computed with the brute-force oracle over a full scan."""
    H, j, r = state.hypergraph, state.j, state.r
    infected = state.infected
    trace = []
    while max_steps is None or len(trace) < max_steps:
        new = [J for J in itertools.combinations(H.universe, j)
               if J not in infected and brute_force_infection_oracle(J, infected, H, r)]
        frontier = Configuration.from_sets(new, H.n, j, H.universe)
        trace.append(frontier)
        if not new:
            break
        infected = infected.union(frontier)
    return trace


def _lockstep(a: ProcessState, b: ProcessState, limit: int = 200):
    """Yield paired infected sets of two processes until both are stuck."""
    yield a.infected, b.infected
    for _ in range(limit):
        na, nb = step(a), step(b)
        if len(na.frontier) == 0 and len(nb.frontier) == 0:
            return
        a, b = na, nb
        yield a.infected, b.infected


def _sets(config: Configuration) -> list[list[int]]:
    return config.to_lists()


# --------------------------------------------------------------------------
# suites


def suite_oracle_equivalence(rng, count, report):
    for _ in range(count):
        H, j, r, A0 = random_instance(rng)
        bad = [J for J in itertools.combinations(H.universe, j) if J not in A0
               and infection_check(J, A0, H, r) != brute_force_infection_oracle(J, A0, H, r)]
        state = initial_state(A0, H, r)
        fast = list(run(state).trace)
        slow = oracle_run(state)
        report.checked += 1
        if bad or fast != slow:
            report.violations.append({"n": H.n, "k": H.k, "j": j, "r": r, "A0": _sets(A0),
                                      "edges": None if H.is_complete else [list(e) for e in sorted(H.edges)],
                                      "mismatched": [list(J) for J in bad], "trace_mismatch": fast != slow})


def suite_tight_equivalence(rng, count, report):
    for _ in range(count):
        j = rng.randint(1, 4)
        k = j + 1
        n = rng.randint(k, 7)
        r = rng.randint(1, 4)
        H = HypergraphModel.complete(n, k)
        A = random_configuration(rng, n, j, rng.uniform(0.05, 0.5))
        for J in itertools.combinations(H.universe, j):
            if J in A:
                continue
            report.checked += 1
            if infection_check(J, A, H, r) != (len(ext_set(J, A, H)) >= r):
                report.violations.append({"n": n, "k": k, "j": j, "r": r, "A": _sets(A), "J": list(J)})


def suite_joker_completion(rng, count, report):
    for _ in range(count):
        j = rng.randint(2, 4)
        k = j + 1
        r = rng.randint(1, 3)
        n = rng.randint(max(k + r - 1, 2 * r + 1, j + 1), 8)
        jokers = rng.sample(range(1, n + 1), r)
        A = random_configuration(rng, n, j, rng.uniform(0.0, 0.2))
        for v in jokers:
            A = A.union(star_of((v,), n, j))
        state = step(initial_state(A, HypergraphModel.complete(n, k), r))
        report.checked += 1
        if len(state.infected) != comb(n, j):
            report.violations.append({"n": n, "k": k, "j": j, "r": r, "A": _sets(A), "jokers": sorted(jokers)})


def suite_reduction(rng, count, report):
    for _ in range(count):
        k = rng.randint(3, 5)
        j = rng.randint(2, k - 1) if k > 3 else 2
        r = rng.randint(1, 3)
        n = rng.randint(max(k + 1, j + 2), 8 if j < 3 else 7)
        s = rng.randint(0, r)
        S = sorted(rng.sample(range(1, n + 1), s))
        H = HypergraphModel.complete(n, k)
        B0 = random_configuration(rng, n, j, rng.uniform(0.0, 0.25))
        for v in S:
            B0 = B0.union(star_of((v,), n, j))
        reduced = reduced_process(B0, S, H, r)
        original = initial_state(B0, H, r)
        for B, C in _lockstep(original, reduced):
            report.checked += 1
            Bm = restrict(B, S)
            ok = C.ranks <= Bm.ranks and (j != k - 1 or C.ranks == Bm.ranks)
            if not ok:
                report.violations.append({"n": n, "k": k, "j": j, "r": r, "S": S, "B0": _sets(B0)})
                break


def suite_augmentation(rng, count, report):
    for _ in range(count):
        k = rng.randint(3, 5)
        j = rng.randint(2, k - 1)
        r = rng.randint(1, 3)
        n = rng.randint(k + 1, 7)
        v = rng.randint(1, n)
        small = restrict(HypergraphModel.complete(n, k - 1), [v])
        C0 = random_configuration(rng, n, j - 1, rng.uniform(0.05, 0.4), small.universe)
        base = augment(Configuration(n, j - 1, C0.ranks), v)
        C0p = base.union(random_configuration(rng, n, j, rng.uniform(0.0, 0.1)))
        for C, Cp in _lockstep(initial_state(C0, small, r), initial_state(C0p, HypergraphModel.complete(n, k), r)):
            report.checked += 1
            lifted = augment(Configuration(n, j - 1, C.ranks), v)
            if not lifted.ranks <= Cp.ranks:
                report.violations.append({"n": n, "k": k, "j": j, "r": r, "v": v, "C0": _sets(C0), "C0p": _sets(C0p)})
                break


def suite_disjoint_witness(rng, count, report):
    contagious = 0
    instances = []
    for r in range(1, 7):
        Z, _ = make_z_config(r, max(2 * r + 1, z_vertex_budget(r)))
        instances.append((Z, r))
    for _ in range(count):
        r = rng.randint(1, 4)
        n = rng.randint(2 * r + 1, 9)
        instances.append((random_configuration(rng, n, 2, rng.uniform(0.05, 0.45)), r))
    for A0, r in instances:
        H = HypergraphModel.complete(A0.n, 3)
        w = disjoint_witness(A0, H, r)
        perc = run(initial_state(A0, H, r)).percolated
        contagious += perc
        report.checked += 1
        for i, c in enumerate(w.ext_counts, start=1):
            if c < r - 2 * (i - 1):
                report.violations.append({"n": A0.n, "r": r, "A0": _sets(A0), "i": i, "ext": c})
                break
    report.notes["contagious_instances"] = contagious


def suite_z_jokers(rng, count, report):
    for r in range(1, 7):
        for _ in range(max(1, count // 6)):
            n = max(2 * r + 1, z_vertex_budget(r)) + rng.randint(0, 2)
            Z, centers = make_z_config(r, n)
            A0 = Z.union(random_configuration(rng, n, 2, rng.uniform(0.0, 0.05)))
            H = HypergraphModel.complete(n, 3)
            state = initial_state(A0, H, r)
            for _ in range(r):
                state = step(state)
            report.checked += 1
            if not is_joker((centers[-1],), state.infected):
                report.violations.append({"n": n, "r": r, "A0": _sets(A0), "check": "v_r joker by step r"})
                continue
            final = run(state).final
            if not all(is_joker((c,), final) for c in centers):
                report.violations.append({"n": n, "r": r, "A0": _sets(A0), "check": "all centers jokers"})


def _star_cases():
    for k in range(3, 7):
        for j in range(1, k - 1):
            for m in range(max(0, 2 * j - k), j):
                yield k, j, m


def suite_star_closure(rng, count, report):
    cases = list(_star_cases())
    for _ in range(count):
        k, j, m = rng.choice(cases)
        r = rng.randint(1, 3)
        n = m + r * (j - m) + k - j + rng.randint(0, 2)
        n = max(n, k + r)
        spec = StarSpec(m, j, r, n)
        center, _ = spec.resolved()
        S = make_star(spec)
        H = HypergraphModel.complete(n, k)
        state = step(initial_state(S, H, r))
        report.checked += 1
        if m > 0 and not is_joker(center, state.infected):
            report.violations.append({"n": n, "k": k, "j": j, "m": m, "r": r, "check": "center joker"})
        res = run(initial_state(S, H, r))
        if not res.percolated or sum(1 for f in res.trace if len(f)) > 1 + m:
            report.violations.append({"n": n, "k": k, "j": j, "m": m, "r": r, "check": "percolation by 1+m"})


def suite_joker_transfer(rng, count, report):
    for _ in range(count):
        k = rng.randint(4, 6)
        j = rng.randint(2, k - 2)
        m = rng.randint(1, j - 1)
        h = rng.randint(0, m - 1)
        if j + m - h > k - 1:
            continue
        r = rng.randint(1, 3)
        lo = max(k + r, 2 * m - h)
        n = rng.randint(lo, max(lo, 8))
        verts = list(range(1, n + 1))
        rng.shuffle(verts)
        M1 = sorted(verts[:m])
        M2 = sorted(verts[:h] + verts[m:2 * m - h])
        A = star_of(M1, n, j).union(random_configuration(rng, n, j, 0.05))
        state = step(initial_state(A, HypergraphModel.complete(n, k), r))
        report.checked += 1
        if not is_joker(M2, state.infected):
            report.violations.append({"n": n, "k": k, "j": j, "m": m, "h": h, "r": r, "M1": M1, "M2": M2})


def suite_monotone(rng, count, report):
    for _ in range(count):
        n = rng.randint(4, 6)
        r = rng.randint(1, 2)
        H = HypergraphModel.complete(n, 3)
        A = random_configuration(rng, n, 2, rng.uniform(0.05, 0.3))
        Ap = A.union(random_configuration(rng, n, 2, 0.15))
        for X, Y in _lockstep(initial_state(A, H, r), initial_state(Ap, H, r)):
            report.checked += 1
            if not X.ranks <= Y.ranks:
                report.violations.append({"n": n, "r": r, "A": _sets(A), "Ap": _sets(Ap)})
                break


def suite_empty(rng, count, report):
    return None


SUITES = {
    "oracle-equivalence": suite_oracle_equivalence,
    "tight-equivalence": suite_tight_equivalence,
    "joker-completion": suite_joker_completion,
    "reduction": suite_reduction,
    "augmentation": suite_augmentation,
    "disjoint-witness": suite_disjoint_witness,
    "z-jokers": suite_z_jokers,
    "star-closure": suite_star_closure,
    "joker-transfer": suite_joker_transfer,
    "monotone": suite_monotone,
    "empty-input": suite_empty,
}


def run_suite(name: str, seed: int = 0, count: int = 50) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(name)
    report = SuiteReport(name, seed)
    SUITES[name](random.Random(seed), count, report)
    return report
