"""Exact values and upper bounds for the minimum contagious set size."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .encoding import DomainError

__all__ = [
    "BoundReport",
    "best_known",
    "clique_upper",
    "closed_form_upper",
    "exact_32",
    "exact_small_j",
    "falling_factorial",
    "recursive_upper",
]


class WrongCaseError(DomainError):
    """Bound requested outside the parameter range it covers."""


def _check(k: int, j: int, r: int) -> None:
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    if not 1 <= j <= k - 1:
        raise DomainError(f"need 1 <= j <= k-1, got j={j}, k={k}")


def exact_small_j(k: int, j: int, r: int) -> int:
    """Non-tight case j <= k-2: a star of r j-sets is optimal."""
    _check(k, j, r)
    if j > k - 2:
        raise WrongCaseError(f"j={j} is the tight case for k={k}")
    return r


def exact_32(r: int) -> int:
    """Minimum contagious pair configuration in the complete 3-graph."""
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    value = (r + 1) ** 2 - (1 if r % 2 == 0 else 0)
    assert value % 4 == 0
    return value // 4


@lru_cache(maxsize=None)
def recursive_upper(k: int, r: int) -> int:
    """Tight-case bound obtained by iterating the sum over thresholds 1..r."""
    if k < 3:
        raise DomainError(f"need k >= 3, got {k}")
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    if k == 3:
        return exact_32(r)
    return sum(recursive_upper(k - 1, i) for i in range(1, r + 1))


def clique_upper(j: int, r: int) -> int:
    """All j-subsets of a (j + r - 1)-set percolate in the tight case."""
    if j < 2 or r < 1:
        raise DomainError(f"need j >= 2 and r >= 1, got j={j}, r={r}")
    return comb(j + r - 1, j)


def falling_factorial(x: int, q: int) -> int:
    out = 1
    for i in range(q):
        out *= x - i
    return out


def closed_form_upper(k: int, r: int) -> Fraction:
    """The explicit polynomial form of the iterated tight-case bound.

    Evaluated exactly; callers should check ``denominator == 1`` before
    treating it as a set size.
    """
    if k < 4:
        raise DomainError(f"closed form needs k >= 4, got {k}")
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    lead = Fraction(2 * r * r + r * (5 * k - 11) - 17 * (k - 1) + 4 * k * k, 4 * factorial(k - 1))
    tail = sum(comb(r + k - 3 - 2 * i, k - 4) for i in range(1, r // 2 + 1))
    return lead * falling_factorial(r, k - 3) - Fraction(tail, 4)


@dataclass(frozen=True)
class BoundReport:
    k: int
    j: int
    r: int
    lower: int
    upper: int
    exact: int | None = None
    provenance: tuple = field(default_factory=tuple)
    discrepancies: tuple = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "j": self.j,
            "r": self.r,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "provenance": [{"bound": name, "value": value, "ref": ref} for name, value, ref in self.provenance],
            "discrepancies": list(self.discrepancies),
        }


def best_known(k: int, j: int, r: int) -> BoundReport:
    """Aggregate every applicable bound into one report."""
    _check(k, j, r)
    lower = r
    prov = [("trivial_lower", r, "at least r infected sets are needed")]
    uppers = []
    notes = []
    exact = None
    if j <= k - 2:
        exact = exact_small_j(k, j, r)
        prov.append(("exact_small_j", exact, "non-tight exact value"))
    elif j == 1:
        exact = r
        prov.append(("vertex_case", r, "j = 1: any r vertices percolate in one step"))
    elif (k, j) == (3, 2):
        exact = exact_32(r)
        lower = exact
        prov.append(("exact_32", exact, "tight k=3 exact value"))
    else:
        rec = recursive_upper(k, r)
        uppers.append(rec)
        prov.append(("recursive_upper", rec, "iterated tight-case recursion"))
        cf = closed_form_upper(k, r)
        cf_value = int(cf) if cf.denominator == 1 else str(cf)
        prov.append(("closed_form_upper", cf_value, "explicit polynomial form of the recursion"))
        if cf != rec:
            notes.append(f"closed_form_upper(k={k}, r={r}) = {cf} differs from recursive_upper = {rec}")
        cl = clique_upper(j, r)
        uppers.append(cl)
        prov.append(("clique_upper", cl, "complete j-graph on j + r - 1 vertices"))
    if exact is not None:
        return BoundReport(k, j, r, exact, exact, exact, tuple(prov), tuple(notes))
    upper = min(uppers)
    if lower == upper:
        exact = upper
    return BoundReport(k, j, r, lower, upper, exact, tuple(prov), tuple(notes))
