"""Bott's formulas for the cohomology of twisted forms and polyvector fields on P^n."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb


def binom(a: int, b: int) -> int:
    """C(a, b) with the convention C(a, b) = 0 for b < 0 or b > a (a >= 0)."""
    if b < 0 or a < b:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class CohomologyQuery:
    n: int
    degree: int
    rank: int
    twist: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 0 <= self.degree <= self.n:
            raise ValueError(f"cohomological degree {self.degree} outside 0..{self.n}")
        if not 0 <= self.rank <= self.n:
            raise ValueError(f"form degree {self.rank} outside 0..{self.n}")


def omega_guards(n: int, q: int, p: int, k: int) -> tuple:
    """Truth values of the three nonzero-branch predicates of the Omega^p(k) formula."""
    CohomologyQuery(n, q, p, k)
    return (q == 0 and k > p, k == 0 and p == q, q == n and k < p - n)


def omega_branch(n: int, q: int, p: int, k: int) -> int:
    """Index (0..3) of the branch that applies; 3 is the vanishing branch."""
    guards = omega_guards(n, q, p, k)
    return guards.index(True) if any(guards) else 3


def h_omega(n: int, q: int, p: int, k: int) -> int:
    """dim H^q(P^n, Omega^p(k))."""
    branch = omega_branch(n, q, p, k)
    if branch == 0:
        return binom(k + n - p, k) * binom(k - 1, p)
    if branch == 1:
        return 1
    if branch == 2:
        return binom(-k + p, -k) * binom(-k - 1, n - p)
    return 0


def tangent_guards(n: int, s: int, r: int, t: int) -> tuple:
    CohomologyQuery(n, s, r, t)
    return (s == 0 and t + r >= 0, t == -n - 1 and n - r == s, s == n and t + n + r + 2 <= 0)


def tangent_branch(n: int, s: int, r: int, t: int) -> int:
    guards = tangent_guards(n, s, r, t)
    return guards.index(True) if any(guards) else 3


def h_tangent(n: int, s: int, r: int, t: int) -> int:
    """dim H^s(P^n, wedge^r T(t)).

    The top-degree branch uses C(-t-r-1, -t-n-1); this is what the
    isomorphism wedge^r T = Omega^(n-r)(n+1) and Serre duality force.
    """
    branch = tangent_branch(n, s, r, t)
    if branch == 0:
        return binom(t + n + r + 1, t + n + 1) * binom(t + n, n - r)
    if branch == 1:
        return 1
    if branch == 2:
        return binom(-t - r - 1, -t - n - 1) * binom(-t - n - 2, r)
    return 0
