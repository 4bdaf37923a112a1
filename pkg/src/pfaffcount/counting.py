"""Counts of invariant twisted forms and tangent vector fields, with kernel oracles.

The closed forms are evaluated through Bott's formulas; the oracles compute the
same numbers as exact kernel dimensions of contraction maps on explicit
monomial bases, so the two routes share nothing but the polynomial algebra.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, List, Optional, Sequence

from pfaffcount import exactla
from pfaffcount.bott import binom, h_omega, h_tangent
from pfaffcount.polyforms import (
    PolyForm,
    PolyVectorField,
    combine,
    field_keys,
    form_keys,
    interior,
    is_projective_form,
    linear_map_matrix,
    radial_field,
    twisted_form_basis,
)


class PreconditionViolated(ValueError):
    """The closed formula is not asserted for these parameters."""


@dataclass(frozen=True)
class PfaffCountQuery:
    n: int
    d: int
    m: int
    r: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"n={self.n} must be >= 3")
        if self.d < 1:
            raise ValueError(f"d={self.d} must be >= 1")
        if not 1 <= self.r <= self.n - 2:
            raise ValueError(f"r={self.r} outside 1..{self.n - 2}")

    def twist(self, l: int) -> int:
        return -l * (self.d - 1) + self.m + self.r * self.d + 1


def pfaff_count(q: PfaffCountQuery) -> int:
    """Number of independent degree-m twisted r-forms invariant by a degree-d field.

    Alternating sum of h^0(Omega^(r+i)(t_(r+i))) over i = 1..n-r; terms with
    i*d >= m+1 drop out through the Bott branch guard.
    """
    total = sum((-1) ** (i + 1) * h_omega(q.n, 0, q.r + i, q.twist(q.r + i))
                for i in range(1, q.n - q.r + 1))
    if total < 0:
        raise ArithmeticError(f"negative count {total} for {q}")
    return total


def _piecewise_term(q: PfaffCountQuery, i: int) -> int:
    n, d, m, r = q.n, q.d, q.m, q.r
    return (-1) ** (i + 1) * binom(m + n + 1 - i * d, m + r + i + 1 - i * d) * binom(m + r + i - i * d, r + i)


def pfaff_count_piecewise(q: PfaffCountQuery) -> int:
    n, d, m, r = q.n, q.d, q.m, q.r
    if m + 1 <= d:
        return 0
    for j in range(1, n - r - 1):
        if j * d < m + 1 <= (j + 1) * d:
            return sum(_piecewise_term(q, i) for i in range(1, j + 1))
    if (n - r - 1) * d < m + 1:
        return sum(_piecewise_term(q, i) for i in range(1, n - r + 1))
    raise AssertionError(f"no case of the piecewise formula covers {q}")


@dataclass(frozen=True)
class VfCountQuery:
    n: int
    m: int
    d: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"n={self.n} must be >= 3")
        if self.m < 0:
            raise ValueError(f"m={self.m} must be >= 0")

    @property
    def in_window(self) -> bool:
        return self.m + 1 <= self.d < 2 * (self.m + 1)

    @property
    def even_excluded(self) -> bool:
        return self.n % 2 == 0 and 2 * self.d == self.n * self.m

    @property
    def odd_excluded(self) -> bool:
        return self.n % 2 == 1 and 2 * self.d in ((self.n - 1) * self.m - 2, (self.n + 1) * self.m + 2)

    @property
    def below_window_vanishes(self) -> bool:
        """d < m+1 and the vanishing statement applies."""
        if self.d >= self.m + 1:
            return False
        return self.n % 2 == 0 or 2 * self.d != (self.n - 1) * self.m - 2


def vf_count(q: VfCountQuery) -> int:
    """Independent degree-d fields tangent to a codimension-one distribution of degree m."""
    if q.below_window_vanishes:
        return 0
    if q.d < q.m + 1:
        raise PreconditionViolated(f"d={q.d} = ((n-1)/2)m - 1 for n={q.n}, m={q.m}")
    if not q.in_window:
        raise PreconditionViolated(f"d={q.d} outside m+1 <= d < 2(m+1)")
    if q.even_excluded or q.odd_excluded:
        raise PreconditionViolated(f"d={q.d} is an excluded value for n={q.n}, m={q.m}")
    e = q.d - q.m + q.n
    return binom(e, e - 2) * binom(e - 3, q.n - 2)


def vf_count_bott(q: VfCountQuery) -> int:
    """h^0(wedge^2 T(t_2)) with t_2 = d - m - 3, the group the count is identified with."""
    return h_tangent(q.n, 0, 2, q.d - q.m - 3)


def vf_count_p3(m: int, d: int) -> int:
    return (d - m + 3) * (d - m + 2) * (d - m) // 2


def example_field(n: int, d: int, coefficients: Sequence) -> PolyVectorField:
    """a_(2k) z_(2k+1)^d d/dz_(2k) + a_(2k+1) z_(2k)^d d/dz_(2k+1), summed over pairs."""
    if n % 2 == 0:
        raise ValueError("example_field needs n odd so coordinates pair up")
    if d < 1:
        raise ValueError("d must be >= 1")
    if len(coefficients) != n + 1 or any(Fraction(a) == 0 for a in coefficients):
        raise ValueError(f"need {n + 1} nonzero coefficients")
    terms = []
    for i in range(n + 1):
        partner = i + 1 if i % 2 == 0 else i - 1
        e = tuple(d if j == partner else 0 for j in range(n + 1))
        terms.append((i, e, coefficients[i]))
    return PolyVectorField.from_terms(n, terms)


def invariant_forms(X: PolyVectorField, m: int, r: int) -> List[PolyForm]:
    """Basis of the degree-m twisted r-forms w with i_X w = 0."""
    d = X.homogeneous_degree()
    if d is None:
        raise ValueError("vector field must be nonzero and homogeneous")
    n = X.n
    if not 1 <= r <= n - 2:
        raise ValueError(f"r={r} outside 1..{n - 2}")
    basis = twisted_form_basis(n, r, m)
    if not basis:
        return []
    M, _ = linear_map_matrix([interior(X, w) for w in basis])
    out = []
    for v in exactla.kernel_basis(M):
        w = PolyForm(n, r, {})
        for c, b in zip(v, basis):
            if c:
                w = w + b * c
        out.append(w)
    return out


def oracle_pfaff_count(X: PolyVectorField, m: int, r: int) -> int:
    """Kernel dimension of w -> i_X w on twisted r-forms of degree m.

    Each kernel element is re-checked for i_X w = 0 and projectivity.
    """
    forms = invariant_forms(X, m, r)
    for w in forms:
        if not interior(X, w).is_zero():
            raise AssertionError("kernel element not annihilated by X")
        if not is_projective_form(w, m):
            raise AssertionError("kernel element is not a twisted form of degree m")
    return len(forms)


def radial_multiples_dim(n: int, d: int) -> int:
    """dim of {P * theta : deg P = d - 1}."""
    return comb(d - 1 + n, n) if d >= 1 else 0


def tangent_field_matrix(w: PolyForm, d: int):
    """Matrix of X -> sum_i A_i X_i on degree-d fields, where w = sum_i A_i dz_i."""
    n = w.n
    keys = field_keys(n, d)
    images = []
    for i, e in keys:
        X = PolyVectorField.from_terms(n, [(i, e, 1)])
        images.append(interior(X, w))
    M, _ = linear_map_matrix(images)
    return M, keys


def oracle_vf_count(w: PolyForm, d: int) -> int:
    """Number of degree-d fields on P^n tangent to the distribution defined by w."""
    if w.r != 1:
        raise ValueError("w must be a 1-form")
    m = w.homogeneous_degree()
    if m is None or not is_projective_form(w, m - 1):
        raise ValueError("w is not a projective 1-form")
    if d < 0:
        raise ValueError("d must be >= 0")
    M, _ = tangent_field_matrix(w, d)
    kernel = M.cols - exactla.rank(M, prefilter=True)
    return kernel - radial_multiples_dim(w.n, d)


@dataclass
class SampledAgreement:
    expected: int
    observed: List[int]

    @property
    def matched(self) -> bool:
        return bool(self.observed) and self.observed[-1] == self.expected

    @property
    def resamples(self) -> int:
        return max(len(self.observed) - 1, 0)


def agree_with_resampling(expected: int, sample: Callable[[random.Random], object],
                          oracle: Callable[[object], int], rng: random.Random,
                          max_resamples: int = 5) -> SampledAgreement:
    """Run the oracle on fresh random inputs until it matches, at most 1 + max_resamples times.

    A mismatch on a random input usually means the isolated-singularity
    hypothesis failed for that sample.
    """
    result = SampledAgreement(expected, [])
    for _ in range(max_resamples + 1):
        value = oracle(sample(rng))
        result.observed.append(value)
        if value == expected:
            break
    return result


def pfaff_matrix_columns(n: int, r: int, m: int) -> int:
    """Column count of the largest matrix built by oracle_pfaff_count."""
    return len(form_keys(n, r, m + 1))


def vf_matrix_columns(n: int, d: int) -> int:
    return len(field_keys(n, d))
