from math import comb

import pytest
from hypothesis import given, strategies as st

from pfaffcount.bott import (
    CohomologyQuery,
    binom,
    h_omega,
    h_tangent,
    omega_guards,
    tangent_guards,
)

GRID = [(n, q, p, k) for n in range(1, 7) for q in range(n + 1) for p in range(n + 1) for k in range(-12, 13)]


def test_binom_convention():
    assert binom(5, 2) == 10
    assert binom(3, -1) == 0
    assert binom(2, 3) == 0
    assert binom(-1, 0) == 0
    assert binom(-1, 2) == 0


@pytest.mark.parametrize("n", range(1, 7))
def test_serre_duality(n):
    for q in range(n + 1):
        for p in range(n + 1):
            for k in range(-12, 13):
                assert h_omega(n, q, p, k) == h_omega(n, n - q, n - p, -k)


def test_omega_guards_disjoint():
    for args in GRID:
        assert sum(omega_guards(*args)) <= 1, args


def test_tangent_guards_disjoint():
    for args in GRID:
        assert sum(tangent_guards(*args)) <= 1, args


def test_tangent_is_twisted_omega():
    # wedge^r T = Omega^(n-r)(n+1)
    for n, s, r, t in GRID:
        assert h_tangent(n, s, r, t) == h_omega(n, s, n - r, t + n + 1), (n, s, r, t)


def test_line_bundles():
    for n in range(1, 6):
        for k in range(-10, 11):
            assert h_omega(n, 0, 0, k) == (comb(n + k, n) if k >= 0 else 0)
            assert h_omega(n, n, 0, k) == (comb(-k - 1, n) if k <= -n - 1 else 0)


def test_euler_characteristic_of_omega_p():
    # H^q(Omega^p) = Q when p = q, zero otherwise
    for n in range(1, 6):
        for p in range(n + 1):
            for q in range(n + 1):
                assert h_omega(n, q, p, 0) == (1 if p == q else 0)


def test_known_values():
    assert h_omega(3, 0, 1, 4) == 45
    assert h_omega(4, 0, 3, 8) == 315
    assert h_tangent(3, 0, 2, 1) == 84 == h_omega(3, 0, 1, 5)
    assert h_tangent(3, 0, 1, 0) == 15  # sl(4)
    assert h_tangent(3, 0, 1, -1) == 4


@given(st.integers(3, 6), st.integers(1, 4))
def test_sharpness_dimension(n, r):
    # h^0(Omega^(r+1)(r+2)) counts constant (r+2)-vectors
    if r + 1 <= n:
        assert h_omega(n, 0, r + 1, r + 2) == comb(n + 1, r + 2)


def test_query_validation():
    with pytest.raises(ValueError):
        CohomologyQuery(0, 0, 0, 0)
    with pytest.raises(ValueError):
        h_omega(3, 4, 0, 0)
    with pytest.raises(ValueError):
        h_tangent(3, 0, 5, 0)
