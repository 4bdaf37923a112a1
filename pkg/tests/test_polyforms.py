import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pfaffcount.bott import h_omega
from pfaffcount.polyforms import (
    PolyForm,
    PolyVectorField,
    dump_json,
    exterior_derivative as d,
    form_keys,
    interior,
    is_projective_form,
    load_json,
    monomials,
    radial_field,
    random_field,
    random_projective_form,
    scaled_to_integers,
    twisted_form_basis,
    wedge,
)

from strategies import fields, forms, point

N = 2


@given(forms(n=N), forms(n=N))
def test_graded_commutativity(a, b):
    assert wedge(a, b) == wedge(b, a) * (-1) ** (a.r * b.r)


@given(forms(n=N), forms(n=N), forms(n=N))
def test_wedge_associative(a, b, c):
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


@given(forms(n=N, r=1), forms(n=N, r=1))
def test_wedge_bilinear(a, b):
    c = PolyForm.dz(N, 2)
    assert wedge(a + b, c) == wedge(a, c) + wedge(b, c)


@given(forms(n=N, r=1))
def test_one_form_squares_to_zero(a):
    assert wedge(a, a).is_zero()


@given(forms(n=3))
def test_d_squared_zero(w):
    assert d(d(w)).is_zero()


@given(forms(n=N), forms(n=N))
def test_d_leibniz(a, b):
    assert d(wedge(a, b)) == wedge(d(a), b) + wedge(a, d(b)) * (-1) ** a.r


@given(st.data())
def test_interior_squared_zero(data):
    w = data.draw(forms(n=N, r=data.draw(st.integers(2, 3))))
    X = data.draw(fields(N))
    assert interior(X, interior(X, w)).is_zero()


@given(st.data())
def test_interior_antiderivation(data):
    a = data.draw(forms(n=N, r=data.draw(st.integers(1, 2))))
    b = data.draw(forms(n=N, r=data.draw(st.integers(1, 2))))
    X = data.draw(fields(N))
    lhs = interior(X, wedge(a, b))
    rhs = wedge(interior(X, a), b) + wedge(a, interior(X, b)) * (-1) ** a.r
    assert lhs == rhs


@given(forms(n=N, r=1, degree=2))
def test_euler_relation_on_functions(w):
    # i_theta dF = deg(F) F for homogeneous F
    F = PolyForm(N, 0, {((), e): c for (_, e), c in w.terms.items()})
    assert interior(radial_field(N), d(F)) == F * 2


@given(forms(n=N), point(N))
def test_evaluate_is_linear(w, p):
    doubled = (w + w).evaluate(p)
    single = w.evaluate(p)
    assert doubled == {I: 2 * v for I, v in single.items()}


@given(forms(n=3))
def test_json_roundtrip(w):
    assert load_json(dump_json(w)) == w
    assert PolyForm.from_json(json.loads(json.dumps(w.to_json()))) == w


@given(fields(3))
def test_field_json_roundtrip(X):
    back = load_json(dump_json(X))
    assert isinstance(back, PolyVectorField)
    assert back == X


def test_json_is_deterministic_and_uses_strings():
    w = PolyForm(2, 1, {((1,), (1, 0, 0)): Fraction(1, 3), ((0,), (0, 1, 0)): Fraction(-2)})
    data = w.to_json()
    assert data["n"] == 2 and data["r"] == 1
    assert all(isinstance(t["num"], str) and isinstance(t["den"], str) for t in data["terms"])
    assert dump_json(w) == dump_json(PolyForm(2, 1, dict(reversed(list(w.terms.items())))))


def test_big_coefficients_survive_json():
    big = Fraction(3 ** 90, 7 ** 40)
    w = PolyForm(1, 1, {((0,), (0, 1)): big})
    assert load_json(dump_json(w)).terms[((0,), (0, 1))] == big


def test_constructors_and_basic_products():
    n = 3
    assert wedge(PolyForm.dz(n, 0), PolyForm.dz(n, 1)) == PolyForm.dz(n, 0, 1)
    assert wedge(PolyForm.dz(n, 1), PolyForm.dz(n, 0)) == -PolyForm.dz(n, 0, 1)
    assert wedge(PolyForm.dz(n, 2), PolyForm.dz(n, 2)).is_zero()
    assert PolyForm.volume(n) == PolyForm.dz(n, 0, 1, 2, 3)
    assert d(PolyForm.coordinate(n, 2)) == PolyForm.dz(n, 2)


def test_interior_signs():
    n = 2
    dV = PolyForm.volume(n)
    # i_{d/dz1} dz0^dz1^dz2 = -dz0^dz2
    assert interior(PolyVectorField.partial(n, 1), dV) == -PolyForm.dz(n, 0, 2)
    assert interior(PolyVectorField.partial(n, 0), dV) == PolyForm.dz(n, 1, 2)


def test_invalid_inputs_rejected():
    with pytest.raises(ValueError):
        PolyForm(2, 2, {((1, 0), (0, 0, 0)): 1})
    with pytest.raises(ValueError):
        PolyForm(2, 1, {((3,), (0, 0, 0)): 1})
    with pytest.raises(ValueError):
        wedge(PolyForm.dz(2, 0), PolyForm.dz(3, 0))
    with pytest.raises(TypeError):
        PolyForm.dz(2, 0) + 1
    with pytest.raises(ValueError):
        interior(radial_field(2), PolyForm.constant(2))


def test_homogeneity():
    w = PolyForm(2, 1, {((0,), (1, 0, 0)): 1, ((1,), (0, 2, 0)): 1})
    assert w.homogeneous_degree() is None
    assert PolyForm.zero(2, 1).homogeneous_degree() is None
    assert PolyForm.dz(2, 1).homogeneous_degree() == 0


@pytest.mark.parametrize("n,r,m", [(n, r, m) for n in (2, 3, 4) for r in range(1, n + 1) for m in range(-1, 3)])
def test_twisted_basis_dimension(n, r, m):
    basis = twisted_form_basis(n, r, m)
    assert len(basis) == h_omega(n, 0, r, m + r + 1)
    for w in basis:
        assert is_projective_form(w, m)


def test_twisted_basis_known_sizes():
    assert len(twisted_form_basis(3, 1, 0)) == 6
    assert len(twisted_form_basis(3, 1, 2)) == 45
    assert len(twisted_form_basis(4, 3, 4)) == 315


def test_radial_contraction_of_volume_is_projective():
    for n in (1, 2, 3):
        w = interior(radial_field(n), PolyForm.volume(n))
        assert is_projective_form(w, 0)
        assert w.homogeneous_degree() == 1


def test_monomials_count_and_order():
    mons = monomials(3, 2)
    assert len(mons) == 6
    assert mons[0] == (2, 0, 0) and mons[-1] == (0, 0, 2)
    assert len(form_keys(3, 2, 1)) == 6 * 4


def test_random_generators_are_seeded():
    a = random_projective_form(3, 1, 1, random.Random(5))
    b = random_projective_form(3, 1, 1, random.Random(5))
    assert a == b and is_projective_form(a, 1)
    X = random_field(3, 2, random.Random(1))
    assert X == random_field(3, 2, random.Random(1))
    assert X.homogeneous_degree() == 2


def test_scaled_to_integers():
    w = PolyForm(1, 1, {((0,), (1, 0)): Fraction(2, 3), ((1,), (0, 1)): Fraction(-4, 9)})
    s = scaled_to_integers(w)
    assert {c for c in s.terms.values()} == {Fraction(3), Fraction(-2)}
