"""Flags of Pfaff systems: exact and pointwise checks on concrete forms."""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from pfaffcount import exactla
from pfaffcount.polyforms import (
    PolyForm,
    PolyVectorField,
    exterior_derivative,
    interior,
    is_projective_form,
    radial_field,
    wedge,
)


class SingularPointError(ValueError):
    pass


@dataclass(frozen=True)
class PfaffDescriptor:
    n: int
    codim: int
    degree: int

    def __post_init__(self):
        if not 1 <= self.codim <= self.n - 1:
            raise ValueError(f"codimension {self.codim} outside 1..{self.n - 1}")

    @property
    def twist(self) -> int:
        return self.degree + self.codim + 1

    @property
    def coefficient_degree(self) -> int:
        return self.degree + 1

    @classmethod
    def of(cls, w: PolyForm) -> "PfaffDescriptor":
        return cls(w.n, w.r, degree_of_pfaff(w))


class FlagKind(enum.Enum):
    VF_FORM = "vf_form"
    FORM_FORM_POINTWISE = "form_form_pointwise"


@dataclass(frozen=True)
class FlagWitness:
    lower: Union[PolyVectorField, PolyForm]
    upper: PolyForm
    kind: FlagKind

    def __post_init__(self):
        if self.lower.n != self.upper.n:
            raise ValueError("flag legs live on different projective spaces")
        lower_codim = self.lower.n - 1 if isinstance(self.lower, PolyVectorField) else self.lower.r
        if self.kind is FlagKind.VF_FORM and not isinstance(self.lower, PolyVectorField):
            raise ValueError("vf_form flags need a vector field as lower leg")
        if self.upper.r >= lower_codim:
            raise ValueError(f"upper codimension {self.upper.r} must be below lower codimension {lower_codim}")

    def check(self, rng: Optional[random.Random] = None, points: int = 20) -> bool:
        if self.kind is FlagKind.VF_FORM:
            return check_vf_form_flag(self.lower, self.upper)
        return check_flag_pointwise(self.lower, self.upper, rng or random.Random(0), points)


def degree_of_pfaff(w: PolyForm) -> int:
    c = w.homogeneous_degree()
    if c is None:
        raise ValueError("form is zero or not homogeneous")
    return c - 1


def check_vf_form_flag(X: PolyVectorField, w: PolyForm) -> bool:
    if X.n != w.n:
        raise ValueError(f"ambient dimension mismatch: {X.n} vs {w.n}")
    return interior(X, w).is_zero()


def foliation_form(X: PolyVectorField) -> PolyForm:
    """The (n-1)-form i_X i_theta dV defining the one-dimensional foliation of X."""
    n = X.n
    return interior(X, interior(radial_field(n), PolyForm.volume(n)))


def _contraction_matrix(values: Dict[Tuple[int, ...], Fraction], n: int, r: int) -> exactla.RationalMatrix:
    """Matrix of v -> i_v alpha for a constant r-form alpha on Q^(n+1)."""
    rows: Dict[Tuple[int, ...], int] = {}
    entries = {}
    for I, c in values.items():
        for s, i in enumerate(I):
            J = I[:s] + I[s + 1:]
            row = rows.setdefault(J, len(rows))
            entries[(row, i)] = entries.get((row, i), 0) + (-c if s % 2 else c)
    return exactla.RationalMatrix(max(len(rows), 1), n + 1, entries)


def _contract_constant(v: Sequence[Fraction], values: Dict[Tuple[int, ...], Fraction]) -> Dict:
    out: Dict[Tuple[int, ...], Fraction] = {}
    for I, c in values.items():
        for s, i in enumerate(I):
            if v[i]:
                J = I[:s] + I[s + 1:]
                out[J] = out.get(J, 0) + (-1) ** s * c * v[i]
    return {J: x for J, x in out.items() if x}


def pointwise_kernel(w: PolyForm, point: Sequence) -> List[List[Fraction]]:
    """Basis of Ker w(p) = {v : i_v w(p) = 0} in Q^(n+1)."""
    values = w.evaluate(point)
    if not values:
        raise SingularPointError(f"form vanishes at {list(point)}")
    return exactla.kernel_basis(_contraction_matrix(values, w.n, w.r))


def check_kernel_containment_at_point(w1: PolyForm, w2: PolyForm, point: Sequence) -> bool:
    """Ker w1(p) is contained in Ker w2(p)."""
    if w1.n != w2.n:
        raise ValueError("ambient dimension mismatch")
    v1, v2 = w1.evaluate(point), w2.evaluate(point)
    if not v1:
        raise SingularPointError(f"point {list(point)} lies in the singular set of the first form")
    if not v2:
        raise SingularPointError(f"point {list(point)} lies in the singular set of the second form")
    kernel = exactla.kernel_basis(_contraction_matrix(v1, w1.n, w1.r))
    return all(not _contract_constant(v, v2) for v in kernel)


def regular_points(forms: Sequence[PolyForm], count: int, rng: random.Random,
                   bound: int = 5, max_attempts: int = 1000) -> List[Tuple[int, ...]]:
    """Seeded rejection sampling of small integer points where no form vanishes."""
    n = forms[0].n
    out = []
    attempts = 0
    while len(out) < count:
        if attempts >= max_attempts:
            raise SingularPointError(f"found only {len(out)} regular points in {max_attempts} attempts")
        attempts += 1
        p = tuple(rng.randint(-bound, bound) for _ in range(n + 1))
        if any(p) and all(w.evaluate(p) for w in forms):
            out.append(p)
    return out


def check_flag_pointwise(w1: PolyForm, w2: PolyForm, rng: random.Random, points: int = 20) -> bool:
    """Kernel containment at sampled regular points.

    A single failure refutes the flag; passing everywhere is only evidence.
    """
    return all(check_kernel_containment_at_point(w1, w2, p) for p in regular_points([w1, w2], points, rng))


def check_integrability_codim1(w: PolyForm) -> bool:
    if w.r != 1:
        raise ValueError(f"integrability check needs a 1-form, got r={w.r}")
    return wedge(w, exterior_derivative(w)).is_zero()


def check_decomposable_2form(w: PolyForm) -> bool:
    if w.r != 2:
        raise ValueError(f"decomposability check needs a 2-form, got r={w.r}")
    return wedge(w, w).is_zero()


def example_5_1(d: int, a: Sequence) -> Tuple[PolyVectorField, PolyForm]:
    """The field a0 z1^d d0 + a1 z0^d d1 + a2 z3^d d2 + a3 z2^d d3 and w = F dG - G dF on P^3.

    F = a1 z0^(d+1) - a0 z1^(d+1), G = a3 z2^(d+1) - a2 z3^(d+1).
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if len(a) != 4 or any(Fraction(x) == 0 for x in a):
        raise ValueError("need four nonzero coefficients")
    a = [Fraction(x) for x in a]
    n = 3
    X = PolyVectorField.from_terms(n, [
        (0, (0, d, 0, 0), a[0]),
        (1, (d, 0, 0, 0), a[1]),
        (2, (0, 0, 0, d), a[2]),
        (3, (0, 0, d, 0), a[3]),
    ])
    F = PolyForm.polynomial(n, {(d + 1, 0, 0, 0): a[1], (0, d + 1, 0, 0): -a[0]})
    G = PolyForm.polynomial(n, {(0, 0, d + 1, 0): a[3], (0, 0, 0, d + 1): -a[2]})
    w = wedge(F, exterior_derivative(G)) - wedge(G, exterior_derivative(F))
    return X, w


def rational_foliation_form(polys: Sequence[PolyForm]) -> PolyForm:
    """i_theta(dF_0 ^ ... ^ dF_k) for homogeneous polynomials F_i."""
    n = polys[0].n
    w = PolyForm.constant(n)
    for F in polys:
        w = wedge(w, exterior_derivative(F))
    return interior(radial_field(n), w)


def is_twisted(w: PolyForm) -> bool:
    c = w.homogeneous_degree()
    return c is not None and is_projective_form(w, c - 1)
