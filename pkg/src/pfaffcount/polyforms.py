"""Polynomial differential forms and vector fields on the affine cone C^(n+1) over P^n.

A form is a sparse map ``(I, e) -> c`` meaning ``c * z^e dz_I`` with ``I`` a
strictly increasing index tuple.  Polynomials are 0-forms, so multiplication by
a function is just ``wedge``.  Everything is over Q with exact Fractions.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from pfaffcount import exactla

Monomial = Tuple[int, ...]
Index = Tuple[int, ...]
Key = Tuple[Index, Monomial]
Poly = Dict[Monomial, Fraction]


def monomial_key(e: Monomial):
    """Graded-lex sort key: lower total degree first, then z_0-heavy first."""
    return (sum(e), tuple(-x for x in e))


def term_key(key: Key):
    return (key[0], monomial_key(key[1]))


def monomials(nvars: int, degree: int) -> List[Monomial]:
    """All exponent vectors of the given total degree, in graded-lex order."""
    if degree < 0:
        return []
    if nvars == 1:
        return [(degree,)]
    out = []
    for a in range(degree, -1, -1):
        out.extend((a,) + rest for rest in monomials(nvars - 1, degree - a))
    return out


def _add_exp(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def _unit(n: int, i: int) -> Monomial:
    return tuple(1 if j == i else 0 for j in range(n + 1))


def _merge_sign(I: Index, J: Index) -> int:
    """Sign of the permutation sorting the concatenation I + J (I, J sorted, disjoint)."""
    inversions = 0
    k = 0
    for j in J:
        while k < len(I) and I[k] < j:
            k += 1
        inversions += len(I) - k
    return -1 if inversions % 2 else 1


@dataclass(frozen=True, eq=False)
class PolyForm:
    n: int
    r: int
    terms: Mapping[Key, Fraction]

    def __post_init__(self):
        if self.n < 0 or self.r < 0:
            raise ValueError(f"form degree {self.r} invalid for n={self.n}")
        clean = {}
        for (I, e), c in self.terms.items():
            I, e = tuple(I), tuple(e)
            if len(I) != self.r or any(a >= b for a, b in zip(I, I[1:])):
                raise ValueError(f"index tuple {I} is not strictly increasing of length {self.r}")
            if I and not (0 <= I[0] and I[-1] <= self.n):
                raise ValueError(f"index tuple {I} out of range 0..{self.n}")
            if len(e) != self.n + 1 or min(e, default=0) < 0:
                raise ValueError(f"bad exponent vector {e}")
            c = Fraction(c)
            if c:
                clean[(I, e)] = c
        object.__setattr__(self, "terms", {k: clean[k] for k in sorted(clean, key=term_key)})

    # -- construction -------------------------------------------------------

    @classmethod
    def zero(cls, n: int, r: int) -> "PolyForm":
        return cls(n, r, {})

    @classmethod
    def polynomial(cls, n: int, poly: Mapping[Monomial, Fraction]) -> "PolyForm":
        return cls(n, 0, {((), e): c for e, c in poly.items()})

    @classmethod
    def constant(cls, n: int, c=1) -> "PolyForm":
        return cls(n, 0, {((), (0,) * (n + 1)): c})

    @classmethod
    def coordinate(cls, n: int, i: int) -> "PolyForm":
        return cls(n, 0, {((), _unit(n, i)): 1})

    @classmethod
    def dz(cls, n: int, *idx: int) -> "PolyForm":
        """dz_{i1} ^ ... ^ dz_{ik}, in the order given (sign included)."""
        out = cls.constant(n)
        for i in idx:
            out = wedge(out, cls(n, 1, {((i,), (0,) * (n + 1)): 1}))
        return out

    @classmethod
    def volume(cls, n: int) -> "PolyForm":
        return cls.dz(n, *range(n + 1))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "PolyForm"):
        if not isinstance(other, PolyForm):
            raise TypeError(f"expected PolyForm, got {type(other).__name__}")
        if (self.n, self.r) != (other.n, other.r):
            raise ValueError(f"cannot add forms of type {(self.n, self.r)} and {(other.n, other.r)}")

    def __add__(self, other: "PolyForm") -> "PolyForm":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return PolyForm(self.n, self.r, out)

    def __neg__(self) -> "PolyForm":
        return PolyForm(self.n, self.r, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "PolyForm") -> "PolyForm":
        return self + (-other)

    def __mul__(self, scalar) -> "PolyForm":
        if isinstance(scalar, PolyForm):
            return wedge(self, scalar)
        s = Fraction(scalar)
        return PolyForm(self.n, self.r, {k: c * s for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyForm):
            return NotImplemented
        return (self.n, self.r) == (other.n, other.r) and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.r, tuple(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- inspection ---------------------------------------------------------

    def coefficient_degrees(self) -> set:
        return {sum(e) for _, e in self.terms}

    def homogeneous_degree(self) -> Optional[int]:
        """Common total degree of all coefficients, or None (also for 0)."""
        degs = self.coefficient_degrees()
        return degs.pop() if len(degs) == 1 else None

    def evaluate(self, point: Sequence) -> Dict[Index, Fraction]:
        """Constant alternating form obtained by evaluating coefficients at ``point``."""
        if len(point) != self.n + 1:
            raise ValueError("point has wrong length")
        pt = [Fraction(x) for x in point]
        out: Dict[Index, Fraction] = {}
        for (I, e), c in self.terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v *= x ** k
            out[I] = out.get(I, 0) + v
        return {I: v for I, v in out.items() if v}

    def __repr__(self):
        if not self.terms:
            return f"PolyForm(n={self.n}, r={self.r}, 0)"
        parts = []
        for (I, e), c in self.terms.items():
            mono = "*".join(f"z{i}^{k}" if k > 1 else f"z{i}" for i, k in enumerate(e) if k)
            dz = "^".join(f"dz{i}" for i in I)
            parts.append("*".join(x for x in (str(c), mono, dz) if x))
        return f"PolyForm(n={self.n}, r={self.r}, " + " + ".join(parts) + ")"

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "terms": [
                {"idx": list(I), "exp": list(e), "num": str(c.numerator), "den": str(c.denominator)}
                for (I, e), c in self.terms.items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PolyForm":
        if data.get("kind", "form") != "form":
            raise ValueError("JSON object is not a form")
        terms: Dict[Key, Fraction] = {}
        for t in data["terms"]:
            k = (tuple(t["idx"]), tuple(t["exp"]))
            terms[k] = terms.get(k, 0) + Fraction(int(t["num"]), int(t["den"]))
        return cls(int(data["n"]), int(data["r"]), terms)


@dataclass(frozen=True, eq=False)
class PolyVectorField:
    n: int
    components: Tuple[Mapping[Monomial, Fraction], ...]

    def __post_init__(self):
        if len(self.components) != self.n + 1:
            raise ValueError(f"need {self.n + 1} components, got {len(self.components)}")
        comps = []
        for comp in self.components:
            clean = {}
            for e, c in comp.items():
                e = tuple(e)
                if len(e) != self.n + 1 or min(e) < 0:
                    raise ValueError(f"bad exponent vector {e}")
                c = Fraction(c)
                if c:
                    clean[e] = c
            comps.append({e: clean[e] for e in sorted(clean, key=monomial_key)})
        object.__setattr__(self, "components", tuple(comps))

    @classmethod
    def from_terms(cls, n: int, terms: Iterable[Tuple[int, Monomial, Fraction]]) -> "PolyVectorField":
        """Build from (component index, exponent, coefficient) triples."""
        comps: List[Dict[Monomial, Fraction]] = [dict() for _ in range(n + 1)]
        for i, e, c in terms:
            e = tuple(e)
            comps[i][e] = comps[i].get(e, 0) + Fraction(c)
        return cls(n, tuple(comps))

    @classmethod
    def partial(cls, n: int, i: int) -> "PolyVectorField":
        return cls.from_terms(n, [(i, (0,) * (n + 1), 1)])

    def __add__(self, other: "PolyVectorField") -> "PolyVectorField":
        if self.n != other.n:
            raise ValueError("ambient dimension mismatch")
        return PolyVectorField.from_terms(
            self.n,
            [(i, e, c) for f in (self, other) for i, comp in enumerate(f.components) for e, c in comp.items()],
        )

    def __mul__(self, scalar) -> "PolyVectorField":
        s = Fraction(scalar)
        return PolyVectorField(self.n, tuple({e: c * s for e, c in comp.items()} for comp in self.components))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyVectorField):
            return NotImplemented
        return self.n == other.n and self.components == other.components

    def __hash__(self):
        return hash((self.n, tuple(tuple(c.items()) for c in self.components)))

    def is_zero(self) -> bool:
        return not any(self.components)

    def homogeneous_degree(self) -> Optional[int]:
        degs = {sum(e) for comp in self.components for e in comp}
        return degs.pop() if len(degs) == 1 else None

    def evaluate(self, point: Sequence) -> List[Fraction]:
        pt = [Fraction(x) for x in point]
        out = []
        for comp in self.components:
            v = Fraction(0)
            for e, c in comp.items():
                t = c
                for x, k in zip(pt, e):
                    if k:
                        t *= x ** k
                v += t
            out.append(v)
        return out

    def __repr__(self):
        return f"PolyVectorField(n={self.n}, {[dict(c) for c in self.components]})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "kind": "vector_field",
            "terms": [
                {"idx": [i], "exp": list(e), "num": str(c.numerator), "den": str(c.denominator)}
                for i, comp in enumerate(self.components)
                for e, c in comp.items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PolyVectorField":
        if data.get("kind") != "vector_field":
            raise ValueError("JSON object is not a vector field")
        n = int(data["n"])
        return cls.from_terms(n, [(t["idx"][0], t["exp"], Fraction(int(t["num"]), int(t["den"])))
                                  for t in data["terms"]])


def load_json(text: str):
    data = json.loads(text)
    if data.get("kind") == "vector_field":
        return PolyVectorField.from_json(data)
    return PolyForm.from_json(data)


def dump_json(obj) -> str:
    return json.dumps(obj.to_json(), sort_keys=True)


# -- exterior calculus ------------------------------------------------------


def wedge(a: PolyForm, b: PolyForm) -> PolyForm:
    if a.n != b.n:
        raise ValueError(f"ambient dimension mismatch: {a.n} vs {b.n}")
    out: Dict[Key, Fraction] = {}
    for (I, e), c in a.terms.items():
        Iset = set(I)
        for (J, f), d in b.terms.items():
            if Iset.intersection(J):
                continue
            K = tuple(sorted(I + J))
            key = (K, _add_exp(e, f))
            out[key] = out.get(key, 0) + _merge_sign(I, J) * c * d
    return PolyForm(a.n, a.r + b.r, out)


def interior(X: PolyVectorField, w: PolyForm) -> PolyForm:
    """Contraction i_X w; slot j of dz_I contributes the sign (-1)^j."""
    if X.n != w.n:
        raise ValueError(f"ambient dimension mismatch: {X.n} vs {w.n}")
    if w.r < 1:
        raise ValueError("cannot contract a 0-form")
    out: Dict[Key, Fraction] = {}
    for (I, e), c in w.terms.items():
        for j, i in enumerate(I):
            comp = X.components[i]
            if not comp:
                continue
            J = I[:j] + I[j + 1:]
            s = -c if j % 2 else c
            for f, x in comp.items():
                key = (J, _add_exp(e, f))
                out[key] = out.get(key, 0) + s * x
    return PolyForm(w.n, w.r - 1, out)


def exterior_derivative(w: PolyForm) -> PolyForm:
    out: Dict[Key, Fraction] = {}
    for (I, e), c in w.terms.items():
        for i, k in enumerate(e):
            if not k or i in I:
                continue
            pos = sum(1 for x in I if x < i)
            K = I[:pos] + (i,) + I[pos:]
            f = e[:i] + (k - 1,) + e[i + 1:]
            key = (K, f)
            out[key] = out.get(key, 0) + (-1) ** pos * k * c
    return PolyForm(w.n, w.r + 1, out)


def radial_field(n: int) -> PolyVectorField:
    if n < 1:
        raise ValueError("n must be >= 1")
    return PolyVectorField.from_terms(n, [(i, _unit(n, i), 1) for i in range(n + 1)])


def is_projective_form(w: PolyForm, m: int) -> bool:
    """True iff w has homogeneous coefficients of degree m+1 and i_theta w = 0."""
    if w.r < 1 or w.is_zero() or w.homogeneous_degree() != m + 1:
        return False
    return interior(radial_field(w.n), w).is_zero()


def form_keys(n: int, r: int, c: int) -> List[Key]:
    """Monomial basis (index tuple, exponent) of r-forms with coefficient degree c."""
    mons = monomials(n + 1, c)
    return [(I, e) for I in combinations(range(n + 1), r) for e in mons]


def field_keys(n: int, d: int) -> List[Tuple[int, Monomial]]:
    mons = monomials(n + 1, d)
    return [(i, e) for i in range(n + 1) for e in mons]


def linear_map_matrix(images: Sequence[PolyForm], row_keys: Optional[List[Key]] = None):
    """Matrix whose j-th column holds the coordinates of images[j].

    Rows are the sorted union of the monomial keys that occur unless
    ``row_keys`` fixes them.
    """
    if row_keys is None:
        row_keys = sorted({k for img in images for k in img.terms}, key=term_key)
    row_of = {k: i for i, k in enumerate(row_keys)}
    entries = {}
    for j, img in enumerate(images):
        for k, c in img.terms.items():
            entries[(row_of[k], j)] = c
    return exactla.RationalMatrix(len(row_keys), len(images), entries), row_keys


def combine(n: int, r: int, keys: Sequence[Key], vector: Sequence[Fraction]) -> PolyForm:
    return PolyForm(n, r, {k: v for k, v in zip(keys, vector) if v})


def twisted_form_basis(n: int, r: int, m: int) -> List[PolyForm]:
    """Basis of the homogeneous r-forms of coefficient degree m+1 killed by i_theta.

    These represent H^0(P^n, Omega^r(m+r+1)).  The basis is the exact kernel of
    the contraction with the radial field, ordered by its free column.
    """
    if not 1 <= r <= n:
        raise ValueError(f"r={r} outside 1..{n}")
    keys = form_keys(n, r, m + 1)
    if not keys:
        return []
    theta = radial_field(n)
    images = [interior(theta, PolyForm(n, r, {k: 1})) for k in keys]
    M, _ = linear_map_matrix(images)
    return [combine(n, r, keys, v) for v in exactla.kernel_basis(M)]


def scaled_to_integers(w: PolyForm) -> PolyForm:
    """Positive rational multiple of w with coprime integer coefficients."""
    if w.is_zero():
        return w
    den = lcm(*(c.denominator for c in w.terms.values()))
    g = 0
    for c in w.terms.values():
        g = gcd(g, int(c * den))
    return w * Fraction(den, g)


def random_projective_form(n: int, r: int, m: int, rng: random.Random, spread: int = 5) -> PolyForm:
    """Seeded random integer combination of the twisted-form basis."""
    basis = twisted_form_basis(n, r, m)
    if not basis:
        raise ValueError(f"no twisted {r}-forms of degree {m} on P^{n}")
    while True:
        w = PolyForm.zero(n, r)
        for b in basis:
            w = w + b * rng.randint(-spread, spread)
        if not w.is_zero():
            return scaled_to_integers(w)


def random_field(n: int, d: int, rng: random.Random, spread: int = 5) -> PolyVectorField:
    """Seeded random homogeneous degree-d vector field, guaranteed nonzero."""
    keys = field_keys(n, d)
    while True:
        X = PolyVectorField.from_terms(n, [(i, e, rng.randint(-spread, spread)) for i, e in keys])
        if not X.is_zero():
            return X
