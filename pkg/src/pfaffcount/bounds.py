"""Degree inequalities and stability verdicts for flags of foliations and distributions.

Every calculator returns a :class:`BoundReport` with the degree of the upper
Pfaff system on the left and the bound on the right, both as exact Fractions.
Geometric hypotheses (smoothness, normal crossings, regularity) are taken on
trust from the caller and echoed back.
"""
from __future__ import annotations

import enum
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, Tuple


@dataclass(frozen=True)
class BoundReport:
    theorem_case: str
    lhs: Fraction
    rhs: Fraction
    holds: bool
    inputs: Dict[str, Any] = field(default_factory=dict)
    strict: bool = False
    note: str = ""

    def __post_init__(self):
        expected = self.lhs < self.rhs if self.strict else self.lhs <= self.rhs
        if expected != self.holds:
            raise AssertionError("holds flag disagrees with lhs/rhs")

    @classmethod
    def compare(cls, case: str, lhs, rhs, inputs: Dict[str, Any], strict: bool = False, note: str = ""):
        lhs, rhs = Fraction(lhs), Fraction(rhs)
        return cls(case, lhs, rhs, lhs < rhs if strict else lhs <= rhs, dict(inputs), strict, note)

    def to_json(self) -> dict:
        return {
            "theorem_case": self.theorem_case,
            "lhs": _num(self.lhs),
            "rhs": _num(self.rhs),
            "holds": self.holds,
            "strict": self.strict,
            "inputs": {k: _jsonable(v) for k, v in self.inputs.items()},
            "note": self.note,
        }


def _num(x: Fraction):
    if x.denominator == 1:
        v = x.numerator
        return v if -(2 ** 63) <= v < 2 ** 63 else str(v)
    return f"{x.numerator}/{x.denominator}"


def _jsonable(v):
    if isinstance(v, Fraction):
        return _num(v)
    if isinstance(v, enum.Enum):
        return v.value
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


class Verdict(enum.Enum):
    NO_SUCH_FLAG = "NoSuchFlag"
    NOT_EXCLUDED = "NotExcluded"
    STABLE = "Stable"
    SEMISTABLE = "Semistable"
    SEMISTABLE_ONLY = "SemistableOnly"
    INCONCLUSIVE = "Inconclusive"


def slope(dim: int, deg: int) -> Fraction:
    """Slope (dim - deg)/dim of the tangent sheaf of a foliation."""
    if dim < 1:
        raise ValueError("dimension must be >= 1")
    return Fraction(dim - deg, dim)


def corollary_1_2_check(deg_F: int, deg_G: int) -> BoundReport:
    return BoundReport.compare("cor1.2", deg_F, deg_G, {"deg_F": deg_F, "deg_G": deg_G})


def corollary_1_4_check(deg_D: int, dim_D: int, deg_G: int) -> BoundReport:
    if dim_D < 1:
        raise ValueError("dim_D must be >= 1")
    return BoundReport.compare("cor1.4", deg_D, dim_D * deg_G,
                               {"deg_D": deg_D, "dim_D": dim_D, "deg_G": deg_G})


def corollary_1_5_verdict(n: int, deg_F: int, deg_G: int) -> Verdict:
    """Whether a flag (dim F = codim G = 1, isolated singularities) is ruled out."""
    if n % 2 == 0 or 2 * deg_F != (n - 1) * deg_G - 2:
        return Verdict.NO_SUCH_FLAG
    return Verdict.NOT_EXCLUDED


def corollary_1_7_verdict(m: int) -> Verdict:
    """Stability of a codimension-one distribution of degree m on P^3 with isolated singularities."""
    if m < 0:
        raise ValueError("degree must be >= 0")
    if m == 1:
        raise ValueError("degree 1 is incompatible with isolated singularities")
    return Verdict.SEMISTABLE_ONLY if m == 2 else Verdict.STABLE


class LogCase(enum.Enum):
    SMOOTH_HYPERSURFACE = "SmoothHypersurface"
    NORMAL_CROSSING = "NormalCrossing"
    CURVE_SMOOTH = "CurveSmooth"
    CURVE_NODAL = "CurveNodal"
    CI_REGULARITY = "CI_Regularity"
    CI_NONSING_CODIM1 = "CI_NonsingCodim1"


@dataclass(frozen=True)
class LogarithmicData:
    """Degrees d_1..d_r of the polar hypersurfaces of a logarithmic p-form on P^n.

    ``index`` and ``index_set`` are 1-based.
    """
    n: int
    p: int
    degrees: Tuple[int, ...]
    deg_F: int
    index: Optional[int] = None
    index_set: Optional[Tuple[int, ...]] = None
    regularity: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if self.index_set is not None:
            object.__setattr__(self, "index_set", tuple(self.index_set))
        if any(d < 1 for d in self.degrees):
            raise ValueError("polar degrees must be >= 1")
        if len(self.degrees) < self.p + 1:
            raise ValueError(f"need r >= p+1 = {self.p + 1} polar hypersurfaces")
        if self.n < self.p + 2:
            raise ValueError(f"need n >= p+2 = {self.p + 2}")

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)

    def d_i(self) -> int:
        if self.index is None or not 1 <= self.index <= len(self.degrees):
            raise ValueError("case needs a valid 1-based index i")
        return self.degrees[self.index - 1]

    def selected_sum(self) -> int:
        s = self.index_set
        if s is None or len(s) != self.p + 1 or len(set(s)) != len(s) \
                or any(not 1 <= i <= len(self.degrees) for i in s):
            raise ValueError(f"case needs p+1 = {self.p + 1} distinct 1-based indices")
        return sum(self.degrees[i - 1] for i in s)


def logarithmic_degree(data: LogarithmicData) -> int:
    return data.total_degree - data.p - 1


def logarithmic_bounds(data: LogarithmicData, case: LogCase) -> BoundReport:
    case = LogCase(case)
    lhs = logarithmic_degree(data)
    abs_d, dF, n, p = data.total_degree, data.deg_F, data.n, data.p
    note = ""
    if case is LogCase.SMOOTH_HYPERSURFACE:
        rhs = Fraction(dF + abs_d - data.d_i() - p)
    elif case is LogCase.NORMAL_CROSSING:
        rhs = Fraction(dF + abs_d - data.d_i() + n - p - 1)
    elif case in (LogCase.CURVE_SMOOTH, LogCase.CURVE_NODAL):
        if n != p + 2:
            raise ValueError("complete intersection curve cases need n = p+2")
        rhs = Fraction(dF + abs_d - data.selected_sum() + (case is LogCase.CURVE_NODAL))
    elif case is LogCase.CI_REGULARITY:
        if data.regularity is None or data.regularity < 0:
            raise ValueError("CI_Regularity needs the regularity R")
        s = data.selected_sum()
        if data.regularity <= s - p - 2:
            rhs = Fraction(dF + abs_d - s)
            note = "R <= sum d_ik - p - 2"
        else:
            rhs = Fraction(dF + data.regularity + 1, 2) + abs_d - s
            note = "R > sum d_ik - p - 2"
    else:
        rhs = Fraction(dF + abs_d - data.selected_sum() + 1)
    inputs = asdict(data)
    inputs["case"] = case.value
    return BoundReport.compare(f"thm6.1/{case.value}", lhs, rhs, inputs, note=note)


def corollary_6_2_verdict(n: int, abs_d: int, d_i: int) -> Verdict:
    gap = (n - 2) - (abs_d - d_i)
    if gap > 0:
        return Verdict.STABLE
    if gap == 0:
        return Verdict.SEMISTABLE
    return Verdict.INCONCLUSIVE


class PullbackCase(enum.Enum):
    INVARIANT_SMOOTH = "InvariantSmooth"
    INVARIANT_NC = "InvariantNC"
    SING_COMP_INT_REGULARITY = "SingCompIntRegularity"
    SING_COMP_INT_NONSING_CODIM1 = "SingCompIntNonsingCodim1"


@dataclass(frozen=True)
class PullbackData:
    """Pull-back of a degree-k foliation by curves on P^(r+1) under a degree-m map from P^n.

    ``d`` is the degree of the invariant hypersurface (cases 1a/1b);
    ``degrees`` are the degrees cutting out the singular component (cases 2a/2b).
    """
    n: int
    m: int
    k: int
    r: int
    deg_F: int
    d: Optional[int] = None
    degrees: Optional[Tuple[int, ...]] = None
    regularity: Optional[int] = None

    def __post_init__(self):
        if self.degrees is not None:
            object.__setattr__(self, "degrees", tuple(self.degrees))
        if self.n < self.r + 2:
            raise ValueError(f"need n >= r+2 = {self.r + 2}")

    @property
    def codim(self) -> int:
        if not self.degrees:
            raise ValueError("case needs the degrees d_1..d_s of the singular component")
        if len(self.degrees) < 2:
            raise ValueError("singular component must have codimension s >= 2")
        return len(self.degrees)


def pullback_degree(data: PullbackData) -> int:
    return data.m * (data.k + data.r + 1) - data.r - 1


def pullback_bounds(data: PullbackData, case: PullbackCase) -> BoundReport:
    case = PullbackCase(case)
    lhs = pullback_degree(data)
    ratio = data.k + data.r + 1
    dF, r = data.deg_F, data.r
    note = ""
    if case in (PullbackCase.INVARIANT_SMOOTH, PullbackCase.INVARIANT_NC):
        if data.d is None or data.d < 1:
            raise ValueError("case needs the invariant hypersurface degree d >= 1")
        shift = 1 if case is PullbackCase.INVARIANT_SMOOTH else data.n
        rhs = Fraction(ratio, data.d) * (dF + shift) - r - 1
    else:
        s = data.codim
        abs_d = sum(data.degrees)
        if case is PullbackCase.SING_COMP_INT_REGULARITY:
            if data.regularity is None or data.regularity < 0:
                raise ValueError("SingCompIntRegularity needs the regularity R")
            R = data.regularity
            if R <= data.m * abs_d - s - 1:
                rhs = Fraction(ratio, abs_d) * (dF + s) - r - 1
                note = "R <= m|d| - s - 1"
            else:
                rhs = Fraction(ratio, 2 * abs_d) * (dF + R + 2 * s + 1) - r - 1
                note = "R > m|d| - s - 1"
        else:
            rhs = Fraction(ratio, abs_d) * (dF + s + 1) - r - 1
    inputs = asdict(data)
    inputs["case"] = case.value
    return BoundReport.compare(f"thm6.3/{case.value}", lhs, rhs, inputs, note=note)


class Cor64Case(enum.Enum):
    REGULARITY = "Regularity"
    NONSING_CODIM1 = "NonsingCodim1"


def corollary_6_4_bounds(n: int, m: int, k: int, deg_F: int, case: Cor64Case,
                         regularity: Optional[int] = None) -> BoundReport:
    """Pull-back from P^2 with the preimage of an isolated singularity (s = 2, |d| = 2)."""
    case = Cor64Case(case)
    if case is Cor64Case.REGULARITY and (regularity is None or regularity < 0):
        raise ValueError("Regularity case needs the regularity R")
    data = PullbackData(n, m, k, 1, deg_F, degrees=(1, 1), regularity=regularity)
    general = pullback_bounds(data, PullbackCase.SING_COMP_INT_REGULARITY if case is Cor64Case.REGULARITY
                              else PullbackCase.SING_COMP_INT_NONSING_CODIM1)
    if case is Cor64Case.REGULARITY:
        if regularity <= 2 * m - 3:
            rhs = Fraction(k + 2, 2) * deg_F + k
        else:
            rhs = Fraction(k + 2, 4) * (deg_F + regularity + 1) + k
    else:
        rhs = Fraction(k + 2, 2) * (deg_F + 1) + k
    if rhs != general.rhs:
        raise AssertionError(f"specialized bound {rhs} differs from the general one {general.rhs}")
    inputs = {"n": n, "m": m, "k": k, "deg_F": deg_F, "regularity": regularity, "case": case.value}
    return BoundReport.compare(f"cor6.4/{case.value}", general.lhs, rhs, inputs, note=general.note)


class DecomposableVariant(enum.Enum):
    GENERAL = "General"
    COMPLETE_INTERSECTION = "CompleteIntersection"
    EQUAL_DEGREES = "EqualDegrees"


def decomposable_bound(deg_D: int, omega_degrees: Sequence[int], variant: DecomposableVariant) -> BoundReport:
    """Bounds for G = w_1 ^ ... ^ w_k containing a split distribution D.

    ``omega_degrees`` are the coefficient degrees of the homogeneous 1-forms
    w_i, so the codimension-one foliation of w_i has degree deg(w_i) - 1 and G
    has degree sum(deg w_i) - 1.
    """
    variant = DecomposableVariant(variant)
    degs = list(omega_degrees)
    if not degs:
        raise ValueError("need at least one 1-form degree")
    k = len(degs)
    inputs = {"deg_D": deg_D, "omega_degrees": degs, "variant": variant.value}
    if variant is DecomposableVariant.GENERAL:
        return BoundReport.compare("thm6.5/General", min(degs), deg_D + 1, inputs)
    if variant is DecomposableVariant.COMPLETE_INTERSECTION:
        return BoundReport.compare("thm6.5/CompleteIntersection", min(degs) - 1, deg_D, inputs,
                                   note="deg(F_i) = deg(w_i) - 1")
    if len(set(degs)) != 1:
        raise ValueError("EqualDegrees needs all 1-form degrees equal")
    return BoundReport.compare("thm6.5/EqualDegrees", k * degs[0] - 1, k * deg_D + k - 1, inputs,
                               note="deg(G) = k*deg(w_i) - 1")


def corollary_6_6_verdict(n: int, k: int, d: int) -> Verdict:
    if d < 1:
        raise ValueError("d must be >= 1")
    if n - 2 <= 2 * d - k - 1:
        return Verdict.SEMISTABLE if n == 3 else Verdict.STABLE
    return Verdict.INCONCLUSIVE
