"""Regression table for the degree-bound calculators.

Expected values were worked out by hand from the inequalities; fractions are
stored as "p/q" strings.
"""
from fractions import Fraction

from pfaffcount import bounds


def _r(lhs, rhs, holds):
    return {"lhs": str(Fraction(lhs)), "rhs": str(Fraction(rhs)), "holds": holds}


LOG_A = dict(n=4, p=1, degrees=(2, 3, 4), deg_F=3)
CURVE = dict(n=3, p=1, degrees=(1, 2, 3), deg_F=2, index_set=(1, 2))
PB = dict(n=4, m=2, k=3, r=1, deg_F=2)

CASES = [
    {"theorem": "cor1.2", "args": dict(deg_F=2, deg_G=4), "expected": _r(2, 4, True)},
    {"theorem": "cor1.2", "args": dict(deg_F=5, deg_G=3), "expected": _r(5, 3, False)},
    {"theorem": "cor1.4", "args": dict(deg_D=3, dim_D=2, deg_G=1), "expected": _r(3, 2, False)},
    {"theorem": "cor1.4", "args": dict(deg_D=2, dim_D=2, deg_G=3), "expected": _r(2, 6, True)},
    {"theorem": "cor1.5", "args": dict(n=3, deg_F=1, deg_G=2), "expected": {"verdict": "NotExcluded"}},
    {"theorem": "cor1.5", "args": dict(n=5, deg_F=3, deg_G=2), "expected": {"verdict": "NotExcluded"}},
    {"theorem": "cor1.5", "args": dict(n=5, deg_F=1, deg_G=2), "expected": {"verdict": "NoSuchFlag"}},
    {"theorem": "cor1.5", "args": dict(n=4, deg_F=1, deg_G=2), "expected": {"verdict": "NoSuchFlag"}},
    {"theorem": "cor1.7", "args": dict(m=2), "expected": {"verdict": "SemistableOnly"}},
    {"theorem": "cor1.7", "args": dict(m=4), "expected": {"verdict": "Stable"}},
    {"theorem": "thm6.1", "case": "SmoothHypersurface", "args": dict(LOG_A, index=2), "expected": _r(7, 8, True)},
    {"theorem": "thm6.1", "case": "NormalCrossing", "args": dict(LOG_A, index=2), "expected": _r(7, 11, True)},
    {"theorem": "thm6.1", "case": "CurveSmooth", "args": CURVE, "expected": _r(4, 5, True)},
    {"theorem": "thm6.1", "case": "CurveNodal", "args": CURVE, "expected": _r(4, 6, True)},
    {"theorem": "thm6.1", "case": "CI_Regularity", "args": dict(LOG_A, index_set=(1, 2), regularity=2),
     "expected": _r(7, 7, True)},
    {"theorem": "thm6.1", "case": "CI_Regularity", "args": dict(LOG_A, index_set=(1, 2), regularity=9),
     "expected": _r(7, "21/2", True)},
    {"theorem": "thm6.1", "case": "CI_NonsingCodim1", "args": dict(LOG_A, index_set=(1, 2)),
     "expected": _r(7, 8, True)},
    {"theorem": "cor6.2", "args": dict(n=5, abs_d=5, d_i=3), "expected": {"verdict": "Stable"}},
    {"theorem": "cor6.2", "args": dict(n=4, abs_d=4, d_i=2), "expected": {"verdict": "Semistable"}},
    {"theorem": "cor6.2", "args": dict(n=4, abs_d=6, d_i=2), "expected": {"verdict": "Inconclusive"}},
    {"theorem": "thm6.3", "case": "InvariantSmooth", "args": dict(PB, d=2), "expected": _r(8, "11/2", False)},
    {"theorem": "thm6.3", "case": "InvariantNC", "args": dict(PB, d=2), "expected": _r(8, 13, True)},
    {"theorem": "thm6.3", "case": "SingCompIntRegularity", "args": dict(PB, degrees=(1, 1), regularity=1),
     "expected": _r(8, 8, True)},
    {"theorem": "thm6.3", "case": "SingCompIntRegularity", "args": dict(PB, degrees=(1, 1), regularity=5),
     "expected": _r(8, 13, True)},
    {"theorem": "thm6.3", "case": "SingCompIntNonsingCodim1", "args": dict(PB, degrees=(1, 1)),
     "expected": _r(8, "21/2", True)},
    {"theorem": "cor6.4", "case": "Regularity", "args": dict(n=4, m=2, k=3, deg_F=2, regularity=1),
     "expected": _r(8, 8, True)},
    {"theorem": "cor6.4", "case": "Regularity", "args": dict(n=4, m=2, k=3, deg_F=2, regularity=5),
     "expected": _r(8, 13, True)},
    {"theorem": "cor6.4", "case": "NonsingCodim1", "args": dict(n=4, m=2, k=3, deg_F=2),
     "expected": _r(8, "21/2", True)},
    {"theorem": "thm6.5", "case": "General", "args": dict(deg_D=2, omega_degrees=(3, 4)), "expected": _r(3, 3, True)},
    {"theorem": "thm6.5", "case": "CompleteIntersection", "args": dict(deg_D=2, omega_degrees=(4, 5)),
     "expected": _r(3, 2, False)},
    {"theorem": "thm6.5", "case": "EqualDegrees", "args": dict(deg_D=2, omega_degrees=(3, 3)),
     "expected": _r(5, 5, True)},
    {"theorem": "cor6.6", "args": dict(n=3, k=1, d=1), "expected": {"verdict": "Inconclusive"}},
    {"theorem": "cor6.6", "args": dict(n=3, k=1, d=2), "expected": {"verdict": "Semistable"}},
    {"theorem": "cor6.6", "args": dict(n=5, k=2, d=3), "expected": {"verdict": "Stable"}},
]


def evaluate(case):
    th, a, c = case["theorem"], case["args"], case.get("case")
    if th == "cor1.2":
        rep = bounds.corollary_1_2_check(**a)
    elif th == "cor1.4":
        rep = bounds.corollary_1_4_check(**a)
    elif th == "cor1.5":
        return {"verdict": bounds.corollary_1_5_verdict(**a).value}
    elif th == "cor1.7":
        return {"verdict": bounds.corollary_1_7_verdict(**a).value}
    elif th == "cor6.2":
        return {"verdict": bounds.corollary_6_2_verdict(**a).value}
    elif th == "cor6.6":
        return {"verdict": bounds.corollary_6_6_verdict(**a).value}
    elif th == "thm6.1":
        rep = bounds.logarithmic_bounds(bounds.LogarithmicData(**a), c)
    elif th == "thm6.3":
        rep = bounds.pullback_bounds(bounds.PullbackData(**a), c)
    elif th == "cor6.4":
        rep = bounds.corollary_6_4_bounds(case=c, **a)
    elif th == "thm6.5":
        rep = bounds.decomposable_bound(variant=c, **a)
    else:
        raise KeyError(th)
    return {"lhs": str(rep.lhs), "rhs": str(rep.rhs), "holds": rep.holds}
