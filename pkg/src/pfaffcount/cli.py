"""Command-line front end.

Exit codes: 0 success, 1 computation-level failure (grid mismatch, formula
precondition violated, singular input), 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from pfaffcount import bounds, counting, flags, grids
from pfaffcount.bott import h_omega, h_tangent
from pfaffcount.polyforms import (
    PolyForm,
    PolyVectorField,
    load_json,
    random_field,
    random_projective_form,
)

SCHEMA = "pfaffcount/1"


class UsageError(Exception):
    pass


class ComputationFailure(Exception):
    pass


def _num(v):
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return v if -(2 ** 63) <= v < 2 ** 63 else str(v)
    if isinstance(v, Fraction):
        return _num(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, dict):
        return {k: _num(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_num(x) for x in v]
    return v


def render(payload: dict, fmt: str) -> str:
    payload = {"schema": SCHEMA, **_num(payload)}
    if fmt == "json":
        return json.dumps(payload, sort_keys=True)
    rows = payload.get("rows")
    if fmt == "csv":
        buf = io.StringIO()
        if rows is not None:
            header = list(rows[0]) if rows else []
            w = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
        else:
            flat = {k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in payload.items()}
            w = csv.DictWriter(buf, fieldnames=sorted(flat), lineterminator="\n")
            w.writeheader()
            w.writerow(flat)
        return buf.getvalue().rstrip("\n")
    lines = [f"{k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}"
             for k, v in sorted(payload.items()) if k != "rows"]
    if rows:
        header = list(rows[0])
        widths = [max(len(h), *(len(str(r[h])) for r in rows)) for h in header]
        lines.append("  ".join(h.ljust(w) for h, w in zip(header, widths)))
        for r in rows:
            lines.append("  ".join(str(r[h]).ljust(w) for h, w in zip(header, widths)))
    return "\n".join(lines)


def _coeffs(text: str) -> List[Fraction]:
    try:
        return [Fraction(x) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad coefficient list {text!r}: {exc}")


def _read(path: str):
    try:
        with open(path) as fh:
            return load_json(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    except (KeyError, ValueError, TypeError) as exc:
        raise UsageError(f"{path} is not a valid form/field JSON: {exc}")


def _need(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError("missing required option(s): " + ", ".join("--" + n.replace("_", "-") for n in missing))


def _field_source(args) -> PolyVectorField:
    if args.field:
        X = _read(args.field)
        if not isinstance(X, PolyVectorField):
            raise UsageError(f"{args.field} does not hold a vector field")
        return X
    if args.example == "5.1":
        _need(args, "d")
        return flags.example_5_1(args.d, _coeffs(args.a))[0]
    if args.example == "paired":
        _need(args, "n", "d")
        a = _coeffs(args.a) if args.a else [1] * (args.n + 1)
        return counting.example_field(args.n, args.d, a)
    if args.random:
        _need(args, "n", "d")
        return random_field(args.n, args.d, random.Random(args.seed))
    raise UsageError("give one of --field, --example, --random")


def _form_source(args, attr: str = "form") -> PolyForm:
    path = getattr(args, attr, None)
    if path:
        w = _read(path)
        if not isinstance(w, PolyForm):
            raise UsageError(f"{path} does not hold a form")
        return w
    if getattr(args, "example", None) == "5.1":
        _need(args, "d")
        return flags.example_5_1(args.d, _coeffs(args.a))[1]
    raise UsageError(f"give --{attr.replace('_', '-')} or --example 5.1")


# -- subcommands -----------------------------------------------------------


def cmd_bott(args) -> dict:
    _need(args, "n", "degree", "rank", "twist")
    fn = h_omega if args.sheaf == "omega" else h_tangent
    return {"command": "bott", "sheaf": args.sheaf, "n": args.n, "degree": args.degree,
            "rank": args.rank, "twist": args.twist, "h": fn(args.n, args.degree, args.rank, args.twist)}


def cmd_count_forms(args) -> dict:
    q = counting.PfaffCountQuery(args.n, args.d, args.m, args.r)
    return {"command": "count-forms", "n": q.n, "d": q.d, "m": q.m, "r": q.r,
            "count": counting.pfaff_count(q)}


def cmd_count_fields(args) -> dict:
    q = counting.VfCountQuery(args.n, args.m, args.d)
    try:
        count = counting.vf_count(q)
    except counting.PreconditionViolated as exc:
        raise ComputationFailure(f"precondition violated: {exc}")
    return {"command": "count-fields", "n": q.n, "m": q.m, "d": q.d, "count": count}


def cmd_oracle_forms(args) -> dict:
    X = _field_source(args)
    d = X.homogeneous_degree()
    if d is None:
        raise UsageError("vector field must be nonzero and homogeneous")
    forms = counting.invariant_forms(X, args.m, args.r)
    count = counting.oracle_pfaff_count(X, args.m, args.r)
    out = {"command": "oracle-forms", "n": X.n, "d": d, "m": args.m, "r": args.r, "count": count}
    if X.n >= 3 and d >= 1:
        out["formula"] = counting.pfaff_count(counting.PfaffCountQuery(X.n, d, args.m, args.r))
        out["agree"] = out["formula"] == count
    if args.emit_forms:
        out["forms"] = [w.to_json() for w in forms]
    return out


def cmd_oracle_fields(args) -> dict:
    if args.random:
        _need(args, "n", "m")
        w = random_projective_form(args.n, 1, args.m, random.Random(args.seed))
    else:
        w = _form_source(args)
    m = w.homogeneous_degree() - 1 if w.homogeneous_degree() is not None else None
    try:
        count = counting.oracle_vf_count(w, args.target_degree)
    except ValueError as exc:
        raise UsageError(str(exc))
    out = {"command": "oracle-fields", "n": w.n, "m": m, "d": args.target_degree, "count": count}
    try:
        out["formula"] = counting.vf_count(counting.VfCountQuery(w.n, m, args.target_degree))
        out["agree"] = out["formula"] == count
    except (counting.PreconditionViolated, ValueError) as exc:
        out["formula"] = None
        out["note"] = str(exc)
    return out


def cmd_check_flag(args) -> dict:
    rng = random.Random(args.seed)
    upper = _form_source(args)
    if args.lower_form:
        lower = _form_source(args, "lower_form")
        witness = flags.FlagWitness(lower, upper, flags.FlagKind.FORM_FORM_POINTWISE)
        try:
            ok = witness.check(rng, args.points)
        except flags.SingularPointError as exc:
            raise ComputationFailure(str(exc))
        return {"command": "check-flag", "kind": witness.kind.value, "flag": ok,
                "points": args.points, "certified": False}
    X = _field_source(args)
    witness = flags.FlagWitness(X, upper, flags.FlagKind.VF_FORM)
    exact = witness.check()
    try:
        pointwise = flags.check_flag_pointwise(flags.foliation_form(X), upper, rng, args.points)
    except flags.SingularPointError as exc:
        pointwise = None
        note = str(exc)
    else:
        note = ""
    return {"command": "check-flag", "kind": witness.kind.value, "flag": exact, "certified": True,
            "pointwise": pointwise, "points": args.points, "note": note}


def cmd_check_integrable(args) -> dict:
    w = _form_source(args)
    try:
        ok = flags.check_integrability_codim1(w)
    except ValueError as exc:
        raise UsageError(str(exc))
    return {"command": "check-integrable", "integrable": ok}


def cmd_check_decomposable(args) -> dict:
    w = _form_source(args)
    try:
        ok = flags.check_decomposable_2form(w)
    except ValueError as exc:
        raise UsageError(str(exc))
    return {"command": "check-decomposable", "decomposable": ok}


def cmd_slope(args) -> dict:
    try:
        mu = bounds.slope(args.dim, args.deg)
    except ValueError as exc:
        raise UsageError(str(exc))
    return {"command": "slope", "dim": args.dim, "deg": args.deg, "slope": mu}


def cmd_verify_grid(args) -> dict:
    names = args.grid or list(grids.GRIDS)
    try:
        results = grids.verify_grid(names, seed=args.seed, max_columns=args.max_columns, jobs=args.jobs)
    except ValueError as exc:
        raise ComputationFailure(str(exc))
    rows = [r.row() for r in results]
    failed = sum(1 for r in results if not r.ok)
    payload = {"command": "verify-grid", "grids": names, "seed": args.seed,
               "passed": len(rows) - failed, "failed": failed, "rows": rows}
    if failed:
        payload["_exit"] = 1
    return payload


def cmd_example(args) -> dict:
    if args.example == "5.1":
        _need(args, "d")
        X, w = flags.example_5_1(args.d, _coeffs(args.a))
    else:
        _need(args, "n", "d")
        X, w = counting.example_field(args.n, args.d, _coeffs(args.a) if args.a else [1] * (args.n + 1)), None
    if args.what == "field":
        return {"command": "example", "object": X.to_json()}
    if w is None:
        raise UsageError("the paired example only provides a field")
    return {"command": "example", "object": w.to_json()}


# -- bounds ------------------------------------------------------------------


def _int(v: str) -> int:
    try:
        return int(v)
    except ValueError:
        raise UsageError(f"expected an integer, got {v!r}")


def _ints(v: str) -> tuple:
    return tuple(_int(x) for x in v.split(",") if x.strip())


BOUND_PARAMS: Dict[str, Dict[str, Callable]] = {
    "cor1.2": {"deg_f": _int, "deg_g": _int},
    "cor1.4": {"deg_d": _int, "dim_d": _int, "deg_g": _int},
    "cor1.5": {"n": _int, "deg_f": _int, "deg_g": _int},
    "cor1.7": {"m": _int},
    "thm6.1": {"n": _int, "p": _int, "degrees": _ints, "deg_f": _int, "index": _int,
               "index_set": _ints, "regularity": _int},
    "cor6.2": {"n": _int, "abs_d": _int, "d_i": _int},
    "thm6.3": {"n": _int, "m": _int, "k": _int, "r": _int, "deg_f": _int, "d": _int,
               "degrees": _ints, "regularity": _int},
    "cor6.4": {"n": _int, "m": _int, "k": _int, "deg_f": _int, "regularity": _int},
    "thm6.5": {"deg_d": _int, "omega_degrees": _ints},
    "cor6.6": {"n": _int, "k": _int, "d": _int},
}
BOUND_CASES = {
    "thm6.1": [c.value for c in bounds.LogCase],
    "thm6.3": [c.value for c in bounds.PullbackCase],
    "cor6.4": [c.value for c in bounds.Cor64Case],
    "thm6.5": [c.value for c in bounds.DecomposableVariant],
}


def _parse_bound_params(theorem: str, pairs: Sequence[str], extra: Sequence[str]) -> dict:
    allowed = BOUND_PARAMS[theorem]
    raw: Dict[str, str] = {}
    for item in pairs or ():
        if "=" not in item:
            raise UsageError(f"--params expects key=value, got {item!r}")
        k, v = item.split("=", 1)
        raw[k.strip().replace("-", "_")] = v
    it = iter(extra)
    for tok in it:
        if not tok.startswith("--"):
            raise UsageError(f"unexpected argument {tok!r}")
        key = tok[2:]
        if "=" in key:
            key, v = key.split("=", 1)
        else:
            v = next(it, None)
            if v is None:
                raise UsageError(f"option {tok} needs a value")
        raw[key.replace("-", "_")] = v
    unknown = sorted(set(raw) - set(allowed))
    if unknown:
        raise UsageError(f"unknown parameter(s) for {theorem}: {', '.join(unknown)}; "
                         f"allowed: {', '.join(allowed)}")
    return {k: allowed[k](v) for k, v in raw.items()}


def cmd_bounds(args, extra: Sequence[str]) -> dict:
    th = args.theorem
    p = _parse_bound_params(th, args.params, extra)
    cases = BOUND_CASES.get(th)
    if cases is not None and args.case not in cases:
        raise UsageError(f"{th} needs --case, one of {', '.join(cases)}")
    if cases is None and args.case is not None:
        raise UsageError(f"{th} takes no --case")

    def need(*keys):
        missing = [k for k in keys if k not in p]
        if missing:
            raise UsageError(f"{th} needs parameter(s): {', '.join(missing)}")

    out: dict = {"command": "bounds", "theorem": th}
    try:
        if th == "cor1.2":
            need("deg_f", "deg_g")
            rep = bounds.corollary_1_2_check(p["deg_f"], p["deg_g"])
        elif th == "cor1.4":
            need("deg_d", "dim_d", "deg_g")
            rep = bounds.corollary_1_4_check(p["deg_d"], p["dim_d"], p["deg_g"])
        elif th == "cor1.5":
            need("n", "deg_f", "deg_g")
            return {**out, "verdict": bounds.corollary_1_5_verdict(p["n"], p["deg_f"], p["deg_g"]).value}
        elif th == "cor1.7":
            need("m")
            m = p["m"]
            return {**out, "verdict": bounds.corollary_1_7_verdict(m).value,
                    "slope_distribution": bounds.slope(2, m), "slope_subfoliation": bounds.slope(1, m - 1)}
        elif th == "cor6.2":
            need("n", "abs_d", "d_i")
            return {**out, "verdict": bounds.corollary_6_2_verdict(p["n"], p["abs_d"], p["d_i"]).value}
        elif th == "cor6.6":
            need("n", "k", "d")
            return {**out, "verdict": bounds.corollary_6_6_verdict(p["n"], p["k"], p["d"]).value}
        elif th == "thm6.1":
            need("n", "p", "degrees", "deg_f")
            data = bounds.LogarithmicData(p["n"], p["p"], p["degrees"], p["deg_f"], p.get("index"),
                                          p.get("index_set"), p.get("regularity"))
            rep = bounds.logarithmic_bounds(data, args.case)
        elif th == "thm6.3":
            need("n", "m", "k", "r", "deg_f")
            data = bounds.PullbackData(p["n"], p["m"], p["k"], p["r"], p["deg_f"], p.get("d"),
                                       p.get("degrees"), p.get("regularity"))
            rep = bounds.pullback_bounds(data, args.case)
        elif th == "cor6.4":
            need("n", "m", "k", "deg_f")
            rep = bounds.corollary_6_4_bounds(p["n"], p["m"], p["k"], p["deg_f"], args.case, p.get("regularity"))
        else:
            need("deg_d", "omega_degrees")
            rep = bounds.decomposable_bound(p["deg_d"], p["omega_degrees"], args.case)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc))
    return {**out, **rep.to_json()}


# -- parser ------------------------------------------------------------------


def _seed(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit natural number")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_seed, default=0, help="seed for every randomized input")
    common.add_argument("--format", choices=("json", "csv", "human"), default="json")

    parser = argparse.ArgumentParser(prog="pfaffcount", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bott", parents=[common], help="Bott formula dimensions")
    p.add_argument("--sheaf", choices=("omega", "tangent"), default="omega")
    p.add_argument("--n", type=int)
    p.add_argument("--q", "--s", dest="degree", type=int, help="cohomological degree")
    p.add_argument("--p", "--r", dest="rank", type=int, help="form / multivector degree")
    p.add_argument("--k", "--t", dest="twist", type=int, help="twist")
    p.set_defaults(func=cmd_bott)

    p = sub.add_parser("count-forms", parents=[common], help="invariant twisted r-forms")
    for name in ("n", "d", "m", "r"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.set_defaults(func=cmd_count_forms)

    p = sub.add_parser("count-fields", parents=[common], help="fields tangent to a distribution")
    for name in ("n", "m", "d"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.set_defaults(func=cmd_count_fields)

    def field_options(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--field", help="vector field JSON file")
        g.add_argument("--example", choices=("5.1", "paired"))
        g.add_argument("--random", action="store_true", help="seeded random homogeneous field")
        p.add_argument("--n", type=int)
        p.add_argument("--d", type=int, help="degree of the field")
        p.add_argument("--a", default="1,1,1,1", help="comma-separated nonzero coefficients")

    p = sub.add_parser("oracle-forms", parents=[common], help="kernel count of invariant forms")
    field_options(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--emit-forms", action="store_true")
    p.set_defaults(func=cmd_oracle_forms)

    p = sub.add_parser("oracle-fields", parents=[common], help="kernel count of tangent fields")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--form", help="projective 1-form JSON file")
    g.add_argument("--example", choices=("5.1",))
    g.add_argument("--random", action="store_true", help="seeded random projective 1-form")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int, help="degree of the random 1-form")
    p.add_argument("--d", type=int, help="degree used by --example 5.1")
    p.add_argument("--a", default="1,1,1,1")
    p.add_argument("--target-degree", type=int, required=True, help="degree of the counted fields")
    p.set_defaults(func=cmd_oracle_fields)

    p = sub.add_parser("check-flag", parents=[common], help="i_X w = 0 or pointwise kernel containment")
    field_options(p)
    p.add_argument("--form", help="upper form JSON file")
    p.add_argument("--lower-form", help="lower form JSON file (pointwise check)")
    p.add_argument("--points", type=int, default=20)
    p.set_defaults(func=cmd_check_flag)

    for name, func, r in (("check-integrable", cmd_check_integrable, "w ^ dw = 0"),
                          ("check-decomposable", cmd_check_decomposable, "w ^ w = 0")):
        p = sub.add_parser(name, parents=[common], help=r)
        p.add_argument("--form")
        p.add_argument("--example", choices=("5.1",))
        p.add_argument("--d", type=int)
        p.add_argument("--a", default="1,1,1,1")
        p.set_defaults(func=func)

    p = sub.add_parser("bounds", parents=[common], help="degree inequalities and stability verdicts")
    p.add_argument("theorem", choices=sorted(BOUND_PARAMS))
    p.add_argument("--case")
    p.add_argument("--params", nargs="*", metavar="KEY=VALUE")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("slope", parents=[common], help="(dim - deg)/dim")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--deg", type=int, required=True)
    p.set_defaults(func=cmd_slope)

    p = sub.add_parser("verify-grid", parents=[common], help="formula vs oracle grids")
    p.add_argument("--grid", action="append", choices=grids.GRIDS)
    p.add_argument("--max-columns", type=int, default=20000)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify_grid)

    p = sub.add_parser("example", parents=[common], help="write a named example as JSON")
    p.add_argument("--example", choices=("5.1", "paired"), default="5.1")
    p.add_argument("--what", choices=("field", "form"), default="form")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--a", default="1,1,1,1")
    p.set_defaults(func=cmd_example)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args, extra = parser.parse_known_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    fmt = args.format
    try:
        if args.command == "bounds":
            payload = cmd_bounds(args, extra)
        elif extra:
            raise UsageError(f"unrecognized arguments: {' '.join(extra)}")
        else:
            payload = args.func(args)
    except UsageError as exc:
        print(parser.format_usage().rstrip(), file=stderr)
        print(f"error: {exc}", file=stderr)
        return 2
    except ComputationFailure as exc:
        print(render({"command": args.command, "error": str(exc)}, fmt), file=stdout)
        return 1
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    code = payload.pop("_exit", 0)
    print(render(payload, fmt), file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
