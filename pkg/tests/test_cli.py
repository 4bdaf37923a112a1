import io
import json
import subprocess
import sys

import pytest

from pfaffcount.cli import SCHEMA, run
from pfaffcount.flags import example_5_1
from pfaffcount.polyforms import dump_json, load_json


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv)
    return code, json.loads(out) if out.strip() else None


def test_count_forms_vanishing_case():
    code, data = call_json("count-forms", "--n", "3", "--d", "2", "--m", "1", "--r", "1")
    assert code == 0 and data["count"] == 0 and data["schema"] == SCHEMA


def test_count_fields():
    code, data = call_json("count-fields", "--n", "3", "--m", "1", "--d", "2")
    assert code == 0 and data["count"] == 6


def test_count_fields_precondition_is_exit_1():
    code, data = call_json("count-fields", "--n", "3", "--m", "1", "--d", "3")
    assert code == 1 and "error" in data


def test_bounds_flag_style_and_params_style():
    code, data = call_json("bounds", "cor1.2", "--deg-f", "2", "--deg-g", "4")
    assert code == 0 and (data["holds"], data["lhs"], data["rhs"]) == (True, 2, 4)
    code2, data2 = call_json("bounds", "cor1.2", "--params", "deg_f=2", "deg_g=4")
    assert code2 == 0 and data2 == data


@pytest.mark.parametrize("argv", [
    ("bounds", "cor1.2", "--bogus", "1"),
    ("bounds", "thm6.1", "--params", "n=4"),
    ("bounds", "thm6.5", "--case", "Nope", "--params", "deg_d=1", "omega_degrees=2"),
    ("bounds", "cor1.2", "--case", "General", "--deg-f", "1", "--deg-g", "1"),
    ("count-forms", "--n", "3"),
    ("count-forms", "--n", "2", "--d", "1", "--m", "1", "--r", "1"),
    ("frobnicate",),
    ("oracle-forms", "--m", "1", "--r", "1"),
    ("check-flag", "--form", "/nonexistent.json", "--example", "5.1", "--d", "1"),
])
def test_usage_errors_exit_2(argv):
    code, _, err = call(*argv)
    assert code == 2


def test_bounds_fraction_output():
    code, data = call_json("bounds", "thm6.3", "--case", "SingCompIntNonsingCodim1", "--params",
                           "n=4", "m=2", "k=3", "r=1", "deg_f=2", "degrees=1,1")
    assert code == 0 and data["rhs"] == "21/2" and data["lhs"] == 8


def test_bounds_verdicts():
    assert call_json("bounds", "cor1.7", "--m", "2")[1]["verdict"] == "SemistableOnly"
    assert call_json("bounds", "cor6.6", "--n", "5", "--k", "2", "--d", "3")[1]["verdict"] == "Stable"
    assert call_json("bounds", "cor1.5", "--n", "3", "--deg-f", "1", "--deg-g", "2")[1]["verdict"] == "NotExcluded"


def test_bott():
    assert call_json("bott", "--n", "3", "--q", "0", "--p", "1", "--k", "4")[1]["h"] == 45
    assert call_json("bott", "--sheaf", "tangent", "--n", "3", "--s", "0", "--r", "1", "--t", "0")[1]["h"] == 15


def test_slope_formats():
    assert call_json("slope", "--dim", "2", "--deg", "3")[1]["slope"] == "-1/2"
    code, out, _ = call("slope", "--dim", "2", "--deg", "3", "--format", "csv")
    assert out.splitlines()[0].split(",") == ["command", "deg", "dim", "schema", "slope"]
    code, out, _ = call("slope", "--dim", "2", "--deg", "3", "--format", "human")
    assert "slope: -1/2" in out


def test_oracle_forms_example():
    code, data = call_json("oracle-forms", "--example", "5.1", "--d", "1", "--a", "1,-1,2,3",
                           "--m", "2", "--r", "1", "--emit-forms")
    assert code == 0 and data["count"] == data["formula"] == 14
    assert len(data["forms"]) == 14
    for f in data["forms"]:
        assert load_json(json.dumps(f)).r == 1


def test_oracle_forms_random_is_seeded():
    a = call_json("oracle-forms", "--random", "--n", "3", "--d", "1", "--m", "1", "--r", "1", "--seed", "7")
    b = call_json("oracle-forms", "--random", "--n", "3", "--d", "1", "--m", "1", "--r", "1", "--seed", "7")
    assert a == b and a[1]["count"] == 4


def test_oracle_fields_random():
    code, data = call_json("oracle-fields", "--random", "--n", "3", "--m", "1", "--target-degree", "2")
    assert code == 0 and data["count"] == 6 and data["agree"]


def test_json_file_inputs(tmp_path):
    X, w = example_5_1(2, (1, 2, 3, 4))
    fx, fw = tmp_path / "x.json", tmp_path / "w.json"
    fx.write_text(dump_json(X))
    fw.write_text(dump_json(w))
    code, data = call_json("check-flag", "--field", str(fx), "--form", str(fw))
    assert code == 0 and data["flag"] and data["pointwise"]
    assert call_json("check-integrable", "--form", str(fw))[1]["integrable"]
    code, _, _ = call("check-decomposable", "--form", str(fw))
    assert code == 2  # a 1-form
    code, _, _ = call("check-flag", "--field", str(fw), "--form", str(fw))
    assert code == 2


def test_example_export_roundtrip(tmp_path):
    code, data = call_json("example", "--example", "5.1", "--d", "1", "--what", "form")
    assert code == 0
    w = load_json(json.dumps(data["object"]))
    assert w == example_5_1(1, (1, 1, 1, 1))[1]


def test_verify_grid_bott_passes():
    code, data = call_json("verify-grid", "--grid", "bott")
    assert code == 0 and data["failed"] == 0 and len(data["rows"]) == 25


def test_verify_grid_column_cap_is_failure():
    code, data = call_json("verify-grid", "--grid", "bott", "--max-columns", "10")
    assert code == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pfaffcount", "count-fields", "--n", "3", "--m", "1", "--d", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["count"] == 6
