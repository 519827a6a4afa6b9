import io
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tckit.cli import run_command
from tckit.errors import CategoryValidationError, ParseError
from tckit.fileformat import decode_scalar, encode_scalar, export_category, load_category, loads_category
from tckit.library import BUILTIN_NAMES, builtin
from tckit.scalars import QQ, cyclotomic, cyclotomic_reduce, prime_field


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


# file format ----------------------------------------------------------------------------


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_export_load_round_trip(name, tmp_path):
    F = builtin(name)
    path = tmp_path / f"{name}.json"
    export_category(F, path)
    G = load_category(path)
    assert G == F and G.name == F.name
    assert export_category(G) == export_category(F)


def test_round_trip_prime_field():
    F = builtin("vec_z3", prime_field(3))
    assert loads_category(export_category(F)) == F


def doc(name="fibonacci"):
    return json.loads(export_category(builtin(name)))


def test_missing_entry_names_hexatuple():
    d = doc()
    dropped = d["F"].pop()
    with pytest.raises(CategoryValidationError) as err:
        loads_category(json.dumps(d))
    assert err.value.witness == tuple(dropped[k] for k in "abcdef")


def test_malformed_scalar_is_parse_error(tmp_path):
    d = doc("vec_z2")
    d["F"][0]["value"] = "1/x"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(d))
    with pytest.raises(ParseError):
        load_category(path)
    code, _, err = run("validate", str(path))
    assert code == 2 and "parse error" in err


def test_pentagon_failure_on_load_and_skip():
    d = doc()
    for item in d["F"]:
        if [item[k] for k in "abcdef"] == ["t", "t", "t", "t", "1", "1"]:
            item["value"] = encode_scalar(-decode_scalar(item["value"], cyclotomic(5)))
    text = json.dumps(d)
    with pytest.raises(CategoryValidationError) as err:
        loads_category(text)
    assert err.value.reason == "pentagon"
    assert loads_category(text, check_pentagon=False).name == "fibonacci"


def test_unknown_label_and_bad_json():
    d = doc("vec_z2")
    d["unit"] = "e"
    with pytest.raises(ParseError):
        loads_category(json.dumps(d))
    with pytest.raises(ParseError):
        loads_category("{not json")


def test_scalar_field_mismatch_is_parse_error():
    with pytest.raises(ParseError):
        decode_scalar({"zeta": 8, "coeffs": ["1"]}, cyclotomic(5))
    with pytest.raises(ParseError):
        decode_scalar({"mod": 5, "val": 1}, prime_field(3))


def test_long_coefficient_lists_are_reduced():
    x = decode_scalar({"zeta": 5, "coeffs": ["3", "1", "0", "0", "1"]}, cyclotomic(5))
    assert x == cyclotomic(5)(3) + cyclotomic(5).zeta() + cyclotomic(5).zeta(4)


@given(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=7), min_size=1, max_size=8), st.sampled_from([3, 5, 8, 12]))
def test_scalar_encoding_round_trip(coeffs, n):
    x = cyclotomic_reduce(coeffs, n)
    assert decode_scalar(json.loads(json.dumps(encode_scalar(x))), x.field) == x


@given(st.fractions(max_denominator=50), st.integers(0, 100))
def test_rational_and_prime_round_trip(q, m):
    assert decode_scalar(encode_scalar(QQ(q)), QQ) == QQ(q)
    F = prime_field(7)
    assert decode_scalar(encode_scalar(F(m)), F) == F(m)


# commands -------------------------------------------------------------------------------


def test_gdim_json_fibonacci():
    code, out, _ = run("gdim", "--builtin", "fibonacci", "--json")
    assert code == 0
    value = decode_scalar(json.loads(out)["value"], cyclotomic(5))
    K = cyclotomic(5)
    assert value == K(3) + K.zeta() + K.zeta(4)


def test_gdim_human_has_approximation():
    code, out, _ = run("gdim", "--builtin", "fibonacci")
    assert code == 0 and "3.618033989" in out


def test_separable_z3_f3_false():
    code, out, _ = run("separable", "--builtin", "vec_z3", "--field", "prime:3")
    assert code == 0 and out.splitlines()[0] == "false"


def test_pivotal_vec_z2_two():
    code, out, _ = run("pivotal", "--builtin", "vec_z2")
    assert code == 0 and "2 pivotal structures" in out
    code, out, _ = run("pivotal", "--builtin", "vec_z2", "--json")
    assert json.loads(out)["count"] == 2


@pytest.mark.parametrize(
    "cmd", ["validate", "norms", "spherical", "quaddual", "window", "separable", "frobenius-check"]
)
def test_category_commands_succeed(cmd):
    code, out, _ = run(cmd, "--builtin", "ising", "--json")
    assert code == 0
    json.loads(out)


def test_window_reports_equality():
    code, out, _ = run("window", "--builtin", "rep_s3", "--json")
    d = json.loads(out)
    assert d["equals_global_dimension"] is True and d["value"] == "6"


def test_validate_reports_pentagon_failure(tmp_path):
    d = doc()
    d["F"][-1]["value"] = {"zeta": 5, "coeffs": ["5"]}
    path = tmp_path / "f.json"
    path.write_text(json.dumps(d))
    code, out, _ = run("validate", str(path))
    assert code == 1 and "FAIL" in out
    code, out, _ = run("gdim", str(path))
    assert code == 1
    # skipping the pentagon does not hide inconsistent data from later checks
    code, _, err = run("gdim", str(path), "--skip-pentagon")
    assert code == 1 and "inconsistent" in err
    export_category(builtin("fibonacci"), path)
    assert run("gdim", str(path), "--skip-pentagon")[0] == 0


def test_category_file_command(tmp_path):
    path = tmp_path / "fib.json"
    assert run("builtin", "export", "fibonacci", "-o", str(path))[0] == 0
    code, out, _ = run("norms", str(path))
    assert code == 0 and "‖t‖" in out


def test_usage_errors_exit_2():
    assert run("frobnicate")[0] == 2
    assert run()[0] == 2
    assert run("gdim")[0] == 2
    assert run("gdim", "--builtin", "vec_z2", "--field", "real")[0] == 2
    assert run("circle-invariant", "x.poly", "--side", "up")[0] == 2


def test_domain_error_exit_1():
    code, _, err = run("gdim", "--builtin", "fibonacci", "--field", "prime:2")
    assert code == 1 and "error" in err
    code, out, _ = run("gdim", "--builtin", "nope", "--json")
    assert code == 1 and json.loads(out)["error"] == "TCKitError"


def test_builtin_list_and_export():
    code, out, _ = run("builtin", "list", "--json")
    assert code == 0 and json.loads(out)["builtins"] == list(BUILTIN_NAMES)
    code, out, _ = run("builtin", "export", "ising")
    assert code == 0 and loads_category(out) == builtin("ising")


def test_circle_invariant_command(tmp_path):
    path = tmp_path / "sq.poly"
    path.write_text("0 0\n1 0\n1 1\n0 1\n")
    code, out, _ = run("circle-invariant", str(path), "--side", "right", "--json")
    assert code == 0 and json.loads(out)["invariant"] == -1
    path.write_text("0 0\n1 0\n")
    assert run("circle-invariant", str(path))[0] == 1
    path.write_text("0 0\nfoo bar\n")
    assert run("circle-invariant", str(path))[0] == 2
    assert run("circle-invariant", str(tmp_path / "missing.poly"))[0] == 2


def test_bordism_check_command(tmp_path):
    path = tmp_path / "r.words"
    path.write_text("lhs = comp(R, Rinv)\nrhs = id(evL)\n")
    code, out, _ = run("bordism", "check", str(path))
    assert code == 0 and "replay validation: pass" in out
    code, out, _ = run("bordism", "check", str(path), "--json")
    d = json.loads(out)
    assert d["proved"] and d["replay_valid"] and len(d["steps"]) == 5
    path.write_text("lhs = comp(v2R, v2)\nrhs = id()\nbudget = 100\n")
    assert run("bordism", "check", str(path))[0] == 1
    path.write_text("lhs = R\nrhs = id(evL)\n")
    assert run("bordism", "check", str(path))[0] == 1
    path.write_text("lhs = comp(R\nrhs = id(evL)\n")
    assert run("bordism", "check", str(path))[0] == 2
