import json
import subprocess
import sys

import pytest

from qunify.alphafam import builtin_family, families_equal, load_family
from qunify.cli import main
from qunify.exactnum import ONE, Q, parse_qrat
from qunify.formats import load_polys_json, load_table_json
from qunify.qnumbers import qnumber_poly

IMPROVED_ODD = "1=1,3=(1+q)(1+q^2)/4,5=(1+q)(1+q^2)(1+q^3)(1+q^4)/16," \
               "7=(1+q)(1+q^2)(1+q^3)(1+q^4)(1+q^5)(1+q^6)/64"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_numbers_json(capsys):
    code, out, _ = run(capsys, "numbers", "--family", "improved", "--kind", "bernoulli",
                       "--n", "6", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1 and doc["kind"] == "bernoulli" and doc["family"] == "improved"
    assert doc["entries"]["1"] == "-1/2"
    assert load_table_json(out)["entries"][3] == 0


def test_numbers_csv(capsys):
    code, out, _ = run(capsys, "numbers", "--family", "gauss", "--kind", "genocchi", "--n", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,value" and lines[1] == "0,0" and len(lines) == 6
    code, out, _ = run(capsys, "numbers", "--family", "ones", "--kind", "euler", "--n", "0")
    assert out.splitlines()[1] == "0,1"


def test_numbers_all_kinds_and_latex(capsys):
    code, out, _ = run(capsys, "numbers", "--kind", "all", "--n", "3", "--format", "latex")
    assert code == 0 and out.startswith("\\begin{tabular}") and "\\mathfrak{G}" in out
    code, out, _ = run(capsys, "numbers", "--kind", "all", "--n", "3", "--format", "json")
    assert [t["kind"] for t in json.loads(out)["tables"]] == ["bernoulli", "euler", "genocchi"]


def test_order_is_raised_with_notice(capsys):
    code, _, err = run(capsys, "numbers", "--n", "6", "--order", "2")
    assert code == 0 and "raised" in err


def test_polys_json_round_trip(capsys):
    code, out, _ = run(capsys, "polys", "--family", "improved", "--n", "4", "--bivariate",
                       "--format", "json")
    assert code == 0
    back = load_polys_json(out)
    fam = builtin_family("improved")
    assert back["polys"] == [qnumber_poly("bernoulli", fam, n, bivariate=True) for n in range(5)]
    code, out, _ = run(capsys, "polys", "--n", "2", "--format", "latex")
    assert "\\begin{align*}" in out


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "--family", "half_gauss", "--suite", "symmetry",
                       "--n", "10")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--family", "ones", "--suite", "inverse", "--n", "10",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    flagged = [c for c in doc["reports"][0]["checks"] if c["status"] == "hypothesis-failed"]
    assert flagged[0]["n"] == 2 and parse_qrat(flagged[0]["lhs"]) == ONE - Q
    code, out, _ = run(capsys, "verify", "--family", "improved", "--suite", "all", "--n", "8")
    assert code == 0


def test_verify_violation_exit_code(tmp_path, capsys):
    # alpha_2 = 2 does not tend to 1, so the classical limits are wrong
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"schema": 1, "name": "bad", "provenance": "custom-closed-form",
                                "entries": {"0": "1", "1": "1", "2": "2", "3": "1"}}))
    code, out, _ = run(capsys, "verify", "--family", str(path), "--suite", "classical-limit",
                       "--n", "2")
    assert code == 3
    assert "fail" in out.lower()


def test_solve_alpha(tmp_path, capsys):
    code, out, _ = run(capsys, "solve-alpha", "--ones", "--n", "8")
    assert code == 0
    fam = load_family(out)
    assert fam(2) == (ONE + Q) / 2 and fam.provenance == "solver"
    code, out, _ = run(capsys, "solve-alpha", "--ones", "--n", "0")
    assert json.loads(out)["entries"] == {"0": "1"}
    target = tmp_path / "improved.json"
    code, out, _ = run(capsys, "solve-alpha", "--odd", IMPROVED_ODD, "--n", "8",
                       "--out", str(target))
    assert code == 0 and "alpha_2 = (1+q)/2" in out
    assert families_equal(load_family(target.read_text()), builtin_family("improved"), 8)
    code, _, _ = run(capsys, "verify", "--family", str(target), "--suite",
                     "odd-vanishing,inverse", "--n", "7")
    assert code == 0


def test_solve_alpha_missing_odd_entries(capsys):
    code, _, err = run(capsys, "solve-alpha", "--odd", "1=1,3=(1+q)(1+q^2)/4", "--n", "8")
    assert code == 2 and "[5, 7]" in err


def test_radius(capsys):
    for fam, want in (("ones", "4/3"), ("gauss", "infinity"), ("improved", "8/3")):
        code, out, _ = run(capsys, "radius", "--family", fam, "--q", "1/4", "--n", "200")
        assert code == 0 and out.split(": ")[1].split()[0] == want
    code, out, _ = run(capsys, "radius", "--family", "ones", "--q", "1/4", "--n", "200",
                       "--format", "json")
    assert json.loads(out)["value"] == "4/3"


@pytest.mark.parametrize("argv", [
    ["numbers", "--family", "nope"],
    ["numbers", "--kind", "catalan"],
    ["verify", "--suite", "nope"],
    ["radius", "--q", "2"],
    ["radius", "--q", "1/2"],
    ["radius", "--q", "abc"],
    ["solve-alpha", "--ones", "--n", "3"],
    ["solve-alpha", "--odd", "1=2", "--n", "2"],
    ["solve-alpha", "--odd", "1=(", "--n", "2"],
])
def test_input_errors(argv, capsys):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_io_errors(tmp_path, capsys):
    code, _, _ = run(capsys, "numbers", "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 1
    bad = tmp_path / "fam.json"
    bad.write_text("{not json")
    code, _, _ = run(capsys, "numbers", "--family", str(bad))
    assert code == 2


def test_solve_spec_family(capsys):
    code, out, _ = run(capsys, "numbers", "--family", "solve:ones", "--n", "11")
    assert code == 0
    rows = dict(line.split(",") for line in out.splitlines()[1:])
    assert rows["1"] == "-1/2" and all(rows[str(n)] == "0" for n in range(3, 12, 2))


def test_deterministic_output(capsys):
    argv = ["polys", "--kind", "euler", "--n", "5", "--bivariate", "--format", "json"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qunify", "numbers", "--n", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.splitlines()[2] == "1,-1/2"


def test_radius_default_n(capsys):
    code, out, _ = run(capsys, "radius", "--family", "ones", "--q", "4/9")
    assert code == 0 and "n=200" in out and ": 9/5" in out


def test_default_n_is_per_command(capsys):
    code, out, _ = run(capsys, "numbers")
    assert code == 0 and len(out.splitlines()) == 1 + 9
