import json

import pytest

from heckez.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.mark.parametrize("argv, expected", [
    (["psi", "--n", "2", "--elem", "gr:2", "--basis", "p"], "(1/(v + 1))*p[2]\n"),
    (["psi", "--n", "2", "--elem", "idem:2", "--basis", "s"], "(1/(v + 1))*s[2]\n"),
    (["psi", "--n", "3", "--elem", "nf:3", "--basis", "p"], "(1/(v^2 + v + 1))*p[3]\n"),
    (["classpoly", "--n", "3", "--w", "3 2 1"], "(3): v - 1, (2,1): v, (1,1,1): 0\n"),
    (["chartable", "--n", "2"], 'lambda,2,"1,1"\n2,v,1\n"1,1",-1,1\n'),
    (["transition", "--n", "2", "--from", "N1", "--to", "GR"],
     'N1\\GR,2,"1,1"\n2,0,1\n"1,1",v - 1,2\n'),
    (["transition", "--n", "2", "--from", "GR", "--to", "GR"],
     'GR\\GR,2,"1,1"\n2,1,0\n"1,1",0,1\n'),
])
def test_outputs(capsys, argv, expected):
    code, out = run(capsys, *argv)
    assert code == 0
    assert out == expected


@pytest.mark.parametrize("n", [0, 2, 3])
def test_verify_all_exit_zero(capsys, n):
    code, out = run(capsys, "verify", "--n", str(n), "--identity", "all")
    assert code == 0
    assert out.rstrip().endswith("ALL PASS")


def test_verify_eq_nt2(capsys):
    code, out = run(capsys, "verify", "--n", "2", "--identity", "eq-nt2")
    assert code == 0 and "PASS eq-nt2 n=2" in out


def test_verify_failure_exit_one(capsys, monkeypatch):
    from heckez import verify
    monkeypatch.setitem(verify.SUITES, "broken", verify.Suite(lambda n: [("x", "y")]))
    code, _ = run(capsys, "verify", "--n", "1", "--identity", "broken")
    assert code == 1


@pytest.mark.parametrize("argv", [
    ["verify", "--n", "2", "--identity", "bogus"],
    ["psi", "--n", "2", "--elem", "gr:2,x"],
    ["psi", "--n", "2", "--elem", "gr:3"],
    ["psi", "--n", "2", "--elem", "zz:2"],
    ["classpoly", "--n", "3", "--w", "1 1 2"],
    ["classpoly", "--n", "3", "--w", "1 2"],
    ["transition", "--n", "2", "--from", "XX", "--to", "GR"],
    ["verify", "--n", "7"],
    ["chartable", "--n", "9"],
    ["verify", "--n", "-1"],
])
def test_usage_errors_exit_two(capsys, argv):
    assert main(argv) == 2


def test_bad_format_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["chartable", "--n", "2", "--format", "xml"])
    assert exc.value.code == 2


def test_chartable_json_orders(capsys):
    code, out = run(capsys, "chartable", "--n", "4", "--format", "json")
    doc = json.loads(out)
    assert doc["row_order"] == ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]
    assert doc["col_order"] == doc["row_order"]


def test_chartable_n1(capsys):
    assert run(capsys, "chartable", "--n", "1")[1] == "lambda,1\n1,1\n"


def test_max_n_override_warns(capsys, caplog):
    code, _ = run(capsys, "chartable", "--n", "9", "--max-n", "9", "--format", "json")
    assert code == 0
    assert "above the default bound" in caplog.text


def test_export_and_out(tmp_path, capsys):
    assert main(["export", "--n", "3", "--out", str(tmp_path / "e")]) == 0
    names = sorted(p.name for p in (tmp_path / "e").iterdir())
    assert "chartable.csv" in names and "transition-N1-GR.csv" in names
    target = tmp_path / "t.tex"
    assert main(["chartable", "--n", "3", "--format", "latex", "--out", str(target)]) == 0
    assert target.read_text().startswith(r"\begin{tabular}")


def test_grbasis(capsys):
    code, out = run(capsys, "grbasis", "--n", "2")
    assert out == 'lambda,w,coeff\n2,2 1,1/v\n"1,1",1 2,1\n'
