import json

import pytest

from perhall import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_product_m1(capsys):
    code, out, _ = run(capsys, "product", "d(1)#0@0", "d(1)#0@0", "--m", "1")
    assert code == 0
    terms = json.loads(out)["product"]
    assert len(terms) == 2
    assert all(t["coeff"] == {"a": "0/1", "b": "1/2"} for t in terms)


def test_product_unit(capsys):
    code, out, _ = run(capsys, "product", "1", "d(1)#0@1*K[1]@0", "--m", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["text"] == "(1)*u[d(1)#0@1]K[1]@0"


def test_product_other_algebras(capsys):
    code, out, _ = run(capsys, "product", "d(1)#0", "d(1)#0", "--algebra", "hall")
    assert code == 0
    assert json.loads(out)["product"] == [{"class": "d(2)#0", "coeff": {"a": "1/2", "b": "0/1"}}]
    code, _, err = run(capsys, "product", "d(1)#0@0", "d(1)#0@0", "--algebra", "periodic-odd", "--m", "2")
    assert code == 2 and "odd period" in err


def test_parse_error_has_position(capsys):
    code, _, err = run(capsys, "product", "d(1)#0@0", "d(1)#0@x", "--m", "3")
    assert code == 2
    assert "column 7" in err and "^" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["product", "1", "1", "--q", "4"],
        ["product", "1", "1", "--m", "0"],
        ["table", "--max-dim", "-1"],
        ["table", "--quiver", "A2", "--max-dim", "1,2,3"],
        ["verify", "--suite", "no-such-suite"],
        ["verify"],
        ["frobnicate"],
        ["product", "d(1)#5@0", "1", "--m", "3"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_budget_exit(capsys):
    code, _, err = run(capsys, "verify", "--suite", "classical", "--budget", "10")
    assert code == 3
    assert "budget" in err


def test_budget_restored(capsys):
    from perhall import ffla

    before = ffla.get_budget()
    run(capsys, "verify", "--suite", "classical", "--budget", "10")
    assert ffla.get_budget() == before


def test_table_contains_derived_row(capsys):
    code, out, _ = run(capsys, "table", "--m", "3", "--max-dim", "1")
    assert code == 0
    rows = [r for r in out.splitlines() if r.startswith("u[d(1)#0@0],u[d(1)#0@2],")]
    assert rows == [
        "u[d(1)#0@0],u[d(1)#0@2],u[0]K[1]@2,1/1,0/1",
        "u[d(1)#0@0],u[d(1)#0@2],u[d(1)#0@0 + d(1)#0@2],1/1,0/1",
    ]


def test_table_zero_bound(capsys):
    code, out, _ = run(capsys, "table", "--m", "3", "--max-dim", "0")
    assert code == 0
    assert out.splitlines() == ["lhs,rhs,term,coeff_a,coeff_b", "u[0],u[0],u[0],1/1,0/1"]


def test_table_reproducible(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        assert run(capsys, "table", "--quiver", "A2", "--m", "3", "--max-dim", "1,1", "--out", str(path))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_table_json_and_k(capsys):
    code, out, _ = run(capsys, "table", "--m", "1", "--max-dim", "0", "--with-k", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 9
    assert {r["lhs"] for r in rows} == {"u[0]K[-1]@0", "u[0]", "u[0]K[1]@0"}


def test_config_file_and_override(tmp_path, capsys):
    conf = tmp_path / "run.toml"
    conf.write_text('quiver = "A2"\nq = 3\nm = 3\nmax_dim = [1, 0]\n')
    code, out, _ = run(capsys, "list-classes", "--config", str(conf))
    assert code == 0
    assert [c["class"] for c in json.loads(out)] == ["d(0,0)#0", "d(1,0)#0"]
    code, out, _ = run(capsys, "list-classes", "--config", str(conf), "--max-dim", "0,1")
    assert [c["class"] for c in json.loads(out)] == ["d(0,0)#0", "d(0,1)#0"]


def test_config_unknown_key(tmp_path, capsys):
    conf = tmp_path / "bad.toml"
    conf.write_text("colour = 1\n")
    assert run(capsys, "list-classes", "--config", str(conf))[0] == 2


def test_list_classes(capsys):
    code, out, _ = run(capsys, "list-classes", "--quiver", "A2", "--max-dim", "1,1")
    assert code == 0
    doc = json.loads(out)
    assert [c["class"] for c in doc] == ["d(0,0)#0", "d(0,1)#0", "d(1,0)#0", "d(1,1)#0", "d(1,1)#1"]
    assert [c["aut_order"] for c in doc] == [1, 1, 1, 1, 1]


def test_verify_report(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, _, err = run(capsys, "verify", "--suite", "green", "--quiver", "A1", "--max-dim", "2", "--out", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert {"suite", "instances", "failures", "witnesses"} <= set(doc)
    assert doc["suite"] == "green" and doc["failures"] == 0
    assert "ok" in err


def test_verify_expected_failure(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "assoc-odd-even-m")
    assert code == 0
    doc = json.loads(out)
    assert doc["failures"] >= 1 and doc["witnesses"]


def test_verify_vacuous(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "green", "--max-dim", "0")
    assert code == 0
    assert json.loads(out)["failures"] == 0


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0
    names = {line.split()[0] for line in out.splitlines()}
    assert {"classical", "green", "assoc-ext", "bridgeland", "determinism"} <= names
