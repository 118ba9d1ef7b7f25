import json

from zcert import to_graph6
from zcert.cli import main

from named import cycle, petersen, star


C4 = to_graph6(cycle(4))
PETERSEN = to_graph6(petersen())
STAR3 = to_graph6(star(3))


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_invariants_literal(capsys):
    code, out, _ = run(capsys, "invariants", C4)
    assert code == 0
    assert "Z1=16" in out and "Inv=2" in out and "beta=2" in out


def test_invariants_json(capsys):
    code, out, _ = run(capsys, "invariants", PETERSEN, "--json")
    record = json.loads(out)
    assert code == 0
    assert record["z1"] == 90 and record["inv"] == "10/3"
    assert record["beta"] == 4 and record["kappa"] == 3


def test_invariants_file(capsys, tmp_path):
    f = tmp_path / "in.g6"
    f.write_text(f"{C4}\n{STAR3}\n")
    code, out, _ = run(capsys, "invariants", str(f))
    assert code == 0
    assert len(out.strip().splitlines()) == 2


def test_check_theorem1(capsys):
    code, out, _ = run(capsys, "check", "--theorem", "1", C4)
    assert code == 0
    assert out.count("equality") == 5


def test_check_theorem3_part(capsys):
    code, out, _ = run(capsys, "check", "--theorem", "3", "--k", "3",
                       "--part", "1", PETERSEN)
    assert code == 0
    assert "holds" in out


def test_check_theorem2_fails_exit_code(capsys):
    code, out, _ = run(capsys, "check", "--theorem", "2", "--k", "3", PETERSEN)
    assert code == 1
    assert out.count("fails") == 5


def test_validate_enumeration(capsys):
    code, out, _ = run(capsys, "validate", "--theorem", "1", "--enumerate", "4")
    assert code == 0
    summary = json.loads(out.strip().splitlines()[-1])
    assert summary["certified"] is True
    assert summary["graphs_scanned"] + summary["skipped_min_degree_zero"] == 64


def test_validate_corpus_csv_out(capsys, tmp_path):
    f = tmp_path / "c.g6"
    f.write_text(f"{C4}\n")
    out_path = tmp_path / "report.csv"
    code, _, _ = run(capsys, "validate", "--theorem", "1",
                     "--corpus", str(f), "--format", "csv",
                     "--out", str(out_path))
    assert code == 0
    assert out_path.read_text().startswith("kind,graph6")


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--hamiltonian", C4)
    assert code == 0 and "True" in out
    code, out, _ = run(capsys, "oracle", "--hamiltonian", PETERSEN)
    assert code == 1 and "False" in out
    code, out, _ = run(capsys, "oracle", "--traceable", PETERSEN)
    assert code == 0


def test_usage_error_exit_code(capsys):
    code, _, err = run(capsys, "invariants", "A__")
    assert code == 2
    assert "error" in err


def test_stdin_input(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(f"{C4}\n"))
    code, out, _ = run(capsys, "invariants", "-")
    assert code == 0 and "Z1=16" in out
