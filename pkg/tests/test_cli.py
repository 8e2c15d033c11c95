import io
import json

import pytest

from fracdom import emit_dgf, parse_dgf, rotational_tournament
from fracdom.cli import run_cli


def run(capsys, *argv):
    code = run_cli(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_rotational_pipes_to_gamma_star(capsys, monkeypatch):
    code, out, _ = run(capsys, "gen", "rotational", "--r", "3")
    assert code == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, out, _ = run(capsys, "gamma-star")
    assert code == 0 and out == "5/3\n"


def test_alpha_on_tournament_file(tmp_path, capsys):
    path = tmp_path / "t.dgf"
    path.write_text(emit_dgf(rotational_tournament(4)))
    code, out, _ = run(capsys, "alpha", str(path))
    assert code == 0 and out == "1\n"


def test_gamma_and_witness_json(tmp_path, capsys):
    path = tmp_path / "c3.dgf"
    path.write_text("n 3\n0 1\n1 2\n2 0\n")
    code, out, _ = run(capsys, "gamma", str(path), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["gamma"] == 2 and len(payload["witness"]) == 2


def test_gen_cycle_union_and_verify(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "cycle", "--n", "5")
    assert code == 0
    p1 = tmp_path / "a.dgf"
    p1.write_text(out)
    code, out, _ = run(capsys, "gen", "union", str(p1), str(p1))
    assert code == 0
    assert parse_dgf(out).n == 10
    p2 = tmp_path / "u.dgf"
    p2.write_text(out)
    code, out, _ = run(capsys, "verify", str(p2), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["all_pass"] is True
    assert payload["records"][0]["alpha"] == 4


def test_verify_random_batch(capsys, tmp_path):
    import csv as csvmod

    csv_path = tmp_path / "report.csv"
    code, out, _ = run(
        capsys, "verify", "--random", "8", "--n", "6", "--seed", "7", "--csv", str(csv_path)
    )
    assert code == 0
    assert out.count("ok") == 8
    rows = list(csvmod.reader(csv_path.open()))
    assert len(rows) == 9
    # instance ids contain commas; quoting must keep the column count
    assert all(len(r) == len(rows[0]) for r in rows)
    assert all(r[-1] == "1" for r in rows[1:])


def test_verify_random_hundred_never_violates(capsys):
    # the verified bounds hold universally: a seeded batch never exits 1
    code, out, _ = run(capsys, "verify", "--random", "100", "--n", "8", "--seed", "7")
    assert code == 0
    assert out.count("ok") == 100


def test_half_cover_with_weight_file(tmp_path, capsys):
    g = tmp_path / "c5.dgf"
    g.write_text("n 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    w = tmp_path / "w.txt"
    w.write_text("0 1/1\n1 1/1\n2 1/1\n3 1/1\n4 1/1\n")
    code, out, _ = run(capsys, "half-cover", str(g), "--weights", str(w))
    assert code == 0 and out == "0 2\n"


def test_greedy_and_frac_dom(tmp_path, capsys):
    g = tmp_path / "c5.dgf"
    g.write_text("n 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    code, out, _ = run(capsys, "greedy-dom", str(g))
    assert code == 0 and "dominating: 0 2 4" in out

    code, out, _ = run(capsys, "frac-dom", "lp", str(g), "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["total"] == "5/2"

    code, out, _ = run(capsys, "frac-dom", "recursive", str(g))
    assert code == 0 and "# bound 4/1" in out


def test_farkas_output(tmp_path, capsys):
    g = tmp_path / "c3.dgf"
    g.write_text("n 3\n0 1\n1 2\n2 0\n")
    code, out, _ = run(capsys, "farkas", str(g))
    assert code == 0 and out == "0 1/3\n1 1/3\n2 1/3\n"


def test_tightness_cli(capsys):
    code, out, _ = run(capsys, "tightness", "--k", "1", "--eps", "1/4")
    assert code == 0 and "9/5" in out


def test_experiment_cli_json(capsys):
    code, out, _ = run(
        capsys, "experiment", "--n", "9", "--trials", "3", "--seed", "5", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["trials"] == 3
    assert payload["all_outdegree_bounds_hold"] is True


def test_input_error_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.dgf"
    bad.write_text("n 2\n0 0\n")
    code, _, err = run(capsys, "alpha", str(bad))
    assert code == 2 and "loop" in err

    code, _, err = run(capsys, "alpha", str(tmp_path / "missing.dgf"))
    assert code == 2

    code, _, _ = run(capsys, "gen", "rotational", "--r", "1")
    assert code == 2

    code, _, _ = run(capsys, "nonsense")
    assert code == 2


def test_cap_exit_code(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("FRACDOM_STABLE_SET_CAP", "1")
    g = tmp_path / "c5.dgf"
    g.write_text("n 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    code, _, err = run(capsys, "frac-dom", "lp", str(g))
    assert code == 3 and "cap" in err
