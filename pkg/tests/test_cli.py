import csv
import io
import json
from pathlib import Path

import pytest

from bnsecant import __version__, cli

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = {
    "rho": "rho 9 1 6",
    "certify_9_1_6_2_1": "certify 9 1 6 2 1",
    "certify_survivors": "certify 9 1 6 2 1 --flags C-ZERO,C-SUB --cap 1000000",
    "count_incidence": "count incidence --g 0 --l1 1,2 --l2 1,3",
    "count_chow": "count chow --g 0 --l1 1,2 --l2 1,3",
    "count_severi": "count severi --g 6 --r1 2 --d1 6 --d2 4",
    "classify_3_2_4_not_bpf": "classify 3 2 4 --not-bpf",
    "counterexample_6": "counterexample 6",
    "oracle_cubic": "oracle check --d 3 --e 2 --f 1 --grid 11",
}


def run(capsys, argv):
    code = cli.run(argv.split() if isinstance(argv, str) else argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden(capsys, name):
    code, out, _ = run(capsys, GOLDEN_CASES[name])
    assert code == 0
    assert out == (GOLDEN / f"{name}.json").read_text()
    doc = json.loads(out)
    assert set(doc) == {"tool_version", "inputs", "result"}
    assert doc["tool_version"] == __version__


def test_spec_examples(capsys):
    _, out, _ = run(capsys, "certify 9 1 6 2 1")
    assert json.loads(out)["result"]["status"] == "EMPTY"
    _, out, _ = run(capsys, "count incidence --g 0 --l1 1,2 --l2 1,3")
    assert json.loads(out)["result"] == {"count": 2}
    _, out, _ = run(capsys, "rho 9 1 6")
    assert json.loads(out)["result"] == {"rho": 1}


def test_survivor_witnesses_are_capped_and_counted(capsys):
    doc = json.loads((GOLDEN / "certify_survivors.json").read_text())
    res = doc["result"]
    assert res["status"] == "INCONCLUSIVE"
    assert res["survivor_count"] == len(res["witnesses"]) == 42


@pytest.mark.parametrize("argv", [
    "certify 9 1 6 2",
    "certify 9 1 6 2 x",
    "certify 9 1 6 2 1 --flags C-NOPE",
    "rho",
    "count incidence --g 0 --l1 1 --l2 1,3",
    "count incidence --g 0 --l1 1,2 --l2 1,3 --e 9",
    "certify 3 1 6 2 1",
    "certify 9 2 6 2 1",
    "certify 12 2 10 2 1 --cap 10",
    "counterexample 5",
    "classify 9 1 6",
    "oracle check --d 3 --e 3 --f 3",
    "sweep --config /nonexistent/config.json",
    "frobnicate",
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, argv)
    assert code == 2
    assert out == ""
    assert "usage" in err


def test_not_applicable_exit_3(capsys):
    code, out, _ = run(capsys, "certify 9 1 6 5 1")
    assert code == 3
    assert json.loads(out)["result"]["status"] == "NOT_APPLICABLE"


def test_internal_error_exit_4(capsys, monkeypatch):
    def boom(*a, **k):
        raise cli.CertifierInternalError("derived bound violated")

    monkeypatch.setattr(cli, "certify_empty", boom)
    code, _, err = run(capsys, "certify 9 1 6 2 1")
    assert code == 4
    assert "internal error" in err


def test_env_cap_gives_exit_2(capsys, monkeypatch):
    monkeypatch.setenv("CERTIFIER_SEARCH_CAP", "10")
    code, _, err = run(capsys, "certify 12 2 10 2 1")
    assert code == 2
    assert "SearchSpaceTooLarge" in err or "exceed" in err


def test_out_file(tmp_path, capsys):
    target = tmp_path / "rho.json"
    code, out, _ = run(capsys, ["--out", str(target), "rho", "9", "1", "6"])
    assert code == 0 and out == ""
    assert target.read_text() == (GOLDEN / "rho.json").read_text()


def test_oracle_random_series(capsys):
    code, out, _ = run(capsys, "oracle check --d 5 --r 2 --e 3 --f 1 --seed 4")
    assert code == 0
    res = json.loads(out)["result"]
    assert res["agree"] is None
    assert res["ramification_weight_total"] == res["plucker_total"] == 9


def write_config(path, **overrides):
    cfg = {"g": [8, 10], "r1": [1, 1], "d1": [5, 7], "e": [1, 5], "f": [0, 2]}
    cfg.update(overrides)
    path.write_text(json.dumps(cfg))
    return path


def test_sweep_json_deterministic(tmp_path, capsys):
    cfg = write_config(tmp_path / "c.json")
    code, first, _ = run(capsys, ["sweep", "--config", str(cfg)])
    assert code == 0
    _, second, _ = run(capsys, ["sweep", "--config", str(cfg), "--jobs", "2"])
    assert first == second
    records = json.loads(first)
    assert records
    keys = [tuple(r["inputs"][k] for k in cli.SWEEP_KEYS) for r in records]
    assert keys == sorted(keys)
    for r in records:
        assert set(r) == {"tool_version", "inputs", "result"}
    by_key = {tuple(r["inputs"][k] for k in cli.SWEEP_KEYS): r["result"] for r in records}
    assert by_key[(9, 1, 6, 2, 1)]["status"] == "EMPTY"
    assert by_key[(9, 1, 6, 5, 1)]["status"] == "NOT_APPLICABLE"


def test_sweep_csv_and_out(tmp_path, capsys):
    target = tmp_path / "out.csv"
    cfg = write_config(tmp_path / "c.json", format="csv", out=str(target), cap=10)
    code, out, _ = run(capsys, ["sweep", "--config", str(cfg)])
    assert code == 0
    summary = json.loads(out)["result"]
    text = target.read_bytes().decode()
    assert "\r\n" in text
    rows = list(csv.reader(io.StringIO(text, newline="")))
    assert tuple(rows[0]) == cli.CSV_COLUMNS
    assert summary["records"] == len(rows) - 1
    assert any(row[-1].startswith("SearchSpaceTooLarge") for row in rows[1:])
    for row in rows[1:]:
        assert len(row) == len(cli.CSV_COLUMNS)
        assert all("e+" not in v.lower() for v in row[:5])
    first = target.read_bytes()
    run(capsys, ["sweep", "--config", str(cfg)])
    assert target.read_bytes() == first


def test_csv_quoting():
    rec = cli.record({"g": 1, "r1": 1, "d1": 1, "e": 1, "f": 0},
                     {"error": 'bad, "quoted"\nline', "survivor_count": 10**30})
    text = cli.render_csv([rec])
    row = list(csv.reader(io.StringIO(text, newline="")))[1]
    assert row[-1] == 'bad, "quoted"\nline'
    assert row[-2] == str(10**30)
    assert '"bad, ""quoted""\nline"' in text


@pytest.mark.parametrize("overrides", [
    {"g": [3, 2]},
    {"g": [-1, 2]},
    {"g": 4},
    {"g": [1, True]},
    {"format": "xml"},
    {"flags": ["C-NOPE"]},
    {"flags": "C-ZERO"},
    {"cap": -1},
    {"jobs": 0},
])
def test_sweep_config_validation(tmp_path, capsys, overrides):
    cfg = write_config(tmp_path / "c.json", **overrides)
    code, _, err = run(capsys, ["sweep", "--config", str(cfg)])
    assert code == 2
    assert "usage" in err


def test_sweep_config_missing_key(tmp_path, capsys):
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"g": [1, 2]}))
    assert run(capsys, ["sweep", "--config", str(p)])[0] == 2
    p.write_text("[1, 2]")
    assert run(capsys, ["sweep", "--config", str(p)])[0] == 2


def test_sweep_flags_recorded(tmp_path, capsys):
    cfg = write_config(tmp_path / "c.json", flags=["C-ZERO", "C-SUB"],
                       g=[9, 9], d1=[6, 6], e=[2, 2], f=[1, 1])
    _, out, _ = run(capsys, ["sweep", "--config", str(cfg)])
    (rec,) = json.loads(out)
    assert rec["result"]["survivor_count"] == 42
    assert "C-PLK-Y1" not in rec["result"]["constraints_used"]


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "bnsecant", "rho", "9", "1", "6"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "rho.json").read_text()
