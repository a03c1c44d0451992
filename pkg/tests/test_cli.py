import io
import json
import subprocess
import sys

import pytest

from scmbei import cli
from scmbei import families as F
from scmbei.cli import EXIT_MISMATCH, EXIT_OK, EXIT_PARSE, EXIT_RESOURCE, RunConfig, dumps, main, run_batch
from scmbei.graph6 import format_edge_list, to_graph6
from scmbei.scm import NOT_SCM, Verdict


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_cutsets_command(tmp_path, capsys):
    path = write(tmp_path, "c4.txt", format_edge_list(F.cycle(4)))
    code, out, _ = run(capsys, ["cutsets", path])
    assert code == EXIT_OK
    rep = json.loads(out)
    comp = rep["components"][0]
    assert [row["T"] for row in comp["cutsets"]] == [[], [1, 3], [2, 4]]
    assert comp["krull_dim"] == 5 and comp["m"] == 4
    assert rep["config"]["characteristic"] == 32003


def test_output_is_deterministic_canonical_json(tmp_path, capsys):
    path = write(tmp_path, "g.g6", to_graph6(F.claw_cone()) + "\n")
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, ["classify", path, "--oracle"])
        assert code == EXIT_OK
        outs.append(out)
    assert outs[0] == outs[1]
    assert dumps(json.loads(outs[0])) + "\n" == outs[0]


def test_classify_with_oracle(tmp_path, capsys):
    path = write(tmp_path, "kw.g6", to_graph6(F.k24_whisker()))
    code, out, _ = run(capsys, ["classify", path, "--oracle"])
    entry = json.loads(out)["components"][0]
    assert code == EXIT_OK
    assert entry["verdict"]["rule"] == "R9-unknown"
    assert entry["final_status"] == NOT_SCM
    assert [r["depth"] for r in entry["oracle"]["transcript"]] == [6, 7, 9]


def test_oracle_budget_reported(tmp_path, capsys):
    path = write(tmp_path, "kw.g6", to_graph6(F.k24_whisker()))
    code, out, _ = run(capsys, ["classify", path, "--oracle", "--oracle-budget", "8"])
    entry = json.loads(out)["components"][0]
    assert code == EXIT_OK and entry["final_status"] == "Unknown"
    assert entry["oracle"]["reason"].startswith("resource-limit")


def test_table_format(tmp_path, capsys):
    path = write(tmp_path, "w.txt", format_edge_list(F.wheel(4)))
    code, out, _ = run(capsys, ["classify", path, "--format", "table"])
    assert code == EXIT_OK and "R5-wheel" in out and "SCM" in out
    code, out, _ = run(capsys, ["cutsets", path, "--format", "table"])
    assert "krull_dim=6" in out


def test_disconnected_input_is_split(tmp_path, capsys):
    path = write(tmp_path, "two.txt", "1 2\n2 3\n3 1\n7 8\n8 9\n")
    code, out, _ = run(capsys, ["classify", path])
    comps = json.loads(out)["components"]
    assert code == EXIT_OK
    assert [c["graph"]["labels"] for c in comps] == [[1, 2, 3], [7, 8, 9]]
    assert [c["verdict"]["rule"] for c in comps] == ["R1-complete", "R2-decomposable"]


def test_stdin_input(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(to_graph6(F.cycle(5))))
    code, out, _ = run(capsys, ["classify"])
    assert code == EXIT_OK and json.loads(out)["components"][0]["verdict"]["rule"] == "R4-cycle"


def test_verify_lemma_command(tmp_path, capsys):
    path = write(tmp_path, "kw.g6", to_graph6(F.k24_whisker()))
    code, out, _ = run(capsys, ["verify-lemma31", path, "--vertex", "6"])
    res = json.loads(out)["result"]
    assert code == EXIT_OK and res["first_failure"] == 8 and res["status"] == "fails"
    code, _, err = run(capsys, ["verify-lemma31", path, "--vertex", "1"])
    assert code == EXIT_PARSE and "not a cutpoint" in err
    code, _, err = run(capsys, ["verify-lemma31", path, "--vertex", "6", "--oracle-budget", "10"])
    assert code == EXIT_RESOURCE


def test_parse_errors(tmp_path, capsys):
    path = write(tmp_path, "bad.txt", "1 2 3\n")
    assert run(capsys, ["cutsets", path])[0] == EXIT_PARSE
    assert run(capsys, ["cutsets", str(tmp_path / "missing")])[0] == EXIT_PARSE
    good = write(tmp_path, "ok.txt", "1 2\n")
    assert run(capsys, ["cutsets", good, "--char", "4"])[0] == EXIT_PARSE
    assert run(capsys, ["cutsets", good, "--max-cutset-n", "0"])[0] == EXIT_PARSE


def test_resource_exit(tmp_path, capsys):
    path = write(tmp_path, "p.txt", format_edge_list(F.path(6)))
    code, _, err = run(capsys, ["cutsets", path, "--max-cutset-n", "5"])
    assert code == EXIT_RESOURCE


def test_mismatch_exit(tmp_path, capsys, monkeypatch):
    # a deliberately wrong rule must be caught by the oracle cross-check
    monkeypatch.setattr(cli, "classify", lambda g, n: Verdict(NOT_SCM, "R4-cycle", fingerprint=to_graph6(g)))
    path = write(tmp_path, "c4.g6", to_graph6(F.cycle(4)))
    code, out, _ = run(capsys, ["classify", path, "--oracle"])
    assert code == EXIT_MISMATCH and json.loads(out)["components"][0]["mismatch"] is True
    code, out, _ = run(capsys, ["batch", path, "--oracle"])
    assert code == EXIT_MISMATCH
    assert json.loads(out.splitlines()[-1])["summary"]["mismatches"] == 1


def test_batch_empty_and_malformed(tmp_path, capsys):
    assert run(capsys, ["batch", write(tmp_path, "e.txt", "")]) == (EXIT_OK, "", "")
    path = write(tmp_path, "m.txt", "Ch\n???\nBw\n")
    code, out, _ = run(capsys, ["batch", path])
    lines = [json.loads(s) for s in out.splitlines()]
    assert code == EXIT_PARSE
    assert "error" in lines[1] and lines[1]["line"] == 2
    assert "components" in lines[0] and "components" in lines[2]
    assert lines[-1]["summary"]["errors"] == 1


def test_batch_all_graphs_on_five_vertices_parallel_matches_serial():
    text = "".join(to_graph6(g) + "\n" for g in F.connected_graphs(5))
    serial, parallel = io.StringIO(), io.StringIO()
    cfg = RunConfig(oracle=True)
    assert run_batch(text, cfg, 1, serial) == EXIT_OK
    assert run_batch(text, cfg, 2, parallel) == EXIT_OK
    assert serial.getvalue() == parallel.getvalue()
    summary = json.loads(serial.getvalue().splitlines()[-1])["summary"]
    assert summary["lines"] == 21 and summary["mismatches"] == 0
    assert summary["by_status"].get("Unknown", 0) == 0


def test_console_script_entry_point():
    res = subprocess.run([sys.executable, "-m", "scmbei", "--version"], capture_output=True, text=True)
    assert res.returncode == 0 and "0.1.0" in res.stdout
