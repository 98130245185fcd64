import json
import subprocess
import sys

import pytest

from kneser_extremal.cli import EXIT_FALSE, EXIT_OK, EXIT_USAGE, run
from kneser_extremal.kneser import read_family
from kneser_extremal.setcore import binom


def call(capsys, *argv):
    code = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def call_json(capsys, *argv):
    code, out, err = call(capsys, *argv, "--json")
    return code, json.loads(out), err


@pytest.fixture
def families(tmp_path):
    files = {
        "star": "5 2\n1 2\n1 3\n1 4\n1 5\n",
        "pair": "5 2\n1 2\n3 4\n",
        "petersen": "5 2\n" + "".join(f"{a} {b}\n" for a in range(1, 6) for b in range(a + 1, 6)),
    }
    out = {}
    for name, text in files.items():
        p = tmp_path / f"{name}.txt"
        p.write_text(text)
        out[name] = p
    return out


def test_bounds_frankl_json(capsys):
    code, doc, _ = call_json(capsys, "bounds", "--theorem", "frankl", "--n", 8, "--k", 2, "--s", 2)
    assert code == EXIT_OK
    assert doc["bound"] == "13" and doc["threshold"] == 8 and doc["threshold_met"] is True


def test_bounds_text_matches_json(capsys):
    argv = ["bounds", "--theorem", "thm3", "--n", 10, "--k", 3, "--t", 2]
    _, text, _ = call(capsys, *argv)
    _, doc, _ = call_json(capsys, *argv)
    assert f"bound: {doc['bound']}" in text
    assert f"threshold: {doc['threshold']}" in text


def test_bounds_below_threshold_warns(capsys):
    code, doc, err = call_json(capsys, "bounds", "--theorem", "frankl", "--n", 6, "--k", 2, "--s", 2)
    assert code == EXIT_OK and doc["threshold_met"] is False and "warning" in err


def test_bounds_big_numbers_are_strings(capsys):
    _, doc, _ = call_json(capsys, "bounds", "--theorem", "ekr", "--n", 60, "--k", 30)
    assert doc["bound"] == str(binom(59, 29))


@pytest.mark.parametrize(
    "argv",
    [
        ["bounds", "--theorem", "frankl", "--n", "8", "--k", "2"],
        ["bounds", "--theorem", "nope", "--n", "8", "--k", "2"],
        ["frobnicate"],
        [],
        ["construct", "--kind", "constellation", "--n", "6", "--k", "2"],
        ["search", "--n", "5", "--k", "2", "--pattern", "Q9"],
        ["oracle", "--n", "8", "--k", "2"],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    assert run(argv) == EXIT_USAGE


def test_check_exit_codes(capsys, families):
    assert call(capsys, "check", "--family", families["star"], "--property", "intersecting")[0] == EXIT_OK
    code, doc, _ = call_json(capsys, "check", "--family", families["pair"], "--property", "intersecting")
    assert code == EXIT_FALSE and doc["holds"] is False
    assert doc["witness"] == [[1, 2], [3, 4]]
    assert call(capsys, "check", "--family", families["star"], "--property", "star")[0] == EXIT_OK
    assert call(capsys, "check", "--family", families["star"], "--property", "nontrivial")[0] == EXIT_FALSE
    code, doc, _ = call_json(capsys, "check", "--family", families["petersen"], "--property", "pattern-free",
                             "--pattern", "K3")
    assert code == EXIT_OK and doc["pattern"] == "K3"
    code, doc, _ = call_json(capsys, "check", "--family", families["petersen"], "--property",
                             "union-intersecting", "--s", 1, "--t", 3)
    assert code == EXIT_FALSE and len(doc["witness"][1]) == 3


def test_format_error_reports_line(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("5 2\n1 2\n1 9\n")
    code, _, err = call(capsys, "check", "--family", bad, "--property", "intersecting")
    assert code == EXIT_USAGE and "line 3" in err
    pat = tmp_path / "pat.txt"
    pat.write_text("3\n1 2\n2 2\n")
    code, _, err = call(capsys, "check", "--family", bad, "--property", "pattern-free", "--pattern", pat)
    assert code == EXIT_USAGE and "line" in err


@pytest.mark.parametrize(
    "extra,prop",
    [
        (["--kind", "star", "--i", "3"], "intersecting"),
        (["--kind", "hilton-milner"], "nontrivial"),
        (["--kind", "constellation", "--L", "1,2"], ("pattern-free", "K3")),
        (["--kind", "star-plus", "--extras", "2 3"], ("union-intersecting", 2, 2)),
        (["--kind", "thm1", "--L", "1", "--extras", "2 3", "--pattern", "K2,2"], ("pattern-free", "K2,2")),
    ],
)
def test_construct_check_roundtrip(capsys, tmp_path, extra, prop):
    out = tmp_path / "fam.txt"
    code, doc, _ = call_json(capsys, "construct", "--n", 7, "--k", 2, *extra, "-o", out)
    assert code == EXIT_OK and len(read_family(out)) == doc["size"]
    if isinstance(prop, str):
        argv = ["--property", prop]
    elif prop[0] == "pattern-free":
        argv = ["--property", prop[0], "--pattern", prop[1]]
    else:
        argv = ["--property", prop[0], "--s", prop[1], "--t", prop[2]]
    assert call(capsys, "check", "--family", out, *argv)[0] == EXIT_OK


def test_construct_to_stdout_is_a_family_file(capsys, tmp_path):
    code, text, _ = call(capsys, "construct", "--kind", "star", "--n", 5, "--k", 2)
    assert code == EXIT_OK and text.splitlines()[0] == "5 2" and len(text.splitlines()) == 5


def test_ell_and_peel_verify(capsys, families, tmp_path):
    code, doc, _ = call_json(capsys, "ell", "--family", families["petersen"])
    assert (doc["alpha"], doc["ell"], doc["edges"]) == (4, 6, 15)
    tr = tmp_path / "t.json"
    assert call(capsys, "peel", "--family", families["petersen"], "-o", tr)[0] == EXIT_OK
    code, doc, _ = call_json(capsys, "verify", "--family", families["petersen"], "--transcript", tr,
                             "--exact-round-ell")
    assert code == EXIT_OK and doc == {"valid": True, "failed_check": None}
    t = json.loads(tr.read_text())
    t["rounds"][0]["degree"] += 1
    tr.write_text(json.dumps(t))
    code, doc, _ = call_json(capsys, "verify", "--family", families["petersen"], "--transcript", tr)
    assert code == EXIT_FALSE and doc["failed_check"] == "chosen degree"
    tr.write_text("{not json")
    assert call(capsys, "verify", "--family", families["petersen"], "--transcript", tr)[0] == EXIT_FALSE


def test_peel_json_to_stdout(capsys, families):
    code, doc, _ = call_json(capsys, "peel", "--family", families["pair"])
    assert code == EXIT_OK and doc["p"] == 1 and doc["rounds"][0]["chain"] == [[[1, 2], [3, 4]]]


def test_search_ekr_enumerate(capsys, tmp_path):
    code, doc, _ = call_json(capsys, "search", "--n", 5, "--k", 2, "--pattern", "K2", "--enumerate-all",
                             "--out-dir", tmp_path / "out")
    assert code == EXIT_OK and doc["optimum"] == 4 and doc["extrema_count"] == 5
    assert len(list((tmp_path / "out").glob("optimum_*.txt"))) == 5
    code, text, _ = call(capsys, "search", "--n", 5, "--k", 2, "--pattern", "K2", "--enumerate-all")
    assert "optimum: 4" in text and "extrema_count: 5" in text


def test_oracle_and_nontrivial(capsys, families):
    _, doc, _ = call_json(capsys, "oracle", "--n", 5, "--k", 2, "--pattern", "P3")
    _, bnb, _ = call_json(capsys, "search", "--n", 5, "--k", 2, "--pattern", "P3")
    assert doc["optimum"] == bnb["optimum"]
    _, doc, _ = call_json(capsys, "search", "--n", 6, "--k", 2, "--nontrivial")
    assert doc["optimum"] == 3
    _, doc, _ = call_json(capsys, "oracle", "--n", 5, "--k", 2, "--nontrivial", "--host", families["petersen"])
    assert doc["optimum"] == 3


def test_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("KNESER_THREADS", "3")
    _, doc, _ = call_json(capsys, "search", "--n", 5, "--k", 2, "--pattern", "K3")
    assert doc["notes"]


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "kneser_extremal", "bounds", "--theorem", "hm", "--n", "7", "--k", "3", "--json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["bound"] == "13"
