import json
import subprocess
import sys

import pytest

from leecodes.certify import NonexistenceCertificate, certify_nonexistence
from leecodes.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_certify_applicable(capsys):
    code, doc, err = invoke(capsys, "certify", "--n", "8")
    assert code == 0
    assert NonexistenceCertificate.from_dict(doc) == certify_nonexistence(8)
    assert "certificate" in err


def test_certify_not_applicable(capsys):
    code, doc, _ = invoke(capsys, "certify", "--n", "9")
    assert code == 3
    assert doc["not_applicable"] == "P_DOES_NOT_DIVIDE_BALL"


def test_certify_invalid(capsys):
    code, doc, err = invoke(capsys, "certify", "--n", "2")
    assert code == 2 and doc is None and "error" in err


def test_density(capsys):
    code, doc, _ = invoke(capsys, "density", "--limit", "100")
    assert code == 0 and doc["count"] == 16 and doc["ratio"] == 0.16
    assert doc["compare_bounds"]["new_bound"] == 16.0


def test_unknown_subcommand(capsys):
    code = run(["frobnicate"])
    assert code == 2
    assert "usage" in capsys.readouterr().err


def test_bad_integer(capsys):
    assert run(["ball", "--n", "x", "--e", "1"]) == 2


def test_ball(capsys):
    code, doc, _ = invoke(capsys, "ball", "--n", "2", "--e", "2", "--list")
    assert code == 0 and doc["size"] == 13 and len(doc["points"]) == 13
    code, _, _ = invoke(capsys, "ball", "--n", "10", "--e", "5", "--list", "--cap", "100")
    assert code == 4


def test_verify(capsys):
    code, doc, _ = invoke(capsys, "verify", "--group", "13", "--images", "1;5", "--e", "2")
    assert code == 0 and doc["perfect"] is True
    code, doc, _ = invoke(capsys, "verify", "--group", "25", "--images", "1;3;7", "--e", "2")
    assert code == 0 and doc["perfect"] is False and len(doc["collision"]) == 2
    code, _, _ = invoke(capsys, "verify", "--group", "13", "--images", "1,2;5", "--e", "2")
    assert code == 2


def test_kernel(capsys):
    code, doc, _ = invoke(capsys, "kernel", "--group", "13", "--images", "1;5")
    assert code == 0 and doc["determinant"] == 13
    code, doc, _ = invoke(capsys, "kernel", "--group", "13", "--images", "1;5", "--q", "13", "--e", "2")
    assert code == 0 and doc["determinant"] == 13
    code, _, _ = invoke(capsys, "kernel", "--group", "13", "--images", "1;5", "--q", "5")
    assert code == 2


def test_kim(capsys):
    code, doc, _ = invoke(capsys, "kim", "--n", "4", "--k", "3", "--trials", "20", "--seed", "3")
    assert code == 0 and doc["passed"] and doc["checks"] == 60 and doc["seed"] == 3


def test_scan(capsys):
    code, doc, _ = invoke(capsys, "scan", "--p", "5")
    assert code == 0 and doc["residues_refuted"] == [8, 13, 18, 23]
    code, _, _ = invoke(capsys, "scan", "--p", "4")
    assert code == 2


def test_search(capsys):
    code, doc, _ = invoke(capsys, "search", "--n", "2", "--e", "2")
    assert code == 0 and doc["witnesses"] == [{"group": "13", "images": "1;5"}]
    code, doc, _ = invoke(capsys, "search", "--n", "3", "--e", "2")
    assert code == 0 and doc["witnesses"] == [] and doc["exhaustive"]
    code, _, _ = invoke(capsys, "search", "--n", "5", "--e", "2", "--budget", "5")
    assert code == 4


def test_search_env_budget(capsys, monkeypatch):
    monkeypatch.setenv("LEE_BUDGET", "3")
    code, _, err = invoke(capsys, "search", "--n", "4", "--e", "2")
    assert code == 4 and "budget" in err


def test_certificate_file_round_trip(tmp_path, capsys):
    path = tmp_path / "cert.json"
    assert run(["certify", "--n", "13", "--out", str(path)]) == 0
    assert capsys.readouterr().out == ""
    code, doc, _ = invoke(capsys, "check-cert", str(path))
    assert code == 0 and doc["valid"] is True

    tampered = json.loads(path.read_text(encoding="utf-8"))
    tampered["m_mod_p"] = 0
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(tampered), encoding="utf-8")
    code, doc, _ = invoke(capsys, "check-cert", str(bad))
    assert code == 1 and doc["valid"] is False

    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    code, _, _ = invoke(capsys, "check-cert", str(broken))
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["ball", "--n", "3", "--e", "2", "--list"],
        ["verify", "--group", "5,5", "--images", "1,0;0,1", "--e", "3"],
        ["kernel", "--group", "7", "--images", "1;2;3"],
        ["kim", "--n", "2", "--trials", "5"],
        ["certify", "--n", "18"],
        ["scan", "--p", "7", "--k", "1,2,3"],
        ["density", "--limit", "1000"],
        ["search", "--n", "3", "--e", "1"],
    ],
)
def test_output_round_trips_and_is_stable(argv, capsys):
    code1, doc1, _ = invoke(capsys, *argv)
    code2, doc2, _ = invoke(capsys, *argv)
    for d in (doc1, doc2):
        d.pop("wall_time", None)
    assert code1 == code2 == 0
    assert doc1 == doc2
    assert json.loads(json.dumps(doc1)) == doc1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "leecodes", "certify", "--n", "23"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["n"] == 23
