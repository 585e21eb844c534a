import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import pytest

from retractive import ssj
from retractive.cli import main
from retractive.homalg import simplicial_homology
from retractive.sset import validate

DATA = Path(str(resources.files("retractive") / "data"))
FILES = sorted(p.name for p in DATA.glob("*.json"))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", FILES)
def test_shipped_files_roundtrip_byte_identically(name):
    text = (DATA / name).read_text(encoding="utf-8")
    S = ssj.loads(text)
    assert ssj.dumps(ssj.to_document(S)) == text
    assert validate(S.space, 4)


def test_loaded_spaces_have_expected_homology():
    assert simplicial_homology(ssj.load(DATA / "RP2.json").space, 2) == {0: [0], 1: [2], 2: []}
    assert simplicial_homology(ssj.load(DATA / "T2.json").space, 2) == {0: [0], 1: [0, 0], 2: [0]}


def test_syntax_errors_report_line_and_column():
    with pytest.raises(ssj.SSJError) as exc:
        ssj.loads('{\n  "name": "x",\n  "generators": [,]\n}')
    assert exc.value.where == "3:18"


@pytest.mark.parametrize("doc,where", [
    ({"generators": "v"}, "$.generators"),
    ({"generators": [{"id": "v", "dim": 0}, {"id": "e", "dim": 1}]}, "$.faces.e"),
    ({"generators": [{"id": "v", "dim": 0}, {"id": "e", "dim": 1}], "faces": {"e": [[[], "v"], [[], "w"]]}},
     "$.faces.e[1]"),
    ({"generators": [{"id": "v", "dim": 0}, {"id": "e", "dim": 1}], "faces": {"e": [[[], "v"], [[], "v"]]},
      "group": {"elements": ["0", "1"], "table": [[0, 1], [1, 0]]}, "action": {"1": {"v": "e", "e": "v"}}},
     "$.action.1"),
])
def test_schema_errors_report_a_path(doc, where):
    with pytest.raises(ssj.SSJError) as exc:
        ssj.from_document(doc)
    assert exc.value.where == where


def test_simplicial_identity_violations_are_rejected():
    doc = {"generators": [{"id": "v", "dim": 0}, {"id": "w", "dim": 0}, {"id": "a", "dim": 1},
                          {"id": "t", "dim": 2}],
           "faces": {"a": [[[], "v"], [[], "w"]], "t": [[[], "a"], [[], "a"], [[0], "v"]]}}
    with pytest.raises(ssj.SSJError):
        ssj.from_document(doc)


def test_homology_command(capsys):
    code, out, _ = run(capsys, "homology", str(DATA / "S1.json"), "--range", "3")
    assert code == 0
    report = json.loads(out)
    assert report["homology"] == {"0": [0], "1": [0], "2": [], "3": []}


def test_pi1_command(capsys):
    code, out, _ = run(capsys, "pi1", str(DATA / "RP2.json"))
    assert code == 0 and json.loads(out)["abelianised"] == [2]
    code, _, err = run(capsys, "pi1", str(DATA / "S1cover.json"))
    assert code == 2 and "not reduced" in err


def test_validate_and_orbits(capsys):
    code, out, _ = run(capsys, "validate", str(DATA / "S1cover.json"))
    rep = json.loads(out)
    assert code == 0 and rep["valid"] and rep["action_valid"]
    code, out, _ = run(capsys, "orbits", str(DATA / "S2cover.json"))
    rep = json.loads(out)
    assert code == 0 and rep["orbits"]["2"] == 1 and rep["stabiliser_orders"]["2"] == [1]


def test_linearise_and_hcoeff(capsys):
    code, out, _ = run(capsys, "linearise", str(DATA / "S1pointed.json"))
    assert code == 0 and json.loads(out)["homotopy"]["1"] == [0]
    code, out, _ = run(capsys, "hcoeff", str(DATA / "S1pointed.json"), "--K", str(DATA / "RP2.json"))
    assert code == 0 and json.loads(out)["homology"] == {"0": [], "1": [0], "2": [2], "3": []}


def test_collapse_and_cw_check(capsys):
    code, out, _ = run(capsys, "collapse", str(DATA / "S1pointed.json"))
    assert code == 0 and json.loads(out)["homology"]["1"] == [0]
    code, out, _ = run(capsys, "cw-check", str(DATA / "S1pointed.json"))
    rep = json.loads(out)
    assert code == 0 and rep["finite"] and rep["verified"] and rep["length"] == 1


def test_input_errors_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"name": "x",\n "generators": [}')
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 2 and ":2:" in err
    code, _, err = run(capsys, "validate", str(tmp_path / "missing.json"))
    assert code == 2
    code, _, err = run(capsys, "--max-dim", "2", "homology", str(DATA / "S1.json"), "--range", "3")
    assert code == 2 and "max-dim" in err
    code, _, _ = run(capsys, "verify", "no-such-suite")
    assert code == 2


def test_verify_suite(capsys):
    code, out, _ = run(capsys, "verify", "pi1")
    lines = out.strip().splitlines()
    assert code == 0 and lines[-1] == "4/4 passed"
    assert all(line.startswith("PASS") for line in lines[:-1])


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "retractive", "linearise", str(DATA / "S2cover.json")]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first.endswith(b"\n")
