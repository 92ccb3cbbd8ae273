from __future__ import annotations

import json
import re
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grmeasure.cli import dumps, loads
from grmeasure.cli.docio import subrep_from_dict, subrep_to_dict
from grmeasure.cli.main import main
from grmeasure.errors import ParseError
from grmeasure.families import KRONECKER2, four_subspace_tube_module, kronecker_preprojective, kronecker_regular
from grmeasure.grcore import gr_filtration
from grmeasure.quiverrep import simple_at

ROOT = Path(__file__).resolve().parents[1]
DECIMAL = re.compile(r"\d\.\d")


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    assert not DECIMAL.search(out.out), "measures print as exact rationals"
    return code, out.out, out.err


@pytest.fixture
def write(tmp_path):
    def _write(M, name="m.json"):
        path = tmp_path / name
        path.write_text(dumps(M))
        return path

    return _write


@pytest.mark.parametrize(
    "M",
    [kronecker_preprojective(3, 4), kronecker_regular(2, "x^2+x+1", 2), four_subspace_tube_module(5), simple_at(KRONECKER2, "a", 7)],
)
def test_round_trip(M):
    assert loads(dumps(M)) == M
    assert dumps(loads(dumps(M))) == dumps(M)


def test_canonical_layout():
    text = dumps(kronecker_preprojective(2, 3))
    assert text.splitlines()[1].startswith('  "p": 2')
    assert len(text.splitlines()) == 6


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[]",
        '{"p": 2}',
        '{"p": 4, "quiver": {"vertices": ["a"], "arrows": []}, "dims": {"a": 1}, "maps": {}}',
        '{"p": 2, "quiver": {"vertices": ["a", "b"], "arrows": [{"name": "f", "from": "a", "to": "b"}]}, "dims": {"a": 1, "b": 1}, "maps": {"f": [[2]]}}',
        '{"p": 2, "quiver": {"vertices": ["a", "b"], "arrows": [{"name": "f", "from": "a", "to": "b"}]}, "dims": {"a": 1, "b": 2}, "maps": {"f": [[1, 0]]}}',
        '{"p": 2, "quiver": {"vertices": ["a", "b"], "arrows": [{"name": "f", "from": "a", "to": "b"}, {"name": "g", "from": "b", "to": "a"}]}, "dims": {"a": 0, "b": 0}, "maps": {"f": [], "g": []}}',
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        loads(text)


def test_format_doc_example_parses():
    doc = (ROOT / "docs" / "FORMAT.md").read_text()
    block = doc.split("```json\n", 1)[1].split("```", 1)[0]
    assert loads(block) == kronecker_preprojective(2, 3)


def test_subrep_documents():
    M = kronecker_regular(2, "x", 2)
    U = gr_filtration(M).chain[1]
    assert subrep_from_dict(M, subrep_to_dict(U)) == U
    with pytest.raises(ParseError):
        subrep_from_dict(M, {"zz": []})


def test_measure(capsys, write):
    code, out, _ = run(capsys, "measure", write(simple_at(KRONECKER2, "b", 2)))
    assert code == 0 and out.strip().endswith("{1} = 1/2")
    code, out, _ = run(capsys, "measure", write(kronecker_preprojective(2, 3)))
    assert code == 0 and "{1,3,5} = 21/32" in out
    assert "vertex order b,a" in out


def test_filtration_all(capsys, write):
    code, out, _ = run(capsys, "filtration", "--all", write(kronecker_regular(2, "x", 2)))
    assert code == 0
    assert "1 filtration(s)" in out and out.count("filtration 1:") == 1 and "filtration 2:" not in out
    assert "lengths [1, 2, 4]" in out


def test_submodules(capsys, write):
    code, out, _ = run(capsys, "submodules", write(four_subspace_tube_module(3)))
    assert code == 0 and "4 Gabriel-Roiter submodule(s)" in out


def test_piling(capsys, write):
    path = write(kronecker_regular(2, "x", 2))
    code, out, _ = run(capsys, "piling", path, '{"b": [[0, 1]], "a": [[0, 1]]}')
    assert code == 0 and out.strip().endswith("piling")
    code, _, err = run(capsys, "piling", path, '{"a": [[1, 0]]}')
    assert code == 8 and "error" in err
    code, _, _ = run(capsys, "piling", path, "{oops")
    assert code == 3


def test_takeoff(capsys):
    code, out, _ = run(capsys, "takeoff", "kronecker2", 2, 3)
    assert code == 0
    lines = [ln for ln in out.splitlines() if ln.startswith("I_")]
    assert lines[0].startswith("I_1 = {1} = 1/2") and "I_1 (0,1)" in lines[0] and "P_1 (1,0)" in lines[0]
    assert lines[1] == "I_2 = {1,3} = 5/8: P_2 (2,1)"
    assert lines[2] == "I_3 = {1,3,5} = 21/32: P_3 (3,2)"
    code, _, err = run(capsys, "takeoff", "kronecker2", 2, 3, "--bound", "pq")
    assert code == 6 and "27" in err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "kronecker2", 2, 2)
    assert code == 0 and "5 isomorphism classes" in out
    code, out, _ = run(capsys, "enumerate", "subspace:2", 3, 3)
    assert code == 0 and "6 isomorphism classes" in out


def test_budget_exit_code(capsys):
    code, _, err = run(capsys, "--budget", 10, "enumerate", "kronecker2", 2, 5)
    assert code == 4 and "budget" in err


def test_tube(capsys):
    code, out, _ = run(capsys, "tube", 3, "x-1", 3)
    assert code == 0
    assert "1 Gabriel-Roiter submodule(s)" in out
    assert "≅ R_{x+2}[2]" in out


def test_pruefer(capsys):
    code, out, _ = run(capsys, "pruefer", 2, "x")
    assert code == 0 and out.splitlines()[-1] == "5/6"
    code, _, err = run(capsys, "pruefer", 2, "x^2+1")
    assert code == 5 and "reducible" in err


def test_usage_and_missing_file(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "measure", "/nonexistent/file.json")[0] == 3
    assert run(capsys, "enumerate", "kronecker:x", 2, 2)[0] == 5


def test_check_json_is_deterministic(capsys):
    code, out1, _ = run(capsys, "check", "pruefer", "--json", "--seed", 3)
    assert code == 0
    _, out2, _ = run(capsys, "check", "pruefer", "--json", "--seed", 3)
    strip = lambda s: [{k: v for k, v in r.items() if k != "seconds"} for r in json.loads(s)["results"]]  # noqa: E731
    assert strip(out1) == strip(out2)
    assert json.loads(out1)["results"][0]["passed"] is True


def test_check_budget_option(capsys):
    assert run(capsys, "check", "classification", "--budget", 5)[0] == 4
    assert run(capsys, "--budget", 5, "check", "pruefer", "--budget", 10**7)[0] == 0


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "grmeasure", "pruefer", "2", "x"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip().endswith("5/6")


@given(st.integers(0, 3), st.integers(0, 3), st.sampled_from([2, 3, 5]), st.integers(0, 2**31))
def test_round_trip_random(da, db, p, seed):
    import numpy as np

    from grmeasure import Representation

    rng = np.random.default_rng(seed)
    M = Representation(KRONECKER2, p, {"a": da, "b": db}, {"alpha": rng.integers(0, p, (db, da)), "beta": rng.integers(0, p, (db, da))})
    assert loads(dumps(M)) == M
