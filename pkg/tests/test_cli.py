import json
import subprocess
import sys
from pathlib import Path

import pytest

from evalcover.cli import main
from evalcover.formats import parse_profile

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("fmt", ["text", "json"])
def test_check_exit_codes(capsys, fmt):
    assert run(capsys, "check", GOLDEN / "pass_triangle.profile", "--format", fmt)[0] == 0
    assert run(capsys, "check", GOLDEN / "fail_triangle.profile", "--format", fmt)[0] == 1


def test_input_errors_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.profile"
    bad.write_text("v1: a a\n")
    code, _, err = run(capsys, "check", bad)
    assert code == 2 and "line 1" in err
    small = tmp_path / "small.profile"
    small.write_text("v1: a b\nv2: b c\n")
    assert run(capsys, "check", small)[0] == 2
    assert run(capsys, "check", small, "--mode", "relaxed")[0] == 0
    assert run(capsys, "check", tmp_path / "missing.profile")[0] == 2


def test_dictators(capsys):
    code, out, _ = run(capsys, "dictators", GOLDEN / "pendant.profile", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["a0"] == ["d", "z"]
    assert data["maximal_cycles"] == [["a", "b", "c"]]
    code, out, _ = run(capsys, "dictators", GOLDEN / "fail_triangle.profile")
    assert code == 1 and "uncovered components" in out


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--graph", GOLDEN / "bowtie_tail.edges", "--format", "json")
    assert code == 0
    assert out == (GOLDEN / "bowtie_tail.json").read_text()
    code, out, _ = run(capsys, "decompose", GOLDEN / "pendant.profile")
    assert code == 0 and "articulation vertices: {c}" in out
    assert run(capsys, "decompose")[0] == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", GOLDEN / "pendant.profile")
    assert code == 0 and "verdict: agreement" in out
    code, out, _ = run(capsys, "verify", "--random", 50, "--seed", 3, "--max-vertices", 7)
    assert code == 0 and "profiles: 50" in out


def test_gen_output_parses(capsys):
    argv = ["gen", "--alternatives", 6, "--voters", 4, "--min", 2, "--max", 3, "--bias", 0.5, "--seed", 9]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    p = parse_profile(out)
    assert len(p.alternatives) == 6 and len(p.voters) == 4
    assert run(capsys, *argv)[1] == out
    assert run(capsys, "gen", "--alternatives", 3, "--voters", 3, "--max", 5)[0] == 2


def test_bench_json(capsys):
    code, out, _ = run(capsys, "bench", "--vertices", 2000, "--edges", 6000, "--repeat", 3, "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["edges"] == 6000 and data["repeat"] == 3
    assert data["min_seconds"] <= data["median_seconds"] <= data["max_seconds"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "evalcover", "check", str(GOLDEN / "fail_triangle.profile"), "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["holds"] is False
