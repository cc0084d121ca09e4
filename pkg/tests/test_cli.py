import json
import subprocess
import sys
from pathlib import Path

import pytest

from matroidenum.cli import run_cli

INSTANCES = Path(__file__).resolve().parent.parent / "instances"


def run(capsys, *argv):
    code = run_cli([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def lines(out):
    return [tuple(int(x) for x in line.split()) for line in out.splitlines()]


def test_large_enum_sample_tau4(capsys):
    code, out, _ = run(capsys, "large-enum", INSTANCES / "sample_bases.json", "--tau", 4)
    assert code == 0
    # labels {1,2,5,6}, {1,2,5,7}, {1,3,5,6}
    assert sorted(lines(out)) == [(0, 1, 4, 5), (0, 1, 4, 6), (0, 2, 4, 5)]


def test_sample_below_optimum_is_a_precondition_failure(capsys):
    code, _, err = run(capsys, "large-enum", INSTANCES / "sample_bases.json", "--tau", 3)
    assert code == 3
    assert "precondition" in err


def test_ranked_first_one_is_maximum(capsys):
    code, out, _ = run(capsys, "ranked", INSTANCES / "uniform_8_4_5.json", "--first", 1)
    assert code == 0
    assert lines(out) == [(0, 1, 2, 3)]


def test_json_output(capsys):
    code, out, _ = run(capsys, "max-enum", INSTANCES / "uniform_6_3_4.json", "--json")
    assert code == 0
    sols = [json.loads(line) for line in out.splitlines()]
    assert len(sols) == 20 and all(len(s) == 3 for s in sols)


def test_stats_to_stderr(capsys):
    code, out, err = run(capsys, "match-enum", INSTANCES / "pair_free_graph.json", "--tau", 0, "--stats")
    assert code == 0
    stats = json.loads(err)
    assert stats["outputs"] == len(out.splitlines())
    assert stats["max_delay_queries"] >= 0


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", INSTANCES / "cvc_c6.json")
    assert code == 0
    assert out.splitlines()[-1] == "MATCH"


def test_app_cvc_tau_is_a_ceiling(capsys):
    code, out, _ = run(capsys, "app", "cvc", INSTANCES / "cvc_c6.json", "--tau", 5)
    assert code == 0
    assert len(lines(out)) == 6 and all(len(c) == 5 for c in lines(out))
    code, out, _ = run(capsys, "app", "cvc", INSTANCES / "cvc_c6.json", "--tau", 4)
    assert out == ""


def test_app_kind_mismatch(capsys):
    code, _, err = run(capsys, "app", "dcs", INSTANCES / "cvc_c6.json")
    assert code == 2


def test_dump_digraph(capsys):
    code, out, _ = run(capsys, "max-enum", INSTANCES / "sample_bases.json", "--dump-digraph", "0,1,2")
    assert code == 0
    assert out.count("->") == 10


@pytest.mark.parametrize(
    "payload",
    ["not json", "[]", '{"m1": {"type": "free", "n": 2}}', '{"m1": {"type": "free", "n": 2}, "m2": {"type": "free", "n": 3}}'],
)
def test_malformed_input_exits_2(tmp_path, capsys, payload):
    f = tmp_path / "bad.json"
    f.write_text(payload)
    code, _, err = run(capsys, "large-enum", f)
    assert code == 2
    assert err.startswith("error:")


def test_missing_file_exits_2(capsys):
    code, _, _ = run(capsys, "max-enum", "/nonexistent/instance.json")
    assert code == 2


def test_negative_tau_exits_3(capsys):
    code, _, _ = run(capsys, "large-enum", INSTANCES / "uniform_6_3_4.json", "--tau", -1)
    assert code == 3


def test_reads_stdin_and_is_deterministic():
    data = (INSTANCES / "partition_graphic_10.json").read_text()
    cmd = [sys.executable, "-m", "matroidenum", "large-enum", "-", "--tau", "0"]
    a = subprocess.run(cmd, input=data, capture_output=True, text=True, check=True)
    b = subprocess.run(cmd, input=data, capture_output=True, text=True, check=True)
    assert a.stdout == b.stdout and a.stdout
