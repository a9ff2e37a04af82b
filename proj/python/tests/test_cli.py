"""End-to-end checks of the command-line tool."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("FTGF_CLI", "ftgf")


def run(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert proc.returncode == expect, proc.stderr
    return proc.stdout


def test_mul_engines_agree():
    out = json.loads(run("mul", "--m", "3", "--poly", "D", "--a", "6", "--b", "2"))
    assert out["product"] == "1"
    assert set(out["engines"]) == {"ref", "interleaved", "netlist"}
    assert len(set(out["engines"].values())) == 1


def test_usage_errors_exit_2():
    run("mul", "--m", "3", "--a", "qq", "--b", "2", expect=2)
    run("mul", expect=2)
    run("definitely-not-a-command", expect=2)
    run("mul", "--m", "3", "--poly", "F", "--a", "1", "--b", "1", expect=2)  # reducible poly
    run("mul", "--m", "4", "--poly", "D", "--a", "1", "--b", "1", expect=2)  # degree mismatch
    run("code", "build", "--m", "3", "--t", "4", expect=2)  # unsatisfiable t


def test_code_encode_decode(tmp_path):
    code_file = tmp_path / "code.json"
    descriptor = json.loads(run("code", "build", "--m", "4", "--t", "2", "-o", str(code_file)))
    assert descriptor["n"] == 15 and descriptor["k"] == 7

    encoded = json.loads(run("encode", "--code", str(code_file), "--data", "2B"))
    cw = encoded["codeword"]

    clean = json.loads(run("decode", "--code", str(code_file), "--data", cw))
    assert clean["status"] == "no_error"

    corrupted = format(int(cw, 16) ^ (1 << 2) ^ (1 << 9), "X")
    fixed = json.loads(run("decode", "--code", str(code_file), "--data", corrupted))
    assert fixed["status"] == "corrected"
    assert fixed["positions"] == [2, 9]
    assert fixed["corrected_hex"] == cw


def test_decode_strict_exit_1(tmp_path):
    code_file = tmp_path / "code.json"
    run("code", "build", "--m", "4", "--t", "2", "-o", str(code_file))
    cw = int(json.loads(run("encode", "--code", str(code_file), "--data", "2B"))["codeword"], 16)
    # find a weight-3 corruption the decoder reports as uncorrectable, then
    # check that --strict turns it into exit code 1
    for flips in ((0, 1, 2), (0, 3, 7), (1, 5, 11), (2, 6, 13)):
        corrupted = format(cw ^ sum(1 << p for p in flips), "X")
        out = json.loads(run("decode", "--code", str(code_file), "--data", corrupted))
        if out["status"] == "uncorrectable":
            strict = json.loads(run("decode", "--code", str(code_file), "--data", corrupted, "--strict", expect=1))
            assert strict["status"] == "uncorrectable"
            return
    raise AssertionError("no uncorrectable pattern found among the probes")


def test_roots_worked_example(tmp_path):
    code_file = tmp_path / "code.json"
    run("code", "build", "--m", "3", "--t", "1", "--poly", "D", "-o", str(code_file))
    for method in ("brs", "chien"):
        out = json.loads(run("roots", "--code", str(code_file), "--sigma", "1,6,5", "--method", method))
        assert out["positions"] == [1, 2]
        assert sorted(out["roots"]) == ["3", "6"]


def test_netlist_inject_metrics(tmp_path):
    net_file = tmp_path / "net.json"
    faults_file = tmp_path / "faults.json"
    run("netlist", "--m", "3", "--poly", "D", "-o", str(net_file))
    metrics = json.loads(run("metrics", "--netlist", str(net_file)))
    assert metrics["census"].get("xor", 0) == 0
    assert metrics["census"]["nand"] == 72
    assert all(v == 9 for v in metrics["module_nand"].values())

    faults_file.write_text(json.dumps([{"gate": 40, "model": "flip", "persist": "once"}]))
    report = json.loads(run("inject", "--netlist", str(net_file), "--faults", str(faults_file), "--a", "6", "--b", "2"))
    assert report["error_weight"] == len(report["changed_bits"])


def test_campaign_roundtrip(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"m": 4, "t": 2, "source": "flips", "weights": [1], "trials": 50, "seed": 3}))
    out_json = tmp_path / "report.json"
    out_csv = tmp_path / "report.csv"
    report = json.loads(run("campaign", "--config", str(cfg), "-o", str(out_json), "--csv", str(out_csv)))
    assert report["tally"]["corrected_exact"] == 50
    assert json.loads(out_json.read_text()) == report
    assert out_csv.read_text().startswith("weight,trials,")
    # determinism across invocations
    again = json.loads(run("campaign", "--config", str(cfg)))
    assert again == report


@pytest.mark.parametrize("sub", ["mul", "code", "encode", "decode", "roots", "netlist", "inject", "campaign", "metrics"])
def test_help_exists(sub):
    run(sub, "--help")
