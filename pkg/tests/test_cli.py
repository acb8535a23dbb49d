import json
import math
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from subpart import cli
from subpart.render import MAXIMIZE_COLUMNS
from subpart.verify import CHECKS

SVG = "{http://www.w3.org/2000/svg}"


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_count_text(capsys):
    assert run_cli(capsys, "count", "3,1") == (0, "7\n")
    assert run_cli(capsys, "count", "") == (0, "1\n")


def test_count_chain_flags(capsys):
    assert run_cli(capsys, "count", "2,2", "--k", "2") == (0, "20\n")
    assert run_cli(capsys, "count", "2,2", "--k", "2", "--strict") == (0, "14\n")
    assert run_cli(capsys, "chains", "2,2", "--k", "2") == (0, "20\n")


def test_count_json(capsys):
    code, out = run_cli(capsys, "count", "3,1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == "7"
    assert payload["method"] == "row-dp"
    assert payload["params"]["partition"] == "3,1"


def test_count_csv(capsys):
    code, out = run_cli(capsys, "count", "3,1", "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "partition,k,strict,value,method"
    assert lines[1] == '"3,1",1,false,7,row-dp'


def test_pn(capsys):
    assert run_cli(capsys, "pn", "100") == (0, "190569292\n")
    code, out = run_cli(capsys, "pn", "10", "--format", "json")
    assert json.loads(out)["value"] == "42"


def test_bound(capsys):
    code, out = run_cli(capsys, "bound", "1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["partition"] == "1"
    assert payload["log_bound"] == pytest.approx(math.log(4.0), abs=1e-12)
    assert payload["bound"] == pytest.approx(4.0, abs=1e-9)
    code, out = run_cli(capsys, "bound", "1")
    assert "log_bound" in out and "bound" in out


def test_maximize_text(capsys):
    code, out = run_cli(capsys, "maximize", "--n", "4")
    assert code == 0
    assert "maximizers 3,1; 2,1,1" in out
    assert "max_count 7" in out


def test_maximize_json(capsys):
    code, out = run_cli(capsys, "maximize", "--n", "6", "--k", "2", "--format", "json")
    payload = json.loads(out)
    assert payload["n"] == 6 and payload["k"] == 2
    assert isinstance(payload["max_count"], str)
    assert payload["hr_reference"] > payload["exponent"] > 0


def test_maximize_csv_header_and_determinism(tmp_path):
    paths = []
    for jobs in ("1", "2"):
        p = tmp_path / f"out-{jobs}.csv"
        code = cli.main(
            ["maximize", "--n", "12", "--format", "csv", "--jobs", jobs, "--out", str(p)]
        )
        assert code == 0
        paths.append(p)
    a, b = (p.read_bytes() for p in paths)
    assert a == b
    assert a.decode().splitlines()[0] == ",".join(MAXIMIZE_COLUMNS)


def test_table(capsys):
    code, out = run_cli(capsys, "table", "--n", "2-5", "--format", "csv")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 5
    assert [row.split(",")[0] for row in lines[1:]] == ["2", "3", "4", "5"]
    code, out = run_cli(capsys, "table", "--n", "4,9")
    assert code == 0
    assert out.splitlines()[0].startswith("n ")
    assert run_cli(capsys, "table", "--n", "9-4")[0] == 2


def test_shape_svg(tmp_path, capsys):
    svg = tmp_path / "probe.svg"
    code, out = run_cli(capsys, "shape", "--n", "6", "--out", str(svg))
    assert code == 0
    assert out.splitlines()[0] == str(svg)
    assert "functional(envelope) = " in out
    root = ET.parse(svg).getroot()
    assert root.tag == f"{SVG}svg"
    ids = {el.get("id") for el in root.findall(f"{SVG}polyline")}
    assert ids == {"asymptote", "profile", "envelope", "vershik"}
    assert root.find(f"{SVG}g[@id='legend']") is not None
    caption = root.find(f"{SVG}text[@id='caption']")
    assert caption is not None and "d(profile, limit curve)" in caption.text
    assert svg.read_text().startswith("<?xml")


def test_shape_default_filename(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out = run_cli(capsys, "shape", "--n", "4")
    assert code == 0
    assert (tmp_path / "shape-n4-k1.svg").exists()


def test_shape_json(tmp_path, capsys):
    svg = tmp_path / "j.svg"
    code, out = run_cli(capsys, "shape", "--n", "4", "--format", "json", "--out", str(svg))
    payload = json.loads(out)
    assert payload["svg"] == str(svg)
    assert payload["envelope_distance"] <= payload["profile_distance"]


def test_verify_fast(capsys):
    code, out = run_cli(capsys, "verify", "--level", "fast")
    assert code == 0
    lines = out.splitlines()
    assert sum(1 for line in lines if line.startswith("PASS ")) == len(CHECKS)
    assert lines[-1].endswith("checks passed at level fast")


def test_exit_code_parse_errors(capsys):
    assert run_cli(capsys, "count", "2,x")[0] == 2
    assert run_cli(capsys, "count", "1,2")[0] == 2
    assert run_cli(capsys, "count", "2,1", "--k", "0")[0] == 2
    assert run_cli(capsys, "pn", "-5")[0] == 2


def test_exit_code_resource(capsys):
    assert run_cli(capsys, "maximize", "--n", "40", "--cap", "10")[0] == 3


def test_exit_code_io(capsys):
    assert run_cli(capsys, "pn", "5", "--out", "/nonexistent-dir/x.txt")[0] == 4


def test_unknown_command_exits_2():
    with pytest.raises(SystemExit) as err:
        cli.main(["frobnicate"])
    assert err.value.code == 2


def test_out_file_matches_stdout(tmp_path, capsys):
    code, out = run_cli(capsys, "pn", "30")
    target = tmp_path / "pn.txt"
    assert cli.main(["pn", "30", "--out", str(target)]) == 0
    assert target.read_text() == out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "subpart.cli", "pn", "10"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "42\n"
