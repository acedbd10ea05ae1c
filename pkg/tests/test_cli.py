import json
import shutil
from pathlib import Path

import pytest

from conicfans import cli, verify
from conicfans.lunavust import fan_from_json_dict


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_table_cosets_has_ten_rows(capsys):
    code, out = run(capsys, "table", "cosets")
    lines = [l for l in out.strip().splitlines() if l.strip()]
    assert code == 0
    assert len(lines) == 11  # header + ten family rows
    assert lines[-1].split()[0] == "G2" and lines[-1].split()[1] == "2"


def test_table_chow_g2(capsys):
    code, out = run(capsys, "table", "chow", "G2")
    assert code == 0
    assert "(-1,-2)" in out and "(0,1)" in out and "D2" in out


def test_table_planes_d4(capsys):
    code, out = run(capsys, "table", "planes", "D4")
    assert code == 0
    assert len(out.strip().splitlines()) == 4   # header + three rows


def test_usage_errors(capsys):
    code, _ = run(capsys, "table", "nosuch")
    assert code == 2
    code, _ = run(capsys, "table", "chow", "A5")
    assert code == 2
    code, _ = run(capsys, "export", "fan-json", "C3")
    assert code == 2


def test_csv_and_json_formats(capsys):
    code, out = run(capsys, "--format", "csv", "table", "cosets")
    assert code == 0 and out.splitlines()[0] == "g,double_cosets"
    code, out = run(capsys, "--format", "json", "table", "colors", "G2")
    data = json.loads(out)
    assert code == 0 and len(data) == 2


def test_export_fan_round_trip(tmp_path, capsys):
    out_file = tmp_path / "fan.json"
    code, _ = run(capsys, "export", "fan-json", "B4", "--which", "hilb",
                  "-o", str(out_file))
    assert code == 0
    data = json.loads(out_file.read_text())
    fan = fan_from_json_dict(data)
    from conicfans.conicatlas import build_entry
    assert {c.key() for c in fan} == {c.key() for c in build_entry("B4").hilb_fan}
    maximal = [c for c in data["cones"] if len(c["rays"]) == 4]
    assert len(maximal) == 2


def test_export_hasse_dot_g2(capsys):
    code, out = run(capsys, "export", "hasse-dot", "G2")
    assert code == 0
    assert out.count("->") == 2 and "Twistor" in out and "NPD" in out


def test_export_constants_csv(capsys):
    code, out = run(capsys, "export", "constants-csv", "G2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "alpha,beta,n"
    assert all(line.split(",")[2].lstrip("-").isdigit() for line in lines[1:])


def test_contact_eq_report(capsys):
    code, out = run(capsys, "contact-eq", "G2", "--samples", "400", "--seed", "3")
    assert code == 0
    data = json.loads(out)
    assert data["violations"] == []
    assert data["witnesses"]["line_direction_cubic_vanishes"] is True
    assert data["witnesses"]["general_direction_cubic_vanishes"] is False


def test_verify_scope_and_determinism(capsys):
    code, out1 = run(capsys, "--format", "json", "--max-rank", "4", "verify",
                     "chevalley", "--seed", "7", "--samples", "1000")
    assert code == 0
    code, out2 = run(capsys, "--format", "json", "--max-rank", "4", "verify",
                     "chevalley", "--seed", "7", "--samples", "1000")
    assert code == 0
    assert out1 == out2


def test_verify_rootcore_quick(capsys):
    code, out = run(capsys, "--max-rank", "4", "verify", "rootcore")
    assert code == 0
    assert "0 failures" in out


@pytest.mark.parametrize("filename,mutate", [
    ("gamma.json", lambda d: d["G2"][0].__setitem__(0, "5")),
    ("cosets.json", lambda d: d.__setitem__("G2", 3)),
    ("colors.json", lambda d: d["B4"][0].__setitem__("a", 9)),
    ("satake.json", lambda d: d["E7"].__setitem__("black", [1, 3])),
    ("planes.json", lambda d: d["D4"][0].__setitem__("in_z", False)),
    ("chow_cones.json", lambda d: d["G2"].__setitem__("colors", [1])),
    ("hilb_cones.json", lambda d: d["B4"][0]["rays"].__setitem__(0, [9, 9, 9, 9])),
    ("faces.json", lambda d: d["F4"]["hilb"].__setitem__("1", [])),
    ("hasse.json", lambda d: d["G2"]["hilb"]["nodes"][0].__setitem__("type", "PC")),
    ("orbitcounts.json", lambda d: d["D4"].__setitem__("hilb", 20)),
])
def test_fault_injection_flips_exit_code(tmp_path, monkeypatch, capsys,
                                         filename, mutate):
    src = verify.golden_dir()
    work = tmp_path / "golden"
    shutil.copytree(src, work)
    target = work / filename
    data = json.loads(target.read_text())
    mutate(data)
    target.write_text(json.dumps(data))
    monkeypatch.setenv(verify.GOLDEN_ENV, str(work))
    scope = "symdata" if filename in ("gamma.json", "satake.json", "colors.json") \
        else "conicatlas"
    code, out = run(capsys, "--max-rank", "4", "verify", scope)
    assert code == 1
    assert "FAIL" in out


def test_gamma_fault_names_the_check(tmp_path, monkeypatch, capsys):
    src = verify.golden_dir()
    work = tmp_path / "golden"
    shutil.copytree(src, work)
    target = work / "gamma.json"
    data = json.loads(target.read_text())
    data["B4"][1][1] = "7/2"
    target.write_text(json.dumps(data))
    monkeypatch.setenv(verify.GOLDEN_ENV, str(work))
    code, out = run(capsys, "--max-rank", "4", "verify", "symdata")
    assert code == 1
    assert "gamma" in out


def test_bless_reports_unchanged(tmp_path, monkeypatch, capsys):
    src = verify.golden_dir()
    work = tmp_path / "golden"
    shutil.copytree(src, work)
    monkeypatch.setenv(verify.GOLDEN_ENV, str(work))
    code, out = run(capsys, "verify", "all", "--bless")
    assert code == 0
    assert out.count("unchanged") == len(verify.GOLDEN_FILES)
