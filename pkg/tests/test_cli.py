"""Command line interface: dispatch, formats, and exit codes."""
import csv
import io
import json

import pytest

from orthoball.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_single_run(capsys):
    code, out, err = run(capsys, "--u", "5", "--v", "3", "--w", "5",
                         "--case", "1.s.i.a")
    assert code == 0
    assert "0.77147" in out and "1.36893" in out
    assert "A3F03" in out and "A3F12" in out


def test_single_run_json(capsys):
    code, out, _ = run(capsys, "--u", "5", "--v", "3", "--w", "5",
                       "--case", "1.s.i.a", "--mode", "packing",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"results", "discrepancies", "extrema"}
    assert len(doc["results"]) == 1
    row = doc["results"][0]
    assert row["witness"] == "A3F03"
    assert row["density"] == pytest.approx(0.7714714391415501)


def test_single_run_csv_columns(capsys):
    code, out, _ = run(capsys, "--u", "5", "--v", "3", "--w", "5",
                       "--format", "csv")
    assert code == 0
    reader = csv.reader(io.StringIO(out))
    header = next(reader)
    assert header == ["table_id", "u", "v", "w", "case_id", "mode",
                      "radius", "vol_w", "vol_ball", "stab_order", "halved",
                      "density", "witness"]
    assert sum(1 for _ in reader) == 12


def test_usage_errors(capsys):
    assert run(capsys, "--u", "5", "--v", "3")[0] == 1
    assert run(capsys, "--u", "2", "--v", "3", "--w", "5")[0] == 1
    assert run(capsys, "--case", "bogus", "--u", "5", "--v", "3",
               "--w", "5")[0] == 1
    assert run(capsys, "--table", "all", "--sweep", "u=3..5")[0] == 1
    assert run(capsys, "--find-extrema", "--table", "all")[0] == 1
    assert run(capsys, "--mode", "sideways", "--u", "5", "--v", "3",
               "--w", "5")[0] == 1
    assert run(capsys, "--sweep", "q=1", )[0] == 1


def test_computation_error_exit(capsys):
    code, _, err = run(capsys, "--u", "4", "--v", "4", "--w", "4",
                       "--case", "1.s.i.a")
    assert code == 2
    assert "CaseInapplicable" in err
    code, _, err = run(capsys, "--u", "4", "--v", "3", "--w", "4")
    assert code == 2
    assert "NotHyperbolic" in err


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


def test_table_regen_roundtrip(capsys):
    code, out, _ = run(capsys, "--table", "1.s.i.a", "--tolerance", "1e-4")
    assert code == 0
    assert "cells compared: 16" in out
    assert "0.77147" in out


def test_table_regen_discrepancy_exit(capsys):
    code, out, _ = run(capsys, "--table", "2.s.ii.e")
    assert code == 3
    assert "DISCREPANCY" in out
    code, out, _ = run(capsys, "--table", "2.s.ii.e",
                       "--allowlist", "bundled")
    assert code == 0
    assert "allowlisted" in out


def test_table_regen_csv_streams(capsys):
    code, out, err = run(capsys, "--table", "2.s.ii.e", "--format", "csv")
    assert code == 3
    assert out.startswith("table_id,")
    assert "DISCREPANCY" in err and "DISCREPANCY" not in out


def test_sweep(capsys):
    code, out, _ = run(capsys, "--sweep", "u=5,v=3,w=5", "--case", "1.s.i.a",
                       "--format", "csv")
    assert code == 0
    rows = out.strip().split("\n")
    assert len(rows) == 3  # header + both modes
    assert rows[1].startswith("1.s.i.a.covering,5,3,5")
    assert rows[2].startswith("1.s.i.a.packing,5,3,5")


def test_find_extrema_cli(capsys):
    code, out, _ = run(capsys, "--find-extrema", "--case", "1.i.a",
                       "--sweep", "u=3..6,v=3..6,w=3..6",
                       "--mode", "packing")
    assert code == 0
    assert "0.68003" in out and "(3, 5, 3)" in out


def test_find_extrema_json(capsys):
    code, out, _ = run(capsys, "--find-extrema", "--sweep",
                       "u=5,v=3,w=5", "--case", "1.s.i.a",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["extrema"]["packing"]["density"] == \
        pytest.approx(0.7714714391415501)
    assert doc["extrema"]["covering"]["witness"] == "A3F12"
