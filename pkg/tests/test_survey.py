"""Survey layer: dataset, regeneration, sweeps, extrema."""
import math

import pytest

from orthoball import (DatasetMissing, EmptySweep, OrthoParams, RegenReport,
                       find_extrema, load_reference, parse_sweep,
                       regen_tables, run_single, sweep_rows)
from orthoball.survey import (load_allowlist, order_from_text, result_row,
                              rows_to_csv)

INF = math.inf


def test_order_parsing():
    assert order_from_text("7") == 7
    assert order_from_text("inf") == INF
    with pytest.raises(ValueError):
        order_from_text("seven")


def test_load_reference():
    rows = load_reference()
    assert len(rows) == 117
    ids = {r["table_id"] for r in rows}
    assert "1.s.i.a.packing" in ids and "2.s.ii.e.covering" in ids
    anchor = [r for r in rows if r["table_id"] == "1.s.i.a.packing"
              and (r["u"], r["v"], r["w"]) == (5, 3, 5)]
    assert len(anchor) == 1
    assert anchor[0]["density"] == pytest.approx(0.77147)
    with pytest.raises(DatasetMissing):
        load_reference("/nonexistent/tables.csv")


def test_parse_sweep():
    default = tuple(range(3, 10))
    assert parse_sweep(None) == (default, default, default)
    got = parse_sweep("u=3..9,v=3..9,w=3..9,+inf")
    assert got == (default + (INF,),) * 3
    assert parse_sweep("u=5,v=3,w=5") == ((5,), (3,), (5,))
    assert parse_sweep("u=3..4") == ((3, 4), default, default)
    with pytest.raises(ValueError):
        parse_sweep("q=3..9")
    with pytest.raises(ValueError):
        parse_sweep("what")


def test_run_single():
    results, failures = run_single(OrthoParams(5, 3, 5))
    assert {r.case_id for r in results} == {"1.i.a", "1.s.i.a", "1.i.b",
                                            "1.s.i.b", "1.s.i.c", "1.s.i.d"}
    assert len(results) == 12  # every applicable case in both modes
    assert failures  # the outer-vertex cases do not apply here
    results, failures = run_single(OrthoParams(4, 4, 4), "1.s.i.a")
    assert not results and len(failures) == 2


def test_sweep_rows_ordering():
    rows = sweep_rows((3, 4), (5,), (3,), "1.i.a", "both")
    keys = [(r.params.u, r.params.v, r.params.w, r.case_id, r.mode)
            for r in rows]
    assert keys == sorted(keys)
    assert all(r.mode in ("packing", "covering") for r in rows)


def test_regen_symmetric_vertex_table():
    report = regen_tables("1.s.i.a", tolerance=1e-4)
    assert len(report.results) == 4
    assert report.cells_total == 16
    assert report.cells_failed == 0
    assert not report.blocking


def test_regen_single_mode():
    report = regen_tables("2.i.b", "packing")
    assert len(report.results) == 8
    assert not report.blocking
    got = {(r.params.u, r.params.v, r.params.w): r.density
           for r in report.results}
    assert got[(4, 6, 3)] == pytest.approx(0.25697, abs=1e-4)


def test_regen_unknown_table():
    with pytest.raises(ValueError):
        regen_tables("3.x.y")
    with pytest.raises(ValueError):
        regen_tables("1.s.i.a.sideways")


def test_regen_all_tables():
    report = regen_tables()
    assert isinstance(report, RegenReport)
    assert report.cells_total == 468
    assert report.cells_failed == 3
    assert report.blocking
    numeric = [d for d in report.discrepancies if d["field"] != "note"]
    assert len(numeric) == 3
    for d in numeric:
        assert d["table_id"] == "2.s.ii.e.covering"
        assert (d["u"], d["v"], d["w"]) == (4, 8, 4)
        assert isinstance(d["computed"], float)
        assert not d["allowlisted"]
    notes = [d for d in report.discrepancies if d["field"] == "note"]
    assert len(notes) == 1
    assert notes[0]["table_id"] == "2.s.ii.b.packing"


def test_regen_with_allowlist():
    from importlib import resources
    bundled = resources.files("orthoball") / "data" / \
        "known_discrepancies.json"
    allow = load_allowlist(str(bundled))
    assert len(allow) == 3
    report = regen_tables(allowlist=allow)
    assert report.cells_failed == 3
    assert not report.blocking
    assert all(d["allowlisted"] for d in report.discrepancies)


def test_find_extrema_restricted():
    grid = (3, 4, 5, 6)
    ext = find_extrema("1.i.a", grid, grid, grid)
    assert ext.packing.density == pytest.approx(0.68003, abs=1e-4)
    p = ext.packing.params
    assert (p.u, p.v, p.w) == (3, 5, 3)


def test_find_extrema_empty():
    with pytest.raises(EmptySweep):
        find_extrema("1.s.i.a", (4,), (4,), (4,))


def test_result_row_and_csv():
    results, _ = run_single(OrthoParams(5, 3, 5), "1.s.i.a", "packing")
    row = result_row(results[0])
    assert row["table_id"] == "1.s.i.a.packing"
    assert row["stab_order"] == "120"
    assert row["halved"] is True
    assert row["witness"] == "A3F03"
    text = rows_to_csv([row])
    header, line = text.strip().split("\n")
    assert header == ("table_id,u,v,w,case_id,mode,radius,vol_w,vol_ball,"
                      "stab_order,halved,density,witness")
    assert line.startswith("1.s.i.a.packing,5,3,5,1.s.i.a,packing,")
    assert line.endswith(",A3F03")
