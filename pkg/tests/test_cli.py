from __future__ import annotations

import csv
import io
import json

import pytest
from click.testing import CliRunner

from hesse_cremona import _kernels
from hesse_cremona.cli import main
from hesse_cremona.diagram import build
from hesse_cremona.polynomials import HomogPoly, curve_equation, parse_poly
from reference_values import DEGREE_TRIANGLE, PARAMETERS, QUINTIC_4_2


@pytest.fixture(scope="module")
def runner():
    return CliRunner()


def run(runner, *args):
    return runner.invoke(main, list(args), catch_exceptions=False)


def test_degree_triangle_table(runner):
    res = run(runner, "diagram", "--rows", "11", "--show", "degree")
    assert res.exit_code == 0
    rows = [[int(v) for v in line.split()] for line in res.output.splitlines()]
    assert rows == DEGREE_TRIANGLE
    # centred: the apex sits over the middle of the widest row
    lines = res.output.splitlines()
    assert lines[0].strip() == "1" and len(lines[0]) < len(lines[-1])


def test_single_row(runner):
    assert run(runner, "diagram", "--rows", "1").output.strip() == "1"


def test_param_json(runner):
    res = run(runner, "diagram", "--rows", "7", "--show", "param", "--format", "json")
    data = json.loads(res.output)
    assert len(data) == 19
    for row in data:
        assert (row["param"]["m"], row["param"]["n"]) == PARAMETERS[(row["i"], row["j"])]


def test_csv_and_multiple_fields(runner):
    res = run(runner, "diagram", "--rows", "4", "--show", "degree", "--show", "cd", "--format", "csv")
    rows = list(csv.reader(io.StringIO(res.output)))
    assert rows[0] == ["i", "j", "degree", "cd"]
    assert ["4", "2", "5", "(-1,1)"] in rows


def test_json_round_trips_through_entries(runner):
    res = run(runner, "diagram", "--rows", "5", "--show", "sing", "--show", "param", "--show", "cd", "--format", "json")
    data = json.loads(res.output)
    d = build(5)
    for row in data:
        e = d.entry(row["i"], row["j"])
        assert row["sing"] == e.fine.as_list() and row["cd"] == [e.c, e.d]


def test_output_is_deterministic(runner, tmp_path):
    out = tmp_path / "d.json"
    run(runner, "diagram", "--rows", "9", "--show", "sing", "--format", "json", "--output", str(out))
    first = out.read_bytes()
    run(runner, "diagram", "--rows", "9", "--show", "sing", "--format", "json", "--output", str(out))
    assert out.read_bytes() == first


def test_equation(runner):
    assert run(runner, "equation", "--row", "1", "--col", "1").output.strip() == "x + y + z"
    res = run(runner, "equation", "--row", "4", "--col", "2")
    assert parse_poly(res.output.strip()).equal_up_to_scalar(parse_poly(QUINTIC_4_2))


def test_equation_audit_and_json(runner):
    res = run(runner, "equation", "--row", "3", "--col", "1", "--verify")
    assert res.exit_code == 0 and "audit passed" in res.output
    res = run(runner, "equation", "--row", "5", "--col", "2", "--verify", "--format", "json")
    obj = json.loads(res.output)
    assert obj["audit"]["passed"] and obj["degree"] == 8
    assert HomogPoly.from_json(obj["terms"]) == curve_equation(5, 2)


@pytest.mark.parametrize(
    "args",
    [
        ("equation", "--row", "3", "--col", "3"),
        ("equation", "--row", "10", "--col", "1"),
        ("equation", "--row", "0", "--col", "1"),
        ("diagram", "--rows", "0"),
        ("diagram", "--show", "colour"),
        ("pencil", "--row", "2", "--col", "5"),
        ("nonsense",),
    ],
)
def test_usage_errors_exit_2(runner, args):
    assert runner.invoke(main, list(args)).exit_code == 2


def test_verify_minimal_and_failure(runner):
    res = run(runner, "verify", "--verify-depth", "1")
    assert res.exit_code == 0 and "all checks passed" in res.output
    res = runner.invoke(main, ["verify", "--verify-depth", "6", "--degree-sign", "1"])
    assert res.exit_code == 1
    assert "a(4,2): degree formula gives 3, expected 5" in res.output


def test_pencil_reports(runner):
    obj = json.loads(run(runner, "pencil", "--row", "1", "--col", "1").output)
    assert obj["coarse"] == [6, 3, 1, 1, 1]
    assert [e["component"] for e in obj["elements"]] == [
        "x + y + z",
        "x - (1+tau)*y + tau*z",
        "x + tau*y - (1+tau)*z",
    ]
    obj = json.loads(run(runner, "pencil", "--row", "2", "--col", "1").output)
    assert {parse_poly(e["component"]).deg for e in obj["elements"]} == {2}
    obj = json.loads(run(runner, "pencil", "--row", "3", "--col", "1").output)
    assert obj["coarse"][0] == 15 and obj["all_passed"]
    for e in obj["elements"]:
        assert e["component_multiplicities"]["1"] == [2, 2, 2]


def test_arrangement(runner):
    res = run(runner, "arrangement")
    assert res.exit_code == 0 and "(12_3, 9_4) verified" in res.output
    obj = json.loads(run(runner, "arrangement", "--format", "json").output)
    assert obj["verified"] and obj["incidence"]["(0:0:1)"] == ["l1", "l2", "l3"]


def test_numpy_backend_flag(runner):
    before = _kernels.backend()
    try:
        res = run(runner, "--backend", "numpy", "equation", "--row", "2", "--col", "1")
        assert res.exit_code == 0 and _kernels.backend() == "numpy"
    finally:
        _kernels.set_backend(before)
