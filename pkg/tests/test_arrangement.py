from __future__ import annotations

from itertools import combinations

from hesse_cremona.arrangement import DUAL_HESSE, GROUP_NAMES, Line, ProjPoint, join, lies_on, meet
from hesse_cremona.eisenstein import TAU, TAU2

# lines through each point, in the frozen point order
INCIDENCE = {
    "(1:1:1)": ["l1", "m1", "n1"],
    "(1:tau:tau2)": ["l2", "m3", "n2"],
    "(1:tau2:tau)": ["l3", "m2", "n3"],
    "(1:tau:1)": ["l2", "m1", "n3"],
    "(1:1:tau)": ["l1", "m2", "n2"],
    "(tau:1:1)": ["l3", "m3", "n1"],
    "(1:1:tau2)": ["l1", "m3", "n3"],
    "(tau2:1:1)": ["l2", "m2", "n1"],
    "(1:tau2:1)": ["l3", "m1", "n2"],
    "(0:0:1)": ["l1", "l2", "l3"],
    "(0:1:0)": ["m1", "m2", "m3"],
    "(1:0:0)": ["n1", "n2", "n3"],
}


def test_incidence_table():
    assert DUAL_HESSE.incidence() == INCIDENCE


def test_twelve_three_nine_four():
    DUAL_HESSE.verify()
    pts = DUAL_HESSE.points
    assert len(pts) == 12 and len(DUAL_HESSE.lines) == 9
    for L in DUAL_HESSE.lines.values():
        assert sum(lies_on(p, L) for p in pts) == 4


def test_points_are_projective_classes():
    assert ProjPoint(TAU, TAU, TAU) == ProjPoint(1, 1, 1)
    assert ProjPoint(2, 2 * TAU, 2 * TAU2) == DUAL_HESSE.groups["1"][1]
    assert Line(TAU, -TAU, 0) == DUAL_HESSE.lines["l1"]


def test_groups_partition_the_points():
    assert tuple(DUAL_HESSE.groups) == GROUP_NAMES
    assert len(set(DUAL_HESSE.points)) == 12
    for g in GROUP_NAMES:
        for p in DUAL_HESSE.groups[g]:
            assert DUAL_HESSE.group_of(p) == g


def test_no_two_lines_meet_outside_the_points():
    pts = DUAL_HESSE.points
    for L, M in combinations(DUAL_HESSE.lines.values(), 2):
        assert meet(L, M) in pts


def test_join_recovers_arrangement_lines():
    for name, L in DUAL_HESSE.lines.items():
        on = [p for p in DUAL_HESSE.points if lies_on(p, L)]
        for p, q in combinations(on, 2):
            assert join(p, q) == L


def test_json_shape():
    obj = DUAL_HESSE.to_json()
    assert set(obj) == {"lines", "points", "groups"}
    assert obj["groups"]["inf"] == ["(0:0:1)", "(0:1:0)", "(1:0:0)"]
