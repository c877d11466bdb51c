"""The bifurcation diagram: recurrence build and closed forms.

Row 1 holds the line x + y + z (component of the pencil E_{-2}).  An odd row
branches into the next one (Qtau down-left, Qtau2 down-right), an even row
maps one-to-one onto the next by Q1.  Interior entries of even rows are
reached twice and both computations are compared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .cremona import (
    CoarseCurveData,
    FineCurveData,
    MapTag,
    get_map,
    transform_coarse,
    transform_fine,
    transform_parameter,
)
from .eisenstein import EisensteinInt

ROOT_T = EisensteinInt(-2, 0)
ROOT_COARSE = CoarseCurveData(6, 3, 1, 1, 1)
# x + y + z passes through (1:tau:tau2) and (1:tau2:tau), the 2nd and 3rd points of P3(1)
ROOT_FINE = FineCurveData(1, (0, 1, 1), (0, 0, 0), (0, 0, 0))
# -2 - tau divides t - 1 for every parameter in the diagram
QUOTIENT_DIVISOR = EisensteinInt(-2, -1)


class MergeMismatch(AssertionError):
    """Two paths into one entry disagree; always an implementation bug."""


class OutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class Parent:
    i: int
    j: int
    map: MapTag

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "map": self.map.value}


@dataclass(frozen=True)
class DiagramEntry:
    i: int
    j: int
    t: EisensteinInt
    c: int
    d: int
    degree: int
    coarse: CoarseCurveData
    fine: FineCurveData
    parents: tuple[Parent, ...] = field(default=())

    @property
    def position(self) -> tuple[int, int]:
        return (self.i, self.j)

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "t": self.t.to_json(),
            "c": self.c,
            "d": self.d,
            "degree": self.degree,
            "coarse": self.coarse.as_list(),
            "fine": self.fine.as_list(),
            "parents": [p.to_json() for p in self.parents],
        }

    @classmethod
    def from_json(cls, obj: dict) -> DiagramEntry:
        return cls(
            i=obj["i"],
            j=obj["j"],
            t=EisensteinInt.from_json(obj["t"]),
            c=obj["c"],
            d=obj["d"],
            degree=obj["degree"],
            coarse=CoarseCurveData.from_list(obj["coarse"]),
            fine=FineCurveData.from_list(obj["fine"]),
            parents=tuple(Parent(p["i"], p["j"], MapTag(p["map"])) for p in obj["parents"]),
        )


def quotient(t: EisensteinInt) -> tuple[int, int]:
    """(c, d) with (t - 1) / (-2 - tau) = c + d*tau."""
    q = (t - 1).exact_div(QUOTIENT_DIVISOR)
    return q.a, q.b


def _make_entry(i: int, j: int, t, coarse, fine, parents) -> DiagramEntry:
    c, d = quotient(t)
    return DiagramEntry(i, j, t, c, d, fine.d, coarse, fine, tuple(parents))


def _child(parent: DiagramEntry, tag: MapTag, i: int, j: int, parents) -> DiagramEntry:
    m = get_map(tag)
    return _make_entry(
        i,
        j,
        transform_parameter(m, parent.t),
        transform_coarse(m, parent.coarse),
        transform_fine(m, parent.fine, track_positions=True),
        parents,
    )


def _compare(a: DiagramEntry, b: DiagramEntry) -> None:
    for name in ("t", "c", "d", "degree", "coarse", "fine"):
        if getattr(a, name) != getattr(b, name):
            raise MergeMismatch(
                f"entry ({a.i},{a.j}): field {name} differs between parents: "
                f"{getattr(a, name)} != {getattr(b, name)}"
            )


@dataclass
class Diagram:
    rows: list[list[DiagramEntry]]
    merges_checked: int = 0

    @property
    def depth(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> DiagramEntry:
        if not (1 <= i <= self.depth) or not (1 <= j <= len(self.rows[i - 1])):
            raise OutOfRange(f"no entry ({i},{j}) in a diagram of depth {self.depth}")
        return self.rows[i - 1][j - 1]

    def __iter__(self) -> Iterator[DiagramEntry]:
        for row in self.rows:
            yield from row

    def __len__(self) -> int:
        return sum(len(r) for r in self.rows)

    def to_json(self) -> list[dict]:
        return [e.to_json() for e in self]


def build(depth: int) -> Diagram:
    if depth < 1:
        raise ValueError("depth must be >= 1")
    root = _make_entry(1, 1, ROOT_T, ROOT_COARSE, ROOT_FINE, ())
    rows = [[root]]
    merges = 0
    for r in range(1, depth):
        prev = rows[-1]
        row: list[DiagramEntry] = []
        if r % 2 == 1:
            for j in range(1, len(prev) + 2):
                # leftmost parent first: (r, j-1) by Qtau2, then (r, j) by Qtau
                links = []
                if j >= 2:
                    links.append(Parent(r, j - 1, MapTag.Qtau2))
                if j <= len(prev):
                    links.append(Parent(r, j, MapTag.Qtau))
                first = _child(prev[links[0].j - 1], links[0].map, r + 1, j, links)
                for link in links[1:]:
                    _compare(first, _child(prev[link.j - 1], link.map, r + 1, j, links))
                    merges += 1
                row.append(first)
        else:
            for j, e in enumerate(prev, start=1):
                row.append(_child(e, MapTag.Q1, r + 1, j, [Parent(r, j, MapTag.Q1)]))
        rows.append(row)
    return Diagram(rows, merges)


def leftmost_path(diagram: Diagram, i: int, j: int) -> list[MapTag]:
    """Map tags from the root to (i, j), always following the first (leftmost) parent."""
    path = []
    e = diagram.entry(i, j)
    while e.parents:
        p = e.parents[0]
        path.append(p.map)
        e = diagram.entry(p.i, p.j)
    return path[::-1]


def all_paths(diagram: Diagram, i: int, j: int) -> list[list[MapTag]]:
    e = diagram.entry(i, j)
    if not e.parents:
        return [[]]
    out = []
    for p in e.parents:
        out.extend(path + [p.map] for path in all_paths(diagram, p.i, p.j))
    return out


# ---------------------------------------------------------------- closed forms

def columns_in_row(i: int) -> int:
    if i < 1:
        raise OutOfRange("row index must be >= 1")
    if i == 1:
        return 1
    if i in (2, 3):
        return 2
    return i // 2 + 1 if i % 2 == 0 else (i - 1) // 2 + 1


def _check(i: int, j: int) -> None:
    if i < 1 or not (1 <= j <= columns_in_row(i)):
        raise OutOfRange(f"({i},{j}) is not an entry of the diagram")


_T21 = EisensteinInt(2, -1)
_T31 = EisensteinInt(-3, 1)
_ROW_STEP = EisensteinInt(1, -1)  # 1 - tau
_COL_STEP = EisensteinInt(1, 2)  # 1 + 2 tau


def t_closed(i: int, j: int) -> EisensteinInt:
    _check(i, j)
    if i == 1:
        return ROOT_T
    if i % 2 == 0:
        return _T21 + _ROW_STEP * (i // 2 - 1) + _COL_STEP * (j - 1)
    return _T31 - _ROW_STEP * ((i - 1) // 2 - 1) - _COL_STEP * (j - 1)


def cd_closed(i: int, j: int) -> tuple[int, int]:
    _check(i, j)
    if i == 1:
        return (1, -1)
    if i % 2 == 0:
        return (-(j - 1), i // 2 + 1 - j)
    h = (i - 1) // 2
    return (1 + (j - 1), -h - 1 + (j - 1))


def degree_formula(c: int, d: int, cd_sign: int = -1) -> int:
    """c^2 + d^2 - c + d - c*d.  ``cd_sign=+1`` gives the variant with +c*d."""
    return c * c + d * d - c + d + cd_sign * c * d


def degree_closed(i: int, j: int, cd_sign: int = -1) -> int:
    return degree_formula(*cd_closed(i, j), cd_sign=cd_sign)


def pencil_generic_degree(c: int, d: int) -> int:
    """Degree of the generic member of the pencil with quotient c + d*tau (a=1, b=0)."""
    a, b = 1, 0
    return 3 * (a * a + b * b + c * c + d * d - a * b - a * c + a * d - b * d - c * d)


# ---------------------------------------------------------------- invariants

def coarse_genus(c: CoarseCurveData) -> int:
    """Geometric genus, every multiplicity counted at three ordinary points."""
    return (c.d - 1) * (c.d - 2) // 2 - 3 * sum(m * (m - 1) // 2 for m in c.multiplicities())


def coarse_self_intersection(c: CoarseCurveData) -> int:
    return c.d * c.d - 3 * sum(m * m for m in c.multiplicities())


def fine_genus(f: FineCurveData) -> int:
    return (f.d - 1) * (f.d - 2) // 2 - sum(m * (m - 1) // 2 for m in f.multiplicities())


def fine_self_intersection(f: FineCurveData) -> int:
    return f.d * f.d - sum(m * m for m in f.multiplicities())


def entry_violations(e: DiagramEntry, cd_sign: int = -1) -> list[str]:
    """Names of the identities an entry breaks (empty when all hold)."""
    bad = []
    pos = f"a({e.i},{e.j})"
    if e.t.mod3_class() != 1:
        bad.append(f"{pos}: m+n of t={e.t} is not 1 mod 3")
    if (e.t - 1) != QUOTIENT_DIVISOR * EisensteinInt(e.c, e.d):
        bad.append(f"{pos}: (t-1)/(-2-tau) != c+d*tau")
    if e.t != t_closed(e.i, e.j):
        bad.append(f"{pos}: t={e.t} but closed form gives {t_closed(e.i, e.j)}")
    if (e.c, e.d) != cd_closed(e.i, e.j):
        bad.append(f"{pos}: (c,d)={(e.c, e.d)} but closed form gives {cd_closed(e.i, e.j)}")
    closed = degree_closed(e.i, e.j, cd_sign)
    if e.degree != closed:
        bad.append(f"{pos}: degree formula gives {closed}, expected {e.degree}")
    if 3 * e.degree + 3 != e.coarse.d:
        bad.append(f"{pos}: degree {e.degree} != coarse degree {e.coarse.d}/3 - 1")
    if pencil_generic_degree(e.c, e.d) != e.coarse.d:
        bad.append(f"{pos}: pencil degree formula != {e.coarse.d}")
    if fine_genus(e.fine) != 0:
        bad.append(f"{pos}: fine data {e.fine} has genus {fine_genus(e.fine)}")
    if fine_self_intersection(e.fine) != -1:
        bad.append(f"{pos}: fine data {e.fine} has self-intersection {fine_self_intersection(e.fine)}")
    if coarse_genus(e.coarse) != 1:
        bad.append(f"{pos}: coarse data {e.coarse} has genus {coarse_genus(e.coarse)}")
    if coarse_self_intersection(e.coarse) != 0:
        bad.append(f"{pos}: coarse data {e.coarse} has self-intersection {coarse_self_intersection(e.coarse)}")
    return bad


def symmetry_violations(diagram: Diagram, cd_sign: int = -1) -> list[str]:
    bad = []
    for i in range(1, diagram.depth + 1):
        n = columns_in_row(i)
        for j in range(1, n + 1):
            if degree_closed(i, j, cd_sign) != degree_closed(i, n + 1 - j, cd_sign):
                bad.append(f"row {i}: degree at column {j} differs from column {n + 1 - j}")
    return bad
