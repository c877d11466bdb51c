"""The dual Hesse arrangement: nine lines, twelve triple points, four point-triples."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import lcm
from typing import Iterable

from .eisenstein import ONE, TAU, TAU2, ZERO, EisensteinInt, QTau

GROUP_NAMES = ("1", "tau", "tau2", "inf")


def _normalize(coords: Iterable) -> tuple[QTau, QTau, QTau]:
    cs = tuple(QTau.coerce(c) for c in coords)
    if len(cs) != 3:
        raise ValueError("expected three homogeneous coordinates")
    for c in cs:
        if c:
            inv = c.inverse()
            return tuple(x * inv for x in cs)  # type: ignore[return-value]
    raise ValueError("all homogeneous coordinates vanish")


def _as_integral(coords: tuple[QTau, QTau, QTau]) -> tuple[EisensteinInt, ...]:
    den = 1
    for c in coords:
        d = c.denominator()
        den = lcm(den, d)
    return tuple((c * den).to_eisenstein() for c in coords)


@dataclass(frozen=True)
class ProjPoint:
    """A point of P^2 over Q(tau), first nonzero coordinate scaled to 1."""

    coords: tuple[QTau, QTau, QTau]
    name: str = field(default="", compare=False)

    def __init__(self, *coords, name: str = "") -> None:
        if len(coords) == 1:
            coords = tuple(coords[0])
        object.__setattr__(self, "coords", _normalize(coords))
        object.__setattr__(self, "name", name)

    def integral(self) -> tuple[EisensteinInt, EisensteinInt, EisensteinInt]:
        """A Z[tau] representative (denominators cleared)."""
        return _as_integral(self.coords)  # type: ignore[return-value]

    def __str__(self) -> str:
        return "(" + ":".join(str(c) for c in self.coords) + ")"

    def to_json(self) -> list:
        return [coord_json(c) for c in self.coords]


@dataclass(frozen=True)
class Line:
    """A line a*x + b*y + c*z = 0, first nonzero coefficient scaled to 1."""

    coeffs: tuple[QTau, QTau, QTau]
    name: str = field(default="", compare=False)

    def __init__(self, *coeffs, name: str = "") -> None:
        if len(coeffs) == 1:
            coeffs = tuple(coeffs[0])
        object.__setattr__(self, "coeffs", _normalize(coeffs))
        object.__setattr__(self, "name", name)

    def integral(self) -> tuple[EisensteinInt, EisensteinInt, EisensteinInt]:
        return _as_integral(self.coeffs)  # type: ignore[return-value]

    def __call__(self, p: ProjPoint) -> QTau:
        return sum((a * x for a, x in zip(self.coeffs, p.coords)), QTau())

    def __str__(self) -> str:
        return self.name or "[" + ", ".join(str(c) for c in self.coeffs) + "]"

    def to_json(self) -> list:
        return [coord_json(c) for c in self.coeffs]


def coord_json(c: QTau) -> dict:
    if c.a.denominator == 1 and c.b.denominator == 1:
        return {"m": int(c.a), "n": int(c.b)}
    return {"m": str(c.a), "n": str(c.b)}


def lies_on(p: ProjPoint, L: Line) -> bool:
    return not L(p)


def join(p: ProjPoint, q: ProjPoint) -> Line:
    """The line through two distinct points (cross product)."""
    a, b = p.coords, q.coords
    cross = (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])
    return Line(cross)


def meet(L: Line, M: Line) -> ProjPoint:
    a, b = L.coeffs, M.coeffs
    cross = (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])
    return ProjPoint(cross)


@dataclass(frozen=True)
class ArrangementData:
    lines: dict[str, Line]
    groups: dict[str, tuple[ProjPoint, ProjPoint, ProjPoint]]

    @property
    def points(self) -> list[ProjPoint]:
        return [p for g in GROUP_NAMES for p in self.groups[g]]

    def incidence(self) -> dict[str, list[str]]:
        """For every point name, the names of the lines through it."""
        return {
            p.name: [name for name, L in self.lines.items() if lies_on(p, L)]
            for p in self.points
        }

    def group_of(self, p: ProjPoint) -> str | None:
        for g in GROUP_NAMES:
            if p in self.groups[g]:
                return g
        return None

    def line_product_coeffs(self) -> list:
        return [L.integral() for L in self.lines.values()]

    def verify(self) -> None:
        """Raise AssertionError unless the (12_3, 9_4) configuration holds exactly."""
        pts = self.points
        assert len(pts) == 12 and len(set(pts)) == 12, "expected 12 distinct points"
        assert len(set(self.lines.values())) == 9, "expected 9 distinct lines"
        for p in pts:
            n = sum(lies_on(p, L) for L in self.lines.values())
            assert n == 3, f"point {p.name} lies on {n} lines"
        for name, L in self.lines.items():
            n = sum(lies_on(p, L) for p in pts)
            assert n == 4, f"line {name} contains {n} points"
        # no double points: every pairwise intersection is one of the 12
        for L, M in combinations(self.lines.values(), 2):
            assert meet(L, M) in pts, f"{L} and {M} meet outside the arrangement"

    def to_json(self) -> dict:
        return {
            "lines": {name: L.to_json() for name, L in self.lines.items()},
            "points": {p.name: p.to_json() for p in self.points},
            "groups": {g: [p.name for p in self.groups[g]] for g in GROUP_NAMES},
        }


def _pt(a, b, c, name):
    return ProjPoint(a, b, c, name=name)


def dual_hesse() -> ArrangementData:
    x_, y_, z_ = (ONE, ZERO, ZERO), (ZERO, ONE, ZERO), (ZERO, ZERO, ONE)

    def form(u, v, s):
        # u - s*v as a coefficient triple
        return tuple(QTau.coerce(ui) - QTau.coerce(s) * vi for ui, vi in zip(u, v))

    lines = {}
    for k, s in enumerate((ONE, TAU, TAU2), start=1):
        lines[f"l{k}"] = Line(form(y_, x_, s), name=f"l{k}")
    for k, s in enumerate((ONE, TAU, TAU2), start=1):
        lines[f"m{k}"] = Line(form(z_, x_, s), name=f"m{k}")
    for k, s in enumerate((ONE, TAU, TAU2), start=1):
        lines[f"n{k}"] = Line(form(z_, y_, s), name=f"n{k}")
    # fixed order within each triple
    groups = {
        "1": (
            _pt(1, 1, 1, "(1:1:1)"),
            _pt(1, TAU, TAU2, "(1:tau:tau2)"),
            _pt(1, TAU2, TAU, "(1:tau2:tau)"),
        ),
        "tau": (
            _pt(1, TAU, 1, "(1:tau:1)"),
            _pt(1, 1, TAU, "(1:1:tau)"),
            _pt(TAU, 1, 1, "(tau:1:1)"),
        ),
        "tau2": (
            _pt(1, 1, TAU2, "(1:1:tau2)"),
            _pt(TAU2, 1, 1, "(tau2:1:1)"),
            _pt(1, TAU2, 1, "(1:tau2:1)"),
        ),
        "inf": (
            _pt(0, 0, 1, "(0:0:1)"),
            _pt(0, 1, 0, "(0:1:0)"),
            _pt(1, 0, 0, "(1:0:0)"),
        ),
    }
    return ArrangementData(lines=lines, groups=groups)


DUAL_HESSE = dual_hesse()
