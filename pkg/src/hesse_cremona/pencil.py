"""Elliptic pencils c1 * P3 * Cr1^3 + c2 * Q3 * Cr2^3 = 0 through the twelve points.

A pencil is carried by its three special elements (three arrangement lines
times a triple rational curve).  Generic members are only described by their
numbers: degree and one multiplicity per point-triple.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arrangement import DUAL_HESSE, GROUP_NAMES, Line, ProjPoint, lies_on
from .cremona import CoarseCurveData, CremonaMap, get_map, parse_path, transform_coarse, transform_parameter
from .diagram import (
    ROOT_COARSE,
    ROOT_T,
    build,
    coarse_genus,
    coarse_self_intersection,
    leftmost_path,
)
from .eisenstein import TAU, TAU2, EisensteinInt, QTau
from .polynomials import HomogPoly, multiplicity_at, strict_transform, to_text


class CheckFailure(AssertionError):
    pass


@dataclass(frozen=True)
class SpecialElement:
    lines: tuple[Line, Line, Line]
    component: HomogPoly
    multiplicity: int = 3

    @property
    def line_names(self) -> list[str]:
        return [line_name(L) for L in self.lines]

    @property
    def degree(self) -> int:
        return len(self.lines) + self.multiplicity * self.component.deg

    def polynomial(self) -> HomogPoly:
        f = self.component ** self.multiplicity
        for L in self.lines:
            f = f * HomogPoly.from_line(L)
        return f

    def multiplicity_at(self, p: ProjPoint) -> int:
        return sum(lies_on(p, L) for L in self.lines) + self.multiplicity * multiplicity_at(self.component, p)


@dataclass(frozen=True)
class PencilDescriptor:
    t: EisensteinInt
    coarse: CoarseCurveData
    elements: tuple[SpecialElement, SpecialElement, SpecialElement]
    path: tuple[str, ...] = field(default=())

    @property
    def component_degree(self) -> int:
        return self.elements[0].component.deg


def line_name(L: Line) -> str:
    for name, M in DUAL_HESSE.lines.items():
        if M == L:
            return name
    return str(L)


def _arr(name: str) -> Line:
    return DUAL_HESSE.lines[name]


def seed_pencil() -> PencilDescriptor:
    """E_{-2}: sextics with ordinary triple points at P3(1)."""
    p = HomogPoly.linear((1, 1, 1))
    q = HomogPoly.linear((1, TAU2, TAU))
    r = HomogPoly.linear((1, TAU, TAU2))
    elements = (
        SpecialElement((_arr("l1"), _arr("m1"), _arr("n1")), p),
        SpecialElement((_arr("l2"), _arr("m3"), _arr("n2")), q),
        # the complement of the six lines above; membership is checked below
        SpecialElement((_arr("l3"), _arr("m2"), _arr("n3")), r),
    )
    return PencilDescriptor(ROOT_T, ROOT_COARSE, elements)


def pencil_combination(f: HomogPoly, g: HomogPoly, h: HomogPoly) -> tuple[QTau, QTau] | None:
    """(s, u) in Q(tau) with h = s*f + u*g exactly, or None."""
    if not (f.deg == g.deg == h.deg):
        return None
    mons = sorted(set(f.terms) | set(g.terms) | set(h.terms), reverse=True)
    cf = {e: f.coeff(e) for e in mons}
    cg = {e: g.coeff(e) for e in mons}
    ch = {e: h.coeff(e) for e in mons}
    # find two monomials giving an invertible 2x2 system
    for a in range(len(mons)):
        for b in range(a + 1, len(mons)):
            e1, e2 = mons[a], mons[b]
            det = cf[e1] * cg[e2] - cf[e2] * cg[e1]
            if not det:
                continue
            s = (ch[e1] * cg[e2] - ch[e2] * cg[e1]) / det
            u = (cf[e1] * ch[e2] - cf[e2] * ch[e1]) / det
            if all(s * cf[e] + u * cg[e] == ch[e] for e in mons):
                return s, u
            return None
    return None


def transform_pencil(m: CremonaMap | str, P: PencilDescriptor) -> PencilDescriptor:
    m = get_map(m)
    elements = []
    for el in P.elements:
        lines = []
        for L in el.lines:
            image = strict_transform(m, HomogPoly.from_line(L))
            lines.append(Line(image.coeff((1, 0, 0)), image.coeff((0, 1, 0)), image.coeff((0, 0, 1))))
        lines = [_arr(line_name(L)) if line_name(L) in DUAL_HESSE.lines else L for L in lines]
        elements.append(SpecialElement(tuple(lines), strict_transform(m, el.component), el.multiplicity))
    return PencilDescriptor(
        transform_parameter(m, P.t),
        transform_coarse(m, P.coarse),
        tuple(elements),  # type: ignore[arg-type]
        P.path + (m.tag.value,),
    )


def pencil_along(path) -> PencilDescriptor:
    P = seed_pencil()
    for m in parse_path(path):
        P = transform_pencil(m, P)
    return P


def pencil_at(i: int, j: int, diagram=None) -> PencilDescriptor:
    if diagram is None:
        diagram = build(i)
    return pencil_along(leftmost_path(diagram, i, j))


def fibration_checks(P: PencilDescriptor, membership: bool = False, strict: bool = True) -> dict:
    """Numeric signature of the non-minimal elliptic fibration on Bl_12(P^2).

    Returns ``{check name: (passed, detail)}``; raises CheckFailure on the
    first failing check when ``strict``.  ``membership`` additionally expands
    the three special elements and verifies they span a pencil (costly for
    large degree).
    """
    report: dict[str, tuple[bool, str]] = {}

    def record(name: str, ok: bool, detail: str = "") -> None:
        report[name] = (bool(ok), detail)
        if strict and not ok:
            raise CheckFailure(f"{name}: {detail}")

    c = P.coarse
    record("generic member genus 1", coarse_genus(c) == 1, f"genus {coarse_genus(c)} for {c}")
    record(
        "generic member self-intersection 0",
        coarse_self_intersection(c) == 0,
        f"{c.d}^2 - 3*sum(m^2) = {coarse_self_intersection(c)}",
    )
    names = sorted(n for el in P.elements for n in el.line_names)
    record("nine arrangement lines, each once", names == sorted(DUAL_HESSE.lines), f"lines {names}")
    degs = [el.component.deg for el in P.elements]
    record("equal component degrees", len(set(degs)) == 1 and degs[0] * 3 + 3 == c.d, f"degrees {degs}, d={c.d}")
    record("element degree equals d", all(el.degree == c.d for el in P.elements), f"{[el.degree for el in P.elements]}")

    points = DUAL_HESSE.points
    for k, el in enumerate(P.elements, start=1):
        mults = [multiplicity_at(el.component, p) for p in points]
        d = el.component.deg
        selfint = d * d - sum(m * m for m in mults)
        genus = (d - 1) * (d - 2) // 2 - sum(m * (m - 1) // 2 for m in mults)
        record(f"component {k} is a (-1)-curve", selfint == -1, f"d={d}, multiplicities {mults}, D^2={selfint}")
        record(f"component {k} is rational", genus == 0, f"arithmetic genus after blow-ups {genus}")
        for L in el.lines:
            n = sum(lies_on(p, L) for p in points)
            record(f"line {line_name(L)} is a (-3)-curve", 1 - n == -3, f"passes through {n} points")

    # generic multiplicity at p = min over two special elements
    for g in GROUP_NAMES:
        expected = c.by_group()[g]
        for p in DUAL_HESSE.groups[g]:
            got = min(el.multiplicity_at(p) for el in P.elements[:2])
            record(f"generic multiplicity at {p.name}", got == expected, f"{got} != {expected}")

    if membership:
        f, g, h = (el.polynomial() for el in P.elements)
        record("third element lies in the pencil", pencil_combination(f, g, h) is not None, "no Q(tau) combination")
    return report


def report_json(P: PencilDescriptor, checks: dict | None = None) -> dict:
    if checks is None:
        checks = fibration_checks(P, strict=False)
    return {
        "t": P.t.to_json(),
        "t_text": str(P.t),
        "path": list(P.path),
        "coarse": P.coarse.as_list(),
        "component_degree": P.component_degree,
        "elements": [
            {
                "lines": el.line_names,
                "component": to_text(el.component),
                "multiplicity": el.multiplicity,
                "component_multiplicities": {
                    g: [multiplicity_at(el.component, p) for p in DUAL_HESSE.groups[g]] for g in GROUP_NAMES
                },
            }
            for el in P.elements
        ],
        "checks": [{"name": k, "passed": ok, "detail": detail} for k, (ok, detail) in checks.items()],
        "all_passed": all(ok for ok, _ in checks.values()),
    }
