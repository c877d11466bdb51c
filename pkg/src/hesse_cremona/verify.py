"""Invariant suites behind ``hesse-cremona verify``.

Every suite returns a SuiteResult listing the identities it checked and a
human-readable message for each one that failed.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .arrangement import DUAL_HESSE
from .cremona import MAPS, CremonaError, transform_coarse, transform_fine
from .diagram import Diagram, MergeMismatch, build, entry_violations, symmetry_violations
from .eisenstein import ONE, TAU, TAU2, ZERO, DivisionError, EisensteinInt
from .pencil import fibration_checks, seed_pencil, transform_pencil
from .polynomials import (
    SEED_LINE,
    X,
    Y,
    Z,
    cubic_product,
    fine_profile,
    line_product,
    strict_transform,
    substitute,
)

# bounds for the polynomial-level suites; depth only caps them from above
EQUATION_ROWS = 7
PENCIL_ROWS = 7
MEMBERSHIP_ROWS = 7


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, message: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(message)


def eisenstein_suite(radius: int = 3) -> SuiteResult:
    res = SuiteResult("eisenstein")
    res.check(TAU * TAU + TAU + ONE == ZERO, "tau^2 + tau + 1 != 0")
    res.check(TAU**3 == ONE, "tau^3 != 1")
    grid = [EisensteinInt(a, b) for a in range(-radius, radius + 1) for b in range(-radius, radius + 1)]
    for x, y in itertools.product(grid, repeat=2):
        res.check(x * y == y * x, f"{x}*{y} not commutative")
        res.check((x * y).norm() == x.norm() * y.norm(), f"norm not multiplicative at {x}, {y}")
        res.check((x + y).mod3_class() == (x.mod3_class() + y.mod3_class()) % 3, f"mod 3 class not additive at {x}, {y}")
        res.check(x * (y + TAU) == x * y + x * TAU, f"distributivity fails at {x}, {y}")
        if y:
            res.check((x * y).exact_div(y) == x, f"({x}*{y})/{y} != {x}")
    for x in grid:
        res.check(x.conjugate().conjugate() == x, f"conjugation not an involution at {x}")
        res.check(x * x.conjugate() == EisensteinInt(x.norm(), 0), f"x * conj(x) != norm at {x}")
    try:
        EisensteinInt(1, 0).exact_div(EisensteinInt(2, 0))
        res.check(False, "1 / 2 did not raise")
    except DivisionError:
        res.check(True, "")
    return res


def arrangement_suite() -> SuiteResult:
    res = SuiteResult("arrangement")
    try:
        DUAL_HESSE.verify()
        res.check(True, "")
    except AssertionError as exc:
        res.check(False, f"incidence: {exc}")
    inc = DUAL_HESSE.incidence()
    res.check(sum(len(v) for v in inc.values()) == 36, "incidence count != 36")
    res.check(line_product() == cubic_product(), "product of the nine lines != (x^3-z^3)(y^3-z^3)(x^3-y^3)")
    return res


def _involution_failures(e) -> list[str]:
    out = []
    for m in MAPS.values():
        try:
            once_c = transform_coarse(m, e.coarse)
            once_f = transform_fine(m, e.fine, track_positions=True)
        except CremonaError:
            continue
        if transform_coarse(m, once_c) != e.coarse:
            out.append(f"a({e.i},{e.j}): {m} twice does not fix coarse data {e.coarse}")
        if transform_fine(m, once_f, track_positions=True) != e.fine:
            out.append(f"a({e.i},{e.j}): {m} twice does not fix fine data {e.fine}")
    return out


def diagram_suite(depth: int, cd_sign: int = -1) -> tuple[SuiteResult, Diagram | None]:
    res = SuiteResult("diagram")
    try:
        diagram = build(depth)
    except MergeMismatch as exc:
        res.check(False, str(exc))
        return res, None
    res.checks += diagram.merges_checked
    for e in diagram:
        res.failures.extend(entry_violations(e, cd_sign))
        res.failures.extend(_involution_failures(e))
        res.checks += 12 + 2 * len(MAPS)
    sym = symmetry_violations(diagram, cd_sign)
    res.checks += len(diagram)
    res.failures.extend(sym)
    return res, diagram


def polynomials_suite(diagram: Diagram, rows: int = EQUATION_ROWS) -> SuiteResult:
    """Equation audit: degree and all twelve multiplicities against fine data."""
    res = SuiteResult("polynomials")
    rows = min(rows, diagram.depth)
    f, g = X * X - Y * Z + TAU * X * Y, X + TAU2 * Y + Z
    g2 = g * g
    for m in MAPS.values():
        res.check(substitute(f * g2, m) == substitute(f, m) * substitute(g2, m), f"{m}: substitute not multiplicative")
        res.check(substitute(f + g2, m) == substitute(f, m) + substitute(g2, m), f"{m}: substitute not additive")

    eqs = {(1, 1): SEED_LINE}
    for e in diagram:
        if e.i > rows:
            break
        if e.parents:
            images = [strict_transform(MAPS[p.map], eqs[(p.i, p.j)]) for p in e.parents]
            eqs[(e.i, e.j)] = images[0]
            for other in images[1:]:
                res.check(other == images[0], f"a({e.i},{e.j}): equations along the two parent paths differ")
            p = e.parents[0]
            back = strict_transform(MAPS[p.map], images[0])
            res.check(back == eqs[(p.i, p.j)].canonical(), f"a({e.i},{e.j}): {p.map} is not an involution on the curve")
        eq = eqs[(e.i, e.j)]
        res.check(eq.deg == e.degree, f"a({e.i},{e.j}): equation degree {eq.deg} != {e.degree}")
        prof = fine_profile(eq)
        expected = {**e.fine.by_group(), "inf": (0, 0, 0)}
        res.check(prof == expected, f"a({e.i},{e.j}): multiplicities {prof} != fine data {expected}")
    return res


def pencil_suite(diagram: Diagram, rows: int = PENCIL_ROWS, membership_rows: int = MEMBERSHIP_ROWS) -> SuiteResult:
    res = SuiteResult("pencil")
    rows = min(rows, diagram.depth)
    pencils = {(1, 1): seed_pencil()}
    for e in diagram:
        if e.i > rows:
            break
        if e.parents:
            p = e.parents[0]
            pencils[(e.i, e.j)] = transform_pencil(MAPS[p.map], pencils[(p.i, p.j)])
        P = pencils[(e.i, e.j)]
        res.check(P.t == e.t, f"a({e.i},{e.j}): pencil parameter {P.t} != {e.t}")
        res.check(P.coarse == e.coarse, f"a({e.i},{e.j}): pencil coarse data {P.coarse} != {e.coarse}")
        res.check(P.component_degree == e.degree, f"a({e.i},{e.j}): component degree {P.component_degree} != {e.degree}")
        report = fibration_checks(P, membership=e.i <= membership_rows, strict=False)
        for name, (ok, detail) in report.items():
            res.check(ok, f"a({e.i},{e.j}) pencil: {name}: {detail}")
    return res


def run_all(depth: int = 50, cd_sign: int = -1) -> list[SuiteResult]:
    results = []
    for fn in (eisenstein_suite, arrangement_suite):
        t0 = time.perf_counter()
        r = fn()
        r.seconds = time.perf_counter() - t0
        results.append(r)
    t0 = time.perf_counter()
    dres, diagram = diagram_suite(depth, cd_sign)
    dres.seconds = time.perf_counter() - t0
    results.append(dres)
    if diagram is not None:
        for fn in (polynomials_suite, pencil_suite):
            t0 = time.perf_counter()
            r = fn(diagram)
            r.seconds = time.perf_counter() - t0
            results.append(r)
    return results
