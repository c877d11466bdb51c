"""Quadratic Cremona involutions preserving the dual Hesse arrangement.

Exact Z[tau] arithmetic, the (12_3, 9_4) arrangement, the three involutions
Q1, Qtau, Qtau2 acting on curve data and on polynomials, the bifurcation
diagram of rational curves, and the elliptic pencils built on them.
"""

from __future__ import annotations

from .arrangement import DUAL_HESSE, ArrangementData, Line, ProjPoint
from .cremona import (
    MAPS,
    Q1,
    QTAU,
    QTAU2,
    CoarseCurveData,
    CremonaMap,
    FineCurveData,
    MapTag,
    apply_point,
    transform_coarse,
    transform_fine,
    transform_parameter,
)
from .diagram import Diagram, DiagramEntry, build, cd_closed, columns_in_row, degree_closed, t_closed
from .eisenstein import ONE, TAU, TAU2, ZERO, EisensteinInt, QTau
from .pencil import PencilDescriptor, fibration_checks, seed_pencil, transform_pencil
from .polynomials import (
    HomogPoly,
    curve_equation,
    multiplicity_at,
    parse_poly,
    strict_transform,
    substitute,
    to_text,
)

__all__ = [
    "DUAL_HESSE", "ArrangementData", "Line", "ProjPoint",
    "MAPS", "Q1", "QTAU", "QTAU2", "CoarseCurveData", "CremonaMap", "FineCurveData", "MapTag",
    "apply_point", "transform_coarse", "transform_fine", "transform_parameter",
    "Diagram", "DiagramEntry", "build", "cd_closed", "columns_in_row", "degree_closed", "t_closed",
    "ONE", "TAU", "TAU2", "ZERO", "EisensteinInt", "QTau",
    "PencilDescriptor", "fibration_checks", "seed_pencil", "transform_pencil",
    "HomogPoly", "curve_equation", "multiplicity_at", "parse_poly", "strict_transform", "substitute", "to_text",
]
