"""Homogeneous polynomials in x, y, z over Q(tau) and strict transforms.

Curve equations are rebuilt the way a computer-algebra session would do it
(substitute the map, factor the total transform), except that factoring is
replaced by exact division by the known contracted lines.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from math import comb, gcd, lcm
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import _kernels
from .arrangement import DUAL_HESSE, Line, ProjPoint, join
from .cremona import ContractedError, CremonaMap, apply_point, get_map, parse_path
from .eisenstein import EisensteinInt, QTau, format_ab

Exponent = tuple[int, int, int]


class NotDivisible(ArithmeticError):
    pass


def _zeros(n: int) -> np.ndarray:
    return np.zeros((n + 1, n + 1), dtype=object)


def _scale(ca: int, cb: int, xa: np.ndarray, xb: np.ndarray):
    bb = cb * xb
    return ca * xa - bb, ca * xb + cb * xa - bb


class HomogPoly:
    """Homogeneous polynomial ``(a + b*tau) / den`` coefficientwise.

    ``a`` and ``b`` are (deg+1, deg+1) object arrays indexed by the x and y
    exponents; the z exponent is implied.  ``den`` is a positive integer kept
    coprime to the content of the numerator.  The zero polynomial is allowed
    in any degree.
    """

    __slots__ = ("deg", "a", "b", "den")

    def __init__(self, deg: int, a: np.ndarray, b: np.ndarray, den: int = 1) -> None:
        if deg < 0:
            raise ValueError("negative degree")
        if a.shape != (deg + 1, deg + 1) or b.shape != a.shape:
            raise ValueError(f"coefficient arrays must have shape {(deg + 1, deg + 1)}")
        if den <= 0:
            raise ValueError("denominator must be positive")
        self.deg = deg
        self.a = a if a.dtype == object else a.astype(object)
        self.b = b if b.dtype == object else b.astype(object)
        self.den = int(den)
        if self.den != 1:
            g = reduce(gcd, self._entries(), self.den)
            if g > 1:
                self.a, self.b, self.den = self.a // g, self.b // g, self.den // g

    # ------------------------------------------------------------ construction
    @classmethod
    def zero(cls, deg: int) -> HomogPoly:
        return cls(deg, _zeros(deg), _zeros(deg))

    @classmethod
    def from_terms(cls, terms: Mapping[Exponent, object], deg: int | None = None) -> HomogPoly:
        """Build from ``{(i, j, k): coefficient}``; coefficients may be int, Fraction,
        EisensteinInt or QTau."""
        if deg is None:
            if not terms:
                raise ValueError("degree of an empty term map is ambiguous")
            deg = sum(next(iter(terms)))
        coeffs = {}
        den = 1
        for e, c in terms.items():
            if len(e) != 3 or sum(e) != deg or min(e) < 0:
                raise ValueError(f"exponent {e} is not of degree {deg}")
            q = QTau.coerce(c) if not isinstance(c, Fraction) else QTau(c)
            if q:
                coeffs[e] = coeffs.get(e, QTau()) + q
        for q in coeffs.values():
            den = lcm(den, q.denominator())
        a, b = _zeros(deg), _zeros(deg)
        for (i, j, _), q in coeffs.items():
            z = (q * den).to_eisenstein()
            a[i, j] = z.a
            b[i, j] = z.b
        return cls(deg, a, b, den)

    @classmethod
    def constant(cls, c) -> HomogPoly:
        return cls.from_terms({(0, 0, 0): c}, deg=0)

    @classmethod
    def linear(cls, coeffs: Sequence) -> HomogPoly:
        return cls.from_terms(
            {(1, 0, 0): coeffs[0], (0, 1, 0): coeffs[1], (0, 0, 1): coeffs[2]}, deg=1
        )

    @classmethod
    def from_line(cls, L: Line) -> HomogPoly:
        return cls.linear(L.coeffs)

    @classmethod
    def variables(cls) -> tuple[HomogPoly, HomogPoly, HomogPoly]:
        return cls.linear((1, 0, 0)), cls.linear((0, 1, 0)), cls.linear((0, 0, 1))

    # ------------------------------------------------------------ inspection
    def _entries(self):
        yield from (int(v) for v in self.a.flat if v)
        yield from (int(v) for v in self.b.flat if v)

    def monomials(self) -> list[Exponent]:
        """Nonzero monomials in lex order x > y > z."""
        nz = np.argwhere((self.a != 0) | (self.b != 0))
        exps = [(int(i), int(j), self.deg - int(i) - int(j)) for i, j in nz]
        return sorted(exps, reverse=True)

    @property
    def terms(self) -> dict[Exponent, QTau]:
        return {e: self.coeff(e) for e in self.monomials()}

    def coeff(self, e: Exponent) -> QTau:
        i, j, _ = e
        return QTau(Fraction(int(self.a[i, j]), self.den), Fraction(int(self.b[i, j]), self.den))

    def is_zero(self) -> bool:
        return not (np.any(self.a != 0) or np.any(self.b != 0))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __len__(self) -> int:
        return len(self.monomials())

    def __repr__(self) -> str:
        return f"HomogPoly(deg={self.deg}, {to_text(self)!r})"

    def __str__(self) -> str:
        return to_text(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomogPoly):
            return NotImplemented
        return (
            self.deg == other.deg
            and self.den == other.den
            and np.array_equal(self.a, other.a)
            and np.array_equal(self.b, other.b)
        )

    def __hash__(self) -> int:
        c = self.canonical()
        return hash((c.deg, tuple(c.a.flat), tuple(c.b.flat)))

    # ------------------------------------------------------------ arithmetic
    def __neg__(self) -> HomogPoly:
        return HomogPoly(self.deg, -self.a, -self.b, self.den)

    def __add__(self, other: HomogPoly) -> HomogPoly:
        if not isinstance(other, HomogPoly):
            return NotImplemented
        if self.deg != other.deg:
            if self.is_zero():
                return other
            if other.is_zero():
                return self
            raise ValueError(f"cannot add degrees {self.deg} and {other.deg}")
        den = lcm(self.den, other.den)
        s1, s2 = den // self.den, den // other.den
        return HomogPoly(self.deg, self.a * s1 + other.a * s2, self.b * s1 + other.b * s2, den)

    def __sub__(self, other: HomogPoly) -> HomogPoly:
        return self + (-other)

    def scale(self, c) -> HomogPoly:
        q = QTau.coerce(c) if not isinstance(c, Fraction) else QTau(c)
        qd = q.denominator()
        z = (q * qd).to_eisenstein()
        a, b = _scale(z.a, z.b, self.a, self.b)
        return HomogPoly(self.deg, a, b, self.den * qd)

    def __mul__(self, other) -> HomogPoly:
        if isinstance(other, HomogPoly):
            a, b = _kernels.zt_mul(self.a, self.b, other.a, other.b)
            return HomogPoly(self.deg + other.deg, a, b, self.den * other.den)
        if isinstance(other, (int, Fraction, EisensteinInt, QTau)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> HomogPoly:
        if k < 0:
            raise ValueError("negative exponent")
        result = HomogPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # ------------------------------------------------------------ normal forms
    def leading_exponent(self) -> Exponent:
        mons = self.monomials()
        if not mons:
            raise ValueError("zero polynomial has no leading term")
        return mons[0]

    def canonical(self) -> HomogPoly:
        """Representative of the class of ``self`` under Q(tau)* scaling.

        Integer coefficients with content 1 and the lex-first coefficient a
        positive integer.
        """
        if self.is_zero():
            return HomogPoly.zero(self.deg)
        i, j, _ = self.leading_exponent()
        lead = EisensteinInt(int(self.a[i, j]), int(self.b[i, j]))
        conj = lead.conjugate()
        a, b = _scale(conj.a, conj.b, self.a, self.b)
        g = reduce(gcd, (int(v) for v in np.concatenate([a.ravel(), b.ravel()]) if v), 0)
        return HomogPoly(self.deg, a // g, b // g, 1)

    def equal_up_to_scalar(self, other: HomogPoly) -> bool:
        return self.canonical() == other.canonical()

    def galois(self) -> HomogPoly:
        """Apply tau -> tau**2 to every coefficient."""
        # a + b*tau**2 = (a - b) - b*tau
        return HomogPoly(self.deg, self.a - self.b, -self.b, self.den)

    # ------------------------------------------------------------ evaluation
    def __call__(self, point) -> QTau:
        return evaluate(self, point)

    def permute_variables(self, perm: Sequence[int]) -> HomogPoly:
        """Rename variables: variable k becomes variable ``perm[k]``."""
        n = self.deg
        a, b = _zeros(n), _zeros(n)
        for i in range(n + 1):
            for j in range(n + 1 - i):
                e = (i, j, n - i - j)
                new = [0, 0, 0]
                for k in range(3):
                    new[perm[k]] = e[k]
                a[new[0], new[1]] = self.a[i, j]
                b[new[0], new[1]] = self.b[i, j]
        return HomogPoly(n, a, b, self.den)

    # ------------------------------------------------------------ serialization
    def to_json(self) -> list[dict]:
        out = []
        for e in self.monomials():
            i, j, _ = e
            out.append(
                {
                    "e": list(e),
                    "c": {"num_m": int(self.a[i, j]), "num_n": int(self.b[i, j]), "den": self.den},
                }
            )
        return out

    @classmethod
    def from_json(cls, data: list[dict], deg: int | None = None) -> HomogPoly:
        terms = {
            tuple(t["e"]): QTau(Fraction(t["c"]["num_m"], t["c"]["den"]), Fraction(t["c"]["num_n"], t["c"]["den"]))
            for t in data
        }
        return cls.from_terms(terms, deg)


X, Y, Z = HomogPoly.variables()


def evaluate(f: HomogPoly, point) -> QTau:
    coords = point.coords if isinstance(point, ProjPoint) else tuple(QTau.coerce(c) for c in point)
    total = QTau()
    for e, c in f.terms.items():
        term = c
        for v, k in zip(coords, e):
            for _ in range(k):
                term = term * v
        total = total + term
    return total


# ---------------------------------------------------------------- substitution

def compose(f: HomogPoly, forms: Sequence[HomogPoly]) -> HomogPoly:
    """f(A, B, C) for homogeneous A, B, C of one common degree."""
    A, B, C = forms
    if not (A.deg == B.deg == C.deg):
        raise ValueError("substituted forms must share a degree")
    n, e = f.deg, A.deg
    if f.is_zero():
        return HomogPoly.zero(n * e)
    cpow = [HomogPoly.constant(1)]
    for _ in range(n):
        cpow.append(cpow[-1] * C)
    # f = sum_i x^i g_i(y, z); Horner in x outside, Horner in y inside
    result = None
    for i in range(n, -1, -1):
        m = n - i
        g = _horner_yz(f, i, m, B, cpow)
        result = g if result is None else result * A + g
    return HomogPoly(result.deg, result.a, result.b, result.den * f.den)


def _horner_yz(f: HomogPoly, i: int, m: int, B: HomogPoly, cpow: list[HomogPoly]) -> HomogPoly:
    # sum_j c[i, j] B^j C^(m-j) over f's numerator coefficients
    h = None
    for j in range(m, -1, -1):
        if h is not None:
            h = h * B
        ca, cb = int(f.a[i, j]), int(f.b[i, j])
        if ca or cb:
            p = cpow[m - j]
            term = HomogPoly(p.deg, *_scale(ca, cb, p.a, p.b), p.den)
            h = term if h is None else h + term
    return HomogPoly.zero(m * B.deg) if h is None else h


@lru_cache(maxsize=None)
def map_components(m: CremonaMap) -> tuple[HomogPoly, HomogPoly, HomogPoly]:
    return tuple(HomogPoly.from_terms(c, deg=2) for c in m.components)  # type: ignore[return-value]


def substitute(f: HomogPoly, m: CremonaMap | str) -> HomogPoly:
    """Total transform f(Q(x, y, z))."""
    return compose(f, map_components(get_map(m)))


# ---------------------------------------------------------------- multiplicity

def _integral_coords(p) -> tuple[EisensteinInt, EisensteinInt, EisensteinInt]:
    if isinstance(p, ProjPoint):
        return p.integral()
    return ProjPoint(p).integral()


def local_form(f: HomogPoly, p) -> HomogPoly:
    """f after a linear change of coordinates taking (0:0:1) to ``p``."""
    coords = _integral_coords(p)
    k = next(idx for idx, c in enumerate(coords) if c)
    others = [idx for idx in range(3) if idx != k]
    # variable u -> x * e_{others[0]} + y * e_{others[1]} + z * p
    forms = []
    for u in range(3):
        c = [0, 0, 0]
        if u == others[0]:
            c[0] = 1
        elif u == others[1]:
            c[1] = 1
        c[2] = coords[u]
        forms.append(HomogPoly.linear(c))
    return compose(f, forms)


def _zt_powers(z: EisensteinInt, n: int) -> tuple[np.ndarray, np.ndarray]:
    pa, pb = np.zeros(n + 1, dtype=object), np.zeros(n + 1, dtype=object)
    w = EisensteinInt(1, 0)
    for k in range(n + 1):
        pa[k], pb[k] = w.a, w.b
        w = w * z
    return pa, pb


def multiplicity_at(f: HomogPoly, p) -> int:
    """Order of vanishing of f at the point p (0 when f(p) != 0).

    Taylor coefficients of u, v -> f(p + u*e_a + v*e_b) are produced one total
    order at a time (binomial weights times powers of the coordinates of p), so
    the work stops at the first order with a nonzero coefficient.
    """
    if f.is_zero():
        raise ValueError("multiplicity of the zero polynomial is undefined")
    coords = _integral_coords(p)
    c = next(idx for idx, v in enumerate(coords) if v)
    a, b = (idx for idx in range(3) if idx != c)
    n = f.deg
    nz = np.argwhere((f.a != 0) | (f.b != 0))
    exps = np.column_stack([nz[:, 0], nz[:, 1], n - nz[:, 0] - nz[:, 1]])
    fa, fb = f.a[nz[:, 0], nz[:, 1]], f.b[nz[:, 0], nz[:, 1]]
    ea, eb, ec = exps[:, a], exps[:, b], exps[:, c]
    pow_a, pow_b, pow_c = (_zt_powers(coords[k], n) for k in (a, b, c))
    # the c-coordinate factor does not depend on the order; fold it in once
    ca, cb = _scale_arrays(fa, fb, pow_c[0][ec], pow_c[1][ec])
    for m in range(n + 1):
        for s in range(m + 1):
            t = m - s
            ok = (ea >= s) & (eb >= t)
            if not ok.any():
                continue
            ia, ib = ea[ok] - s, eb[ok] - t
            binom = np.array([comb(int(x), s) * comb(int(y), t) for x, y in zip(ea[ok], eb[ok])], dtype=object)
            wa, wb = _scale_arrays(pow_a[0][ia], pow_a[1][ia], pow_b[0][ib], pow_b[1][ib])
            va, vb = _scale_arrays(ca[ok], cb[ok], wa * binom, wb * binom)
            if va.sum() != 0 or vb.sum() != 0:
                return m
    raise AssertionError("nonzero polynomial vanishes to every order")  # pragma: no cover


def _scale_arrays(xa, xb, ya, yb):
    """Elementwise product of Z[tau] arrays."""
    bb = xb * yb
    return xa * ya - bb, xa * yb + xb * ya - bb


def multiplicity_by_substitution(f: HomogPoly, p) -> int:
    """Same as :func:`multiplicity_at`, via the full linear change of coordinates."""
    if f.is_zero():
        raise ValueError("multiplicity of the zero polynomial is undefined")
    g = local_form(f, p)
    return min(i + j for i, j, _ in g.monomials())


# ---------------------------------------------------------------- division

def _divide_once(f: HomogPoly, coeffs: tuple[EisensteinInt, EisensteinInt, EisensteinInt]) -> HomogPoly:
    if f.deg == 0:
        if f.is_zero():
            raise NotDivisible("zero constant has no degree -1 quotient")
        raise NotDivisible("a nonzero constant is not divisible by a line")
    # pivot on a variable with a unit coefficient, preferring z
    order = [2, 1, 0]
    units = [k for k in order if coeffs[k].is_unit()]
    pivot = units[0] if units else next(k for k in order if coeffs[k])
    perm = list(range(3))
    perm[pivot], perm[2] = 2, pivot
    g = f.permute_variables(perm) if pivot != 2 else f
    c = [coeffs[perm.index(k)] for k in range(3)]
    gamma = c[2]
    mu, den = gamma.conjugate(), gamma.norm()
    ga, gb = g.a, g.b
    if den != 1:
        # keep the quotient integral: every division step may consume one factor
        s = den ** g.deg
        ga, gb = ga * s, gb * s
    qa, qb, exact = _kernels.zt_div_linear(ga, gb, tuple(c[0]), tuple(c[1]), tuple(mu), den)
    if not exact:
        raise NotDivisible("nonzero remainder in division by a linear form")
    q = HomogPoly(g.deg - 1, qa, qb, g.den * (den ** g.deg if den != 1 else 1))
    return q.permute_variables(perm) if pivot != 2 else q


def exact_divide_linear(f: HomogPoly, L: Line | HomogPoly | Sequence, k: int = 1) -> HomogPoly:
    """f / L**k, raising NotDivisible if any step leaves a remainder."""
    if k < 0:
        raise ValueError("negative power")
    if isinstance(L, Line):
        exact = L.coeffs
    elif isinstance(L, HomogPoly):
        if L.deg != 1:
            raise ValueError("divisor must be linear")
        exact = tuple(L.coeff(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    else:
        exact = tuple(QTau.coerce(c) for c in L)
    if not any(exact):
        raise ZeroDivisionError("division by the zero form")
    # divide by den * L, which has Z[tau] coefficients, then put den**k back
    den = reduce(lcm, (c.denominator() for c in exact), 1)
    coeffs = tuple((c * den).to_eisenstein() for c in exact)
    for _ in range(k):
        f = _divide_once(f, coeffs)
    return f.scale(den**k) if den != 1 and k else f


# ---------------------------------------------------------------- Cremona maps

@lru_cache(maxsize=None)
def contracted_lines(m: CremonaMap | str) -> tuple[tuple[Line, ProjPoint], ...]:
    """The lines joining pairs of base points, each with the point it collapses to.

    The target is found by evaluating the map at three points of the line.
    """
    m = get_map(m)
    base = m.base_points
    out = []
    for j, l in ((1, 2), (0, 2), (0, 1)):
        L = join(base[j], base[l])
        images = set()
        for s in (2, 3, 7):
            pt = ProjPoint(tuple(u + QTau(s) * v for u, v in zip(base[j].coords, base[l].coords)))
            images.add(apply_point(m, pt))
        if len(images) != 1:
            raise AssertionError(f"{m} does not contract the line {L}")
        target = images.pop()
        out.append((L, next(p for p in base if p == target)))
    return tuple(out)


def strict_transform(m: CremonaMap | str, f: HomogPoly, canonical: bool = True) -> HomogPoly:
    """Image curve of f = 0 under the involution m, with degree-law check."""
    m = get_map(m)
    total = substitute(f, m)
    mults = [multiplicity_at(f, p) for p in m.base_points]
    g = total
    for L, target in contracted_lines(m):
        g = exact_divide_linear(g, L, multiplicity_at(f, target))
    expected = 2 * f.deg - sum(mults)
    if g.deg != expected:
        raise AssertionError(f"degree law violated: {g.deg} != {expected}")
    if g.deg == 0:
        raise ContractedError(f"{m} contracts the curve {f}")
    return g.canonical() if canonical else g


def transform_path(f: HomogPoly, path) -> HomogPoly:
    for m in parse_path(path):
        f = strict_transform(m, f)
    return f


# ---------------------------------------------------------------- diagram curves

SEED_LINE = HomogPoly.linear((1, 1, 1))


def curve_equation(i: int, j: int, diagram=None) -> HomogPoly:
    """Equation of the rational curve at entry (i, j), along its leftmost parent path."""
    from .diagram import build, leftmost_path

    if diagram is None:
        diagram = build(i)
    return transform_path(SEED_LINE, leftmost_path(diagram, i, j))


def fine_profile(f: HomogPoly) -> dict[str, tuple[int, int, int]]:
    """Multiplicities of f at the twelve arrangement points, by group."""
    return {g: tuple(multiplicity_at(f, p) for p in pts) for g, pts in DUAL_HESSE.groups.items()}


# ---------------------------------------------------------------- text format

_VARS = ("x", "y", "z")


def _monomial_text(e: Exponent) -> str:
    parts = []
    for v, k in zip(_VARS, e):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def _coef_text(a: int, b: int, den: int) -> tuple[str, str]:
    """Sign and magnitude text of (a + b*tau)/den, parenthesized when binomial."""
    g = gcd(a, b, den)
    a, b, den = a // g, b // g, den // g
    if b == 0 or a == 0:
        v = a if b == 0 else b
        sign = "-" if v < 0 else "+"
        mag = abs(v)
        if b:
            body = "tau" if mag == 1 else f"{mag}*tau"
        else:
            body = "" if mag == 1 and den == 1 else str(mag)
        if den != 1:
            body = f"({body})/{den}" if b else f"{body}/{den}"
        return sign, body
    if a < 0 and b < 0:
        body, sign = format_ab(-a, -b), "-"
    else:
        body, sign = format_ab(a, b), "+"
    body = f"({body})" if den == 1 else f"({body})/{den}"
    return sign, body


def to_text(f: HomogPoly) -> str:
    """Monomials in lex order x > y > z, coefficients as ``a+b*tau``."""
    if f.is_zero():
        return "0"
    out = []
    for e in f.monomials():
        i, j, _ = e
        sign, body = _coef_text(int(f.a[i, j]), int(f.b[i, j]), f.den)
        mono = _monomial_text(e)
        if body in ("", "1") and mono:
            term = mono
        elif not mono:
            term = body or "1"
        else:
            term = f"{body}*{mono}"
        out.append((sign, term))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, term in out[1:]:
        text += f" {sign} {term}"
    return text


def parse_poly(text: str) -> HomogPoly:
    """Parse a polynomial in x, y, z with coefficients in tau (``tau``, ``t`` or ``a``).

    Accepts both ``^`` and ``**`` and implicit products such as ``2x^3y``.
    """
    import sympy

    x, y, z, t = sympy.symbols("x y z tau")
    src = text.replace("^", "**").replace("τ", "tau")
    local = {"x": x, "y": y, "z": z, "tau": t, "t": t, "a": t}
    from sympy.parsing.sympy_parser import (
        implicit_multiplication_application,
        parse_expr,
        standard_transformations,
    )

    expr = parse_expr(src, local_dict=local, transformations=standard_transformations + (implicit_multiplication_application,))
    poly = sympy.Poly(sympy.expand(expr), x, y, z, t)
    terms: dict[Exponent, QTau] = {}
    # reduce tau^k using tau^3 = 1 and tau^2 = -1 - tau
    red = {0: QTau(1), 1: QTau(0, 1), 2: QTau(-1, -1)}
    for (i, j, k, tk), c in poly.terms():
        e = (i, j, k)
        terms[e] = terms.get(e, QTau()) + red[tk % 3] * QTau(Fraction(int(c.p), int(c.q)))
    degs = {sum(e) for e in terms}
    if len(degs) != 1:
        raise ValueError("polynomial is not homogeneous")
    return HomogPoly.from_terms(terms)


# ---------------------------------------------------------------- arrangement

def line_product() -> HomogPoly:
    """Product of the nine arrangement line forms."""
    f = HomogPoly.constant(1)
    for L in DUAL_HESSE.lines.values():
        f = f * HomogPoly.from_line(L)
    return f


def cubic_product() -> HomogPoly:
    """(x^3 - z^3)(y^3 - z^3)(x^3 - y^3)."""
    return (X**3 - Z**3) * (Y**3 - Z**3) * (X**3 - Y**3)
