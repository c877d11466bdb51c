from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import eis, nonzero_eis
from hesse_cremona.eisenstein import (
    ONE,
    TAU,
    TAU2,
    ZERO,
    DivisionError,
    EisensteinInt,
    QTau,
    ZeroDivisor,
    format_ab,
    parse,
)


def test_tau_is_a_primitive_cube_root():
    assert TAU * TAU == TAU2 == EisensteinInt(-1, -1)
    assert TAU * TAU + TAU + ONE == ZERO
    assert TAU**3 == ONE


def test_product_formula_example():
    # (2 - tau)(3 + tau) = 6 - 3tau + 2tau - tau^2 = 7
    assert EisensteinInt(2, -1) * EisensteinInt(3, 1) == EisensteinInt(7, 0)


@pytest.mark.parametrize(
    "a,b,norm", [(1, 0, 1), (0, 1, 1), (-1, -1, 1), (-2, -1, 3), (2, -1, 7), (3, 1, 7), (-6, -2, 28)]
)
def test_norm_examples(a, b, norm):
    assert EisensteinInt(a, b).norm() == norm


def test_units_are_the_six_roots_of_unity():
    units = {EisensteinInt(a, b) for a in range(-2, 3) for b in range(-2, 3) if EisensteinInt(a, b).is_unit()}
    assert units == {ONE, -ONE, TAU, -TAU, TAU2, -TAU2}


def test_exact_division_examples():
    # (t - 1)/(-2 - tau) for t = 2 - tau gives -tau
    assert EisensteinInt(1, -1).exact_div(EisensteinInt(-2, -1)) == EisensteinInt(0, 1)
    with pytest.raises(DivisionError):
        ONE.exact_div(EisensteinInt(2, 0))
    with pytest.raises(ZeroDivisor):
        ONE.exact_div(ZERO)


def test_mod3_class_examples():
    assert EisensteinInt(-2, 0).mod3_class() == 1
    assert EisensteinInt(2, -1).mod3_class() == 1
    assert EisensteinInt(-6, -2).mod3_class() == 1
    assert EisensteinInt(1, 1).mod3_class() == 2


@pytest.mark.parametrize(
    "a,b,text",
    [(0, 0, "0"), (3, 0, "3"), (0, 1, "tau"), (0, -1, "-tau"), (-6, -2, "-6-2*tau"), (2, -1, "2-tau"), (1, 1, "1+tau")],
)
def test_format_and_parse(a, b, text):
    assert format_ab(a, b) == text
    assert str(EisensteinInt(a, b)) == text
    assert parse(text) == EisensteinInt(a, b)


def test_parse_accepts_short_symbol_and_rejects_junk():
    assert parse("-6-2t") == EisensteinInt(-6, -2)
    for bad in ("", "x", "1+", "--1"):
        with pytest.raises(ValueError):
            parse(bad)


def test_json_fields():
    z = EisensteinInt(-6, -2)
    assert z.to_json() == {"m": -6, "n": -2}
    assert EisensteinInt.from_json(z.to_json()) == z


def test_qtau_field_operations():
    q = QTau(1, 2)
    assert q * q.inverse() == QTau(1, 0)
    assert (q / QTau(0, 1)) * QTau(0, 1) == q
    with pytest.raises(ZeroDivisionError):
        QTau(0, 0).inverse()


# ---------------------------------------------------------------- properties

@given(eis, eis, eis)
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == ZERO and x * ONE == x


@given(eis, eis)
def test_norm_is_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()
    assert x.norm() >= 0 and (x.norm() == 0) == (x == ZERO)


@given(eis)
def test_conjugation_is_an_involutive_automorphism(x):
    assert x.conjugate().conjugate() == x
    assert x * x.conjugate() == EisensteinInt(x.norm(), 0)


@given(eis, eis)
def test_conjugation_respects_products(x, y):
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()


@given(eis, nonzero_eis)
def test_exact_div_round_trip(x, y):
    assert (x * y).exact_div(y) == x


@given(
    st.builds(EisensteinInt, st.integers(-6, 6), st.integers(-6, 6)),
    st.builds(EisensteinInt, st.integers(-3, 3), st.integers(-3, 3)).filter(bool),
)
def test_exact_div_agrees_with_brute_force(x, y):
    # brute force over a box containing every element of norm <= 108
    bound = x.norm()
    found = [
        q
        for a, b in itertools.product(range(-13, 14), repeat=2)
        if (q := EisensteinInt(a, b)).norm() <= bound and q * y == x
    ]
    if found:
        assert x.exact_div(y) == found[0]
    else:
        with pytest.raises(DivisionError):
            x.exact_div(y)


@given(eis, eis)
def test_mod3_class_is_additive(x, y):
    assert (x + y).mod3_class() == (x.mod3_class() + y.mod3_class()) % 3


@given(eis)
def test_text_round_trip(x):
    assert parse(str(x)) == x
