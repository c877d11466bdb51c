from __future__ import annotations

import sys

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from hesse_cremona import _kernels
from hesse_cremona.eisenstein import EisensteinInt
from hesse_cremona.polynomials import HomogPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_ints = st.integers(min_value=-50, max_value=50)
eis = st.builds(EisensteinInt, small_ints, small_ints)
nonzero_eis = eis.filter(bool)


@st.composite
def homog_polys(draw, deg: int | None = None, max_deg: int = 3, coef: int = 6):
    d = draw(st.integers(0, max_deg)) if deg is None else deg
    c = st.integers(-coef, coef)
    terms = {}
    for i in range(d + 1):
        for j in range(d + 1 - i):
            if draw(st.booleans()):
                terms[(i, j, d - i - j)] = EisensteinInt(draw(c), draw(c))
    return HomogPoly.from_terms(terms, deg=d)


@pytest.fixture(params=["numba", "numpy"])
def each_backend(request):
    """Run a test once per kernel back end, restoring the previous choice."""
    before = _kernels.backend()
    if request.param == "numba" and not _kernels.HAVE_NUMBA:
        pytest.skip("numba not importable")
    _kernels.set_backend(request.param)
    yield request.param
    _kernels.set_backend(before)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
