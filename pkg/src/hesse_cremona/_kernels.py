"""Inner loops of the polynomial arithmetic.

A homogeneous polynomial of degree n in x, y, z with Z[tau] coefficients is
held as two square arrays ``(a, b)`` of shape (n+1, n+1): entry [i, j] is the
coefficient ``a + b*tau`` of x^i y^j z^(n-i-j); entries with i + j > n are 0.

Two interchangeable back ends:

* numba ``@njit`` loops on int64 (used when the operands are provably small
  enough not to overflow, otherwise the call falls through to numpy);
* pure numpy, on int64 when safe and on object arrays (Python ints) otherwise.

Set ``HESSE_CREMONA_NUMBA=0`` to force the numpy path.
"""

from __future__ import annotations

import os

import numpy as np

_LIMIT = 2**62


def _env_wants_numba() -> bool:
    return os.environ.get("HESSE_CREMONA_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")


try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and _env_wants_numba()


def set_backend(name: str) -> None:
    """Switch between ``"numba"`` and ``"numpy"`` at runtime (tests, benchmarks)."""
    global USE_NUMBA
    if name == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba is not importable")
        USE_NUMBA = True
    elif name == "numpy":
        USE_NUMBA = False
    else:
        raise ValueError(f"unknown backend {name!r}")


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def max_abs(*arrays: np.ndarray) -> int:
    m = 0
    for arr in arrays:
        if arr.size:
            m = max(m, int(np.abs(arr).max()))
    return m


def _as_int64(arr: np.ndarray) -> np.ndarray:
    return arr if arr.dtype == np.int64 else arr.astype(np.int64)


def _as_object(arr: np.ndarray) -> np.ndarray:
    if arr.dtype == object:
        return arr
    # astype(object) yields Python ints, so later arithmetic cannot wrap
    return arr.astype(object)


# ---------------------------------------------------------------- products

def _mul_numpy(a1, b1, a2, b2):
    n1, n2 = a1.shape[0] - 1, a2.shape[0] - 1
    n = n1 + n2
    dtype = a1.dtype
    a = np.zeros((n + 1, n + 1), dtype=dtype)
    b = np.zeros((n + 1, n + 1), dtype=dtype)
    # loop over the sparser operand, shift-add the other one
    if np.count_nonzero(a1) + np.count_nonzero(b1) > np.count_nonzero(a2) + np.count_nonzero(b2):
        a1, b1, a2, b2 = a2, b2, a1, b1
        n1, n2 = n2, n1
    bb2 = b2
    for i, j in zip(*np.nonzero((a1 != 0) | (b1 != 0))):
        ca, cb = a1[i, j], b1[i, j]
        sl = (slice(i, i + n2 + 1), slice(j, j + n2 + 1))
        # (ca + cb t)(a2 + b2 t) = ca a2 - cb b2 + (ca b2 + cb a2 - cb b2) t
        a[sl] += ca * a2 - cb * bb2
        b[sl] += ca * bb2 + cb * a2 - cb * bb2
    return a, b


if HAVE_NUMBA:

    @njit(cache=True)
    def _mul_numba(a1, b1, a2, b2):  # pragma: no cover - compiled
        n1 = a1.shape[0] - 1
        n2 = a2.shape[0] - 1
        n = n1 + n2
        a = np.zeros((n + 1, n + 1), dtype=np.int64)
        b = np.zeros((n + 1, n + 1), dtype=np.int64)
        for i1 in range(n1 + 1):
            for j1 in range(n1 + 1 - i1):
                ca = a1[i1, j1]
                cb = b1[i1, j1]
                if ca == 0 and cb == 0:
                    continue
                for i2 in range(n2 + 1):
                    for j2 in range(n2 + 1 - i2):
                        da = a2[i2, j2]
                        db = b2[i2, j2]
                        if da == 0 and db == 0:
                            continue
                        bb = cb * db
                        a[i1 + i2, j1 + j2] += ca * da - bb
                        b[i1 + i2, j1 + j2] += ca * db + cb * da - bb
        return a, b


def _mul_fits_int64(a1, b1, a2, b2) -> bool:
    terms = min(a1.shape[0], a2.shape[0]) ** 2
    return 3 * max_abs(a1, b1) * max_abs(a2, b2) * terms < _LIMIT


def zt_mul(a1, b1, a2, b2):
    """Product of two Z[tau] polynomials in the square layout."""
    small = _mul_fits_int64(a1, b1, a2, b2)
    if USE_NUMBA and small:
        a, b = _mul_numba(_as_int64(a1), _as_int64(b1), _as_int64(a2), _as_int64(b2))
        return _as_object(a), _as_object(b)
    if small:
        a, b = _mul_numpy(_as_int64(a1), _as_int64(b1), _as_int64(a2), _as_int64(b2))
        return _as_object(a), _as_object(b)
    return _mul_numpy(_as_object(a1), _as_object(b1), _as_object(a2), _as_object(b2))


# ---------------------------------------------------------------- division

def _zt_scale(ca, cb, xa, xb):
    bb = cb * xb
    return ca * xa - bb, ca * xb + cb * xa - bb


def _div_numpy(fa, fb, al, be, mu, den, qmax):
    """Divide by alpha*x + beta*y + gamma*z where gamma**-1 = mu / den.

    Returns (qa, qb, status); status 0 = exact, 1 = remainder, 2 = overflow.
    """
    n = fa.shape[0] - 1
    qa = np.zeros((n, n), dtype=fa.dtype)
    qb = np.zeros((n, n), dtype=fa.dtype)
    # q[i, j] = (f[i, j] - alpha q[i-1, j] - beta q[i, j-1]) * mu / den, by anti-diagonal
    for s in range(n + 1):
        i = np.arange(s + 1)
        j = s - i
        ra, rb = fa[i, j].copy(), fb[i, j].copy()
        if s > 0:
            m = i > 0
            ta, tb = _zt_scale(al[0], al[1], qa[i[m] - 1, j[m]], qb[i[m] - 1, j[m]])
            ra[m] -= ta
            rb[m] -= tb
            m = j > 0
            ta, tb = _zt_scale(be[0], be[1], qa[i[m], j[m] - 1], qb[i[m], j[m] - 1])
            ra[m] -= ta
            rb[m] -= tb
        if s == n:
            if np.any(ra != 0) or np.any(rb != 0):
                return qa, qb, 1
            break
        va, vb = _zt_scale(mu[0], mu[1], ra, rb)
        if den != 1:
            if np.any(va % den != 0) or np.any(vb % den != 0):
                return qa, qb, 1
            va, vb = va // den, vb // den
        if qmax and (max_abs(va, vb) > qmax):
            return qa, qb, 2
        qa[i, j] = va
        qb[i, j] = vb
    return qa, qb, 0


if HAVE_NUMBA:

    @njit(cache=True)
    def _div_numba(fa, fb, al0, al1, be0, be1, mu0, mu1, den, qmax):  # pragma: no cover
        n = fa.shape[0] - 1
        qa = np.zeros((n, n), dtype=np.int64)
        qb = np.zeros((n, n), dtype=np.int64)
        for s in range(n + 1):
            for i in range(s + 1):
                j = s - i
                ra = fa[i, j]
                rb = fb[i, j]
                if i > 0:
                    xa = qa[i - 1, j]
                    xb = qb[i - 1, j]
                    bb = al1 * xb
                    ra -= al0 * xa - bb
                    rb -= al0 * xb + al1 * xa - bb
                if j > 0:
                    xa = qa[i, j - 1]
                    xb = qb[i, j - 1]
                    bb = be1 * xb
                    ra -= be0 * xa - bb
                    rb -= be0 * xb + be1 * xa - bb
                if s == n:
                    if ra != 0 or rb != 0:
                        return qa, qb, 1
                    continue
                bb = mu1 * rb
                va = mu0 * ra - bb
                vb = mu0 * rb + mu1 * ra - bb
                if den != 1:
                    if va % den != 0 or vb % den != 0:
                        return qa, qb, 1
                    va //= den
                    vb //= den
                if abs(va) > qmax or abs(vb) > qmax:
                    return qa, qb, 2
                qa[i, j] = va
                qb[i, j] = vb
        return qa, qb, 0


def zt_div_linear(fa, fb, alpha, beta, mu, den):
    """Exact division of f by alpha*x + beta*y + gamma*z, gamma**-1 = mu/den.

    ``alpha``, ``beta``, ``mu`` are (a, b) integer pairs. Returns
    ``(qa, qb, exact)`` with object arrays; ``exact`` is False when a nonzero
    remainder (or a non-integral quotient) was met.
    """
    c = max(abs(v) for v in (*alpha, *beta, *mu, 1))
    qmax = _LIMIT // (4 * c * (1 + 6 * c))
    small = max_abs(fa, fb) <= qmax
    if small:
        fa64, fb64 = _as_int64(fa), _as_int64(fb)
        if USE_NUMBA:
            qa, qb, status = _div_numba(fa64, fb64, *alpha, *beta, *mu, den, qmax)
        else:
            qa, qb, status = _div_numpy(fa64, fb64, alpha, beta, mu, den, qmax)
        if status != 2:
            return _as_object(qa), _as_object(qb), status == 0
    qa, qb, status = _div_numpy(_as_object(fa), _as_object(fb), alpha, beta, mu, den, 0)
    return qa, qb, status == 0
