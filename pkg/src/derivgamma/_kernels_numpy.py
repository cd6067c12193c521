"""Vectorised numpy twins of the loop kernels in ``_kernels_jit``.

Terms are produced chunk by chunk with ``cumprod`` (or a prefix scan of
truncated polynomials for the derivative stack) and summed exactly with
``math.fsum``.  Chunks grow geometrically so early stops stay cheap.
"""
import math

import numpy as np

from ._status import EXHAUSTED, OVERFLOW, TAIL_OK, TERMINATED

_FIRST_CHUNK = 256
_MAX_CHUNK = 1 << 16


def _chunks(start, stop):
    size = _FIRST_CHUNK
    lo = start
    while lo < stop:
        hi = min(lo + size, stop)
        yield lo, hi
        lo = hi
        size = min(2 * size, _MAX_CHUNK)


def _fsum(parts):
    if not parts:
        return 0j
    x = np.concatenate(parts)
    return complex(math.fsum(x.real), math.fsum(x.imag))


def _drive(make_terms, start, stop, abs_tol, n_min, tail_scale):
    """Generate terms for indices start..stop-1 and locate the first event.

    ``make_terms(lo, hi)`` returns the terms at indices lo..hi-1 and must be
    called on consecutive ranges.  The tail test is |x_i| * i * tail_scale.
    Returns (parts, event_index, term_at_event, status).
    """
    parts = []
    for lo, hi in _chunks(start, stop):
        x = make_terms(lo, hi)
        idx = np.arange(lo, hi)
        bad = (x == 0) | ~np.isfinite(x)
        first_bad = int(np.argmax(bad)) if bad.any() else hi - lo
        if abs_tol >= 0:
            ok = (idx >= n_min) & (np.abs(x) * idx * tail_scale <= abs_tol)
            first_ok = int(np.argmax(ok)) if ok.any() else hi - lo
        else:
            first_ok = hi - lo
        if first_ok < first_bad:
            parts.append(x[: first_ok + 1])
            return parts, lo + first_ok, complex(x[first_ok]), TAIL_OK
        if first_bad < hi - lo:
            parts.append(x[:first_bad])
            xb = complex(x[first_bad])
            return parts, lo + first_bad, xb, TERMINATED if xb == 0 else OVERFLOW
        parts.append(x)
    return parts, stop - 1, complex(parts[-1][-1]), EXHAUSTED


def digamma_terms_sum(z, max_terms, abs_tol, n_min):
    z = complex(z)
    state = {"t": 1.0 - z}

    def make_terms(lo, hi):
        n = np.arange(lo, hi, dtype=np.float64)
        r = (n + 1 - z) * n / ((n + 1.0) * (n + 1.0))
        x = np.empty(hi - lo, dtype=np.complex128)
        x[0] = state["t"]
        x[1:] = state["t"] * np.cumprod(r[:-1])
        state["t"] = x[-1] * r[-1]
        return x

    with np.errstate(all="ignore"):
        parts, n, t, status = _drive(make_terms, 1, max_terms + 1, abs_tol, n_min, 1.0 / z.real)
    total = _fsum(parts)
    if status == TERMINATED:
        return total, max(n - 1, 1), 0j, status
    if status == EXHAUSTED and n + 1 - z == 0:
        status = TERMINATED
    return total, n, t, status


def hyp3f2_terms_sum(a1, a2, a3, b1, b2, max_terms, abs_tol, s_re, k_min):
    a1, a2, a3, b1, b2 = (complex(v) for v in (a1, a2, a3, b1, b2))
    state = {"u": 1.0 + 0j}

    def make_terms(lo, hi):
        k = np.arange(lo, hi, dtype=np.float64)
        r = (a1 + k) * (a2 + k) * (a3 + k) / ((b1 + k) * (b2 + k) * (k + 1.0))
        x = np.empty(hi - lo, dtype=np.complex128)
        x[0] = state["u"]
        x[1:] = state["u"] * np.cumprod(r[:-1])
        state["u"] = x[-1] * r[-1]
        return x

    with np.errstate(all="ignore"):
        parts, k, u, status = _drive(make_terms, 0, max_terms, abs_tol, k_min, 1.0 / s_re)
    total = _fsum(parts)
    if status == TERMINATED:
        return total, max(k, 1), 0j, status
    if status == EXHAUSTED and (a1 + k) * (a2 + k) * (a3 + k) == 0:
        status = TERMINATED
    return total, k + 1, u, status


def _polymul_trunc(a, b):
    # a, b: (L, m) coefficient arrays; product truncated to degree L-1
    L = a.shape[0]
    c = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.complex128)
    for j in range(L):
        for i in range(j + 1):
            c[j] += a[i] * b[j - i]
    return c


def _prefix_products(f):
    # Hillis-Steele inclusive scan; the factors commute, so order is free
    p = f.copy()
    d = 1
    m = p.shape[1]
    while d < m:
        p[:, d:] = _polymul_trunc(p[:, :-d], p[:, d:])
        d *= 2
    return p


def polygamma_terms_sum(z, order, max_terms, abs_tol, n_min):
    z = complex(z)
    L = order + 1
    scale = float(math.factorial(order))
    carry = np.zeros((L, 1), dtype=np.complex128)
    carry[0, 0] = 1.0
    state = {"carry": carry}

    # term index n is produced by factor index n-1: ((n - z) - eps) / n
    def make_terms(lo, hi):
        n = np.arange(lo, hi, dtype=np.float64)
        f = np.zeros((L, hi - lo), dtype=np.complex128)
        f[0] = (n - z) / n
        if L > 1:
            f[1] = -1.0 / n
        p = _polymul_trunc(_prefix_products(f), state["carry"])
        state["carry"] = p[:, -1:].copy()
        state["p"] = p
        return scale * p[order] / n

    factorials = np.array([math.factorial(j) for j in range(L)], dtype=np.float64)

    def stack(i):
        return state["p"][:, i] * factorials

    # exact zeros are legitimate for order >= 1, so only finiteness stops early
    with np.errstate(all="ignore"):
        parts = []
        for lo, hi in _chunks(1, max_terms + 1):
            x = make_terms(lo, hi)
            idx = np.arange(lo, hi)
            bad = ~np.isfinite(x)
            first_bad = int(np.argmax(bad)) if bad.any() else hi - lo
            if abs_tol >= 0:
                ok = (idx >= n_min) & (np.abs(x) * idx / z.real <= abs_tol)
                first_ok = int(np.argmax(ok)) if ok.any() else hi - lo
            else:
                first_ok = hi - lo
            if first_ok < first_bad:
                parts.append(x[: first_ok + 1])
                return _fsum(parts), lo + first_ok, complex(x[first_ok]), TAIL_OK, stack(first_ok)
            if first_bad < hi - lo:
                parts.append(x[:first_bad])
                return (_fsum(parts), lo + first_bad, complex(x[first_bad]), OVERFLOW,
                        stack(first_bad))
            parts.append(x)
    return _fsum(parts), max_terms, complex(parts[-1][-1]), EXHAUSTED, stack(-1)


def beta_terms_sum(a, c, terms):
    a, c = complex(a), complex(c)
    parts = []
    coef = 1.0 + 0j
    with np.errstate(all="ignore"):
        for lo, hi in _chunks(0, terms):
            k = np.arange(lo, hi, dtype=np.float64)
            r = (a + k) / (k + 1.0)
            co = np.empty(hi - lo, dtype=np.complex128)
            co[0] = coef
            co[1:] = coef * np.cumprod(r[:-1])
            coef = co[-1] * r[-1]
            x = co / (c + k)
            if not np.all(np.isfinite(x)):
                parts.append(x[: int(np.argmax(~np.isfinite(x)))])
                return _fsum(parts), OVERFLOW
            parts.append(x)
    return _fsum(parts), EXHAUSTED


def weierstrass_product(h, n_factors):
    h = complex(h)
    p = 1.0 + 0j
    for lo, hi in _chunks(1, n_factors + 1):
        q = h / np.arange(lo, hi, dtype=np.float64)
        p = p * complex(np.prod(np.exp(q) / (1.0 + q)))
    return p


def classical_sum(z, terms):
    w = complex(z) - 1.0
    parts = []
    for lo, hi in _chunks(1, terms + 1):
        n = np.arange(lo, hi, dtype=np.float64)
        parts.append(w / (n * (n + w)))
    return _fsum(parts)
