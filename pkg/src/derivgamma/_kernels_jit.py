"""Loop kernels compiled with numba.

Every kernel has a vectorised twin in ``_kernels_numpy`` with the same
signature and return layout.  Summation is Neumaier-compensated on the real
and imaginary parts separately.
"""
import math

import numpy as np
from numba import njit

from ._status import EXHAUSTED, OVERFLOW, TAIL_OK, TERMINATED

_opts = dict(cache=True, nogil=True)


@njit(**_opts)
def _nadd(s, c, x):
    t = s + x
    if abs(s) >= abs(x):
        c += (s - t) + x
    else:
        c += (x - t) + s
    return t, c


@njit(**_opts)
def _finite(t):
    return math.isfinite(t.real) and math.isfinite(t.imag)


@njit(**_opts)
def digamma_terms_sum(z, max_terms, abs_tol, n_min):
    """Sum t_n = (1-z)_n / (n n!) for n = 1..; returns (sum, n_used, t_last, status).

    A negative ``abs_tol`` disables the tail test (fixed truncation).
    """
    sr = 0.0
    cr = 0.0
    si = 0.0
    ci = 0.0
    t = 1.0 - z
    inv_re = 1.0 / z.real
    n = 1
    while True:
        if t == 0:
            return complex(sr + cr, si + ci), max(n - 1, 1), 0j, TERMINATED
        if not _finite(t):
            return complex(sr + cr, si + ci), n, t, OVERFLOW
        sr, cr = _nadd(sr, cr, t.real)
        si, ci = _nadd(si, ci, t.imag)
        if abs_tol >= 0 and n >= n_min and abs(t) * n * inv_re <= abs_tol:
            return complex(sr + cr, si + ci), n, t, TAIL_OK
        if n >= max_terms:
            status = TERMINATED if n + 1 - z == 0 else EXHAUSTED
            return complex(sr + cr, si + ci), n, t, status
        t = t * (n + 1 - z) * n / ((n + 1.0) * (n + 1.0))
        n += 1


@njit(**_opts)
def hyp3f2_terms_sum(a1, a2, a3, b1, b2, max_terms, abs_tol, s_re, k_min):
    """Sum the unit-argument 3F2 terms from k = 0; n_used counts terms summed."""
    sr = 0.0
    cr = 0.0
    si = 0.0
    ci = 0.0
    u = 1.0 + 0j
    k = 0
    while True:
        if u == 0:
            return complex(sr + cr, si + ci), max(k, 1), 0j, TERMINATED
        if not _finite(u):
            return complex(sr + cr, si + ci), k + 1, u, OVERFLOW
        sr, cr = _nadd(sr, cr, u.real)
        si, ci = _nadd(si, ci, u.imag)
        if abs_tol >= 0 and k >= k_min and abs(u) * k / s_re <= abs_tol:
            return complex(sr + cr, si + ci), k + 1, u, TAIL_OK
        if k + 1 >= max_terms:
            status = EXHAUSTED
            if (a1 + k) * (a2 + k) * (a3 + k) == 0:
                status = TERMINATED
            return complex(sr + cr, si + ci), k + 1, u, status
        u = u * ((a1 + k) * (a2 + k) * (a3 + k)) / ((b1 + k) * (b2 + k) * (k + 1.0))
        k += 1


@njit(**_opts)
def polygamma_terms_sum(z, order, max_terms, abs_tol, n_min):
    """Sum w_n^(l) / n where w_n^(j) = d^j/dz^j (1-z)_n / n!.

    The stack obeys w_{n+1}^(j) = ((1+n-z) w_n^(j) - j w_n^(j-1)) / (n+1),
    which never divides by a z-dependent quantity.  Returns
    (sum, n_used, t_last, status, stack at n_used).
    """
    w = np.zeros(order + 1, dtype=np.complex128)
    w[0] = 1.0
    sr = 0.0
    cr = 0.0
    si = 0.0
    ci = 0.0
    inv_re = 1.0 / z.real
    n = 0
    while True:
        a = 1.0 + n - z
        inv = 1.0 / (n + 1.0)
        for j in range(order, 0, -1):
            w[j] = (a * w[j] - j * w[j - 1]) * inv
        w[0] = a * w[0] * inv
        n += 1
        t = w[order] / n
        if not _finite(t):
            return complex(sr + cr, si + ci), n, t, OVERFLOW, w
        sr, cr = _nadd(sr, cr, t.real)
        si, ci = _nadd(si, ci, t.imag)
        if abs_tol >= 0 and n >= n_min and abs(t) * n * inv_re <= abs_tol:
            return complex(sr + cr, si + ci), n, t, TAIL_OK, w
        if n >= max_terms:
            return complex(sr + cr, si + ci), n, t, EXHAUSTED, w


@njit(**_opts)
def beta_terms_sum(a, c, terms):
    """Sum_{k<terms} (a)_k / (k! (c+k)); returns (sum, status)."""
    sr = 0.0
    cr = 0.0
    si = 0.0
    ci = 0.0
    coef = 1.0 + 0j
    for k in range(terms):
        t = coef / (c + k)
        if not _finite(t):
            return complex(sr + cr, si + ci), OVERFLOW
        sr, cr = _nadd(sr, cr, t.real)
        si, ci = _nadd(si, ci, t.imag)
        coef = coef * (a + k) / (k + 1.0)
    return complex(sr + cr, si + ci), EXHAUSTED


@njit(**_opts)
def weierstrass_product(h, n_factors):
    """Prod_{n=1..N} exp(h/n) / (1 + h/n), multiplied in increasing n."""
    p = 1.0 + 0j
    for n in range(1, n_factors + 1):
        q = h / n
        p = p * (np.exp(q) / (1.0 + q))
    return p


@njit(**_opts)
def classical_sum(z, terms):
    """Sum_{n=1..terms} (z-1) / (n (n+z-1))."""
    sr = 0.0
    cr = 0.0
    si = 0.0
    ci = 0.0
    w = z - 1.0
    for n in range(1, terms + 1):
        t = w / (n * (n + w))
        sr, cr = _nadd(sr, cr, t.real)
        si, ci = _nadd(si, ci, t.imag)
    return complex(sr + cr, si + ci)
