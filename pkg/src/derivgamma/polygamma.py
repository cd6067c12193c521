"""Polygamma as the l-th z-derivative of the Pochhammer series.

psi^(l)(z) = -sum_{n>=1} p_n^(l)(z) / (n n!) with p_n = (1-z)_n.  The
derivatives come from the product rule applied one factor at a time:

    p_{n+1}^(j) = (1+n-z) p_n^(j) - j p_n^(j-1)

which stays finite at integer z, unlike the logarithmic-derivative form.
"""
from __future__ import annotations

import math

from . import _accel
from ._status import OVERFLOW, TAIL_OK
from .config import EvalConfig, SeriesResult, as_complex, as_index, require_positive_real_part
from .errors import MagnitudeOverflowError, UnsupportedOrderError
from .oracle import MAX_POLYGAMMA_ORDER
from .series import digamma, growth_guard

DerivStack = tuple  # (p^(0), p^(1), ..., p^(l)) of (1-z)_n

_TAIL_NOTE = "tail estimate uses the digamma decay rate and ignores log factors of derivative terms"


def _check_order(l):
    l = as_index(l, "order")
    if l > MAX_POLYGAMMA_ORDER:
        raise UnsupportedOrderError(f"order must be <= {MAX_POLYGAMMA_ORDER}, got {l}")
    return l


def pochhammer_derivs(z, n, l) -> DerivStack:
    """All d^j/dz^j (1-z)_n for j = 0..l."""
    z = as_complex(z)
    n = as_index(n)
    l = _check_order(l)
    p = [1 + 0j] + [0j] * l
    for k in range(n):
        a = 1 + k - z
        for j in range(l, 0, -1):
            p[j] = a * p[j] - j * p[j - 1]
        p[0] = a * p[0]
    if not all(math.isfinite(abs(v)) for v in p):
        raise MagnitudeOverflowError(f"derivative stack overflowed at n={n}")
    return tuple(p)


def differentiated_tail(stack, m, z, l) -> complex:
    """l-th z-derivative of the digamma tail correction t_m(z) g(z).

    With the second-order index shift the digamma correction factor is
    g(z) = m/z - 1 + 1/(1+z); the derivatives of t_m = w_m/m are the
    normalised stack entries, so Leibniz's rule gives the result exactly.
    """
    total = 0j
    for j in range(l + 1):
        k = l - j
        if k == 0:
            g = m / z - 1 + 1 / (1 + z)
        else:
            g = (-1) ** k * math.factorial(k) * (m / z ** (k + 1) + 1 / (1 + z) ** (k + 1))
        total += math.comb(l, j) * (complex(stack[j]) / m) * g
    return total


def polygamma(z, l, config: EvalConfig | None = None) -> SeriesResult:
    config = config or EvalConfig()
    l = _check_order(l)
    if l == 0:
        return digamma(z, config)
    z = as_complex(z)
    require_positive_real_part(z)
    # d^l/dz^l of psi(z) = psi(z-1) + 1/(z-1)
    shift = []
    while config.argument_reduction and z.real > config.reduction_band[1]:
        z -= 1
        shift.append((-1) ** l * math.factorial(l) / z ** (l + 1))
    shift_sum = complex(math.fsum(s.real for s in shift), math.fsum(s.imag for s in shift))
    # d^l/dz^l of a degree-n polynomial vanishes for n < l
    n_min = growth_guard(z) + l + 1
    total, n, t, status, stack = _accel.kernels().polygamma_terms_sum(
        z, l, config.max_terms, config.abs_tol, n_min
    )
    if status == OVERFLOW:
        raise MagnitudeOverflowError(f"derivative terms overflowed at n={n} for z={z!r}")
    notes = [_TAIL_NOTE]
    if n >= n_min:
        tail = abs(t) * n / z.real
        if config.tail_correction:
            total += differentiated_tail(stack, n, z, l)
    else:
        tail = math.inf
        notes.append("stopped before the term-growth guard; tail estimate unavailable")
    return SeriesResult(-total + shift_sum, n + len(shift), abs(t), tail, status == TAIL_OK, tuple(notes))
