"""Digamma from the Pochhammer series psi(z) = -gamma - sum_{n>=1} (1-z)_n / (n n!).

Terms grow until n is about Re(z) and then decay like n^(-1-Re z), so the
raw series converges slowly for small Re(z) and cancels badly for large
Re(z).  ``digamma`` handles both: a tail correction for the former and a
downward shift of the argument for the latter.  ``digamma_partial`` is the
plain truncated sum with neither.
"""
from __future__ import annotations

import math

from . import _accel
from ._status import OVERFLOW, TAIL_OK, TERMINATED
from .config import EvalConfig, SeriesResult, as_complex, as_index, require_positive_real_part
from .errors import DomainError, MagnitudeOverflowError
from .oracle import EULER_GAMMA
from .pochhammer import falling_product

# factorial form overflows past 170!
EQ11_MAX_TERMS = 150


def growth_guard(z: complex) -> int:
    """Smallest n at which the tail test may be consulted."""
    return math.ceil(abs(z.real)) + 2


def _sum_terms(z, max_terms, abs_tol, n_min):
    total, n, t, status = _accel.kernels().digamma_terms_sum(z, max_terms, abs_tol, n_min)
    if status == OVERFLOW:
        raise MagnitudeOverflowError(
            f"series terms overflowed at n={n} for z={z!r}; enable argument reduction"
        )
    return total, n, t, status


def digamma_partial(z, m) -> complex:
    """psi_m(z) = -gamma - sum_{n=1..m} (1-z)_n/(n n!), no correction or reduction."""
    z = as_complex(z)
    m = as_index(m, "m", 1)
    require_positive_real_part(z)
    total, _, _, _ = _sum_terms(z, m, -1.0, 0)
    return -EULER_GAMMA - total


def partial_with_last_term(z, m):
    """(psi_m(z), t_m) in one pass; used by convergence tables."""
    z = as_complex(z)
    m = as_index(m, "m", 1)
    require_positive_real_part(z)
    total, n, t, status = _sum_terms(z, m, -1.0, 0)
    if status == TERMINATED and n < m:
        t = 0j
    return -EULER_GAMMA - total, t


def digamma_eq11_partial(z, m) -> complex:
    """-gamma + sum_{n=1..m} (-1)^(n+1) prod_{i<=n}(z-i) / (n n!), factorial form."""
    z = as_complex(z)
    m = as_index(m, "m", 1)
    require_positive_real_part(z)
    if m > EQ11_MAX_TERMS:
        raise MagnitudeOverflowError(f"factorial form limited to m <= {EQ11_MAX_TERMS}, got {m}")
    re, im = [], []
    fact = 1.0
    for n in range(1, m + 1):
        fact *= n
        t = (-1) ** (n + 1) * falling_product(z, n) / (n * fact)
        re.append(t.real)
        im.append(t.imag)
    return -EULER_GAMMA + complex(math.fsum(re), math.fsum(im))


def tail_estimate(z, t_m, m) -> float:
    """Integral-comparison bound |t_m| m / Re(z) on |sum_{n>m} t_n|."""
    z = as_complex(z)
    require_positive_real_part(z)
    m = as_index(m, "m", 1)
    if m < growth_guard(z):
        raise DomainError(
            f"tail estimate needs m >= ceil(|Re z|) + 2 = {growth_guard(z)}, got m={m}"
        )
    return abs(complex(t_m)) * m / z.real


def tail_correction(t_m: complex, m: int, s: complex, alpha: complex) -> complex:
    """Signed estimate of sum_{n>m} t_n when t_n ~ C n^(-1-s) (1 + alpha/n).

    Leading term t_m m / s, plus the next order written through the
    effective index shift -alpha/(1+s) and the half-step of the midpoint rule.
    """
    delta = -alpha / (1 + s)
    return t_m * (m + delta - s / 2) / s


def _digamma_alpha(z: complex) -> complex:
    return -z * (1 - z) / 2


def reduce_argument(z: complex, high: float):
    """Shift z down by whole steps until Re(z) <= high.

    Returns (reduced z, sum of 1/(reduced z + k) added back, number of steps).
    """
    steps = 0
    re, im = [], []
    while z.real > high:
        z -= 1
        w = 1 / z
        re.append(w.real)
        im.append(w.imag)
        steps += 1
    return z, complex(math.fsum(re), math.fsum(im)), steps


def digamma(z, config: EvalConfig | None = None) -> SeriesResult:
    """Adaptive evaluation of the Pochhammer series.

    ``terms_used`` counts series terms plus unit shifts applied by argument
    reduction, so a positive integer argument always reports ``max(z-1, 1)``.
    """
    config = config or EvalConfig()
    z = as_complex(z)
    require_positive_real_part(z)
    shift_sum, steps = 0j, 0
    if config.argument_reduction and z.real > config.reduction_band[1]:
        z, shift_sum, steps = reduce_argument(z, config.reduction_band[1])
    n_min = growth_guard(z)
    total, n, t, status = _sum_terms(z, config.max_terms, config.abs_tol, n_min)
    notes = []
    if status == TERMINATED:
        tail = 0.0
    elif n >= n_min:
        tail = abs(t) * n / z.real
    else:
        tail = math.inf
        notes.append("stopped before the term-growth guard; tail estimate unavailable")
    if config.tail_correction and status != TERMINATED and n >= n_min:
        total += tail_correction(t, n, z, _digamma_alpha(z))
    value = -EULER_GAMMA - total + shift_sum
    converged = status in (TERMINATED, TAIL_OK)
    return SeriesResult(value, n + steps, abs(t), tail, converged, tuple(notes))
