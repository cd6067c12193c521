"""Rising factorials, the falling product prod_{i=1..n}(z-i), and series terms.

The main digamma series is sum_n t_n with t_n = (1-z)_n / (n n!).  Terms are
generated by the ratio t_{n+1}/t_n = (n+1-z) n / (n+1)^2 so n! is never
formed and nothing overflows before the terms themselves do.
"""
from __future__ import annotations

import cmath

from .config import as_complex, as_index
from .errors import MagnitudeOverflowError


def _check(value, what):
    if not cmath.isfinite(value):
        raise MagnitudeOverflowError(f"{what} overflowed double precision")
    return value


def pochhammer(a, n) -> complex:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1."""
    a = as_complex(a, "a")
    n = as_index(n)
    p = 1 + 0j
    for k in range(n):
        p *= a + k
    return _check(p, f"pochhammer({a}, {n})")


def falling_product(z, n) -> complex:
    """prod_{i=1..n} (z - i).  Equal to (-1)^n (1-z)_n."""
    z = as_complex(z)
    n = as_index(n, minimum=1)
    p = 1 + 0j
    for i in range(1, n + 1):
        p *= z - i
    return _check(p, f"falling_product({z}, {n})")


def term_ratio(z, n) -> complex:
    z = as_complex(z)
    n = as_index(n, minimum=1)
    return (n + 1 - z) * n / ((n + 1) * (n + 1))


def series_term(z, n) -> complex:
    """t_n = (1-z)_n / (n n!) by the ratio recurrence."""
    z = as_complex(z)
    n = as_index(n, minimum=1)
    t = 1 - z
    for k in range(1, n):
        t = t * (k + 1 - z) * k / ((k + 1) * (k + 1))
    return _check(t, f"series_term({z}, {n})")
