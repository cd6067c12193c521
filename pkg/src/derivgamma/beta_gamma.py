"""Beta-function machinery behind the limit construction of digamma.

Truncated expansions of B(z, h) and B(z, h+1), the Weierstrass product for
Gamma near its pole at 0, and the finite-h quotient

    [Gamma(h) - B(z,h)] / ((z+h) B(z,h+1))  ->  psi(z)  as h -> 0.

Truncation orders are always supplied by the caller.
"""
from __future__ import annotations

import cmath

from . import _accel
from ._status import OVERFLOW
from .config import as_complex, as_index, is_nonpositive_integer
from .errors import DomainError, MagnitudeOverflowError
from .oracle import EULER_GAMMA, reference_gamma


def _no_pole(value, name):
    if is_nonpositive_integer(value):
        raise DomainError(f"{name}={value!r} is a pole of Gamma")


def beta_exact(z, h) -> complex:
    """Gamma(z) Gamma(h) / Gamma(z+h) from the reference Gamma."""
    z, h = as_complex(z), as_complex(h, "h")
    _no_pole(z, "z")
    _no_pole(h, "h")
    _no_pole(z + h, "z+h")
    return reference_gamma(z) * reference_gamma(h) / reference_gamma(z + h)


def _beta_sum(a, c, terms, what):
    total, status = _accel.kernels().beta_terms_sum(a, c, terms)
    if status == OVERFLOW:
        raise MagnitudeOverflowError(f"{what}: coefficients overflowed")
    return total


def beta_series(z, h, terms) -> complex:
    """sum_{k<terms} (1-z)_k / (k! (h+k)), the expansion of B(z, h)."""
    z, h = as_complex(z), as_complex(h, "h")
    terms = as_index(terms, "terms", 1)
    if not (z.real > 0 and h.real > 0):
        raise DomainError(f"beta_series requires Re(z) > 0 and Re(h) > 0, got z={z!r}, h={h!r}")
    return _beta_sum(1 - z, h, terms, "beta_series")


def beta_series_shifted(z, h, terms) -> complex:
    """sum_{k<terms} (-h)_k / (k! (z+k)), the expansion of B(z, h+1)."""
    z, h = as_complex(z), as_complex(h, "h")
    terms = as_index(terms, "terms", 1)
    if not (z.real > 0 and h.real > -1):
        raise DomainError(
            f"beta_series_shifted requires Re(z) > 0 and Re(h) > -1, got z={z!r}, h={h!r}"
        )
    return _beta_sum(-h, z, terms, "beta_series_shifted")


def beta_recurrence_residual(z, h) -> float:
    """Relative mismatch of B(z,h) = (z+h)/h * B(z,h+1)."""
    z, h = as_complex(z), as_complex(h, "h")
    lhs = beta_exact(z, h)
    rhs = (z + h) / h * beta_exact(z, h + 1)
    return abs(lhs - rhs) / abs(lhs)


def gamma_small(h, product_factors) -> complex:
    """Weierstrass form (1/h) e^(-gamma h) prod_{n<=N} (1+h/n)^-1 e^(h/n)."""
    h = as_complex(h, "h")
    n = as_index(product_factors, "product_factors", 1)
    _no_pole(h, "h")
    return cmath.exp(-EULER_GAMMA * h) / h * _accel.kernels().weierstrass_product(h, n)


def psi_via_limit(z, h) -> complex:
    """Finite-h version of the derivative-definition limit; error is O(h)."""
    z, h = as_complex(z), as_complex(h, "h")
    if not z.real > 0:
        raise DomainError(f"psi_via_limit requires Re(z) > 0, got z={z!r}")
    if not 0 < abs(h) <= 0.1:
        raise DomainError(f"psi_via_limit requires 0 < |h| <= 0.1, got h={h!r}")
    _no_pole(z + h, "z+h")
    num = reference_gamma(h) - beta_exact(z, h)
    return num / ((z + h) * beta_exact(z, h + 1))
