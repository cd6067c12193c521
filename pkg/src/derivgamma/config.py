"""Evaluation settings and result containers shared by the series routes."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import DomainError

DEFAULT_MAX_TERMS = 10**6
DEFAULT_ABS_TOL = 1e-10
DEFAULT_BAND = (4.0, 8.0)


@dataclass(frozen=True)
class EvalConfig:
    """Truncation and stabilisation switches for adaptive evaluation.

    ``reduction_band`` is ``(low, high)``; arguments with real part above
    ``high`` are shifted down by unit steps before the series is summed.
    """

    max_terms: int = DEFAULT_MAX_TERMS
    abs_tol: float = DEFAULT_ABS_TOL
    tail_correction: bool = True
    argument_reduction: bool = True
    reduction_band: tuple[float, float] = DEFAULT_BAND

    def __post_init__(self):
        if int(self.max_terms) != self.max_terms or self.max_terms < 1:
            raise ValueError(f"max_terms must be a positive integer, got {self.max_terms!r}")
        if not self.abs_tol >= 0:
            raise ValueError(f"abs_tol must be >= 0, got {self.abs_tol!r}")
        low, high = self.reduction_band
        if not 0 < low < high:
            raise ValueError(f"reduction_band must satisfy 0 < low < high, got {self.reduction_band!r}")


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    terms_used: int
    last_term_mag: float
    tail_estimate: float
    converged: bool
    notes: tuple[str, ...] = field(default=())

    def __complex__(self):
        return complex(self.value)


def as_complex(x, name="z") -> complex:
    """Coerce a real or complex scalar, rejecting NaN and infinities."""
    try:
        c = complex(x)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{name} must be a number, got {x!r}") from exc
    if not cmath.isfinite(c):
        raise DomainError(f"{name} must be finite, got {c!r}")
    return c


def as_index(n, name="n", minimum=0) -> int:
    if isinstance(n, bool) or int(n) != n:
        raise DomainError(f"{name} must be an integer, got {n!r}")
    n = int(n)
    if n < minimum:
        raise DomainError(f"{name} must be >= {minimum}, got {n}")
    return n


def is_nonpositive_integer(c: complex) -> bool:
    return c.imag == 0 and c.real <= 0 and c.real == math.floor(c.real)


def require_positive_real_part(z: complex, name="z"):
    if not z.real > 0:
        raise DomainError(f"Re({name}) must be > 0, got {name}={z!r}")
