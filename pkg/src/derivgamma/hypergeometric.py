"""Unit-argument 3F2 and the digamma route psi(z) = -gamma - (1-z) 3F2(2-z,1,1;2,2;1)."""
from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

from . import _accel
from ._status import OVERFLOW, TAIL_OK, TERMINATED
from .config import (
    EvalConfig,
    SeriesResult,
    as_complex,
    is_nonpositive_integer,
    require_positive_real_part,
)
from .errors import DomainError, MagnitudeOverflowError
from .oracle import EULER_GAMMA
from .series import tail_correction


@dataclass(frozen=True)
class Hyp3F2Params:
    a1: complex
    a2: complex
    a3: complex
    b1: complex
    b2: complex

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "b1", "b2"):
            object.__setattr__(self, name, as_complex(getattr(self, name), name))
        for name in ("b1", "b2"):
            if is_nonpositive_integer(getattr(self, name)):
                raise DomainError(f"{name} is a non-positive integer: {getattr(self, name)!r}")
        if not self.terminating and not self.margin.real > 0:
            raise DomainError(
                f"unit-argument 3F2 diverges: Re(b1+b2-a1-a2-a3) = {self.margin.real} <= 0"
            )

    @property
    def numerators(self):
        return (self.a1, self.a2, self.a3)

    @property
    def denominators(self):
        return (self.b1, self.b2)

    @property
    def margin(self) -> complex:
        return self.b1 + self.b2 - self.a1 - self.a2 - self.a3

    @property
    def terminating(self) -> bool:
        # exact integers only; 1e-300 away from -3 does not terminate
        return any(is_nonpositive_integer(a) for a in self.numerators)

    @property
    def term_count(self) -> int | None:
        """Number of nonzero terms for a terminating series."""
        ks = [int(-a.real) + 1 for a in self.numerators if is_nonpositive_integer(a)]
        return min(ks) if ks else None

    def _alpha(self) -> complex:
        # t_k ~ C k^(-1-s) (1 + alpha/k)
        num = sum(a * (a - 1) for a in self.numerators)
        den = sum(b * (b - 1) for b in self.denominators)
        return (num - den) / 2


def hyp3f2_unit(params: Hyp3F2Params, config: EvalConfig | None = None) -> SeriesResult:
    """sum_{k>=0} (a1)_k (a2)_k (a3)_k / ((b1)_k (b2)_k k!)."""
    config = config or EvalConfig()
    p = params
    if p.terminating:
        max_terms, abs_tol = max(config.max_terms, p.term_count), -1.0
        s_re = 1.0
    else:
        max_terms, abs_tol = config.max_terms, config.abs_tol
        s_re = p.margin.real
    k_min = math.ceil(max(abs(v) for v in p.numerators + p.denominators)) + 2
    total, used, u, status = _accel.kernels().hyp3f2_terms_sum(
        p.a1, p.a2, p.a3, p.b1, p.b2, max_terms, abs_tol, s_re, k_min
    )
    if status == OVERFLOW:
        raise MagnitudeOverflowError(f"3F2 terms overflowed at k={used - 1} for {p!r}")
    k = used - 1
    notes = []
    if status == TERMINATED:
        tail = 0.0
    elif k >= k_min:
        tail = abs(u) * k / s_re
    else:
        tail = math.inf
        notes.append("stopped before the term-growth guard; tail estimate unavailable")
    if config.tail_correction and status != TERMINATED and k >= k_min:
        total += tail_correction(u, k, p.margin, p._alpha())
    converged = status in (TERMINATED, TAIL_OK)
    return SeriesResult(total, used, abs(u), tail, converged, tuple(notes))


def digamma_via_3f2(z, config: EvalConfig | None = None) -> SeriesResult:
    """-gamma - (1-z) 3F2(2-z, 1, 1; 2, 2; 1); the convergence margin equals z."""
    config = config or EvalConfig()
    z = as_complex(z)
    require_positive_real_part(z)
    pre = 1 - z
    if pre == 0:
        return SeriesResult(complex(-EULER_GAMMA), 1, 0.0, 0.0, True)
    # abs_tol is meant for psi, so the 3F2 runs at abs_tol / |1-z|
    inner = dataclasses.replace(config, abs_tol=config.abs_tol / abs(pre))
    r = hyp3f2_unit(Hyp3F2Params(2 - z, 1, 1, 2, 2), inner)
    return SeriesResult(
        -EULER_GAMMA - pre * r.value,
        r.terms_used,
        abs(pre) * r.last_term_mag,
        abs(pre) * r.tail_estimate,
        r.converged,
        r.notes,
    )
