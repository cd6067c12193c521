"""Cross-route invariant checks; backs the ``verify`` CLI command.

Every check returns a residual and the tolerance it must meet.  Random
samples use fixed seeds so reports are reproducible byte for byte.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from .beta_gamma import (
    beta_exact,
    beta_recurrence_residual,
    beta_series,
    beta_series_shifted,
    gamma_small,
    psi_via_limit,
)
from .config import EvalConfig
from .hypergeometric import Hyp3F2Params, digamma_via_3f2, hyp3f2_unit
from .oracle import (
    CONSTANTS,
    EULER_GAMMA,
    digamma_classical,
    known_values,
    reference_digamma,
    reference_gamma,
    reference_polygamma,
)
from .pochhammer import falling_product, pochhammer, series_term, term_ratio
from .polygamma import pochhammer_derivs, polygamma
from .series import digamma, digamma_eq11_partial, digamma_partial

EPS = np.finfo(float).eps
SEED = 20240607


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    tolerance: float
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dicts(self):
        return [asdict(c) for c in self.checks]


def _rng(offset=0):
    return np.random.default_rng(SEED + offset)


def _random_complex(rng, count, re_range, im_range):
    re = rng.uniform(*re_range, size=count)
    im = rng.uniform(*im_range, size=count)
    return [complex(a, b) for a, b in zip(re, im)]


def _harmonic(k):
    return math.fsum(1 / j for j in range(1, k))


def empirical_order(errors, hs):
    """Least-squares slope of log(error) against log(h)."""
    return float(np.polyfit(np.log(hs), np.log(errors), 1)[0])


# -- pochhammer ---------------------------------------------------------------

def _pochhammer_checks():
    rng = _rng(1)
    worst = 0.0
    for _ in range(200):
        r = rng.uniform(0, 20)
        phi = rng.uniform(0, 2 * math.pi)
        z = r * complex(math.cos(phi), math.sin(phi))
        n = int(rng.integers(1, 31))
        p = pochhammer(1 - z, n)
        worst = max(worst, abs(falling_product(z, n) + (-1) ** (n + 1) * p) / (1 + abs(p)))
    yield "falling_product_identity", worst, 1e-10

    worst = 0.0
    for z in _random_complex(_rng(2), 50, (-5, 10), (-3, 3)):
        for n in range(1, 16):
            direct = pochhammer(1 - z, n) / (n * math.factorial(n))
            worst = max(worst, abs(series_term(z, n) - direct) / abs(direct))
    yield "term_recurrence_vs_direct", worst, 1e-12

    worst = 0.0
    for z in _rng(3).uniform(0.01, 40, size=100):
        start = math.ceil(z)
        worst = max(worst, max(abs(term_ratio(z, n)) for n in range(start, start + 200)))
    yield "decay_after_ceil_z", worst, float(np.nextafter(1.0, 0.0))

    rng = _rng(4)
    worst = 0.0
    for a in _random_complex(rng, 100, (-4, 4), (-2, 2)):
        n, m = (int(v) for v in rng.integers(0, 12, size=2))
        lhs = pochhammer(a, n + m)
        worst = max(worst, abs(lhs - pochhammer(a, n) * pochhammer(a + n, m)) / abs(lhs))
    yield "pochhammer_split", worst, 1e-12


# -- beta / limit -------------------------------------------------------------

def _beta_checks():
    rng = _rng(5)
    worst = 0.0
    count = 0
    while count < 100:
        z, h = _random_complex(rng, 2, (0.2, 10), (-10, 10))
        if abs(z) > 10 or abs(h) > 10:
            continue
        worst = max(worst, beta_recurrence_residual(z, h))
        count += 1
    yield "beta_recurrence_identity", worst, 1e-9

    worst = 0.0
    for z in range(1, 9):
        for h in (0.3, 1.7, 2.5 + 0.5j):
            exact = beta_exact(z, h)
            worst = max(worst, abs(beta_series(z, h, z) - exact) / abs(exact))
    yield "beta_series_terminating", worst, 1e-10

    worst = 0.0
    for h in range(8):
        for z in (0.4, 1.3, 3.0 + 1j):
            exact = beta_exact(z, h + 1)
            worst = max(worst, abs(beta_series_shifted(z, h, h + 1) - exact) / abs(exact))
    yield "beta_series_shifted_terminating", worst, 1e-10

    yield "beta_series_half_half", abs(beta_series(0.5, 0.5, 10**6) - math.pi), 5e-3
    yield "beta_series_shifted_half_half", abs(beta_series_shifted(0.5, 0.5, 10**6) - math.pi / 2), 5e-3

    # h Gamma(h) - 1 = -gamma h + O(h^2): the scaled residual must settle at gamma
    scaled = [abs(h * gamma_small(h, 10**6) - 1) / h for h in (1e-2, 1e-3, 1e-4)]
    yield "weierstrass_residual_linear", abs(scaled[-1] - EULER_GAMMA), 1e-3

    hs = 2.0 ** -np.arange(6, 13)
    worst = 0.0
    for z in (1.0, 2.0, 3.3):
        ref = reference_digamma(z)
        errs = [abs(psi_via_limit(z, h) - ref) for h in hs]
        worst = max(worst, abs(empirical_order(errs, hs) - 1))
    yield "limit_first_order", worst, 0.2


def term_growth_hump(z: float, horizon: int = 60) -> bool:
    """Peak of |t_n| before n = z, decay for every n >= z.

    For integer z the terms past z-1 are exactly zero, so decay there is
    read off the ratio |t_{n+1}/t_n| < 1 together with non-increasing
    magnitudes.
    """
    top = math.ceil(z)
    mags = [abs(series_term(z, n)) for n in range(1, top + horizon)]
    peak = int(np.argmax(mags)) + 1
    ratios_ok = all(abs(term_ratio(z, n)) < 1 for n in range(top, top + horizon))
    tail = mags[top - 1:]
    monotone = all(b < a or (a == 0 and b == 0) for a, b in zip(tail, tail[1:]))
    return peak < top and ratios_ok and monotone


# -- digamma series -----------------------------------------------------------

def _series_checks():
    rng = _rng(6)
    worst = 0.0
    for z in _random_complex(rng, 100, (0.2, 8), (-1, 1)):
        m = int(rng.integers(1, 101))
        a = digamma_partial(z, m)
        worst = max(worst, abs(digamma_eq11_partial(z, m) - a) / (1 + abs(a)))
    yield "signed_product_equivalence", worst, 1e-12

    worst = 0.0
    for k in range(1, 21):
        worst = max(worst, abs(digamma(k).value - (_harmonic(k) - EULER_GAMMA)))
    yield "integer_termination", worst, 1e-13

    cfg = EvalConfig(abs_tol=1e-8, argument_reduction=False)
    worst = 0.0
    for z in _random_complex(_rng(7), 100, (0.5, 6), (-2, 2)):
        worst = max(worst, abs(digamma(z + 1, cfg).value - digamma(z, cfg).value - 1 / z))
    yield "digamma_recurrence", worst, 10 * cfg.abs_tol

    cfg = EvalConfig(abs_tol=1e-8)
    worst = -math.inf
    for re in (0.5, 1.5, 2.5, 3.7, 5.2):
        for im in (0.0, 1.0):
            r = digamma(complex(re, im), cfg)
            err = abs(r.value - reference_digamma(complex(re, im)))
            worst = max(worst, err - max(10 * cfg.abs_tol, r.tail_estimate))
    yield "oracle_agreement_excess", worst, 0.0

    worst = 0.0
    for z in _random_complex(_rng(8), 30, (0.3, 12), (-3, 3)):
        a = digamma(z).value
        worst = max(worst, abs(digamma(z.conjugate()).value - a.conjugate()))
    yield "conjugate_symmetry", worst, 1e-12

    yield "term_growth_hump_z10", 0.0 if term_growth_hump(10.0) else 1.0, 0.0


# -- hypergeometric -----------------------------------------------------------

def _hyp_checks():
    cfg = EvalConfig(abs_tol=1e-12, argument_reduction=False)
    worst = 0.0
    for z in (0.5, 0.9 + 0.4j, 1.5, 2.5, 3.7 + 1j, 6.2):
        a = digamma(z, cfg).value
        worst = max(worst, abs(digamma_via_3f2(z, cfg).value - a) / (1 + abs(a)))
    yield "route_equivalence", worst, 1e-12

    from fractions import Fraction

    worst = 0.0
    for rest in ((1, 1, 2, 2), (0.5, 1.5, 2.5, 3)):
        a2, a3, b1, b2 = (Fraction(x) for x in rest)
        for k in range(11):
            total, term = Fraction(0), Fraction(1)
            for j in range(k + 1):
                total += term
                term *= (j - k) * (a2 + j) * (a3 + j) / ((b1 + j) * (b2 + j) * (j + 1))
            v = hyp3f2_unit(Hyp3F2Params(-k, *rest)).value
            worst = max(worst, abs(v - float(total)) / abs(float(total)))
    yield "terminating_exact", worst, 1e-14

    base = (0.3, 0.7 + 0.2j, 1.1, 2.2, 1.9)
    ref = hyp3f2_unit(Hyp3F2Params(*base)).value
    worst = 0.0
    for a in ((0.7 + 0.2j, 1.1, 0.3), (1.1, 0.3, 0.7 + 0.2j)):
        for b in ((2.2, 1.9), (1.9, 2.2)):
            v = hyp3f2_unit(Hyp3F2Params(*a, *b)).value
            worst = max(worst, abs(v - ref) / abs(ref))
    yield "parameter_symmetry", worst, 1e-13


# -- polygamma ----------------------------------------------------------------

def _polygamma_checks():
    worst = 0.0
    for z in (0.5, 1.0, 2.3 + 0.5j):
        for n in range(0, 25):
            p = pochhammer(1 - z, n)
            worst = max(worst, abs(pochhammer_derivs(z, n, 3)[0] - p) / (1 + abs(p)))
    yield "deriv_stack_entry0", worst, 1e-12

    worst = 0.0
    for z in (0.7, 2.0, 9.5 + 1j):
        worst = max(worst, abs(polygamma(z, 0).value - digamma(z).value))
    yield "order0_is_digamma", worst, 0.0

    tight = EvalConfig(abs_tol=1e-13, argument_reduction=False)
    step = 1e-3
    worst = 0.0
    for z in (1.5, 2.5, 4.0):
        plus = digamma(z + step, tight).value
        mid = digamma(z, tight).value
        minus = digamma(z - step, tight).value
        worst = max(worst, abs(polygamma(z, 1).value - (plus - minus) / (2 * step)))
        worst = max(worst, abs(polygamma(z, 2).value - (plus - 2 * mid + minus) / step**2))
    yield "finite_difference", worst, 1e-4

    worst = 0.0
    for order in (1, 2):
        for z in (1.0, 1.7, 3.2):
            lhs = polygamma(z + 1, order).value - polygamma(z, order).value
            rhs = (-1) ** order * math.factorial(order) / z ** (order + 1)
            worst = max(worst, abs(lhs - rhs))
    yield "polygamma_recurrence", worst, 1e-4

    cfg = EvalConfig()
    worst = -math.inf
    for z, order in ((0.6, 1), (1.0, 2), (2.5, 1), (3.3 + 1j, 2), (0.9, 4), (6.0, 3)):
        r = polygamma(z, order, cfg)
        err = abs(r.value - reference_polygamma(z, order))
        worst = max(worst, err - max(10 * cfg.abs_tol, r.tail_estimate))
    yield "oracle_agreement_excess", worst, 0.0


# -- oracle -------------------------------------------------------------------

def _oracle_checks():
    worst = 0.0
    for z in (0.5, 1, 2.5, 7):
        worst = max(worst, abs(digamma_classical(z, 10**6) - reference_digamma(z)))
    yield "classical_vs_reference", worst, 1e-5

    sample = _random_complex(_rng(9), 200, (0.2, 20), (-5, 5))
    worst = max(abs(reference_digamma(z + 1) - reference_digamma(z) - 1 / z) for z in sample)
    yield "reference_digamma_recurrence", worst, 1e-11

    worst = max(
        abs(reference_gamma(z + 1) - z * reference_gamma(z)) / abs(reference_gamma(z + 1))
        for z in sample
    )
    yield "reference_gamma_recurrence", worst, 1e-11

    step = 1e-4
    worst = 0.0
    for z in (0.5, 1.0, 2.5 + 1j, 7.0):
        fd = (reference_digamma(z + step) - reference_digamma(z - step)) / (2 * step)
        worst = max(worst, abs(reference_polygamma(z, 1) - fd))
    yield "reference_polygamma_fd", worst, 1e-6

    worst = 0.0
    for kv in known_values():
        ref = reference_digamma(kv.argument) if kv.order == 0 else reference_polygamma(kv.argument, kv.order)
        worst = max(worst, abs(ref - kv.value))
    yield "known_values", worst, 1e-12

    yield "euler_gamma_bounds", 0.0 if 0.577215664 < CONSTANTS.euler_gamma < 0.577215666 else 1.0, 0.0


GROUPS: dict[str, Callable] = {
    "pochhammer": _pochhammer_checks,
    "beta": _beta_checks,
    "series": _series_checks,
    "hypergeometric": _hyp_checks,
    "polygamma": _polygamma_checks,
    "oracle": _oracle_checks,
}


def run_checks(only: str | None = None) -> VerificationReport:
    if only is not None and only not in GROUPS:
        raise KeyError(only)
    checks = []
    for group, fn in GROUPS.items():
        if only is not None and group != only:
            continue
        for name, residual, tol in fn():
            residual = float(residual)
            checks.append(Check(f"{group}.{name}", residual, float(tol), bool(residual <= tol)))
    return VerificationReport(tuple(checks))
