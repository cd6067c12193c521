"""Reference routes that share no machinery with the Pochhammer series.

Digamma comes from upward recurrence plus the Stirling-type asymptotic
expansion, polygamma from the defining Hurwitz sum with an Euler-Maclaurin
tail, and Gamma from a Lanczos approximation with reflection.  The classical
series sum_{n} (z-1)/(n(n+z-1)) is kept here as the textbook route.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import _accel
from .config import as_complex, as_index, is_nonpositive_integer, require_positive_real_part
from .errors import DomainError, UnsupportedOrderError

MAX_POLYGAMMA_ORDER = 8


@dataclass(frozen=True)
class ConstantStore:
    euler_gamma: float = 0.5772156649015329  # OEIS A001620
    ln2: float = 0.6931471805599453          # OEIS A002162
    pi: float = 3.141592653589793            # OEIS A000796
    zeta3: float = 1.202056903159594         # Apery's constant, OEIS A002117
    # B2, B4, B6, B8
    bernoulli_even: tuple[float, ...] = (1 / 6, -1 / 30, 1 / 42, -1 / 30)


CONSTANTS = ConstantStore()
EULER_GAMMA = CONSTANTS.euler_gamma


@dataclass(frozen=True)
class KnownValue:
    argument: complex
    order: int
    value: complex
    provenance: str


def known_values() -> list[KnownValue]:
    """Golden values used as fixtures by the tests and ``verify``."""
    g, ln2, pi, z3 = CONSTANTS.euler_gamma, CONSTANTS.ln2, CONSTANTS.pi, CONSTANTS.zeta3
    return [
        KnownValue(1 + 0j, 0, complex(-g), "psi(1) = -gamma"),
        KnownValue(2 + 0j, 0, complex(1 - g), "psi(2) = 1 - gamma"),
        KnownValue(3 + 0j, 0, complex(1.5 - g), "psi(3) = 1 + 1/2 - gamma"),
        KnownValue(0.5 + 0j, 0, complex(-g - 2 * ln2), "psi(1/2) = -gamma - 2 ln 2"),
        KnownValue(1 + 0j, 1, complex(pi * pi / 6), "psi'(1) = zeta(2)"),
        KnownValue(1 + 0j, 2, complex(-2 * z3), "psi''(1) = -2 zeta(3)"),
    ]


def digamma_classical(z, terms) -> complex:
    """Textbook series -gamma + sum_{n<=N} (z-1)/(n(n+z-1)) plus the (z-1)/N tail."""
    z = as_complex(z)
    terms = as_index(terms, "terms", 1)
    require_positive_real_part(z)
    return -EULER_GAMMA + _accel.kernels().classical_sum(z, terms) + (z - 1) / terms


# Lanczos g = 7, n = 9 (Godfrey's coefficients)
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def reference_gamma(z) -> complex:
    z = as_complex(z)
    if is_nonpositive_integer(z):
        raise DomainError(f"Gamma has a pole at z={z!r}")
    if z.real < 0.5:
        return CONSTANTS.pi / (cmath.sin(CONSTANTS.pi * z) * reference_gamma(1 - z))
    w = z - 1
    x = _LANCZOS[0]
    for i in range(1, len(_LANCZOS)):
        x += _LANCZOS[i] / (w + i)
    t = w + _LANCZOS_G + 0.5
    return math.sqrt(2 * CONSTANTS.pi) * cmath.exp((w + 0.5) * cmath.log(t) - t) * x


def reference_digamma(z) -> complex:
    z = as_complex(z)
    if not z.real > 0:
        raise DomainError(f"reference_digamma requires Re(z) > 0, got {z!r}")
    shift = []
    # four Bernoulli terms leave B10/(10 z^10) ~ 7e-15 once Re(z) >= 16
    while z.real < 16:
        shift.append(1 / z)
        z += 1
    inv2 = 1 / (z * z)
    acc = 0j
    p = inv2
    for k, b in enumerate(CONSTANTS.bernoulli_even, start=1):
        acc += b / (2 * k) * p
        p *= inv2
    corr = complex(math.fsum(s.real for s in shift), math.fsum(s.imag for s in shift))
    return cmath.log(z) - 0.5 / z - acc - corr


def reference_polygamma(z, order) -> complex:
    """(-1)^(l+1) l! sum_{k>=0} (z+k)^-(l+1), direct sum plus Euler-Maclaurin tail."""
    z = as_complex(z)
    order = as_index(order, "order", 1)
    if order > MAX_POLYGAMMA_ORDER:
        raise UnsupportedOrderError(f"order must be <= {MAX_POLYGAMMA_ORDER}, got {order}")
    if not z.real > 0:
        raise DomainError(f"reference_polygamma requires Re(z) > 0, got {z!r}")
    p = order + 1
    # 60 + |z| terms push the first omitted Euler-Maclaurin term below 1e-14 relative
    K = 60 + int(abs(z))
    head = [(z + k) ** -p for k in range(K)]
    w = z + K
    tail = (
        w ** (1 - p) / (p - 1)
        + 0.5 * w**-p
        + p / 12 * w ** (-p - 1)
        - p * (p + 1) * (p + 2) / 720 * w ** (-p - 3)
    )
    s = complex(math.fsum(h.real for h in head), math.fsum(h.imag for h in head)) + tail
    return (-1) ** (order + 1) * math.factorial(order) * s
