"""Digamma and polygamma from Pochhammer-product series.

Routes: the adaptive series (``digamma``), its signed-product twin
(``digamma_eq11_partial``), the unit-argument 3F2 (``digamma_via_3f2``), the
finite-h derivative quotient (``psi_via_limit``) and an independent oracle.
"""
from ._accel import backend_name, set_backend, use_backend
from .beta_gamma import (
    beta_exact,
    beta_recurrence_residual,
    beta_series,
    beta_series_shifted,
    gamma_small,
    psi_via_limit,
)
from .config import EvalConfig, SeriesResult
from .errors import DomainError, MagnitudeOverflowError, UnsupportedOrderError
from .hypergeometric import Hyp3F2Params, digamma_via_3f2, hyp3f2_unit
from .oracle import (
    CONSTANTS,
    EULER_GAMMA,
    ConstantStore,
    KnownValue,
    digamma_classical,
    known_values,
    reference_digamma,
    reference_gamma,
    reference_polygamma,
)
from .pochhammer import falling_product, pochhammer, series_term, term_ratio
from .polygamma import pochhammer_derivs, polygamma
from .series import digamma, digamma_eq11_partial, digamma_partial, tail_estimate

__version__ = "0.1.0"

__all__ = [
    "CONSTANTS",
    "EULER_GAMMA",
    "ConstantStore",
    "DomainError",
    "EvalConfig",
    "Hyp3F2Params",
    "KnownValue",
    "MagnitudeOverflowError",
    "SeriesResult",
    "UnsupportedOrderError",
    "backend_name",
    "beta_exact",
    "beta_recurrence_residual",
    "beta_series",
    "beta_series_shifted",
    "digamma",
    "digamma_classical",
    "digamma_eq11_partial",
    "digamma_partial",
    "digamma_via_3f2",
    "falling_product",
    "gamma_small",
    "hyp3f2_unit",
    "known_values",
    "pochhammer",
    "pochhammer_derivs",
    "polygamma",
    "psi_via_limit",
    "reference_digamma",
    "reference_gamma",
    "reference_polygamma",
    "series_term",
    "set_backend",
    "tail_estimate",
    "term_ratio",
    "use_backend",
]
