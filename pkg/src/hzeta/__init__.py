"""The h-zeta function zeta_h(s) = sum h_n n^(-s), h_n = 1 + 1/3 + ... + 1/(2n-1).

Submodules: :mod:`special_functions`, :mod:`exact_polynomials`,
:mod:`quadrature`, :mod:`h_series`, :mod:`continuation`, :mod:`identities`
and :mod:`cli`.
"""

from .context import (
    AccuracyError,
    ConditioningWarning,
    DomainError,
    HZetaError,
    PoleError,
    PrecisionContext,
)
from .continuation import G, PoleInfo, alpha, alpha_beta, beta, pole_info, zeta_h, zeta_h_via_hurwitz
from .h_series import h, harmonic, weighted_h_sum, zeta_h_series
from .identities import IdentityReport, IdentitySpec, run_identity, run_suite
from .quadrature import T, log_tangent_integral
from .special_functions import catalan_constant, digamma, euler_gamma, gamma, hurwitz_zeta, riemann_zeta

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "ConditioningWarning",
    "DomainError",
    "G",
    "HZetaError",
    "IdentityReport",
    "IdentitySpec",
    "PoleError",
    "PoleInfo",
    "PrecisionContext",
    "T",
    "alpha",
    "alpha_beta",
    "beta",
    "catalan_constant",
    "digamma",
    "euler_gamma",
    "gamma",
    "h",
    "harmonic",
    "hurwitz_zeta",
    "log_tangent_integral",
    "pole_info",
    "riemann_zeta",
    "run_identity",
    "run_suite",
    "weighted_h_sum",
    "zeta_h",
    "zeta_h_series",
    "zeta_h_via_hurwitz",
]
