"""One-dimensional building blocks of the separable reduction.

The Mellin transform of the Legendre kernel over (0, 1),

    M(s; u, v) = int_0^1 x^(s-1) (1-x^2)^(-u/2) P_v^u(x) dx,

has the closed Gamma-quotient form implemented here; it is pinned by two
independent gates (the u=v=0 and (u,v)=(0,1) elementary cases, and the
product identity the engine checks) plus direct tanh-sinh quadrature.  The
log-power moment int_0^1 log^beta(1/x) dx = Gamma(beta+1) completes the
set of 1-D factors.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .core import DomainError, PoleError
from .legendre import kernel_factor_array
from .quad import tanh_sinh
from .specialfn import gamma, log_gamma, _near_nonpositive_integer


def _check_strip(s: complex, u: complex, v: complex) -> None:
    # Integrability on (0, 1): x^(Re s - 1) at 0 (the Legendre factor is
    # bounded there) and (1-x)^(-Re u) at 1.  The Gamma-quotient arguments
    # (s-u+-v)/2 sit in the denominator, so non-positive values only zero
    # the transform; they need no guard.
    if not s.real > 0:
        raise DomainError(f"Mellin strip needs Re(s) > 0, got s={s!r}")
    if not u.real < 1:
        raise DomainError(f"Mellin strip needs Re(u) < 1, got u={u!r}")


def mellin_legendre_closed(s: complex, u: complex, v: complex) -> complex:
    """M(s; u, v) = sqrt(pi) 2^(u-s) Gamma(s) / [Gamma((s-u+v)/2 + 1) *
    Gamma((s-u-v+1)/2)].

    Computed from log-gamma differences so moderate parameters cannot
    overflow.  Gamma poles of the numerator raise; denominator poles give
    an exact zero.
    """
    s, u, v = complex(s), complex(u), complex(v)
    if _near_nonpositive_integer(s):
        raise PoleError(f"M(s;u,v) pole at s={s!r}")
    d1 = (s - u + v) / 2.0 + 1.0
    d2 = (s - u - v + 1.0) / 2.0
    if _near_nonpositive_integer(d1) or _near_nonpositive_integer(d2):
        return 0.0 + 0.0j
    expo = (
        0.5 * math.log(math.pi)
        + (u - s) * math.log(2.0)
        + log_gamma(s)
        - log_gamma(d1)
        - log_gamma(d2)
    )
    return cmath.exp(expo)


def mellin_legendre_quadrature(
    s: complex, u: complex, v: complex, level: int = 10
) -> complex:
    """tanh-sinh evaluation of int_0^1 x^(s-1) (1-x^2)^(-u/2) P_v^u(x) dx."""
    s, u, v = complex(s), complex(u), complex(v)
    _check_strip(s, u, v)
    rule = tanh_sinh(level)
    x, omx = rule.nodes, rule.complement
    vals = np.exp((s - 1.0) * np.log(x)) * kernel_factor_array(v, u, x, omx)
    return complex(np.sum(rule.weights * vals))


def log_moment(beta: complex) -> complex:
    """int_0^1 log^beta(1/x) dx = Gamma(beta + 1); needs Re(beta) > -1."""
    beta = complex(beta)
    if not beta.real > -1:
        raise DomainError(f"log moment needs Re(beta) > -1, got {beta!r}")
    return gamma(beta + 1.0)
