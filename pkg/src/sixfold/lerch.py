"""Lerch transcendent Phi(z, s, v) in every regime this package needs.

Regimes and methods:

* |z| well inside the unit disk: the defining power series.
* s a non-positive integer: exact elementary form via n-fold application
  of (v + z d/dz) to 1/(1-z), carried on exact coefficient arrays.
* z = -1: the two-term Hurwitz-zeta split (with the digamma limit at s=1).
* |z| on or near the unit circle, z != 1: a rotated-contour Abel-Plana
  representation, entire in s, evaluated by tanh-sinh quadrature with an
  error estimate channel.
* the integral representation (1/Gamma(s)) int t^(s-1) e^(-vt)/(1-z e^-t),
  kept as an independent cross-check oracle.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .core import DomainError, PoleError, UnsupportedRegimeError, principal_power
from .quad import gauss_laguerre, tanh_sinh
from .specialfn import digamma, hurwitz_zeta, rgamma

_MAX_SERIES_TERMS = 200_000
_INT_TOL = 1e-12


def _near_nonpositive_int(w: complex, tol: float = _INT_TOL) -> int | None:
    if abs(w.imag) <= tol:
        r = round(w.real)
        if r <= 0 and abs(w.real - r) <= tol:
            return r
    return None


def lerch_series(z: complex, s: complex, v: complex) -> complex:
    """Direct power series; intended for |z| <= 1 - 1e-3."""
    z, s, v = complex(z), complex(s), complex(v)
    if _near_nonpositive_int(v) is not None:
        raise PoleError(f"series pole: v={v!r} is a non-positive integer")
    total = principal_power(v, -s)
    zpow = 1.0 + 0.0j
    small = 0
    for n in range(1, _MAX_SERIES_TERMS):
        zpow *= z
        term = zpow * principal_power(v + n, -s)
        total += term
        if abs(term) <= 1e-16 * abs(total):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise DomainError("lerch series did not converge; use a circle-capable regime")


def lerch_apostol(z: complex, n: int, v: complex) -> complex:
    """Phi(z, -n, v) for integer n >= 0: exact operator form.

    Applying (v + z d/dz) n times to 1/(1-z) over the basis
    z^i/(1-z)^(i+1) gives integer-coefficient recurrences; the only
    rounding is in the final evaluation.
    """
    if n < 0 or n > 10:
        raise DomainError(f"apostol form implemented for 0 <= n <= 10, got {n}")
    z, v = complex(z), complex(v)
    if abs(z - 1.0) < 1e-12:
        raise PoleError("apostol form has a pole at z=1")
    coeff = [1.0 + 0.0j]
    for _ in range(n):
        new = [0.0 + 0.0j] * (len(coeff) + 1)
        for i, c in enumerate(coeff):
            new[i] += (v + i) * c
            new[i + 1] += (i + 1.0) * c
        coeff = new
    inv = 1.0 / (1.0 - z)
    total = 0.0 + 0.0j
    zpow = 1.0 + 0.0j
    base = inv
    for c in coeff:
        total += c * zpow * base
        zpow *= z
        base *= inv
    return total


def lerch_minus_one_split(s: complex, v: complex) -> complex:
    """Phi(-1, s, v) = 2^-s [zeta(s, v/2) - zeta(s, (v+1)/2)].

    At s = 1 the zeta poles cancel; the value is the digamma difference
    (psi((v+1)/2) - psi(v/2)) / 2.
    """
    s, v = complex(s), complex(v)
    if v.real <= 0:
        raise DomainError(f"minus-one split needs Re(v) > 0, got v={v!r}")
    if abs(s - 1.0) < 1e-12:
        return 0.5 * (digamma((v + 1.0) / 2.0) - digamma(v / 2.0))
    return principal_power(2.0, -s) * (
        hurwitz_zeta(s, v / 2.0) - hurwitz_zeta(s, (v + 1.0) / 2.0)
    )


# ----------------------------------------------------------------------
# Rotated-contour Abel-Plana evaluation near and on the unit circle
# ----------------------------------------------------------------------


def _abel_plana_phi(z: complex, s: complex, v: complex, level: int) -> complex:
    """Phi via Abel-Plana applied to f(x) = z^x (v+x)^(-s).

    Valid for 0 < |z| <= 1 with z not on [1, inf); requires Re(v) > 0.  The
    half-line integral of f is rotated to the steepest-descent ray, and the
    boundary integral pairs f(ix) with f(-ix) through a sinh form that is
    immune to cancellation.  Both integrands are smooth and exponentially
    decaying, so tanh-sinh converges fast; the representation is entire in
    s, which is what makes negative Re(s) on the circle tractable.
    """
    theta = cmath.phase(z)
    if theta < 0.0:
        return _abel_plana_phi(
            z.conjugate(), s.conjugate(), v.conjugate(), level
        ).conjugate()
    rho = abs(z)
    lam = math.log(rho)
    if theta == 0.0 and lam >= 0.0:
        raise DomainError("Abel-Plana form needs z off the ray [1, inf)")
    lnz = complex(lam, theta)
    r_decay = abs(lnz)
    phi = math.pi - math.atan2(theta, lam)  # rotation angle in [0, pi/2]
    eiphi = cmath.exp(1j * phi)
    sneg = max(0.0, -s.real)
    rule = tanh_sinh(level)

    big = 45.0 + 2.0 * abs(s.imag)
    upper = big / r_decay
    for _ in range(3):
        upper = (big + sneg * math.log1p(upper / abs(v))) / r_decay
    u = upper * rule.nodes
    i0 = eiphi * np.sum(
        (upper * rule.weights) * np.exp(-r_decay * u - s * np.log(v + u * eiphi))
    )

    kappa = 2.0 * math.pi - theta
    tmax = big / kappa
    for _ in range(3):
        tmax = (big + sneg * math.log1p(tmax / abs(v))) / kappa
    t = tmax * rule.nodes
    wt = tmax * rule.weights
    twopit = 2.0 * math.pi * t
    log_em1 = np.where(
        twopit > 30.0, twopit, np.log(np.expm1(np.minimum(twopit, 700.0)))
    )
    gp = 1j * t * lnz - s * np.log(v + 1j * t)
    gm = -1j * t * lnz - s * np.log(v - 1j * t)
    delta = gp - gm
    mean = 0.5 * (gp + gm)
    small = np.abs(delta) < 1.0
    sinh_form = 2.0 * np.exp(np.where(small, mean, 0.0) - log_em1) * np.sinh(
        np.where(small, delta, 0.0) / 2.0
    )
    diff_form = np.exp(np.where(small, -np.inf, gp) - log_em1) - np.exp(
        np.where(small, -np.inf, gm) - log_em1
    )
    j_int = 1j * np.sum(wt * np.where(small, sinh_form, diff_form))

    return 0.5 * principal_power(v, -s) + i0 + j_int


def lerch_unit_circle_full(
    z: complex, s: complex, v: complex, level: int = 8
) -> tuple[complex, float]:
    """Unit-circle Phi with an error estimate (coarser-level comparison).

    Preconditions: |z| = 1 within 1e-12, |z - 1| >= 1e-6, Re(v) > 0.
    Accuracy degrades as z -> 1; the estimate channel reports it.
    """
    z, s, v = complex(z), complex(s), complex(v)
    if abs(abs(z) - 1.0) > 1e-12:
        raise DomainError(f"lerch_unit_circle needs |z| = 1, got |z| = {abs(z)}")
    if abs(z - 1.0) < 1e-6:
        raise DomainError("z too close to 1 for the unit-circle evaluator")
    if v.real <= 0:
        raise DomainError(f"unit-circle evaluator needs Re(v) > 0, got v={v!r}")
    val = _abel_plana_phi(z, s, v, level)
    coarse = _abel_plana_phi(z, s, v, level - 1)
    return val, abs(val - coarse)


def lerch_unit_circle(z: complex, s: complex, v: complex, level: int = 8) -> complex:
    return lerch_unit_circle_full(z, s, v, level)[0]


def lerch_integral_oracle(z: complex, s: complex, v: complex, level: int = 9) -> complex:
    """Cross-check oracle: (1/Gamma(s)) int_0^inf t^(s-1) e^(-vt)/(1 - z e^-t) dt.

    Conditions: Re(v) > 0 and either |z| <= 1, z != 1, Re(s) > 0, or z = 1,
    Re(s) > 1.  tanh-sinh on (0, 1], scaled Gauss-Laguerre on [1, inf).
    """
    z, s, v = complex(z), complex(s), complex(v)
    if v.real <= 0:
        raise DomainError(f"integral oracle needs Re(v) > 0, got v={v!r}")
    if abs(z) > 1.0 + 1e-12:
        raise UnsupportedRegimeError("integral oracle needs |z| <= 1")
    if abs(z - 1.0) < 1e-12:
        if not s.real > 1:
            raise DomainError("z = 1 requires Re(s) > 1")
    elif not s.real > 0:
        raise DomainError("integral oracle needs Re(s) > 0 for z != 1")

    ts = tanh_sinh(level)
    t = ts.nodes
    part1 = np.sum(
        ts.weights
        * np.exp((s - 1.0) * np.log(t) - v * t)
        / (1.0 - z * np.exp(-t))
    )

    sigma = max(v.real, 0.05)
    lag = gauss_laguerre(48, 0.0)
    tt = 1.0 + lag.nodes / sigma
    vals = np.exp((s - 1.0) * np.log(tt) - v * tt + lag.nodes) / (1.0 - z * np.exp(-tt))
    part2 = np.sum(lag.weights * vals) / sigma

    return rgamma(s) * (part1 + part2)


def lerch_phi(z: complex, s: complex, v: complex) -> complex:
    """Dispatcher over the regimes above.

    Routing: exact elementary form for non-positive integer s; Hurwitz zeta
    for z = 1 (needs Re(s) > 1); the series for |z| <= 1 - 1e-3; the
    Hurwitz split at z = -1; the Abel-Plana evaluator on the rest of the
    closed disk boundary ring.  |z| > 1 is rejected.
    """
    z, s, v = complex(z), complex(s), complex(v)
    if _near_nonpositive_int(v) is not None:
        raise PoleError(f"lerch_phi pole: v={v!r} is a non-positive integer")
    az = abs(z)
    if az > 1.0 + 1e-12:
        raise UnsupportedRegimeError(f"|z| > 1 not supported (|z| = {az})")

    if abs(z - 1.0) <= 1e-12:
        if s.real > 1.0:
            return hurwitz_zeta(s, v)
        raise DomainError("z = 1 requires Re(s) > 1")

    neg = _near_nonpositive_int(s)
    if neg is not None and -neg <= 10:
        return lerch_apostol(z, -neg, v)

    if az <= 1.0 - 1e-3:
        # With Re(s) < 0 and |z| near 1 the series terms peak at magnitude
        # ~(|s|/(e ln(1/|z|)))^|Re s| before converging; once that dwarfs the
        # sum the cancellation eats the accuracy budget, so hand those to the
        # Abel-Plana evaluator (valid for |z| > ~0.9 off the ray [1, inf)).
        if s.real < -0.5 and az > 0.9 and v.real > 0:
            peak = (abs(s) / (math.e * abs(math.log(az)))) ** (-s.real)
            if peak > 1e4:
                return _abel_plana_phi(z, s, v, level=8)
        return lerch_series(z, s, v)
    if abs(az - 1.0) <= 1e-12:
        if abs(z + 1.0) <= 1e-12:
            return lerch_minus_one_split(s, v)
        return lerch_unit_circle(z, s, v)
    # Annulus 1 - 1e-3 < |z| < 1: series acceleration via the same
    # Abel-Plana machinery (valid off the circle as well).
    if v.real <= 0:
        raise DomainError("near-circle evaluation needs Re(v) > 0")
    return _abel_plana_phi(z, s, v, level=8)
