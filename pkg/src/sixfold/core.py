"""Shared numeric types: the seven-parameter model and its convergence strip.

Every quantity in this package is a plain Python ``complex`` in double
precision.  The strip conditions attached to the identity family live here,
together with the four log-power exponents derived from a parameter set.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass


class SixfoldError(Exception):
    """Base class for numeric errors raised by this package."""


class PoleError(SixfoldError):
    """Evaluation requested at (or too close to) a pole."""


class DomainError(SixfoldError):
    """Arguments outside the supported domain of an operation."""


class ConvergenceError(SixfoldError):
    """An iterative scheme failed to reach its target accuracy."""


class UnsupportedRegimeError(SixfoldError):
    """Arguments fall in a regime the evaluator deliberately rejects."""


class NonFiniteSampleError(SixfoldError):
    """An integrand sample produced NaN/Inf; coordinates are in the message."""


def ensure_finite(z: complex, what: str = "value") -> complex:
    """Return ``z`` unchanged, raising if either component is NaN or Inf."""
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFiniteSampleError(f"non-finite {what}: {z!r}")
    return z


# Strict-inequality margin for the boundary-proximity warnings only.
_BOUNDARY_WARN = 1e-8


@dataclass(frozen=True)
class ParameterSet:
    """The seven complex parameters (k, a, m, u, v, mu, nu) of the identity.

    The integral converges on a parameter strip; see
    :func:`validate_parameters` for the exact inequalities.
    """

    k: complex = 0.0
    a: complex = 1.0
    m: complex = 0.5
    u: complex = 0.0
    v: complex = 1.0
    mu: complex = 0.0
    nu: complex = 1.0

    def __post_init__(self) -> None:
        for name in ("k", "a", "m", "u", "v", "mu", "nu"):
            object.__setattr__(self, name, complex(getattr(self, name)))

    def replace(self, **kwargs: complex) -> "ParameterSet":
        fields = {n: getattr(self, n) for n in ("k", "a", "m", "u", "v", "mu", "nu")}
        fields.update(kwargs)
        return ParameterSet(**fields)


@dataclass(frozen=True)
class ExponentQuad:
    """The four log-power exponents derived from a ParameterSet."""

    beta_p: complex
    beta_q: complex
    beta_t: complex
    beta_z: complex

    def as_tuple(self) -> tuple[complex, complex, complex, complex]:
        return (self.beta_p, self.beta_q, self.beta_t, self.beta_z)


def derive_exponents(ps: ParameterSet) -> ExponentQuad:
    """Exponents of the four log-power kernel factors.

    beta_p = (-mu - m - nu)/2      beta_q = (-mu - m + nu + 1)/2
    beta_t = (m - u + v)/2         beta_z = (m - u - v - 1)/2
    """
    return ExponentQuad(
        beta_p=(-ps.mu - ps.m - ps.nu) / 2,
        beta_q=(-ps.mu - ps.m + ps.nu + 1) / 2,
        beta_t=(ps.m - ps.u + ps.v) / 2,
        beta_z=(ps.m - ps.u - ps.v - 1) / 2,
    )


def validate_parameters(ps: ParameterSet) -> list[str]:
    """Check every strip inequality; return the names of violated ones.

    Never raises: non-finite inputs are reported as violations.  Inequalities
    are strict with no epsilon margin; callers operating within 1e-8 of a
    boundary can consult :func:`parameter_warnings`.
    """
    violations: list[str] = []
    for name in ("k", "a", "m", "u", "v", "mu", "nu"):
        val = getattr(ps, name)
        if not (math.isfinite(val.real) and math.isfinite(val.imag)):
            violations.append(f"finite({name})")
    if violations:
        return violations

    if ps.a == 0:
        violations.append("a != 0")
    if not ps.u.real < 1:
        violations.append("Re(u)<1")
    if not 0 < ps.m.real < 1:
        violations.append("0<Re(m)<1")
    if not ps.v.real > 0:
        violations.append("Re(v)>0")
    if not ps.m.real < abs(ps.v.real):
        violations.append("Re(m)<|Re(v)|")
    if not ps.mu.real < 1:
        violations.append("Re(mu)<1")
    if not ps.nu.real > 0:
        violations.append("Re(nu)>0")
    if not ps.m.real < abs(ps.nu.real):
        violations.append("Re(m)<|Re(nu)|")

    exq = derive_exponents(ps)
    for label, beta in zip(("beta_p", "beta_q", "beta_t", "beta_z"), exq.as_tuple()):
        if not beta.real > -1:
            violations.append(f"Re({label})>-1")
    return violations


def parameter_warnings(ps: ParameterSet) -> list[str]:
    """Non-fatal advisories: the stricter half-strip conditions and
    boundary proximity (within 1e-8) of any enforced inequality."""
    warnings: list[str] = []
    if not ps.u.real < ps.m.real < 0.5:
        warnings.append("strict-strip Re(u)<Re(m)<1/2 not satisfied")
    if not ps.m.real < ps.v.real:
        warnings.append("strict-strip Re(m)<Re(v) not satisfied")

    exq = derive_exponents(ps)
    margins = {
        "Re(u)<1": 1 - ps.u.real,
        "0<Re(m)": ps.m.real,
        "Re(m)<1": 1 - ps.m.real,
        "Re(v)>0": ps.v.real,
        "Re(m)<|Re(v)|": abs(ps.v.real) - ps.m.real,
        "Re(mu)<1": 1 - ps.mu.real,
        "Re(nu)>0": ps.nu.real,
        "Re(m)<|Re(nu)|": abs(ps.nu.real) - ps.m.real,
        "Re(beta_p)>-1": exq.beta_p.real + 1,
        "Re(beta_q)>-1": exq.beta_q.real + 1,
        "Re(beta_t)>-1": exq.beta_t.real + 1,
        "Re(beta_z)>-1": exq.beta_z.real + 1,
    }
    for name, margin in margins.items():
        if 0 < margin < _BOUNDARY_WARN:
            warnings.append(f"within 1e-8 of boundary: {name}")

    # Gamma-family factors are differentiated at beta+1; near the pole at 0
    # their derivatives scale like j!/margin^j, so high-order coefficient
    # paths lose roughly j*log10(1/margin) digits.
    for label, beta in zip(("beta_p", "beta_q", "beta_t", "beta_z"), exq.as_tuple()):
        margin = beta.real + 1
        if 0 < margin < 1e-2:
            warnings.append(
                f"Re({label})+1 = {margin:.2e}: expect degraded accuracy on the "
                "factor-product (moment) path at higher k"
            )
    return warnings


@dataclass(frozen=True)
class Tolerances:
    """Absolute/relative tolerance pair; at least one must be positive."""

    abs_tol: float = 0.0
    rel_tol: float = 1e-9

    def __post_init__(self) -> None:
        if self.abs_tol < 0 or self.rel_tol < 0:
            raise DomainError("tolerances must be non-negative")
        if self.abs_tol == 0 and self.rel_tol == 0:
            raise DomainError("abs_tol and rel_tol cannot both be zero")

    def within(self, x: complex, y: complex) -> bool:
        scale = max(abs(x), abs(y))
        return abs(x - y) <= self.abs_tol + self.rel_tol * scale


def is_close(x: complex, y: complex, rel: float = 1e-9, abs_tol: float = 0.0) -> bool:
    return abs(x - y) <= abs_tol + rel * max(abs(x), abs(y))


def principal_power(base: complex, expo: complex) -> complex:
    """base**expo with the principal branch of log(base); 0**0 = 1."""
    if base == 0:
        if expo == 0:
            return 1.0 + 0j
        if expo.real > 0:
            return 0.0 + 0j
        raise DomainError("0 raised to a power with non-positive real part")
    return cmath.exp(expo * cmath.log(base))
