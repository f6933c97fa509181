"""Truncated Taylor-series (jet) arithmetic in one complex variable.

A jet stores coefficients c_0..c_order of f(w0 + w) around w = 0, so
coefficient j equals f^(j)(w0)/j!.  Coefficient k of the closed-form
product jet, times k!, realizes the k-th derivative at the origin that the
identity family's integer-k cases reduce to.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .core import DomainError, ParameterSet, PoleError
from .specialfn import log_gamma, polygamma

MAX_ORDER = 12


@dataclass(frozen=True)
class Jet:
    """Immutable truncated power series; index j holds f^(j)(0)/j!."""

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise DomainError("jet needs at least the constant coefficient")
        if len(self.coeffs) - 1 > MAX_ORDER:
            raise DomainError(f"jet order capped at {MAX_ORDER}")
        coeffs = tuple(complex(c) for c in self.coeffs)
        for c in coeffs:
            if not (math.isfinite(c.real) and math.isfinite(c.imag)):
                raise DomainError(f"non-finite jet coefficient {c!r}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j: int) -> complex:
        return self.coeffs[j]

    def __add__(self, other: "Jet") -> "Jet":
        _check_orders(self, other)
        return Jet(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Jet") -> "Jet":
        _check_orders(self, other)
        return Jet(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "Jet") -> "Jet":
        _check_orders(self, other)
        n = len(self.coeffs)
        out = [0.0 + 0.0j] * n
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n - i):
                out[i + j] += a * other.coeffs[j]
        return Jet(tuple(out))

    def scale(self, c: complex) -> "Jet":
        return Jet(tuple(c * a for a in self.coeffs))

    def stretch(self, sigma: complex) -> "Jet":
        """Jet of w -> f(sigma * w): coefficient j picks up sigma^j."""
        out = []
        p = 1.0 + 0.0j
        for a in self.coeffs:
            out.append(a * p)
            p *= sigma
        return Jet(tuple(out))

    def reciprocal(self) -> "Jet":
        if self.coeffs[0] == 0:
            raise PoleError("jet reciprocal requires a non-zero constant term")
        n = len(self.coeffs)
        out = [0.0 + 0.0j] * n
        out[0] = 1.0 / self.coeffs[0]
        for j in range(1, n):
            s = 0.0 + 0.0j
            for i in range(1, j + 1):
                s += self.coeffs[i] * out[j - i]
            out[j] = -s * out[0]
        return Jet(tuple(out))

    def exp(self) -> "Jet":
        n = len(self.coeffs)
        out = [0.0 + 0.0j] * n
        out[0] = cmath.exp(self.coeffs[0])
        for j in range(1, n):
            s = 0.0 + 0.0j
            for i in range(1, j + 1):
                s += i * self.coeffs[i] * out[j - i]
            out[j] = s / j
        return Jet(tuple(out))


def _check_orders(a: Jet, b: Jet) -> None:
    if len(a.coeffs) != len(b.coeffs):
        raise DomainError("jet orders differ")


def jet_constant(c: complex, order: int) -> Jet:
    return Jet((complex(c),) + (0.0 + 0.0j,) * order)


def jet_variable(c0: complex, order: int) -> Jet:
    """Jet of w -> c0 + w."""
    if order < 1:
        return jet_constant(c0, order)
    return Jet((complex(c0), 1.0 + 0.0j) + (0.0 + 0.0j,) * (order - 1))


def jet_exp_linear(c: complex, order: int) -> Jet:
    """Jet of w -> exp(c*w): coefficients c^j / j!."""
    out = []
    p = 1.0 + 0.0j
    for j in range(order + 1):
        out.append(p)
        p *= c / (j + 1)
    return Jet(tuple(out))


def jet_of_gamma(z0: complex, order: int) -> Jet:
    """Taylor jet of Gamma(z0 + w) via exp of the log-gamma jet.

    The log-gamma jet has coefficient j = polygamma(j-1, z0)/j! for j >= 1,
    which caps the order at 10 (polygamma is tabulated through order 12).
    """
    if order > 10:
        raise DomainError("gamma jets capped at order 10")
    return jet_of_log_gamma(z0, order).exp()


def jet_of_log_gamma(z0: complex, order: int) -> Jet:
    if order > 11:
        raise DomainError("log-gamma jets capped at order 11")
    coeffs = [log_gamma(z0)]
    fact = 1.0
    for j in range(1, order + 1):
        fact *= j
        coeffs.append(polygamma(j - 1, z0) / fact)
    return Jet(tuple(coeffs))


def jet_of_reciprocal_gamma(z0: complex, order: int) -> Jet:
    """Jet of 1/Gamma(z0 + w) = exp(-log_gamma jet)."""
    if order > 10:
        raise DomainError("gamma jets capped at order 10")
    return jet_of_log_gamma(z0, order).scale(-1.0).exp()


def jet_sin(theta: Jet) -> Jet:
    """sin of a jet, via the two exponential jets."""
    i_theta = theta.scale(1j)
    return (i_theta.exp() - i_theta.scale(-1.0).exp()).scale(-0.5j)


def jet_csc(m: complex, order: int) -> Jet:
    """Jet of w -> csc(pi*(m + w)); poles at integer m."""
    m = complex(m)
    if abs(m.imag) < 1e-13 and abs(m.real - round(m.real)) < 1e-13:
        raise PoleError(f"csc(pi m) pole at integer m={m!r}")
    theta = jet_variable(m, order).scale(math.pi)
    return jet_sin(theta).reciprocal()


def closed_form_jet(ps: ParameterSet, order: int) -> Jet:
    """Jet of F(w) = a^w * pi^2 * 2^(mu+u-1) * csc(pi*(m+w)).

    Coefficient k times k! is the integer-k value of the six-fold integral.
    a^w uses the principal branch of log a.
    """
    if ps.a == 0:
        raise DomainError("a must be non-zero")
    pref = math.pi**2 * cmath.exp((ps.mu + ps.u - 1.0) * math.log(2.0))
    a_jet = jet_exp_linear(cmath.log(ps.a), order)
    return (a_jet * jet_csc(ps.m, order)).scale(pref)
