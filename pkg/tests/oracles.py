"""Independent oracles used to fix expected test values.

Each oracle deliberately avoids the algorithm used by the implementation it
checks: Stirling/recurrence instead of Lanczos for gamma, partial sums with
tail bounds instead of Euler-Maclaurin for zeta values, Abel summation for
divergent alternating series, the Laplace integral for Legendre functions,
central finite differences for jet coefficients.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

# 50-term Stirling series coefficients B_2j / (2j (2j-1)) as exact fractions
# of the tabulated Bernoulli numbers; generated on the fly with Fraction so
# the oracle does not share the implementation's float table.
from fractions import Fraction


def _bernoulli_fractions(count: int) -> list[Fraction]:
    # Akiyama-Tanigawa algorithm, exact rationals.
    out = []
    a = []
    for m in range(2 * count + 1):
        a.append(Fraction(1, m + 1))
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return out


_BERN = _bernoulli_fractions(50)  # B_0 .. B_100


def stirling_log_gamma(z: complex, terms: int = 50, shift: int = 40) -> complex:
    """High-order Stirling/recurrence oracle for log gamma.

    Shifts z far to the right, applies the Stirling asymptotic series with
    ``terms`` Bernoulli terms, and removes the shift with principal logs.
    """
    z = complex(z)
    acc = 0.0 + 0.0j
    for j in range(shift):
        acc += cmath.log(z + j)
    w = z + shift
    series = 0.0 + 0.0j
    winv2 = 1.0 / (w * w)
    power = 1.0 / w
    for j in range(1, terms + 1):
        b = _BERN[2 * j]
        series += float(b) / (2 * j * (2 * j - 1)) * power
        power *= winv2
    return (
        (w - 0.5) * cmath.log(w)
        - w
        + 0.5 * math.log(2.0 * math.pi)
        + series
        - acc
    )


def stirling_gamma(z: complex) -> complex:
    return cmath.exp(stirling_log_gamma(z))


def zeta_partial(s: float, terms: int, v: float = 1.0) -> tuple[float, float]:
    """Partial sum of sum (v+n)^-s with an integral tail bound (s > 1)."""
    total = math.fsum((v + n) ** -s for n in range(terms))
    tail_hi = (v + terms - 1) ** (1.0 - s) / (s - 1.0)
    return total, tail_hi


def alternating_sum(f, terms: int) -> float:
    """sum (-1)^n f(n), f monotone decreasing -> error < |f(terms)|."""
    return math.fsum((-1.0) ** n * f(n) for n in range(terms))


def abel_sum_alternating(f, xs=(0.9, 0.95, 0.975, 0.9875), degree: int = 3) -> float:
    """Abel summation of sum (-1)^n f(n): evaluate at x -> 1-, extrapolate.

    Polynomial extrapolation in (1-x); works for polynomially growing f.
    """
    vals = []
    for x in xs:
        total = 0.0
        power = 1.0
        n = 0
        while True:
            term = power * f(n)
            total += term
            n += 1
            power *= -x
            if abs(power) * abs(f(n)) < 1e-16 and n > 50:
                break
        vals.append(total)
    coeffs = np.polyfit([1.0 - x for x in xs], vals, degree)
    return float(coeffs[-1])


def brute_lerch_unit(z: complex, s: complex, v: complex, terms: int = 1_000_000) -> complex:
    """Brute partial sums of Phi on the unit circle with Richardson-style
    averaging of the oscillating tail (Cesaro over one period block)."""
    n = np.arange(terms, dtype=float)
    vals = np.exp(n * cmath.log(z).imag * 1j) * np.exp(-s * np.log(v + n))
    csum = np.cumsum(vals)
    # average the partial sums over the last block to damp the oscillation
    block = csum[-20000:]
    return complex(block.mean())


def laplace_legendre(v: float, x: float, n: int = 64) -> float:
    """Laplace integral P_v(x) = (1/pi) int_0^pi (x + i sqrt(1-x^2) cos t)^v dt."""
    nodes, weights = np.polynomial.legendre.leggauss(n)
    t = 0.5 * math.pi * (nodes + 1.0)
    w = 0.5 * math.pi * weights
    base = x + 1j * math.sqrt(1.0 - x * x) * np.cos(t)
    vals = np.exp(v * np.log(base))
    return float(np.sum(w * vals).real / math.pi)


def central_derivative(f, order: int, h) -> complex:
    if order == 1:
        return (f(h) - f(-h)) / (2.0 * h)
    if order == 2:
        return (f(h) - 2.0 * f(0.0 * h) + f(-h)) / h**2
    if order == 3:
        return (f(2 * h) - 2 * f(h) + 2 * f(-h) - f(-2 * h)) / (2.0 * h**3)
    if order == 4:
        return (f(2 * h) - 4 * f(h) + 6 * f(0.0 * h) - 4 * f(-h) + f(-2 * h)) / h**4
    raise ValueError(order)


def richardson_derivative(f, order: int, h: float = 1e-3) -> complex:
    """Central differences at h, h/2, h/4 with two Richardson levels.

    The step is carried as an extended-precision scalar: an ``f`` built on
    numpy scalar functions then evaluates in extended precision too, which
    the 3rd/4th-order stencils need to beat double-rounding noise.
    """
    hw = np.clongdouble(h)
    d1 = central_derivative(f, order, hw)
    d2 = central_derivative(f, order, hw / 2.0)
    d3 = central_derivative(f, order, hw / 4.0)
    r1 = (4.0 * d2 - d1) / 3.0
    r2 = (4.0 * d3 - d2) / 3.0
    return complex((16.0 * r2 - r1) / 15.0)


def closed_form_scalar(ps) -> "callable":
    """Extended-precision evaluator of the collapsed-product scalar
    a^w pi^2 2^(mu+u-1) / sin(pi (m+w)) for real parameter sets."""
    pi_ld = np.clongdouble(np.pi)
    pref = pi_ld**2 * np.exp((np.clongdouble(ps.mu.real) + ps.u.real - 1.0) * np.log(np.clongdouble(2.0)))
    ln_a = np.log(np.clongdouble(ps.a.real))
    m_ld = np.clongdouble(ps.m.real)

    def f(w):
        return pref * np.exp(w * ln_a) / np.sin(pi_ld * (m_ld + w))

    return f


def tanh_sinh_01(f, level: int = 9) -> float:
    """Self-contained tanh-sinh quadrature over (0,1) for real integrands.

    ``f(x, one_minus_x)`` receives the complementary coordinate exactly so
    kernels singular at either endpoint keep full precision.
    """
    h = 2.0 ** (-level)
    total = 0.0
    j = 0
    while True:
        t = j * h
        y = 0.5 * math.pi * math.sinh(t)
        if y > 300.0:
            break
        e2 = math.exp(-2.0 * y)
        hi = 1.0 / (1.0 + e2)
        lo = e2 / (1.0 + e2)
        w = h * 0.25 * math.pi * math.cosh(t) * 4.0 * e2 / (1.0 + e2) ** 2
        if j == 0:
            total += w * f(hi, lo)
        else:
            total += w * (f(hi, lo) + f(lo, hi))
        j += 1
    return total
