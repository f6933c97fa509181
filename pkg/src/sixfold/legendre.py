"""Associated Legendre functions of the first kind on (0, 1).

Complex degree and order are supported through the Gauss hypergeometric
representation

    P_v^u(x) = ((1+x)/(1-x))^(u/2) / Gamma(1-u) * 2F1(-v, v+1; 1-u; (1-x)/2)

with principal powers of the positive base (1+x)/(1-x).  Positive integer
orders, where 1/Gamma(1-u) vanishes against a pole of the series, go
through an order recurrence instead; its seeds carry the Condon-Shortley
phase, consistent with the hypergeometric limit.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .core import ConvergenceError, DomainError, PoleError
from .specialfn import rgamma

_MAX_TERMS = 100_000


def hyp2f1(a: complex, b: complex, c: complex, x: float) -> complex:
    """Gauss series sum of 2F1(a, b; c; x) for real x in [0, 1/2].

    Truncates once three consecutive terms fall below 1e-17 of the partial
    sum.  c at a non-positive integer raises unless the series terminates
    first (a or b a non-positive integer of smaller magnitude).
    """
    if not 0.0 <= x <= 0.5 + 1e-15:
        raise DomainError(f"hyp2f1 implemented for x in [0, 1/2], got {x}")
    a = complex(a)
    b = complex(b)
    c = complex(c)

    c_pole = abs(c.imag) < 1e-13 and abs(c.real - round(c.real)) < 1e-13 and round(c.real) <= 0

    # Terminating series (a or b a non-positive integer): the alternating
    # finite sum can cancel down by ~|max term| / |sum|.  With all-integer
    # parameters the sum is rational in x, so do it exactly; otherwise
    # accumulate in extended precision.
    wide = any(
        abs(p.imag) < 1e-13 and abs(p.real - round(p.real)) < 1e-13 and round(p.real) <= 0
        for p in (a, b)
    )
    if wide and all(
        abs(p.imag) < 1e-13 and abs(p.real - round(p.real)) < 1e-13 for p in (a, b, c)
    ):
        return _hyp2f1_exact_terminating(round(a.real), round(b.real), round(c.real), x)
    one = np.clongdouble(1.0) if wide else 1.0 + 0.0j
    xw = np.clongdouble(x) if wide else x

    total = one
    term = one
    small = 0
    for n in range(_MAX_TERMS):
        an, bn, cn = a + n, b + n, c + n
        if an == 0 or bn == 0:
            return complex(total)  # terminating series
        if c_pole and abs(cn) < 1e-13:
            raise PoleError(f"hyp2f1 pole: c={c!r} hits a non-positive integer")
        term = term * (an * bn) / (cn * (n + 1.0)) * xw
        total = total + term
        if abs(term) < 1e-17 * abs(total):
            small += 1
            if small >= 3:
                return complex(total)
        else:
            small = 0
    raise ConvergenceError("hyp2f1 did not converge within 1e5 terms")


def _hyp2f1_exact_terminating(a: int, b: int, c: int, x: float) -> complex:
    """Exact rational evaluation of a terminating 2F1 with integer
    parameters; x enters as the exact binary rational it already is."""
    from fractions import Fraction

    w = Fraction(x)
    total = Fraction(1)
    term = Fraction(1)
    n = 0
    while a + n != 0 and b + n != 0:
        if c + n == 0:
            raise PoleError(f"hyp2f1 pole: c={c} hits a non-positive integer")
        term *= Fraction((a + n) * (b + n), (c + n) * (n + 1)) * w
        total += term
        n += 1
    return complex(float(total))


def hyp2f1_array(a: complex, b: complex, c: complex, x: np.ndarray) -> np.ndarray:
    """Vectorized Gauss series over an array of x in [0, 1/2]."""
    x = np.asarray(x, dtype=float)
    if x.size and (x.min() < 0.0 or x.max() > 0.5 + 1e-15):
        raise DomainError("hyp2f1_array needs x in [0, 1/2]")
    a = complex(a)
    b = complex(b)
    c = complex(c)
    total = np.ones(x.shape, dtype=complex)
    term = np.ones(x.shape, dtype=complex)
    small = 0
    for n in range(_MAX_TERMS):
        an, bn, cn = a + n, b + n, c + n
        if an == 0 or bn == 0:
            return total
        if abs(cn) < 1e-13:
            raise PoleError(f"hyp2f1 pole: c={c!r} hits a non-positive integer")
        term *= (an * bn / (cn * (n + 1.0))) * x
        if np.all(np.abs(term) < 1e-17 * np.abs(total) + 1e-300):
            small += 1
            if small >= 3:
                return total + term
        else:
            small = 0
        total += term
    raise ConvergenceError("hyp2f1_array did not converge within 1e5 terms")


def _positive_int_order(u: complex) -> int | None:
    if abs(u.imag) < 1e-12 and abs(u.real - round(u.real)) < 1e-12 and round(u.real) >= 1:
        return round(u.real)
    return None


def assoc_legendre_p(v: complex, u: complex, x: float) -> complex:
    """P_v^u(x) for complex degree/order and real x in (0, 1)."""
    if not 0.0 < x < 1.0:
        raise DomainError(f"assoc_legendre_p needs x in (0,1), got {x}")
    v = complex(v)
    u = complex(u)
    mo = _positive_int_order(u)
    w = (1.0 - x) / 2.0
    if mo is None:
        pref = cmath.exp(0.5 * u * math.log((1.0 + x) / (1.0 - x)))
        return pref * rgamma(1.0 - u) * hyp2f1(-v, v + 1.0, 1.0 - u, w)
    # Integer order >= 1: recurrence in the order from hypergeometric seeds.
    s = math.sqrt((1.0 - x) * (1.0 + x))
    p0 = hyp2f1(-v, v + 1.0, 1.0, w)
    if mo == 0:
        return p0
    p1 = -s * (v * (v + 1.0) / 2.0) * hyp2f1(1.0 - v, v + 2.0, 2.0, w)
    if mo == 1:
        return p1
    for m in range(1, mo):
        p2 = -2.0 * m * x / s * p1 - (v + m) * (v - m + 1.0) * p0
        p0, p1 = p1, p2
    return p1


def kernel_factor(v: complex, u: complex, x: float, one_minus_x: float | None = None) -> complex:
    """(1 - x^2)^(-u/2) * P_v^u(x) - the form the integral kernel uses.

    For non-integer order this collapses to
    (1-x)^(-u) * 2F1(-v, v+1; 1-u; (1-x)/2) / Gamma(1-u),
    which stays finite and accurate at both endpoints.  Pass one_minus_x
    when 1-x is known to more digits than x itself.
    """
    omx = (1.0 - x) if one_minus_x is None else one_minus_x
    if omx <= 0.0 or x <= 0.0:
        raise DomainError("kernel_factor needs x in (0,1)")
    v = complex(v)
    u = complex(u)
    mo = _positive_int_order(u)
    if mo is None:
        return cmath.exp(-u * math.log(omx)) * rgamma(1.0 - u) * hyp2f1(-v, v + 1.0, 1.0 - u, omx / 2.0)
    p = assoc_legendre_p(v, u, x)
    return p * cmath.exp(-0.5 * u * math.log(omx * (1.0 + x)))


def kernel_factor_array(
    v: complex, u: complex, x: np.ndarray, one_minus_x: np.ndarray | None = None
) -> np.ndarray:
    """Vectorized kernel_factor over node arrays."""
    x = np.asarray(x, dtype=float)
    omx = (1.0 - x) if one_minus_x is None else np.asarray(one_minus_x, dtype=float)
    v = complex(v)
    u = complex(u)
    mo = _positive_int_order(u)
    if mo is None:
        f = hyp2f1_array(-v, v + 1.0, 1.0 - u, omx / 2.0)
        return np.exp(-u * np.log(omx)) * rgamma(1.0 - u) * f
    # Integer order: order recurrence, vectorized.
    s = np.sqrt(omx * (1.0 + x))
    p0 = hyp2f1_array(-v, v + 1.0, 1.0, omx / 2.0)
    p1 = -s * (v * (v + 1.0) / 2.0) * hyp2f1_array(1.0 - v, v + 2.0, 2.0, omx / 2.0)
    p = p0 if mo == 0 else p1
    for m in range(1, mo):
        p = -2.0 * m * x / s * p1 - (v + m) * (v - m + 1.0) * p0
        p0, p1 = p1, p
    return p * np.exp(-0.5 * u * np.log(omx * (1.0 + x)))


def legendre_recurrence(nmax: int, mo: int, x: float) -> list[float]:
    """P_n^mo(x) for n = mo..nmax, integer parameters, by the standard
    three-term degree recurrence (Condon-Shortley phase).  Oracle path."""
    if not 0.0 < x < 1.0:
        raise DomainError(f"legendre_recurrence needs x in (0,1), got {x}")
    if not 0 <= mo <= nmax <= 200:
        raise DomainError("legendre_recurrence needs 0 <= mo <= nmax <= 200")
    s = math.sqrt(1.0 - x * x)
    p_mm = 1.0
    for m in range(1, mo + 1):
        p_mm *= -(2.0 * m - 1.0) * s
    out = [p_mm]
    if nmax == mo:
        return out
    p_prev, p_cur = p_mm, x * (2.0 * mo + 1.0) * p_mm
    out.append(p_cur)
    for n in range(mo + 2, nmax + 1):
        p_next = ((2.0 * n - 1.0) * x * p_cur - (n + mo - 1.0) * p_prev) / (n - mo)
        out.append(p_next)
        p_prev, p_cur = p_cur, p_next
    return out
