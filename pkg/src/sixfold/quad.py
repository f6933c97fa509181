"""Quadrature rules and the direct six-dimensional integration paths.

One-dimensional rules: tanh-sinh on the open unit interval (double
exponential, handles endpoint singularities), Gauss-Legendre on (-1, 1),
and generalized Gauss-Laguerre on (0, inf) with weight x^alpha e^-x.

The six-dimensional integrand, after substituting L = log(1/.) on the four
log-power axes, factors as

    Gx(x) * Gy(y) * prod_i L_i^beta_i e^-L_i * S^k,
    S = log a + log x - log y + (log Lt + log Lz - log Lp - log Lq) / 2.

``integrate_6d_tensor`` evaluates the full tensor-product quadrature sum of
that integrand; for integer k >= 0 the sum is reorganized exactly (binomial
regrouping of S^k inside the finite sum) so it runs in seconds instead of
hours.  ``integrate_6d_qmc`` is a digitally-shifted Sobol estimator with a
replicate-based standard error.
"""

from __future__ import annotations

import math
import cmath
from dataclasses import dataclass, field

import numpy as np

from .core import (
    DomainError,
    ExponentQuad,
    NonFiniteSampleError,
    ParameterSet,
    UnsupportedRegimeError,
    derive_exponents,
)
from .legendre import kernel_factor_array
from .specialfn import gamma

_MAX_LEVEL = 12
_MAX_NODES = 512
# Cap on (pi/2)*sinh(t): keeps the complementary coordinate representable.
_TS_YMAX = 345.0


@dataclass(frozen=True)
class Rule1D:
    """Nodes-and-weights rule; ``complement`` carries 1 - node for rules on
    (0, 1) so endpoint-singular kernels keep full precision near 1."""

    nodes: np.ndarray
    weights: np.ndarray
    kind: str
    alpha: float | None = None
    complement: np.ndarray | None = None

    def __post_init__(self) -> None:
        if len(self.nodes) != len(self.weights):
            raise DomainError("rule nodes/weights length mismatch")

    def apply(self, f) -> complex:
        vals = f(self.nodes) if self.complement is None else f(self.nodes, self.complement)
        return complex(np.sum(self.weights * vals))


def tanh_sinh(level: int) -> Rule1D:
    """Tanh-sinh rule on the open interval (0, 1); mesh h = 2^-level."""
    if not 1 <= level <= _MAX_LEVEL:
        raise DomainError(f"tanh_sinh level must be in [1, {_MAX_LEVEL}]")
    h = 2.0 ** (-level)
    t_max = math.asinh(2.0 * _TS_YMAX / math.pi)
    jmax = int(math.floor(t_max / h))
    t = h * np.arange(0, jmax + 1)
    y = 0.5 * math.pi * np.sinh(t)
    e2 = np.exp(-2.0 * y)
    hi = 1.0 / (1.0 + e2)          # node for +t
    lo = e2 / (1.0 + e2)           # node for -t, and complement for +t
    sech2 = 4.0 * e2 / (1.0 + e2) ** 2
    w = h * (0.25 * math.pi) * np.cosh(t) * sech2

    nodes = np.concatenate([lo[:0:-1], hi])
    comp = np.concatenate([hi[:0:-1], lo])
    weights = np.concatenate([w[:0:-1], w])
    return Rule1D(nodes=nodes, weights=weights, kind="tanh_sinh", complement=comp)


def gauss_legendre(n: int) -> Rule1D:
    """Gauss-Legendre rule on (-1, 1)."""
    if not 1 <= n <= _MAX_NODES:
        raise DomainError(f"gauss_legendre n must be in [1, {_MAX_NODES}]")
    x, w = np.polynomial.legendre.leggauss(n)
    return Rule1D(nodes=x, weights=w, kind="gauss_legendre")


def gauss_laguerre(n: int, alpha: float = 0.0) -> Rule1D:
    """Generalized Gauss-Laguerre rule: integrates f against x^alpha e^-x.

    Golub-Welsch on the Jacobi matrix; weights normalized so the rule
    applied to f = 1 returns Gamma(alpha + 1).
    """
    if not 1 <= n <= _MAX_NODES:
        raise DomainError(f"gauss_laguerre n must be in [1, {_MAX_NODES}]")
    if alpha <= -1.0:
        raise DomainError(f"gauss_laguerre needs alpha > -1, got {alpha}")
    i = np.arange(n)
    diag = 2.0 * i + alpha + 1.0
    off = np.sqrt((i[1:]) * (i[1:] + alpha))
    jac = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
    evals, evecs = np.linalg.eigh(jac)
    mass = gamma(alpha + 1.0).real
    weights = mass * evecs[0, :] ** 2
    return Rule1D(nodes=evals, weights=weights, kind="gauss_laguerre", alpha=float(alpha))


def log_axis_rule(alpha: float, n: int = 32, level: int = 5) -> Rule1D:
    """Composite rule for ∫_0^inf f(L) L^alpha e^-L dL with log-singular f.

    Plain Gauss-Laguerre is polynomially exact but converges like a low
    power of 1/n once f carries the ln^r L factors the coupling kernel
    produces (measured ~n^(-1/4) at alpha = -3/4).  This rule folds the
    weight explicitly: a tanh-sinh panel on (0, 1] soaks up the
    L^alpha ln^r L endpoint, and a shifted Gauss-Laguerre handles [1, inf)
    where everything is smooth.  Weights stay positive.
    """
    if alpha <= -1.0:
        raise DomainError(f"log_axis_rule needs alpha > -1, got {alpha}")
    ts = tanh_sinh(level)
    lag = gauss_laguerre(n, 0.0)
    nodes = np.concatenate([ts.nodes, 1.0 + lag.nodes])
    weights = np.concatenate(
        [
            ts.weights * ts.nodes**alpha * np.exp(-ts.nodes),
            lag.weights * (1.0 + lag.nodes) ** alpha * math.exp(-1.0),
        ]
    )
    keep = weights > 0.0  # drop panel nodes whose folded weight underflowed
    return Rule1D(
        nodes=nodes[keep], weights=weights[keep], kind="de_laguerre", alpha=float(alpha)
    )


# ----------------------------------------------------------------------
# Sobol points with digital shift
# ----------------------------------------------------------------------

_SOBOL_BITS = 32
# (s, a, m_i) per dimension beyond the first (van der Corput) dimension.
_SOBOL_PRIMITIVE = (
    (1, 0, (1,)),
    (2, 1, (1, 3)),
    (3, 1, (1, 3, 1)),
    (3, 2, (1, 1, 1)),
    (4, 1, (1, 1, 3, 3)),
)


def _direction_numbers(dim: int) -> np.ndarray:
    """Direction numbers, shape (32, dim), as uint64 holding 32-bit values."""
    if not 1 <= dim <= len(_SOBOL_PRIMITIVE) + 1:
        raise DomainError(f"Sobol generator tabulated for dimensions 1..6, got {dim}")
    v = np.zeros((_SOBOL_BITS, dim), dtype=np.uint64)
    for j in range(_SOBOL_BITS):
        v[j, 0] = 1 << (_SOBOL_BITS - 1 - j)
    for d in range(1, dim):
        s, a, m = _SOBOL_PRIMITIVE[d - 1]
        vd = [0] * _SOBOL_BITS
        for j in range(_SOBOL_BITS):
            if j < s:
                vd[j] = m[j] << (_SOBOL_BITS - 1 - j)
            else:
                val = vd[j - s] ^ (vd[j - s] >> s)
                for k in range(1, s):
                    if (a >> (s - 1 - k)) & 1:
                        val ^= vd[j - k]
                vd[j] = val
        v[:, d] = vd
    return v


def sobol_points(count: int, dim: int = 6) -> np.ndarray:
    """First ``count`` points of the Sobol sequence (unshifted), as uint64
    integers in [0, 2^32); index 0 is the zero point."""
    v = _direction_numbers(dim)
    if count < 1:
        raise DomainError("count must be positive")
    out = np.zeros((count, dim), dtype=np.uint64)
    if count == 1:
        return out
    idx = np.arange(1, count, dtype=np.uint64)
    low = (idx & (~idx + np.uint64(1))).astype(np.float64)
    ctz = np.frexp(low)[1] - 1  # exact for powers of two
    steps = v[ctz, :]
    out[1:] = np.bitwise_xor.accumulate(steps, axis=0)
    return out


_M64 = (1 << 64) - 1


def _splitmix64_stream(seed: int, n: int) -> list[int]:
    state = seed & _M64
    out = []
    for _ in range(n):
        state = (state + 0x9E3779B97F4A7C15) & _M64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
        out.append(z ^ (z >> 31))
    return out


@dataclass(frozen=True)
class QmcSpec:
    """Sobol sampling plan: 6 dimensions, power-of-two count, seeded shifts."""

    count: int
    shift_seed: int = 0
    dimension: int = 6
    replicates: int = 8

    def __post_init__(self) -> None:
        if self.dimension != 6:
            raise DomainError("QmcSpec dimension must be 6")
        if self.count < 1024 or self.count & (self.count - 1) != 0:
            raise DomainError("QmcSpec count must be a power of two >= 2^10")
        if self.replicates < 2:
            raise DomainError("need at least 2 replicates for a standard error")


# ----------------------------------------------------------------------
# The transformed six-dimensional integrand
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class Integrand6D:
    """Transformed integrand on (0,1)^2 x (0,inf)^4.

    Callable at (x, y, Lp, Lq, Lt, Lz) where L = log(1/.) replaced the four
    unit-interval variables; the value includes the e^-L Jacobian factors.
    """

    ps: ParameterSet
    exq: ExponentQuad = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "exq", derive_exponents(self.ps))

    # -- separable pieces -------------------------------------------------

    def x_factor(self, x: np.ndarray, one_minus_x: np.ndarray | None = None) -> np.ndarray:
        ps = self.ps
        return np.exp((ps.m - 1.0) * np.log(x)) * kernel_factor_array(ps.v, ps.u, x, one_minus_x)

    def y_factor(self, y: np.ndarray, one_minus_y: np.ndarray | None = None) -> np.ndarray:
        ps = self.ps
        return np.exp(-ps.m * np.log(y)) * kernel_factor_array(ps.nu, ps.mu, y, one_minus_y)

    def x_kernel(self, x: np.ndarray) -> np.ndarray:
        """x factor without the x^(m-1) power (absorbed by QMC warping)."""
        return kernel_factor_array(self.ps.v, self.ps.u, x)

    def y_kernel(self, y: np.ndarray) -> np.ndarray:
        """y factor without the y^-m power (absorbed by QMC warping)."""
        return kernel_factor_array(self.ps.nu, self.ps.mu, y)

    def integer_k(self) -> int | None:
        k = self.ps.k
        if abs(k.imag) < 1e-12 and abs(k.real - round(k.real)) < 1e-12 and round(k.real) >= 0:
            return round(k.real)
        return None

    def coupling(self, s_vals: np.ndarray) -> np.ndarray:
        """S^k with principal powers; plain integer powers for integer k."""
        kk = self.integer_k()
        if kk is not None:
            return s_vals**kk
        s_complex = s_vals.astype(complex)
        if np.any(np.abs(s_complex) < 1e-300):
            raise NonFiniteSampleError("coupling log argument hit zero")
        return np.exp(self.ps.k * np.log(s_complex))

    def qmc_admissible(self) -> str | None:
        """None when the direct QMC estimator is defined; else the reason."""
        if self.integer_k() is not None:
            return None
        a = self.ps.a
        if abs(a.imag) < 1e-12 and a.real > 0:
            return (
                "non-integer k with a on the positive real axis: the coupling "
                "log vanishes inside the domain and no principal-value meaning "
                "is defined"
            )
        return None

    # -- pointwise value ---------------------------------------------------

    def __call__(self, x, y, lp, lq, lt, lz) -> np.ndarray:
        x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
        lp, lq = np.asarray(lp, dtype=float), np.asarray(lq, dtype=float)
        lt, lz = np.asarray(lt, dtype=float), np.asarray(lz, dtype=float)
        exq = self.exq
        val = self.x_factor(x) * self.y_factor(y)
        for beta, ell in ((exq.beta_p, lp), (exq.beta_q, lq), (exq.beta_t, lt), (exq.beta_z, lz)):
            val = val * np.exp(beta * np.log(ell) - ell)
        s_vals = (
            cmath.log(complex(self.ps.a))
            + np.log(x)
            - np.log(y)
            + 0.5 * (np.log(lt) + np.log(lz) - np.log(lp) - np.log(lq))
        )
        val = val * self.coupling(s_vals)
        if not np.all(np.isfinite(val)):
            bad = np.argwhere(~np.isfinite(np.asarray(val)))[:1]
            raise NonFiniteSampleError(f"non-finite integrand sample at index {bad}")
        return val


def _check_tensor_rules(f: Integrand6D, rules) -> None:
    if len(rules) != 6:
        raise DomainError("integrate_6d_tensor needs one rule per axis (x, y, p, q, t, z)")
    for axis, rule in zip(("x", "y"), rules[:2]):
        if rule.kind != "tanh_sinh":
            raise DomainError(f"axis {axis} must use a tanh_sinh rule")
    betas = (f.exq.beta_p, f.exq.beta_q, f.exq.beta_t, f.exq.beta_z)
    for name, rule, beta in zip(("p", "q", "t", "z"), rules[2:], betas):
        if rule.kind not in ("gauss_laguerre", "de_laguerre"):
            raise DomainError(f"axis {name} must use a gauss_laguerre or de_laguerre rule")
        if abs(rule.alpha - beta.real) > 1e-12:
            raise DomainError(
                f"axis {name}: rule alpha {rule.alpha} != Re(beta) {beta.real}"
            )


def integrate_6d_tensor(f: Integrand6D, rules) -> complex:
    """Full tensor-product quadrature of the transformed integrand.

    Requires integer k >= 0.  The tensor sum is evaluated exactly as
    written; the only reorganization is an exact binomial regrouping of the
    coupling power inside the finite sum, which leaves the result identical
    to brute-force enumeration up to rounding.
    """
    kk = f.integer_k()
    if kk is None:
        raise UnsupportedRegimeError("tensor path requires integer k >= 0")
    _check_tensor_rules(f, rules)
    rx, ry, rp, rq, rt, rz = rules

    ax = rx.weights * f.x_factor(rx.nodes, rx.complement)
    ay = ry.weights * f.y_factor(ry.nodes, ry.complement)
    lnx = np.log(rx.nodes)
    lny = np.log(ry.nodes)

    betas = (f.exq.beta_p, f.exq.beta_q, f.exq.beta_t, f.exq.beta_z)
    signs = (-0.5, -0.5, 0.5, 0.5)
    # Normalized log-moments per Laguerre axis: m_hat[r] = sum w L^(i Im b)
    # (sign*ln L)^r / r!; their polynomial convolution gives the joint
    # moments of the axis sum.
    mhat = []
    for rule, beta, sign in zip((rp, rq, rt, rz), betas, signs):
        lam = sign * np.log(rule.nodes)
        g = rule.weights.astype(complex)
        if beta.imag != 0.0:
            g = g * np.exp(1j * beta.imag * np.log(rule.nodes))
        vec = np.empty(kk + 1, dtype=complex)
        powl = np.ones_like(lam)
        fact = 1.0
        for r in range(kk + 1):
            if r > 0:
                powl = powl * lam
                fact *= r
            vec[r] = np.sum(g * powl) / fact
        mhat.append(vec)
    joint = mhat[0]
    for vec in mhat[1:]:
        joint = np.convolve(joint, vec)[: kk + 1]
    cmoments = joint * np.array([math.factorial(r) for r in range(kk + 1)])

    c0 = cmath.log(complex(f.ps.a)) + lnx[:, None] - lny[None, :]
    acc = np.zeros(c0.shape, dtype=complex)
    for r in range(kk + 1):
        acc += math.comb(kk, r) * cmoments[r] * c0 ** (kk - r)
    total = ax @ acc @ ay
    if not (math.isfinite(total.real) and math.isfinite(total.imag)):
        raise NonFiniteSampleError("tensor quadrature produced a non-finite value")
    return complex(total)


def integrate_6d_brute(f: Integrand6D, rules, block: int = 1 << 18) -> complex:
    """Literal tensor-sum enumeration (for validating the fast path).

    O(prod n_i) work; keep the rules tiny.
    """
    kk = f.integer_k()
    if kk is None:
        raise UnsupportedRegimeError("tensor path requires integer k >= 0")
    _check_tensor_rules(f, rules)
    rx, ry, rp, rq, rt, rz = rules
    ax = rx.weights * f.x_factor(rx.nodes, rx.complement)
    ay = ry.weights * f.y_factor(ry.nodes, ry.complement)
    lna = cmath.log(complex(f.ps.a))
    betas = (f.exq.beta_p, f.exq.beta_q, f.exq.beta_t, f.exq.beta_z)

    gp, gq, gt, gz = (
        rule.weights * np.exp(1j * beta.imag * np.log(rule.nodes))
        for rule, beta in zip((rp, rq, rt, rz), betas)
    )
    lp, lq, lt, lz = (np.log(r.nodes) for r in (rp, rq, rt, rz))
    w4 = (
        gp[:, None, None, None]
        * gq[None, :, None, None]
        * gt[None, None, :, None]
        * gz[None, None, None, :]
    )
    t4 = 0.5 * (
        -lp[:, None, None, None]
        - lq[None, :, None, None]
        + lt[None, None, :, None]
        + lz[None, None, None, :]
    )
    total = 0.0 + 0.0j
    for i, wx in enumerate(ax):
        for j, wy in enumerate(ay):
            s_vals = lna + np.log(rx.nodes[i]) - np.log(ry.nodes[j]) + t4
            total += wx * wy * np.sum(w4 * s_vals**kk)
    return complex(total)


def integrate_6d_qmc(f: Integrand6D, spec: QmcSpec) -> tuple[complex, float]:
    """Digitally-shifted Sobol estimate of the transformed integral.

    Unit-cube mapping: the x and y samples are power-warped (x = u^(1/Re m),
    y = u^(1/(1-Re m))) so the endpoint powers x^(m-1), y^-m are absorbed by
    the sampling density; the four log-axis variables use L = -log(u)
    composed with a head warp L = T^(1/(1+Re beta)) for T <= 1 that absorbs
    the L^beta singularity.  Without the warps the estimator has unbounded
    variance and its replicate scatter understates the error; with them the
    weight is bounded up to logarithms.  The value is the mean of
    ``spec.replicates`` digitally shifted replicates, the standard error
    their scatter; bit-for-bit reproducible for a fixed spec.
    """
    reason = f.qmc_admissible()
    if reason is not None:
        raise UnsupportedRegimeError(reason)
    base = sobol_points(spec.count, spec.dimension)
    shifts = _splitmix64_stream(spec.shift_seed, spec.replicates * spec.dimension)
    exq = f.exq
    ps = f.ps
    lna = cmath.log(complex(ps.a))
    px = 1.0 / ps.m.real
    py = 1.0 / (1.0 - ps.m.real)
    betas = (exq.beta_p, exq.beta_q, exq.beta_t, exq.beta_z)
    heads = tuple(1.0 / (1.0 + b.real) for b in betas)

    rep_means: list[complex] = []
    scale = 2.0**-_SOBOL_BITS
    block = 1 << 17
    for r in range(spec.replicates):
        shift = np.array(
            [s >> (64 - _SOBOL_BITS) for s in shifts[r * 6 : r * 6 + 6]], dtype=np.uint64
        )
        sums: list[complex] = []
        for start in range(0, spec.count, block):
            pts = np.bitwise_xor(base[start : start + block], shift[None, :])
            u = (pts.astype(np.float64) + 0.5) * scale
            lnu_x, lnu_y = np.log(u[:, 0]), np.log(u[:, 1])
            x = np.exp(px * lnu_x)
            y = np.exp(py * lnu_y)
            # x^(m-1) dx and y^-m dy with their warp Jacobians, in log form;
            # for real m both collapse to the constants px and py.
            vals = (
                px * np.exp((ps.m * px - 1.0) * lnu_x)
                * py * np.exp(((1.0 - ps.m) * py - 1.0) * lnu_y)
                * f.x_kernel(x) * f.y_kernel(y)
            ).astype(complex)
            ln_ell = []
            for i, (beta, c) in enumerate(zip(betas, heads)):
                t_exp = -np.log(u[:, 2 + i])
                head = t_exp <= 1.0
                ell = np.where(head, np.exp(c * np.log(t_exp)), t_exp)
                jac = np.where(head, c * np.exp((c - 1.0) * np.log(t_exp)), 1.0)
                lell = np.log(ell)
                ln_ell.append(lell)
                vals = vals * jac * np.exp(beta * lell - ell + t_exp)
            s_vals = lna + px * lnu_x - py * lnu_y + 0.5 * (
                ln_ell[2] + ln_ell[3] - ln_ell[0] - ln_ell[1]
            )
            vals = vals * f.coupling(s_vals)
            if not np.all(np.isfinite(vals)):
                bad = int(np.argwhere(~np.isfinite(vals))[0][0]) + start
                raise NonFiniteSampleError(f"non-finite QMC sample at point {bad}")
            sums.append(complex(np.sum(vals)))
        rep_means.append(
            complex(math.fsum(s.real for s in sums), math.fsum(s.imag for s in sums))
            / spec.count
        )

    mean = sum(rep_means) / len(rep_means)
    var = sum(abs(m - mean) ** 2 for m in rep_means) / (len(rep_means) - 1)
    stderr = math.sqrt(var / len(rep_means))
    return mean, stderr
