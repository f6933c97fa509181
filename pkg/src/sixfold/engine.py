"""Identity catalog and the multi-path verifier.

Paths through the identity family:

* ``jet``     - k! times coefficient k of the collapsed product jet
                a^w pi^2 2^(mu+u-1) csc(pi(m+w))  (integer k >= 0).
* ``moment``  - the same coefficient read off the uncollapsed product of
                the two Mellin factors and four Gamma moments; numerically
                independent of the csc collapse.
* ``tensor``  - direct six-dimensional tensor quadrature.
* ``qmc``     - digitally-shifted Sobol estimate of the same integral.
* ``closed``  - the Lerch-transcendent right-hand side.
* ``special`` - the per-case elementary closed form (zeta split, digamma,
                arctanh difference, log 2, Apery, ...).
* ``limit``   - Richardson extrapolation in k for the removable-point
                cases, k -> -1 and the direct k = -3 evaluation.

Every path is admissibility-checked per case; a requested inadmissible
path is reported as such, never silently dropped.
"""

from __future__ import annotations

import cmath
import math
import time
from dataclasses import dataclass, field

from .core import (
    DomainError,
    ParameterSet,
    PoleError,
    Tolerances,
    derive_exponents,
    parameter_warnings,
    principal_power,
    validate_parameters,
)
from .jets import (
    Jet,
    closed_form_jet,
    jet_exp_linear,
    jet_of_gamma,
    jet_of_reciprocal_gamma,
)
from .lerch import lerch_minus_one_split, lerch_phi
from .mellin import mellin_legendre_closed
from .quad import Integrand6D, QmcSpec, integrate_6d_qmc, integrate_6d_tensor, log_axis_rule, tanh_sinh
from .specialfn import digamma, riemann_zeta

_LN2 = math.log(2.0)
_LNPI = math.log(math.pi)

PATH_NAMES = ("jet", "moment", "tensor", "qmc", "closed", "special", "limit")


def _pin_int_k(ps: ParameterSet) -> int:
    k = ps.k
    if abs(k.imag) > 1e-12 or abs(k.real - round(k.real)) > 1e-12:
        raise DomainError(f"integer-k path needs integer k, got {k!r}")
    kk = round(k.real)
    if not 0 <= kk <= 10:
        raise DomainError(f"integer-k path needs 0 <= k <= 10, got {kk}")
    return kk


def lhs_jet(ps: ParameterSet, k: int | None = None) -> complex:
    """k! * coefficient k of the collapsed closed-form jet."""
    kk = _pin_int_k(ps if k is None else ps.replace(k=k))
    jet = closed_form_jet(ps, kk)
    return math.factorial(kk) * jet[kk]


def _mellin_jet(s0: complex, sigma: float, u: complex, v: complex, order: int) -> Jet:
    """Jet of w -> M(s0 + sigma*w; u, v) from gamma jets."""
    d1 = (s0 - u + v) / 2.0 + 1.0
    d2 = (s0 - u - v + 1.0) / 2.0
    pref = math.sqrt(math.pi) * principal_power(2.0, u - s0)
    out = jet_exp_linear(-sigma * _LN2, order)
    out = out * jet_of_gamma(s0, order).stretch(sigma)
    out = out * jet_of_reciprocal_gamma(d1, order).stretch(sigma / 2.0)
    out = out * jet_of_reciprocal_gamma(d2, order).stretch(sigma / 2.0)
    return out.scale(pref)


def lhs_moment_expansion(ps: ParameterSet, k: int | None = None) -> complex:
    """k! * coefficient k of the uncollapsed factor-product jet.

    Mathematically identical to lhs_jet; exercises the reconstructed
    Mellin closed form and the gamma jets instead of the csc collapse.
    Conditioning caveat: the gamma jets are taken at the beta+1 exponents,
    so parameter sets hugging the strip boundary (some Re(beta)+1 -> 0)
    lose about k*log10(1/margin) digits on this path; see
    core.parameter_warnings.
    """
    kk = _pin_int_k(ps if k is None else ps.replace(k=k))
    exq = derive_exponents(ps)
    order = kk
    jet = jet_exp_linear(cmath.log(ps.a), order)
    jet = jet * _mellin_jet(ps.m, 1.0, ps.u, ps.v, order)
    jet = jet * _mellin_jet(1.0 - ps.m, -1.0, ps.mu, ps.nu, order)
    jet = jet * jet_of_gamma(exq.beta_t + 1.0, order).stretch(0.5)
    jet = jet * jet_of_gamma(exq.beta_z + 1.0, order).stretch(0.5)
    jet = jet * jet_of_gamma(exq.beta_p + 1.0, order).stretch(-0.5)
    jet = jet * jet_of_gamma(exq.beta_q + 1.0, order).stretch(-0.5)
    return math.factorial(kk) * jet[kk]


def lerch_third_argument(a: complex) -> complex:
    """(pi - i log a)/(2 pi), principal log; real part in (0, 1]."""
    return (math.pi - 1j * cmath.log(a)) / (2.0 * math.pi)


def rhs_theorem(ps: ParameterSet) -> complex:
    """i^(k-1) pi^(k+2) e^(i pi m) 2^(k+mu+u) Phi(e^(2 i pi m), -k, V).

    All powers principal; V = (pi - i log a)/(2 pi).
    """
    k = ps.k
    pref = cmath.exp(
        (k - 1.0) * 0.5j * math.pi
        + (k + 2.0) * _LNPI
        + 1j * math.pi * ps.m
        + (k + ps.mu + ps.u) * _LN2
    )
    z = cmath.exp(2j * math.pi * ps.m)
    return pref * lerch_phi(z, -k, lerch_third_argument(ps.a))


def product_identity_check(ps: ParameterSet) -> tuple[complex, complex]:
    """Both members of the w=0 product identity: the six-factor product and
    pi^2 2^(mu+u-1) csc(pi m)."""
    exq = derive_exponents(ps)
    lhs = (
        mellin_legendre_closed(ps.m, ps.u, ps.v)
        * mellin_legendre_closed(1.0 - ps.m, ps.mu, ps.nu)
        * _gamma1(exq.beta_t)
        * _gamma1(exq.beta_z)
        * _gamma1(exq.beta_p)
        * _gamma1(exq.beta_q)
    )
    rhs = math.pi**2 * principal_power(2.0, ps.mu + ps.u - 1.0) / cmath.sin(math.pi * ps.m)
    return lhs, rhs


def _gamma1(beta: complex) -> complex:
    from .specialfn import gamma

    return gamma(beta + 1.0)


def _catanh(z: complex) -> complex:
    return 0.5 * (cmath.log(1.0 + z) - cmath.log(1.0 - z))


# ----------------------------------------------------------------------
# Identity catalog
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityCase:
    """One catalog entry: parameter pins and admissible paths."""

    tag: str
    label: str
    constraints: str
    pins: dict[str, complex] = field(default_factory=dict)
    needs_second_exponent: bool = False
    second_exponent: complex | None = None
    paths: tuple[str, ...] = ()


CATALOG: tuple[IdentityCase, ...] = (
    IdentityCase(
        tag="theorem",
        label="general identity: six-fold integral vs Lerch closed form",
        constraints="strip inequalities on (m,u,v,mu,nu); any complex k, a != 0",
        paths=("jet", "moment", "tensor", "qmc", "closed"),
    ),
    IdentityCase(
        tag="degenerate",
        label="k = 0 case: product identity, value pi^2 2^(mu+u-1) csc(pi m)",
        constraints="k = 0",
        pins={"k": 0.0},
        paths=("jet", "moment", "tensor", "qmc", "closed", "special"),
    ),
    IdentityCase(
        tag="hurwitz_zeta_form",
        label="m = 1/2 line: two-term Hurwitz zeta split",
        constraints="m = 1/2",
        pins={"m": 0.5},
        paths=("jet", "moment", "tensor", "qmc", "closed", "special"),
    ),
    IdentityCase(
        tag="harmonic_limit",
        label="k -> -1 limit at a = -2: generalized harmonic numbers",
        constraints="k = -1, m = 1/2, a = -2",
        pins={"k": -1.0, "m": 0.5, "a": -2.0},
        paths=("qmc", "closed", "special", "limit"),
    ),
    IdentityCase(
        tag="difference_arctanh",
        label="k = -1, a = 1 difference pair: arctanh(e^(i pi m)) - arctanh(e^(i pi n))",
        constraints="k = -1, a = 1; second exponent n",
        pins={"k": -1.0, "a": 1.0},
        needs_second_exponent=True,
        paths=("closed", "special"),
    ),
    IdentityCase(
        tag="log3",
        label="difference pair at (m, n) = (1/2, 1/3): -pi log(3) 2^(mu+u-2)",
        constraints="k = -1, a = 1, m = 1/2, n = 1/3",
        pins={"k": -1.0, "a": 1.0, "m": 0.5},
        needs_second_exponent=True,
        second_exponent=1.0 / 3.0,
        paths=("closed", "special"),
    ),
    IdentityCase(
        tag="arccoth_sqrt2",
        label="difference pair at (m, n) = (1/2, 1/4): -pi arccoth(sqrt 2) 2^(mu+u-1)",
        constraints="k = -1, a = 1, m = 1/2, n = 1/4",
        pins={"k": -1.0, "a": 1.0, "m": 0.5},
        needs_second_exponent=True,
        second_exponent=0.25,
        paths=("closed", "special"),
    ),
    IdentityCase(
        tag="alt_lerch",
        label="shifted form: -i pi^(k+2) e^(i pi(k+m)/2) 2^(k+mu+u) Phi(e^(i pi m), -k, a)",
        constraints="maps to the general identity via m -> m/2, a -> e^(i pi (2a-1)); needs Re(a) in (0, 1]",
        paths=("jet", "moment", "tensor", "qmc", "closed", "special"),
    ),
    IdentityCase(
        tag="eta_zeta_line",
        label="alt form at m = a = 1: -(2^(k+1)-1) e^(i pi k/2) pi^(k+2) zeta(-k) 2^(k+mu+u)",
        constraints="m = 1, a = 1 in the alt form; k != -1",
        pins={"m": 1.0, "a": 1.0},
        paths=("jet", "moment", "tensor", "qmc", "closed", "special"),
    ),
    IdentityCase(
        tag="log2_limit",
        label="k -> -1 limit of the zeta line: -i pi log(2) 2^(mu+u-1)",
        constraints="k = -1; m = 1, a = 1 in the alt form",
        pins={"k": -1.0, "m": 1.0, "a": 1.0},
        paths=("qmc", "closed", "special", "limit"),
    ),
    IdentityCase(
        tag="apery",
        label="zeta line at k = -3: 3 i zeta(3) 2^(mu+u-5) / pi",
        constraints="k = -3; m = 1, a = 1 in the alt form",
        pins={"k": -3.0, "m": 1.0, "a": 1.0},
        paths=("qmc", "closed", "special", "limit"),
    ),
)

_CATALOG_BY_TAG = {c.tag: c for c in CATALOG}
_ALT_FORM_TAGS = ("alt_lerch", "eta_zeta_line", "log2_limit", "apery")


def catalog_case(tag: str) -> IdentityCase:
    if tag not in _CATALOG_BY_TAG:
        raise DomainError(f"unknown case tag {tag!r}; use one of {sorted(_CATALOG_BY_TAG)}")
    return _CATALOG_BY_TAG[tag]


def theorem_parameters(case: IdentityCase, ps: ParameterSet) -> ParameterSet:
    """Map case parameters onto the general-identity parameter set."""
    if case.tag in _ALT_FORM_TAGS:
        a_mapped = cmath.exp(1j * math.pi * (2.0 * ps.a - 1.0))
        return ps.replace(m=ps.m / 2.0, a=a_mapped)
    return ps


def rhs_example(case: IdentityCase | str, ps: ParameterSet, second: complex | None = None) -> complex:
    """Per-case elementary closed form."""
    if isinstance(case, str):
        case = catalog_case(case)
    tag = case.tag
    two = lambda e: principal_power(2.0, e)  # noqa: E731

    if tag == "theorem":
        return rhs_theorem(ps)
    if tag == "degenerate":
        return math.pi**2 * two(ps.mu + ps.u - 1.0) / cmath.sin(math.pi * ps.m)
    if tag == "hurwitz_zeta_form":
        vv = lerch_third_argument(ps.a)
        pref = cmath.exp(ps.k * 0.5j * math.pi + (ps.k + 2.0) * _LNPI + (ps.k + ps.mu + ps.u) * _LN2)
        return pref * two(ps.k) * _zeta_split(-ps.k, vv)
    if tag == "harmonic_limit":
        vv = lerch_third_argument(ps.a)
        return -1j * math.pi * two(ps.mu + ps.u - 2.0) * (
            digamma((vv + 1.0) / 2.0) - digamma(vv / 2.0)
        )
    if tag in ("difference_arctanh", "log3", "arccoth_sqrt2"):
        if tag == "log3":
            return -math.pi * math.log(3.0) * two(ps.mu + ps.u - 2.0)
        if tag == "arccoth_sqrt2":
            return -math.pi * math.log(1.0 + math.sqrt(2.0)) * two(ps.mu + ps.u - 1.0)
        if second is None:
            raise DomainError("difference case needs the second exponent n")
        return (
            math.pi
            * two(ps.mu + ps.u)
            * (_catanh(cmath.exp(1j * math.pi * ps.m)) - _catanh(cmath.exp(1j * math.pi * second)))
        )
    if tag == "alt_lerch":
        pref = -1j * cmath.exp(
            (ps.k + 2.0) * _LNPI + 0.5j * math.pi * (ps.k + ps.m) + (ps.k + ps.mu + ps.u) * _LN2
        )
        return pref * lerch_phi(cmath.exp(1j * math.pi * ps.m), -ps.k, ps.a)
    if tag == "eta_zeta_line":
        return _eta_line_value(ps.k, ps)
    if tag == "log2_limit":
        return -1j * math.pi * _LN2 * two(ps.mu + ps.u - 1.0)
    if tag == "apery":
        zeta3 = riemann_zeta(3.0).real
        return 3j * zeta3 * two(ps.mu + ps.u - 5.0) / math.pi
    raise DomainError(f"no closed form for case {tag!r}")


def _zeta_split(s: complex, v: complex) -> complex:
    """2^s-free split combination 2^s[zeta(s,v/2) - zeta(s,(v+1)/2)] ... the
    caller supplies the 2^k factor; this returns the bare zeta difference."""
    from .specialfn import hurwitz_zeta

    if abs(s - 1.0) < 1e-12:
        # Removable: the split equals Phi(-1, s, v) * 2^s; reuse the limit.
        return lerch_minus_one_split(s, v) * principal_power(2.0, s)
    return hurwitz_zeta(s, v / 2.0) - hurwitz_zeta(s, (v + 1.0) / 2.0)


def _eta_line_value(k: complex, ps: ParameterSet) -> complex:
    """-(2^(k+1)-1) e^(i pi k/2) pi^(k+2) zeta(-k) 2^(k+mu+u)."""
    if abs(k + 1.0) < 1e-12:
        raise PoleError("zeta line undefined at k = -1; use the limit path")
    factor = principal_power(2.0, k + 1.0) - 1.0
    return (
        -factor
        * cmath.exp(0.5j * math.pi * k + (k + 2.0) * _LNPI + (k + ps.mu + ps.u) * _LN2)
        * riemann_zeta(-k)
    )


# ----------------------------------------------------------------------
# Richardson limits in k
# ----------------------------------------------------------------------

_DEFAULT_EPS = (0.08, 0.04, 0.02, 0.01)


def rhs_limit_full(
    case: IdentityCase | str,
    ps: ParameterSet,
    eps_sequence: tuple[float, ...] = _DEFAULT_EPS,
) -> tuple[complex, float]:
    """Richardson-extrapolated limit of the case's k-family at k0.

    Symmetric +/- eps pairs kill the odd orders; Neville extrapolation in
    eps^2 does the rest.  Returns (value, error_estimate).
    """
    if isinstance(case, str):
        case = catalog_case(case)
    if case.tag in ("log2_limit", "apery"):
        family = lambda k: _eta_line_value(k, ps)  # noqa: E731
        k0 = -1.0 if case.tag == "log2_limit" else -3.0
    elif case.tag == "harmonic_limit":
        vv = lerch_third_argument(ps.a)

        def family(k: complex) -> complex:
            pref = cmath.exp(k * 0.5j * math.pi + (k + 2.0) * _LNPI + (k + ps.mu + ps.u) * _LN2)
            return pref * principal_power(2.0, k) * _zeta_split(-k, vv)

        k0 = -1.0
    else:
        raise DomainError(f"case {case.tag!r} has no limit family")

    eps = tuple(float(e) for e in eps_sequence)
    if len(eps) < 2 or any(e < 1e-5 for e in eps) or any(
        e2 >= e1 for e1, e2 in zip(eps, eps[1:])
    ):
        raise DomainError("eps sequence must be decreasing with entries >= 1e-5")

    sym = [(family(k0 + e) + family(k0 - e)) / 2.0 for e in eps]
    # Neville in eps^2.
    table = list(sym)
    prev_diag = table[0]
    est_err = math.inf
    for level in range(1, len(eps)):
        new = []
        for i in range(len(eps) - level):
            x0, x1 = eps[i] ** 2, eps[i + level] ** 2
            new.append((x0 * table[i + 1] - x1 * table[i]) / (x0 - x1))
        table = new
        err = abs(table[0] - prev_diag)
        if err > 10.0 * est_err and level > 1:
            raise DomainError("Richardson extrapolation diverged")
        est_err = err
        prev_diag = table[0]
    return table[0], est_err


def rhs_limit(case, ps: ParameterSet, eps_sequence=_DEFAULT_EPS) -> complex:
    return rhs_limit_full(case, ps, eps_sequence)[0]


# ----------------------------------------------------------------------
# Verification reports
# ----------------------------------------------------------------------


@dataclass
class PathResult:
    status: str  # "ok" | "error" | "inadmissible"
    value: complex | None = None
    err: float | None = None
    detail: str = ""
    seconds: float = 0.0


@dataclass
class VerificationReport:
    case: str
    params: ParameterSet
    second_exponent: complex | None
    tolerances: Tolerances
    paths: dict[str, PathResult]
    diffs: dict[str, dict[str, float]]
    verdict: str
    violations: list[str]
    warnings: list[str]

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def _default_tensor_rules(exq, coarse: bool = False):
    level = 4 if coarse else 5
    n = 24 if coarse else 32
    ts = tanh_sinh(level)
    return (ts, ts) + tuple(
        log_axis_rule(b.real, n=n, level=level)
        for b in (exq.beta_p, exq.beta_q, exq.beta_t, exq.beta_z)
    )


def _real_strip_parameters(ps: ParameterSet) -> bool:
    return all(
        abs(getattr(ps, name).imag) < 1e-12 for name in ("m", "u", "v", "mu", "nu")
    )


def verify(
    case: IdentityCase | str,
    ps: ParameterSet,
    tol: Tolerances = Tolerances(abs_tol=1e-12, rel_tol=1e-8),
    paths: tuple[str, ...] | None = None,
    second: complex | None = None,
    qmc_spec: QmcSpec | None = None,
    eps_sequence: tuple[float, ...] = _DEFAULT_EPS,
) -> VerificationReport:
    """Run every requested path for one case and compare pairwise.

    Verdict is "pass" iff every computed pair of path values agrees within
    tolerance (plus three times the paths' own error estimates, for the
    stochastic and discretization paths); fewer than two computed values
    leave nothing to compare and the verdict passes vacuously, with the
    per-path statuses telling the story.  Parameter-strip violations
    short-circuit to "invalid_parameters".
    """
    if isinstance(case, str):
        case = catalog_case(case)
    ps_eff = ps.replace(**case.pins) if case.pins else ps
    if case.needs_second_exponent and second is None:
        second = case.second_exponent
    requested = tuple(paths) if paths is not None else case.paths
    for p in requested:
        if p not in PATH_NAMES:
            raise DomainError(f"unknown path {p!r}; valid: {PATH_NAMES}")

    ps_thm = theorem_parameters(case, ps_eff)
    violations = validate_parameters(ps_thm)
    warnings = parameter_warnings(ps_thm)
    if 0 < ps_thm.m.real < 1 and min(ps_thm.m.real, 1.0 - ps_thm.m.real) < 0.01:
        warnings.append("m within 0.01 of the csc pole at an integer")

    results: dict[str, PathResult] = {}
    if violations:
        return VerificationReport(
            case=case.tag,
            params=ps_eff,
            second_exponent=second,
            tolerances=tol,
            paths={p: PathResult(status="error", detail="parameters invalid") for p in requested},
            diffs={},
            verdict="invalid_parameters",
            violations=violations,
            warnings=warnings,
        )

    for path in requested:
        t0 = time.perf_counter()
        try:
            reason = _admissibility(case, path, ps_eff, ps_thm)
            if reason is not None:
                results[path] = PathResult(status="inadmissible", detail=reason)
                continue
            value, err = _run_path(case, path, ps_eff, ps_thm, second, qmc_spec, eps_sequence)
            results[path] = PathResult(status="ok", value=value, err=err)
        except Exception as exc:  # pragma: no cover - defensive reporting
            results[path] = PathResult(status="error", detail=f"{type(exc).__name__}: {exc}")
        finally:
            results[path].seconds = time.perf_counter() - t0

    diffs: dict[str, dict[str, float]] = {}
    ok = [(name, r) for name, r in results.items() if r.status == "ok"]
    verdict = "pass"
    for i in range(len(ok)):
        for j in range(i + 1, len(ok)):
            (na, ra), (nb, rb) = ok[i], ok[j]
            d = abs(ra.value - rb.value)
            scale = max(abs(ra.value), abs(rb.value))
            slack = 3.0 * ((ra.err or 0.0) + (rb.err or 0.0))
            diffs[f"{na}|{nb}"] = {"abs": d, "rel": d / scale if scale else 0.0}
            if not (d <= tol.abs_tol + tol.rel_tol * scale + slack):
                verdict = "fail"
    if len(ok) < 2:
        verdict = "fail" if any(r.status == "error" for r in results.values()) else verdict
    return VerificationReport(
        case=case.tag,
        params=ps_eff,
        second_exponent=second,
        tolerances=tol,
        paths=results,
        diffs=diffs,
        verdict=verdict,
        violations=[],
        warnings=warnings,
    )


def _admissibility(
    case: IdentityCase, path: str, ps_eff: ParameterSet, ps_thm: ParameterSet
) -> str | None:
    k = ps_thm.k
    int_k = abs(k.imag) < 1e-12 and abs(k.real - round(k.real)) < 1e-12
    if path in ("jet", "moment"):
        if not (int_k and 0 <= round(k.real) <= 10):
            return "jet paths need integer k in [0, 10]"
        return None
    if path == "tensor":
        if not (int_k and round(k.real) >= 0):
            return "tensor path needs integer k >= 0"
        if not _real_strip_parameters(ps_thm):
            return "tensor path needs real strip parameters"
        if abs(ps_thm.a.imag) > 1e-12 or ps_thm.a.real <= 0:
            return "tensor path needs a > 0"
        return None
    if path == "qmc":
        if not _real_strip_parameters(ps_thm):
            return "qmc path needs real strip parameters"
        return Integrand6D(ps_thm).qmc_admissible()
    if path == "special" and case.tag == "theorem":
        return "the general case has no separate elementary form"
    if path == "limit" and case.tag not in ("log2_limit", "harmonic_limit", "apery"):
        return "no limit family for this case"
    if path in ("closed", "special", "limit"):
        return None
    return None


def _run_path(
    case: IdentityCase,
    path: str,
    ps_eff: ParameterSet,
    ps_thm: ParameterSet,
    second: complex | None,
    qmc_spec: QmcSpec | None,
    eps_sequence: tuple[float, ...],
) -> tuple[complex, float | None]:
    if path == "jet":
        return lhs_jet(ps_thm), None
    if path == "moment":
        return lhs_moment_expansion(ps_thm), None
    if path == "tensor":
        exq = derive_exponents(ps_thm)
        f = Integrand6D(ps_thm)
        fine = integrate_6d_tensor(f, _default_tensor_rules(exq))
        coarse = integrate_6d_tensor(f, _default_tensor_rules(exq, coarse=True))
        return fine, abs(fine - coarse)
    if path == "qmc":
        spec = qmc_spec or QmcSpec(count=1 << 16, shift_seed=20170)
        value, stderr = integrate_6d_qmc(Integrand6D(ps_thm), spec)
        return value, stderr
    if path == "closed":
        if case.needs_second_exponent:
            if second is None:
                raise DomainError("difference case needs the second exponent n")
            return (
                rhs_theorem(ps_thm.replace(m=second)) - rhs_theorem(ps_thm)
            ), None
        return rhs_theorem(ps_thm), None
    if path == "special":
        return rhs_example(case, ps_eff, second), None
    if path == "limit":
        return rhs_limit_full(case, ps_eff, eps_sequence)
    raise DomainError(f"unknown path {path!r}")


# ----------------------------------------------------------------------
# Serialization
# ----------------------------------------------------------------------


def _cpair(zz: complex) -> list[float]:
    return [zz.real, zz.imag]


def report_to_dict(report: VerificationReport, include_times: bool = False) -> dict:
    params = {
        name: _cpair(getattr(report.params, name))
        for name in ("k", "a", "m", "u", "v", "mu", "nu")
    }
    if report.second_exponent is not None:
        params["n"] = _cpair(report.second_exponent)
    paths = {}
    for name, res in report.paths.items():
        entry: dict = {"status": res.status}
        if res.value is not None:
            entry["value"] = _cpair(res.value)
        if res.err is not None:
            entry["err"] = res.err
        if res.detail:
            entry["detail"] = res.detail
        paths[name] = entry
    out = {
        "case": report.case,
        "params": params,
        "paths": paths,
        "diffs": report.diffs,
        "verdict": report.verdict,
        "violations": report.violations,
        "warnings": report.warnings,
        "tolerances": {"abs": report.tolerances.abs_tol, "rel": report.tolerances.rel_tol},
    }
    if include_times:
        out["times"] = {name: res.seconds for name, res in report.paths.items()}
    return out


def report_to_csv_rows(report: VerificationReport) -> list[dict]:
    rows = []
    for name, res in report.paths.items():
        rows.append(
            {
                "case": report.case,
                "path": name,
                "status": res.status,
                "value_re": "" if res.value is None else repr(res.value.real),
                "value_im": "" if res.value is None else repr(res.value.imag),
                "err": "" if res.err is None else repr(res.err),
                "verdict": report.verdict,
                "detail": res.detail,
            }
        )
    return rows
