"""Acceptance criteria, runnable as a suite (CLI selftest) or via pytest.

Each criterion function returns a CriterionResult; tolerances are pinned
here, not configurable.  Comparisons against values that can be exactly
zero use the scale-aware form |x - y| <= tol * (1 + max(|x|, |y|)).
"""

from __future__ import annotations

import cmath
import math
import random
import time
from dataclasses import dataclass

import numpy as np

from . import engine, lerch, legendre, mellin
from .core import ParameterSet, validate_parameters
from .jets import closed_form_jet
from .quad import Integrand6D, QmcSpec, integrate_6d_qmc
from .specialfn import gamma, riemann_zeta

_A2_COMBOS = ((0.0, 1.0, 0.0, 1.0), (-0.3, 1.2, -0.1, 0.9), (0.5, 0.75, -0.2, 1.0))
_A2_GRID_A = (0.5, 1.0, 1.5, math.e)
_A2_GRID_M = (0.3, 0.5, 0.7)


@dataclass
class CriterionResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _scaled_ok(x: complex, y: complex, tol: float) -> bool:
    return abs(x - y) <= tol * (1.0 + max(abs(x), abs(y)))


def _random_valid_parameters(rng: random.Random, k: complex = 0.0, a: complex = 1.0) -> ParameterSet:
    while True:
        ps = ParameterSet(
            k=k,
            a=a,
            m=rng.uniform(0.05, 0.95),
            u=rng.uniform(-2.0, 0.95),
            v=rng.uniform(0.05, 2.5),
            mu=rng.uniform(-2.0, 0.95),
            nu=rng.uniform(0.05, 2.5),
        )
        if not validate_parameters(ps):
            return ps


def criterion_a1_degenerate_product() -> CriterionResult:
    t0 = time.perf_counter()
    rng = random.Random(101)
    worst = 0.0
    for _ in range(50):
        ps = _random_valid_parameters(rng)
        lhs, rhs = engine.product_identity_check(ps)
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    ok = worst <= 1e-10
    return CriterionResult(
        "A1 degenerate product identity (50 random strips, rel 1e-10)",
        ok,
        f"worst rel {worst:.3e}",
        time.perf_counter() - t0,
    )


def _a2_grid():
    for k in range(0, 7):
        for a in _A2_GRID_A:
            for m in _A2_GRID_M:
                for (u, v, mu, nu) in _A2_COMBOS:
                    yield ParameterSet(k=k, a=a, m=m, u=u, v=v, mu=mu, nu=nu)


def criterion_a2_theorem_integer_k() -> CriterionResult:
    t0 = time.perf_counter()
    worst = 0.0
    for ps in _a2_grid():
        l = engine.lhs_jet(ps)
        r = engine.rhs_theorem(ps)
        worst = max(worst, abs(l - r) / (1.0 + abs(r)))
    ok = worst <= 1e-9
    return CriterionResult(
        "A2 jet vs Lerch closed form, k=0..6 grid (rel 1e-9)",
        ok,
        f"worst scaled diff {worst:.3e}",
        time.perf_counter() - t0,
    )


def criterion_a3_path_independence() -> CriterionResult:
    t0 = time.perf_counter()
    worst = 0.0
    for ps in _a2_grid():
        l = engine.lhs_jet(ps)
        m_val = engine.lhs_moment_expansion(ps)
        worst = max(worst, abs(l - m_val) / (1.0 + abs(l)))
    ok = worst <= 1e-9
    return CriterionResult(
        "A3 moment-product jet vs collapsed jet (rel 1e-9)",
        ok,
        f"worst scaled diff {worst:.3e}",
        time.perf_counter() - t0,
    )


def criterion_a4_direct_6d() -> CriterionResult:
    t0 = time.perf_counter()
    details = []
    ok = True
    base = ParameterSet(a=1.0, m=0.5, u=0.0, v=1.0, mu=0.0, nu=1.0)
    for k in (0, 1, 2):
        ps = base.replace(k=k)
        rep = engine.verify(
            "theorem",
            ps,
            paths=("tensor", "qmc", "closed"),
            qmc_spec=QmcSpec(count=1 << 20, shift_seed=404),
        )
        closed = rep.paths["closed"].value
        tensor = rep.paths["tensor"].value
        qmc_val = rep.paths["qmc"].value
        stderr = rep.paths["qmc"].err
        t_ok = abs(tensor - closed) <= 1e-4 * (1.0 + abs(closed))
        q_ok = abs(qmc_val - closed) <= 3.0 * stderr + 1e-9
        ok = ok and t_ok and q_ok
        details.append(
            f"k={k}: tensor diff {abs(tensor - closed):.2e}, "
            f"qmc diff {abs(qmc_val - closed):.2e} vs 3se {3*stderr:.2e}"
        )
        if k == 0:
            ok = ok and abs(closed - 4.9348022) < 1e-6
    return CriterionResult(
        "A4 direct 6-D tensor (rel 1e-4) and QMC (3 stderr), k=0,1,2",
        ok,
        "; ".join(details),
        time.perf_counter() - t0,
    )


def criterion_a5_zeta_line() -> CriterionResult:
    t0 = time.perf_counter()
    worst = 0.0
    for k in (0.5, 2.0, 3.0, 4.0):
        ps = ParameterSet(k=k, a=1.0, m=1.0, u=0.0, v=1.0, mu=0.0, nu=1.0)
        closed = engine.rhs_theorem(engine.theorem_parameters(engine.catalog_case("eta_zeta_line"), ps))
        special = engine.rhs_example("eta_zeta_line", ps)
        worst = max(worst, abs(closed - special) / (1.0 + max(abs(closed), abs(special))))
    ok = worst <= 1e-8
    return CriterionResult(
        "A5 zeta line: Lerch path vs zeta closed form, k in {1/2,2,3,4} (rel 1e-8)",
        ok,
        f"worst scaled diff {worst:.3e}",
        time.perf_counter() - t0,
    )


def criterion_a6_apery() -> CriterionResult:
    t0 = time.perf_counter()
    ps = ParameterSet(k=-3.0, a=1.0, m=1.0, u=0.0, v=1.0, mu=0.0, nu=1.0)
    closed = engine.rhs_theorem(engine.theorem_parameters(engine.catalog_case("apery"), ps))
    target = 3j * riemann_zeta(3.0).real / (32.0 * math.pi)
    rel = abs(closed - target) / abs(target)
    sanity = abs(target - 0.0358712j) < 1e-7
    ok = rel <= 1e-9 and sanity
    return CriterionResult(
        "A6 Apery point: k=-3 value 3i zeta(3)/(32 pi) (rel 1e-9)",
        ok,
        f"rel {rel:.3e}, value {closed:.10g}",
        time.perf_counter() - t0,
    )


def criterion_a7_log2_limit() -> CriterionResult:
    t0 = time.perf_counter()
    ps = ParameterSet(k=-1.0, a=1.0, m=1.0, u=0.0, v=1.0, mu=0.0, nu=1.0)
    limit, est = engine.rhs_limit_full("log2_limit", ps)
    target = -1j * math.pi * math.log(2.0) / 2.0
    diff = abs(limit - target)
    ok = diff <= 1e-6
    return CriterionResult(
        "A7 log(2) limit via Richardson at k -> -1 (1e-6)",
        ok,
        f"diff {diff:.3e} (estimate {est:.1e})",
        time.perf_counter() - t0,
    )


def criterion_a8_harmonic_limit() -> CriterionResult:
    t0 = time.perf_counter()
    ps = ParameterSet(k=-1.0, a=-2.0, m=0.5, u=0.0, v=1.0, mu=0.0, nu=1.0)
    case = engine.catalog_case("harmonic_limit")
    special = engine.rhs_example(case, ps)
    limit, _ = engine.rhs_limit_full(case, ps)
    rel = abs(limit - special) / (1.0 + abs(special))
    lim_ok = rel <= 1e-9
    qmc_val, stderr = integrate_6d_qmc(Integrand6D(ps), QmcSpec(count=1 << 22, shift_seed=808))
    q_ok = abs(qmc_val - special) <= 3.0 * stderr + 1e-9
    ok = lim_ok and q_ok
    return CriterionResult(
        "A8 harmonic limit: Richardson (rel 1e-9) and 2^22-point QMC (3 stderr)",
        ok,
        f"limit rel {rel:.3e}; qmc diff {abs(qmc_val - special):.2e} vs 3se {3*stderr:.2e}",
        time.perf_counter() - t0,
    )


def criterion_a9_difference_identities() -> CriterionResult:
    t0 = time.perf_counter()
    ps = ParameterSet(k=-1.0, a=1.0, m=0.5, u=0.0, v=1.0, mu=0.0, nu=1.0)
    val3 = engine.rhs_example("difference_arctanh", ps, second=1.0 / 3.0)
    val4 = engine.rhs_example("difference_arctanh", ps, second=0.25)
    t3 = -math.pi * math.log(3.0) / 4.0
    t4 = -math.pi * math.log(1.0 + math.sqrt(2.0)) / 2.0
    d3, d4 = abs(val3 - t3), abs(val4 - t4)
    ok = d3 <= 1e-12 and d4 <= 1e-12
    return CriterionResult(
        "A9 difference identities at (1/2,1/3) and (1/2,1/4) (1e-12)",
        ok,
        f"log3 diff {d3:.2e}, arccoth diff {d4:.2e}",
        time.perf_counter() - t0,
    )


def criterion_a10_module_oracles() -> CriterionResult:
    t0 = time.perf_counter()
    problems = []

    # Lerch regime agreement, rel 1e-8.
    rng = random.Random(55)
    worst = 0.0
    for trial in range(40):
        s = complex(rng.uniform(-3.0, 4.0), rng.uniform(-1.5, 1.5))
        v = complex(rng.uniform(0.4, 2.2), rng.uniform(-0.6, 0.6))
        if trial % 2 == 0:
            z = cmath.exp(2j * math.pi * rng.uniform(0.05, 0.95))
            if abs(z + 1.0) < 1e-9:
                continue
            got = lerch.lerch_unit_circle(z, s, v)
            alt = (
                lerch.lerch_integral_oracle(z, s, v)
                if s.real > 0.5
                else complex(v) ** (-s) + z * lerch.lerch_unit_circle(z, s, v + 1.0)
            )
        else:
            # keep the series side well-conditioned: its terms peak like
            # (|s|/(e ln(1/|z|)))^|Re s| before decaying
            z = rng.uniform(0.93, 0.99) * cmath.exp(1j * rng.uniform(0.1, 6.1))
            got = lerch._abel_plana_phi(z, s, v, level=8)
            alt = lerch.lerch_series(z, s, v)
        worst = max(worst, abs(got - alt) / (1.0 + max(abs(got), abs(alt))))
    split = lerch.lerch_minus_one_split(2.5, 0.8)
    circ = lerch.lerch_unit_circle(-1.0, 2.5, 0.8)
    worst = max(worst, abs(split - circ) / (1.0 + abs(split)))
    if worst > 1e-8:
        problems.append(f"lerch agreement {worst:.2e}")

    # Legendre hypergeometric vs recurrence, rel 1e-10.
    worst_p = 0.0
    for n in range(0, 21):
        for mo in range(0, min(n, 5) + 1):
            for x in (0.1, 0.3, 0.5, 0.7, 0.9):
                ref = legendre.legendre_recurrence(n, mo, x)[-1]
                hyp = legendre.assoc_legendre_p(n, mo, x)
                worst_p = max(worst_p, abs(hyp - ref) / (1.0 + abs(ref)))
    if worst_p > 1e-10:
        problems.append(f"legendre agreement {worst_p:.2e}")

    # Mellin closed vs quadrature, rel 1e-7.
    rng = random.Random(77)
    worst_m = 0.0
    done_r = done_c = 0
    while done_r < 50 or done_c < 20:
        if done_r < 50:
            s = rng.uniform(0.1, 3.0)
            u = rng.uniform(-2.0, 0.9)
            v = rng.uniform(-1.5, 2.5)
        else:
            s = complex(rng.uniform(0.2, 2.5), rng.uniform(-1.0, 1.0))
            u = complex(rng.uniform(-1.5, 0.8), rng.uniform(-1.0, 1.0))
            v = complex(rng.uniform(-1.0, 2.0), rng.uniform(-1.0, 1.0))
        try:
            q = mellin.mellin_legendre_quadrature(s, u, v)
            c = mellin.mellin_legendre_closed(s, u, v)
        except Exception:
            continue
        if abs(c) < 1e-10:
            continue
        worst_m = max(worst_m, abs(q - c) / abs(c))
        if isinstance(s, complex) and s.imag != 0:
            done_c += 1
        else:
            done_r += 1
    if worst_m > 1e-7:
        problems.append(f"mellin agreement {worst_m:.2e}")

    # Gamma reflection, rel 1e-11.
    rng = random.Random(99)
    worst_g = 0.0
    count = 0
    while count < 200:
        z = complex(rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0))
        if abs(z.imag) < 0.1 and abs(z.real - round(z.real)) < 0.1:
            continue
        val = gamma(z) * gamma(1.0 - z) * cmath.sin(math.pi * z) / math.pi
        worst_g = max(worst_g, abs(val - 1.0))
        count += 1
    if worst_g > 1e-11:
        problems.append(f"gamma reflection {worst_g:.2e}")

    # Jet coefficients vs central finite differences (two Richardson levels).
    # The scalar is evaluated in extended precision: the 4th-order stencil at
    # step 1e-3 loses ~11 digits to rounding, which double alone cannot spare.
    ps = ParameterSet(k=4, a=1.5, m=0.4, u=-0.3, v=1.2, mu=-0.1, nu=0.9)
    jet = closed_form_jet(ps, 4)
    pi_ld = np.clongdouble(np.pi)
    pref = pi_ld**2 * np.exp(
        (np.clongdouble(ps.mu.real) + ps.u.real - 1.0) * np.log(np.clongdouble(2.0))
    )
    ln_a = np.log(np.clongdouble(ps.a.real))
    m_ld = np.clongdouble(ps.m.real)

    def f_scalar(w):
        return pref * np.exp(w * ln_a) / np.sin(pi_ld * (m_ld + w))

    worst_j = 0.0
    for j in range(1, 5):
        fd = _richardson_derivative(f_scalar, j, 1e-3)
        coeff = fd / math.factorial(j)
        worst_j = max(worst_j, abs(coeff - jet[j]) / (1.0 + abs(jet[j])))
    if worst_j > 1e-6:
        problems.append(f"jet finite differences {worst_j:.2e}")

    ok = not problems
    detail = "; ".join(problems) if problems else (
        f"lerch {worst:.1e}, legendre {worst_p:.1e}, mellin {worst_m:.1e}, "
        f"gamma {worst_g:.1e}, jets {worst_j:.1e}"
    )
    return CriterionResult(
        "A10 module oracles (lerch 1e-8, legendre 1e-10, mellin 1e-7, "
        "gamma 1e-11, jets 1e-6)",
        ok,
        detail,
        time.perf_counter() - t0,
    )


def _central_diff(f, order: int, h) -> complex:
    if order == 1:
        return (f(h) - f(-h)) / (2.0 * h)
    if order == 2:
        return (f(h) - 2.0 * f(0.0 * h) + f(-h)) / h**2
    if order == 3:
        return (f(2 * h) - 2 * f(h) + 2 * f(-h) - f(-2 * h)) / (2.0 * h**3)
    if order == 4:
        return (f(2 * h) - 4 * f(h) + 6 * f(0.0 * h) - 4 * f(-h) + f(-2 * h)) / h**4
    raise ValueError(order)


def _richardson_derivative(f, order: int, h: float) -> complex:
    hw = np.clongdouble(h)
    d1 = _central_diff(f, order, hw)
    d2 = _central_diff(f, order, hw / 2.0)
    d3 = _central_diff(f, order, hw / 4.0)
    r1 = (4.0 * d2 - d1) / 3.0
    r2 = (4.0 * d3 - d2) / 3.0
    return complex((16.0 * r2 - r1) / 15.0)


ALL_CRITERIA = (
    criterion_a1_degenerate_product,
    criterion_a2_theorem_integer_k,
    criterion_a3_path_independence,
    criterion_a4_direct_6d,
    criterion_a5_zeta_line,
    criterion_a6_apery,
    criterion_a7_log2_limit,
    criterion_a8_harmonic_limit,
    criterion_a9_difference_identities,
    criterion_a10_module_oracles,
)

# Wall-time budgets per criterion, seconds.
BUDGETS = {
    "criterion_a1_degenerate_product": 1.0,
    "criterion_a2_theorem_integer_k": 10.0,
    "criterion_a3_path_independence": 10.0,
    "criterion_a4_direct_6d": 120.0,
    "criterion_a5_zeta_line": 5.0,
    "criterion_a6_apery": 1.0,
    "criterion_a7_log2_limit": 5.0,
    "criterion_a8_harmonic_limit": 180.0,
    "criterion_a9_difference_identities": 1.0,
    "criterion_a10_module_oracles": 60.0,
}

# Extra searchable keywords per criterion for selftest --only filtering.
_KEYWORDS = {
    "criterion_a1_degenerate_product": "product mellin csc",
    "criterion_a2_theorem_integer_k": "jet lerch closed grid",
    "criterion_a3_path_independence": "moment mellin jet",
    "criterion_a4_direct_6d": "tensor qmc quadrature sobol",
    "criterion_a5_zeta_line": "lerch zeta eta",
    "criterion_a6_apery": "zeta lerch",
    "criterion_a7_log2_limit": "limit richardson",
    "criterion_a8_harmonic_limit": "limit richardson qmc digamma harmonic",
    "criterion_a9_difference_identities": "arctanh difference",
    "criterion_a10_module_oracles": "lerch legendre mellin gamma jets oracles",
}


def run_suite(only: str | None = None) -> list[CriterionResult]:
    results = []
    for fn in ALL_CRITERIA:
        if only:
            haystack = f"{fn.__name__} {_KEYWORDS.get(fn.__name__, '')}".lower()
            if only.lower() not in haystack:
                continue
        results.append(fn())
    return results
