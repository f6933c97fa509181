import cmath
import json
import math
import random

import pytest

from oracles import richardson_derivative
from sixfold import engine
from sixfold.core import ParameterSet, Tolerances, validate_parameters
from sixfold.quad import QmcSpec
from sixfold.specialfn import harmonic, riemann_zeta

REFERENCE = ParameterSet(k=0, a=1.0, m=0.5, u=0.0, v=1.0, mu=0.0, nu=1.0)
ZETA3 = riemann_zeta(3.0).real


def _random_valid(rng, k=0.0, a=1.0):
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


def test_lhs_jet_k0_closed_form():
    rng = random.Random(61)
    for _ in range(10):
        ps = _random_valid(rng)
        expect = (
            math.pi**2
            * cmath.exp((ps.mu + ps.u - 1.0) * math.log(2.0))
            / cmath.sin(math.pi * ps.m)
        )
        assert abs(engine.lhs_jet(ps) - expect) < 1e-12 * abs(expect)


def test_lhs_jet_symmetric_zero():
    assert abs(engine.lhs_jet(REFERENCE.replace(k=1))) < 1e-13


def test_lhs_jet_second_derivative_point():
    # F(w) = (pi^2/2) sec(pi w); second derivative at 0 via finite
    # differences fixes the k = 2 value.
    ps = REFERENCE.replace(k=2)
    fd = richardson_derivative(
        lambda w: math.pi**2 / 2.0 / cmath.cos(math.pi * w), 2, 1e-3
    )
    got = engine.lhs_jet(ps)
    assert abs(got - fd) < 1e-7 * abs(fd)
    assert abs(got - math.pi**4 / 2.0) < 1e-11 * abs(got)


def test_rhs_theorem_k0_reduces_to_csc_form():
    rng = random.Random(62)
    for a in (0.5, 1.0, 2.0, -2.0):
        ps = _random_valid(rng, a=a)
        got = engine.rhs_theorem(ps)
        _, expect = engine.product_identity_check(ps)
        assert abs(got - expect) <= 1e-12 * abs(expect), ps


def test_rhs_theorem_k1_vanishes_at_half():
    assert abs(engine.rhs_theorem(REFERENCE.replace(k=1))) < 1e-13


def test_theorem_paths_agree_random_sample():
    rng = random.Random(63)
    for _ in range(15):
        k = rng.randint(0, 6)
        a = rng.choice([0.5, 1.0, 1.5, math.e, 2.7])
        ps = _random_valid(rng, k=k, a=a)
        jet = engine.lhs_jet(ps)
        closed = engine.rhs_theorem(ps)
        moment = engine.lhs_moment_expansion(ps)
        assert abs(jet - closed) <= 1e-9 * (1.0 + abs(closed)), ps
        assert abs(moment - jet) <= 1e-9 * (1.0 + abs(jet)), ps


def test_product_identity_symmetric_pair():
    ps = _random_valid(random.Random(64))
    lhs1, rhs1 = engine.product_identity_check(ps)
    lhs2, rhs2 = engine.product_identity_check(ps.replace(m=1.0 - ps.m.real))
    assert abs(rhs1 - rhs2) < 1e-12 * abs(rhs1)
    assert abs(lhs1 - lhs2) < 1e-10 * abs(lhs1)


def test_eta_line_algebra():
    case = engine.catalog_case("eta_zeta_line")
    for k in (0.5, 2.0, 3.0, 4.0):
        ps = ParameterSet(k=k, a=1.0, m=1.0, u=0.0, v=1.0, mu=0.0, nu=1.0)
        closed = engine.rhs_theorem(engine.theorem_parameters(case, ps))
        special = engine.rhs_example(case, ps)
        assert abs(closed - special) <= 1e-8 * (1.0 + max(abs(closed), abs(special))), k


def test_apery_value():
    case = engine.catalog_case("apery")
    ps = ParameterSet(k=-3.0, a=1.0, m=1.0, u=0.0, v=1.0, mu=0.0, nu=1.0)
    expect = 3j * ZETA3 / (32.0 * math.pi)
    assert abs(engine.rhs_example(case, ps) - expect) < 1e-12
    closed = engine.rhs_theorem(engine.theorem_parameters(case, ps))
    assert abs(closed - expect) <= 1e-9 * abs(expect)
    assert abs(expect - 0.0358712j) < 1e-7


def test_log2_constant():
    case = engine.catalog_case("log2_limit")
    ps = ParameterSet(k=-1.0, a=1.0, m=1.0, u=0.0, v=1.0, mu=0.0, nu=1.0)
    expect = -1j * math.pi * math.log(2.0) / 2.0
    assert abs(engine.rhs_example(case, ps) - expect) < 1e-14
    closed = engine.rhs_theorem(engine.theorem_parameters(case, ps))
    assert abs(closed - expect) <= 1e-12 * abs(expect)
    limit, est = engine.rhs_limit_full(case, ps)
    assert abs(limit - expect) <= 1e-6
    assert est < 1e-6


def test_harmonic_closed_form_matches_stated_form():
    ps = ParameterSet(k=-1.0, a=-2.0, m=0.5, u=0.0, v=1.0, mu=0.0, nu=1.0)
    case = engine.catalog_case("harmonic_limit")
    got = engine.rhs_example(case, ps)
    c = math.log(2.0) / (4.0 * math.pi)
    expect = -1j * math.pi * 0.25 * (harmonic(-1j * c) - harmonic(-0.5 - 1j * c))
    assert abs(got - expect) < 1e-13 * abs(expect)
    closed = engine.rhs_theorem(ps)
    assert abs(closed - expect) <= 1e-11 * abs(expect)
    limit, _ = engine.rhs_limit_full(case, ps)
    assert abs(limit - expect) <= 1e-9 * (1.0 + abs(expect))


def test_difference_identities_reproduce_constants():
    ps = ParameterSet(k=-1.0, a=1.0, m=0.5, u=0.0, v=1.0, mu=0.0, nu=1.0)
    got3 = engine.rhs_example("difference_arctanh", ps, second=1.0 / 3.0)
    assert abs(got3 - (-math.pi * math.log(3.0) / 4.0)) < 1e-12
    got4 = engine.rhs_example("difference_arctanh", ps, second=0.25)
    assert abs(got4 - (-math.pi * math.log(1.0 + math.sqrt(2.0)) / 2.0)) < 1e-12


def test_difference_closed_path_via_lerch():
    ps = ParameterSet(k=-1.0, a=1.0, m=0.5, u=0.0, v=1.0, mu=0.0, nu=1.0)
    rep = engine.verify("log3", ps, tol=Tolerances(abs_tol=1e-11, rel_tol=1e-10))
    assert rep.verdict == "pass"
    assert rep.paths["closed"].status == "ok"
    assert abs(rep.paths["closed"].value - rep.paths["special"].value) < 1e-11


def test_rhs_limit_validation():
    case = engine.catalog_case("log2_limit")
    ps = ParameterSet(k=-1.0, a=1.0, m=1.0)
    with pytest.raises(Exception):
        engine.rhs_limit_full(case, ps, eps_sequence=(1e-7, 1e-8))
    with pytest.raises(Exception):
        engine.rhs_limit_full("degenerate", ps)


def test_verify_multi_path_pass():
    rep = engine.verify(
        "theorem",
        ParameterSet(k=2, a=1.5, m=0.4, u=-0.3, v=1.2, mu=-0.1, nu=0.9),
        tol=Tolerances(abs_tol=1e-12, rel_tol=1e-8),
        paths=("jet", "moment", "closed"),
    )
    assert rep.verdict == "pass"
    assert set(rep.paths) == {"jet", "moment", "closed"}
    assert all(r.status == "ok" for r in rep.paths.values())


def test_verify_invalid_parameters():
    rep = engine.verify("theorem", ParameterSet(k=0, m=1.2))
    assert rep.verdict == "invalid_parameters"
    assert "0<Re(m)<1" in rep.violations


def test_verify_reports_inadmissible_paths():
    ps = ParameterSet(k=0.5, a=1.0, m=0.4, u=0.0, v=1.0, mu=0.0, nu=1.0)
    rep = engine.verify("theorem", ps, paths=("jet", "qmc", "closed"))
    assert rep.paths["jet"].status == "inadmissible"
    assert rep.paths["qmc"].status == "inadmissible"
    assert rep.paths["closed"].status == "ok"


def test_verify_theorem_reference_four_paths():
    rep = engine.verify(
        "theorem",
        REFERENCE,
        paths=("jet", "moment", "qmc", "closed"),
        qmc_spec=QmcSpec(count=1 << 14, shift_seed=3),
        tol=Tolerances(abs_tol=1e-9, rel_tol=1e-3),
    )
    assert rep.verdict == "pass"
    target = math.pi**2 / 2.0
    for name in ("jet", "moment", "qmc", "closed"):
        assert abs(rep.paths[name].value - target) < 1e-2 * target, name


def test_verify_qmc_and_tensor_reference():
    rep = engine.verify(
        "degenerate",
        REFERENCE,
        paths=("tensor", "qmc", "closed", "special"),
        qmc_spec=QmcSpec(count=1 << 14, shift_seed=7),
        tol=Tolerances(abs_tol=1e-9, rel_tol=1e-4),
    )
    assert rep.verdict == "pass"
    assert abs(rep.paths["special"].value - 4.9348022) < 1e-6


def test_report_serialization_roundtrip():
    rep = engine.verify(
        "apery",
        ParameterSet(k=-3.0, a=1.0, m=1.0, u=0.0, v=1.0, mu=0.0, nu=1.0),
        paths=("closed", "special", "limit"),
    )
    payload = engine.report_to_dict(rep)
    text = json.dumps(payload, sort_keys=True)
    parsed = json.loads(text)
    assert parsed["case"] == "apery"
    assert parsed["verdict"] == "pass"
    assert "times" not in parsed
    assert parsed["params"]["k"] == [-3.0, 0.0]
    timed = engine.report_to_dict(rep, include_times=True)
    assert "times" in timed
    rows = engine.report_to_csv_rows(rep)
    assert {r["path"] for r in rows} == {"closed", "special", "limit"}


def test_catalog_size_and_tags():
    assert len(engine.CATALOG) == 11
    tags = {c.tag for c in engine.CATALOG}
    assert tags == {
        "theorem",
        "degenerate",
        "hurwitz_zeta_form",
        "harmonic_limit",
        "difference_arctanh",
        "log3",
        "arccoth_sqrt2",
        "alt_lerch",
        "eta_zeta_line",
        "log2_limit",
        "apery",
    }


def test_alt_lerch_mapping_consistency():
    # the shifted form at (m, a) maps onto the general identity
    case = engine.catalog_case("alt_lerch")
    ps = ParameterSet(k=2.0, a=0.7, m=0.8, u=0.0, v=1.0, mu=0.0, nu=1.0)
    special = engine.rhs_example(case, ps)
    closed = engine.rhs_theorem(engine.theorem_parameters(case, ps))
    assert abs(special - closed) <= 1e-10 * (1.0 + abs(closed))


def test_hurwitz_zeta_form_consistency():
    case = engine.catalog_case("hurwitz_zeta_form")
    for k in (0.0, 1.0, 2.5):
        ps = ParameterSet(k=k, a=1.3, m=0.5, u=-0.2, v=1.1, mu=0.1, nu=0.9)
        special = engine.rhs_example(case, ps)
        closed = engine.rhs_theorem(ps)
        assert abs(special - closed) <= 1e-9 * (1.0 + abs(closed)), k
