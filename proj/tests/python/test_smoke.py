"""Smoke tests for the Python bindings: every main operation is callable and
returns numbers consistent with the library's own frozen values. Also
validates the emitted solution document against the shipped JSON schema."""

import json
import math
from pathlib import Path

import jsonschema
import pytest

import conical_shock as cs


def test_parameter_derivation_and_validation():
    gp = cs.derive_parameters(0.1, 1.0)
    assert gp.gamma == pytest.approx(1.1)
    assert gp.Eprime == pytest.approx(0.5)
    assert gp.p0 == pytest.approx(0.1 / 1.1 * 0.5)
    assert gp.M0 == pytest.approx(1.0 / math.sqrt(0.1 * 0.5))
    with pytest.raises(cs.DomainError):
        cs.derive_parameters(-0.1, 1.0)
    with pytest.raises(cs.DomainError):
        cs.derive_parameters(0.1, 0.5)


def test_shock_jump_balances():
    gp = cs.derive_parameters(0.1, 1.0)
    beta = math.radians(30)
    ps = cs.shock_jump(beta, gp)
    assert ps.M0n == pytest.approx(gp.M0 * math.sin(beta))
    assert ps.state.rho * ps.state.u == pytest.approx(-math.sin(beta), abs=1e-14)
    assert ps.state.w == pytest.approx(math.cos(beta), abs=1e-15)
    residuals, entropy_ok = cs.verify_rankine_hugoniot(ps, gp)
    assert max(abs(r) for r in residuals) < 1e-13
    assert entropy_ok
    with pytest.raises(cs.SubsonicNormalError):
        cs.shock_jump(math.radians(5), gp)


def test_field_rhs_shape():
    gp = cs.derive_parameters(0.1, 1.0)
    ps = cs.shock_jump(math.radians(30), gp)
    d = cs.conical_rhs(ps.beta, ps.state.rho, ps.state.u, ps.state.w, gp)
    assert len(d) == 3
    assert d[2] == ps.state.u  # w' = u exactly


def test_inverse_and_direct_solves():
    gp = cs.derive_parameters(0.01, 1.0)
    sol = cs.solve_direct(math.radians(20), gp)
    assert math.degrees(sol.beta) == pytest.approx(20.4898628235, abs=1e-6)
    assert sol.residual < 1e-8
    assert sol.field.surface_pressure == pytest.approx(0.123293345938, abs=1e-8)
    assert sol.field.grid[-1].u == 0.0  # surface value is snapped exactly
    assert sol.field.diagnostics.entropy_drift < 1e-8

    # the inverse integration at the accepted beta reproduces the same cone
    field = cs.integrate_inverse(sol.beta, gp)
    assert field.theta_cone == pytest.approx(sol.field.theta_cone, abs=1e-12)
    s = cs.entropy_invariant(field.grid[0], gp)
    assert cs.entropy_invariant(field.grid[-1], gp) == pytest.approx(s, rel=1e-9)


def test_sweep_limit_and_mass_flux():
    records = cs.hypersonic_sweep(math.radians(20), [0.08, 0.04], 1.0)
    assert [r["ok"] for r in records] == [True, True]
    assert records[1]["gap"] < records[0]["gap"]
    assert all(r["gap"] <= r["gap_bound"] for r in records)

    lim = cs.limit_solution(math.radians(20), 1.0)
    assert lim.surface_pressure == pytest.approx(math.sin(math.radians(20)) ** 2)

    gp = cs.derive_parameters(0.1, 1.0)
    field = cs.integrate_inverse(math.radians(30), gp)
    assert cs.mass_flux(field) == pytest.approx(
        math.pi * math.sin(math.radians(30)) ** 2, abs=1e-6)

    assert cs.epsilon_star(0.2, 0.4, 0.5) > 0.0


def test_chaplygin_closed_forms():
    assert cs.chaplygin_shock_angle(2.0) == pytest.approx(math.pi / 6, abs=1e-15)
    assert cs.chaplygin_surface_pressure(math.radians(30), 2.0) == pytest.approx(
        0.0, abs=1e-15)
    with pytest.raises(cs.RegimeError):
        cs.chaplygin_surface_pressure(math.radians(30), 1.5)
    with pytest.raises(cs.DomainError):
        cs.chaplygin_shock_angle(0.5)


def test_oracle_cross_check():
    gp = cs.derive_parameters(0.1, 1.0)
    beta = math.radians(30)
    field = cs.integrate_inverse(beta, gp)
    assert cs.rk4_cone_angle(beta, gp, 1e-4) == pytest.approx(
        field.theta_cone, abs=1e-7)


def test_solution_document_matches_schema():
    root = Path(__file__).resolve().parents[2]
    schema = json.loads((root / "docs" / "solution.schema.json").read_text())
    doc = json.loads(
        (root / "tests" / "golden" / "direct_theta0_20_eps_0p01.json")
        .read_text())
    jsonschema.validate(doc, schema)

    # the validator must have teeth: a mutilated document is rejected
    for breakage in (
        lambda d: d.pop("grid"),
        lambda d: d.__setitem__("beta_deg", "20.49"),
        lambda d: d["grid"][0].pop("rho"),
    ):
        bad = json.loads(json.dumps(doc))
        breakage(bad)
        with pytest.raises(jsonschema.ValidationError):
            jsonschema.validate(bad, schema)
