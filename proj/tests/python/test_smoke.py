"""Smoke tests for the compiled module: the bindings load and a few
cross-module identities hold. The C++ suite carries the real coverage."""

import math

import pytest

import wellblock as wb


def test_constants():
    assert wb.PEACEMAN_RATIO == pytest.approx(math.exp(-math.pi / 2), abs=1e-15)
    assert wb.peaceman_radius_darcy(1.0) == pytest.approx(
        wb.PEACEMAN_RATIO, abs=1e-15
    )


def test_validate_config_flags_bad_theta():
    fluid = wb.FluidRockParams(mu=1.0, k=1.0, h=1.0)
    grid = wb.GridSpec(L=1.0, M=4)
    report = wb.validate_config(fluid, grid, wb.WellSpec(r_w=0.5, q=1.0))
    assert not report.valid()
    assert any("theta" in v for v in report.violations)


def test_material_balance_small_grid():
    fluid = wb.FluidRockParams(mu=1.0, k=1.0, h=1.0)
    field = wb.solve_field(wb.GridSpec(L=1.0, M=16), fluid, q=1.0, tol=1e-11)
    bp = wb.block_pressures(field)
    assert bp.p1 - bp.p0 == pytest.approx(0.25, abs=1e-9)
    assert bp.p0 < 0  # production sink under zero boundary data
    assert field.residual_norm() <= 1e-11
    # flux through any enclosing ring reproduces the rate
    assert wb.contour_flux(field, fluid, ring=8) == pytest.approx(1.0, rel=1e-8)


def test_forchheimer_radius_reference_point():
    fluid = wb.FluidRockParams(mu=1.0, k=1.0, h=1.0, beta1=1.0)
    fr = wb.forchheimer_radius(fluid, q=1.0, delta_spacing=1.0)
    assert fr.delta_factor == pytest.approx(0.7645843324737824, abs=1e-12)
    assert fr.r0 == pytest.approx(0.30089128436857937, abs=1e-12)
    # beta q = 0 degenerates exactly to the linear-flow radius
    darcy = wb.forchheimer_radius(fluid, q=0.0, delta_spacing=1.0)
    assert darcy.delta_factor == 1.0
    assert darcy.r0 == wb.peaceman_radius_darcy(1.0)


def test_dake_gap_identity():
    fluid = wb.FluidRockParams(mu=1.3, k=0.7, h=2.0, beta1=0.9)
    q, spacing, r_w = 2.0, 1.0, 0.01
    gap = wb.dake_drop_correct(q, fluid, spacing, r_w) - wb.dake_drop_simulator(
        q, fluid, spacing, r_w
    )
    expected = -fluid.beta() * q * q / (4 * math.pi**2 * spacing)
    assert gap == pytest.approx(expected, rel=1e-12)


def test_summarize_round_trip():
    fluid = wb.FluidRockParams(mu=1.0, k=1.0, h=1.0, beta1=0.5)
    well = wb.WellSpec(r_w=0.01, q=1.0)
    assert well.theta == well.r_w  # theta defaults to r_w
    result = wb.summarize(fluid, 1.0, well, p0=0.0)
    assert 0.0 < result.delta_factor <= 1.0
    assert result.t_w == pytest.approx(
        well.q * fluid.mu / (0.0 - result.p_w), rel=1e-12
    )


def test_solver_error_is_raised():
    fluid = wb.FluidRockParams(mu=1.0, k=1.0, h=1.0)
    with pytest.raises(ValueError):
        wb.solve_field(wb.GridSpec(L=1.0, M=8), fluid, q=1.0, tol=1.0)
