"""Well-block radius numerics.

Thin re-export of the compiled core: radial flow laws, the
rate-dependent Peaceman construction, and the reference
finite-difference solver.
"""

from ._core import (
    PI,
    PEACEMAN_RATIO,
    Annulus,
    BlockPressures,
    ConfigError,
    ConvergenceTable,
    FitWindow,
    FluidRockParams,
    ForchheimerRadius,
    GridSpec,
    OscillationCheck,
    PressureField,
    R0Estimate,
    RefinementRow,
    SolverError,
    ValidationReport,
    WellModelResult,
    WellSpec,
    WellposednessReport,
    block_pressures,
    check_strict_wellposedness,
    contour_flux,
    d_factor,
    dake_drop_correct,
    dake_drop_simulator,
    darcy_drop,
    darcy_profile,
    estimate_r0_numeric,
    forchheimer_drop,
    forchheimer_radius,
    green_oscillation_check,
    green_oscillation_check_fd,
    green_refinement_study,
    peaceman_radius_darcy,
    radial_ode_oracle,
    rate_from_drop_forchheimer,
    reconstruct_pw_darcy,
    solve_delta,
    solve_field,
    summarize,
    validate_config,
    well_index,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
