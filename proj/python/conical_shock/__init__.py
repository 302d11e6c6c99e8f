"""Supersonic flow past a straight cone: attached-shock solves, the
hypersonic limit, and its measure-convergence diagnostics."""

from conical_shock._core import (
    ConicalField,
    DirectSolution,
    DomainError,
    FieldDiagnostics,
    FlowState,
    GasParameters,
    IntegratorOptions,
    InvariantRegionExitError,
    KindMismatchError,
    NoBracketError,
    NoConeFoundError,
    NonPhysicalError,
    PostShockState,
    RadonConeSolution,
    RegimeError,
    SonicSingularityError,
    SubsonicNormalError,
    chaplygin_shock_angle,
    chaplygin_surface_pressure,
    cone_angle_map,
    conical_rhs,
    derive_parameters,
    entropy_invariant,
    epsilon_star,
    hypersonic_sweep,
    integrate_inverse,
    limit_solution,
    mass_flux,
    pressure,
    rk4_cone_angle,
    shock_jump,
    solve_direct,
    verify_rankine_hugoniot,
)

__all__ = [
    "ConicalField",
    "DirectSolution",
    "DomainError",
    "FieldDiagnostics",
    "FlowState",
    "GasParameters",
    "IntegratorOptions",
    "InvariantRegionExitError",
    "KindMismatchError",
    "NoBracketError",
    "NoConeFoundError",
    "NonPhysicalError",
    "PostShockState",
    "RadonConeSolution",
    "RegimeError",
    "SonicSingularityError",
    "SubsonicNormalError",
    "chaplygin_shock_angle",
    "chaplygin_surface_pressure",
    "cone_angle_map",
    "conical_rhs",
    "derive_parameters",
    "entropy_invariant",
    "epsilon_star",
    "hypersonic_sweep",
    "integrate_inverse",
    "limit_solution",
    "mass_flux",
    "pressure",
    "rk4_cone_angle",
    "shock_jump",
    "solve_direct",
    "verify_rankine_hugoniot",
]

__version__ = "0.1.0"
