"""Replicator-dynamics engine for the tripartite supply chain financing game.

Thin re-export of the compiled core module.
"""

from ._core import (
    CLAMP_TOLERANCE,
    DEFAULT_SPEED_TOLERANCE,
    HYPERBOLICITY_EPS,
    ClaimResult,
    ConvergenceReport,
    EquilibriumPoint,
    ExpectedPayoffs,
    FieldParameterDerivatives,
    GameParameters,
    IntegrationConfig,
    IntegrationError,
    NearestEquilibrium,
    OutcomePayoffs,
    PayoffTable,
    RunConfig,
    ScenarioCondition,
    ScenarioReport,
    Stability,
    StabilityVerdict,
    StrategyState,
    SweepCell,
    SweepResult,
    SweepSpec,
    Trajectory,
    TrajectorySample,
    ValidationError,
    Velocity,
    baseline_parameters,
    builtin_experiments,
    classify,
    default_initial_states,
    detect_convergence,
    eigenvalues3,
    enumerate_equilibria,
    evaluate_field_claims,
    expected_payoffs,
    field_parameter_derivatives,
    in_unit_cube,
    integrate,
    jacobian,
    outcome_payoffs,
    parse_config,
    replicator_field,
    replicator_field_expanded,
    run_sweep,
    scenario_report,
    serialize_config,
    step_count,
    validate_parameters,
    with_parameter,
)

__all__ = [
    "CLAMP_TOLERANCE",
    "DEFAULT_SPEED_TOLERANCE",
    "HYPERBOLICITY_EPS",
    "ClaimResult",
    "ConvergenceReport",
    "EquilibriumPoint",
    "ExpectedPayoffs",
    "FieldParameterDerivatives",
    "GameParameters",
    "IntegrationConfig",
    "IntegrationError",
    "NearestEquilibrium",
    "OutcomePayoffs",
    "PayoffTable",
    "RunConfig",
    "ScenarioCondition",
    "ScenarioReport",
    "Stability",
    "StabilityVerdict",
    "StrategyState",
    "SweepCell",
    "SweepResult",
    "SweepSpec",
    "Trajectory",
    "TrajectorySample",
    "ValidationError",
    "Velocity",
    "baseline_parameters",
    "builtin_experiments",
    "classify",
    "default_initial_states",
    "detect_convergence",
    "eigenvalues3",
    "enumerate_equilibria",
    "evaluate_field_claims",
    "expected_payoffs",
    "field_parameter_derivatives",
    "in_unit_cube",
    "integrate",
    "jacobian",
    "outcome_payoffs",
    "parse_config",
    "replicator_field",
    "replicator_field_expanded",
    "run_sweep",
    "scenario_report",
    "serialize_config",
    "step_count",
    "validate_parameters",
    "with_parameter",
]

__version__ = "0.1.0"
