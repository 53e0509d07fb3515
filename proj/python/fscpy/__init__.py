from ._fscpy import (
    DegenerateBasisError,
    Distribution,
    DivergenceError,
    Scenario,
    ScenarioParseError,
    ScenarioValidationError,
    convert_at2,
    exact_free_sdof,
    global_error,
    monte_carlo,
    parse_scenario,
    propagate,
    run_scenario,
)

__all__ = [
    "DegenerateBasisError",
    "Distribution",
    "DivergenceError",
    "Scenario",
    "ScenarioParseError",
    "ScenarioValidationError",
    "convert_at2",
    "exact_free_sdof",
    "global_error",
    "monte_carlo",
    "parse_scenario",
    "propagate",
    "run_scenario",
]
