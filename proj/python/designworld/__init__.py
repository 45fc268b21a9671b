"""Design-World collaborative planning dialogue simulator."""

from ._core import (
    Scenario,
    check_conformance,
    optimal_score,
    planned_comparison,
    run_experiment,
    simulate,
    two_way_anova,
    __version__,
)

__all__ = [
    "Scenario",
    "check_conformance",
    "optimal_score",
    "planned_comparison",
    "run_experiment",
    "simulate",
    "two_way_anova",
    "__version__",
]
