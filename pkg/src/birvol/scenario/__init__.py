"""Built-in verification scenarios."""

from .catalog import get_scenario, list_scenarios
from .core import PLUMBING, Check, CheckResult, Outcome, Scenario, Verdict, run_scenario


def run_all(seed: int = 42) -> list[Verdict]:
    """Every built-in scenario, sorted by id."""
    cat = list_scenarios()
    return [run_scenario(cat[k], seed) for k in sorted(cat)]


__all__ = [
    "PLUMBING",
    "Check",
    "CheckResult",
    "Outcome",
    "Scenario",
    "Verdict",
    "get_scenario",
    "list_scenarios",
    "run_all",
    "run_scenario",
]
