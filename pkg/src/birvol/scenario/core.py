"""Scenarios: named lists of checks with citations, run into verdicts."""

from __future__ import annotations

import hashlib
import random
import time
import traceback
from dataclasses import dataclass, field
from typing import Callable, Union

PLUMBING = "plumbing"


@dataclass(frozen=True)
class Outcome:
    passed: bool
    diagnostic: str = ""


CheckResultLike = Union[bool, Outcome]


@dataclass(frozen=True)
class Check:
    name: str
    citation: str
    run: Callable[[random.Random], CheckResultLike]

    def __post_init__(self):
        if not self.citation:
            raise ValueError(f"check {self.name} needs a citation or the marker {PLUMBING!r}")


@dataclass(frozen=True)
class Scenario:
    id: str
    description: str
    checks: tuple[Check, ...]

    @property
    def citations(self) -> tuple[str, ...]:
        seen: list[str] = []
        for c in self.checks:
            if c.citation not in seen:
                seen.append(c.citation)
        return tuple(seen)


@dataclass(frozen=True)
class CheckResult:
    scenario: str
    check: str
    passed: bool
    citation: str
    millis: float
    diagnostic: str = ""


@dataclass(frozen=True)
class Verdict:
    scenario: str
    results: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(r for r in self.results if not r.passed)


def expect_equal(actual, expected, render: Callable = str) -> Outcome:
    """Pass iff ``actual == expected``; the diagnostic shows both normal forms."""
    if actual == expected:
        return Outcome(True)
    return Outcome(False, f"expected {render(expected)}, got {render(actual)}")


def derived_seed(seed: int, scenario_id: str, index: int = 0) -> int:
    h = hashlib.sha256(f"{seed}:{scenario_id}:{index}".encode()).digest()
    return int.from_bytes(h[:8], "big")


def run_check(scenario_id: str, index: int, check: Check, seed: int) -> CheckResult:
    rng = random.Random(derived_seed(seed, scenario_id, index))
    t0 = time.perf_counter()
    try:
        res = check.run(rng)
        outcome = res if isinstance(res, Outcome) else Outcome(bool(res))
    except Exception as exc:  # a crashing check is a failed check
        tb = traceback.extract_tb(exc.__traceback__)[-1]
        outcome = Outcome(False, f"{type(exc).__name__}: {exc} (at {tb.name}:{tb.lineno})")
    millis = (time.perf_counter() - t0) * 1000.0
    return CheckResult(scenario_id, check.name, outcome.passed, check.citation, millis,
                       outcome.diagnostic)


def run_scenario(s: Scenario, seed: int = 42) -> Verdict:
    """Run every check (no short-circuit); deterministic given ``seed``."""
    return Verdict(s.id, tuple(run_check(s.id, i, c, seed) for i, c in enumerate(s.checks)))
