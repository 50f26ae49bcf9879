import random

import pytest

from birvol.scenario import (
    PLUMBING,
    Check,
    Outcome,
    Scenario,
    get_scenario,
    list_scenarios,
    run_all,
    run_scenario,
)
from birvol.scenario.core import derived_seed, expect_equal, run_check

EXPECTED_IDS = {"tau5", "sl2z_monomials", "cremona_sign", "psi_quintic", "eta2_toric", "phi_hl",
                "eta1_hl", "eta4_toric", "residue_standard", "coreg_standard", "stabilize_jnr",
                "hl_lattice", "ledger_p3", "ledger_p4"}


def test_catalog_ids():
    cat = list_scenarios()
    assert set(cat) == EXPECTED_IDS
    for sid, s in cat.items():
        assert s.id == sid
        assert s.checks and s.description
        assert all(c.citation for c in s.checks)
        assert len({c.name for c in s.checks}) == len(s.checks)


def test_unknown_scenario():
    with pytest.raises(KeyError):
        get_scenario("nope")


@pytest.mark.parametrize("seed", [0, 7, 42, 2**64 - 1])
def test_all_scenarios_pass(seed):
    verdicts = run_all(seed)
    assert [v.scenario for v in verdicts] == sorted(EXPECTED_IDS)
    bad = [r for v in verdicts for r in v.failures]
    assert not bad, bad


def test_results_are_deterministic():
    a = run_scenario(get_scenario("tau5"), 7)
    b = run_scenario(get_scenario("tau5"), 7)
    assert [(r.check, r.passed, r.diagnostic) for r in a.results] == \
           [(r.check, r.passed, r.diagnostic) for r in b.results]


def test_derived_seed_separates_checks():
    assert derived_seed(42, "a", 0) != derived_seed(42, "a", 1)
    assert derived_seed(42, "a", 0) != derived_seed(42, "b", 0)
    assert derived_seed(42, "a", 0) == derived_seed(42, "a", 0)


def test_crashing_check_is_captured():
    def boom(rng):
        raise ZeroDivisionError("bad")
    r = run_check("s", 0, Check("boom", PLUMBING, boom), 42)
    assert not r.passed
    assert r.diagnostic.startswith("ZeroDivisionError: bad")


def test_no_short_circuit():
    s = Scenario("s", "demo", (
        Check("fails", PLUMBING, lambda rng: Outcome(False, "no")),
        Check("passes", PLUMBING, lambda rng: True),
    ))
    v = run_scenario(s)
    assert [r.passed for r in v.results] == [False, True]
    assert not v.passed and len(v.failures) == 1


def test_citation_required():
    with pytest.raises(ValueError):
        Check("x", "", lambda rng: True)


def test_rng_is_seeded():
    seen = []
    s = Scenario("s", "demo", (Check("r", PLUMBING, lambda rng: seen.append(rng.random()) or True),))
    run_scenario(s, 3)
    run_scenario(s, 3)
    assert seen[0] == seen[1]
    assert isinstance(random.Random(derived_seed(3, "s", 0)).random(), float)


def test_expect_equal_diagnostic():
    assert expect_equal(1, 1).passed
    out = expect_equal(2, 1)
    assert not out.passed and "expected 1, got 2" in out.diagnostic
