"""Every property suite behind `verify` passes in small mode."""
import pytest

from multihopf import checks


@pytest.mark.parametrize("suite", sorted(checks.SUITES))
def test_suite_small(suite):
    results = list(checks.run_suites(suite, "small", 0))
    assert results
    failed = {f"{mod}: {prop}": fails[:3] for mod, prop, fails in results if fails}
    assert failed == {}


def test_words_suite_other_seed():
    a = [(m, p, f) for m, p, f in checks.run_suites("words", "small", 1)]
    assert all(not f for _, _, f in a)
