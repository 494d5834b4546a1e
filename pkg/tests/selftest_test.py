import pytest

from qbinomial_identities.selftest import SUITES
from qbinomial_identities.selftest import Checker
from qbinomial_identities.selftest import SuiteResult
from qbinomial_identities.selftest import run_suites
from qbinomial_identities.selftest import summary_line


def test_checker():
    checker = Checker("demo")
    checker.check(True, "never shown")
    checker.check(False, "broken")
    assert checker.result() == SuiteResult("demo", 2, ["broken"])


def test_summary_line():
    assert summary_line(SuiteResult("new3", 4, [])) == "new3: pass (4 checks, 0 failures)"
    assert (
        summary_line(SuiteResult("new4", 4, ["x"])) == "new4: FAIL (4 checks, 1 failures)"
    )


def test_quick_suites_pass():
    results = run_suites(quick=True)
    assert [result.name for result in results] == [
        "new3",
        "new4",
        "phi-bijection",
        "theta-involution",
        "generating-function",
        "qbinomial-theorem",
        "classical",
        "special",
        "structural",
    ]
    for result in results:
        assert result.checks > 0
        assert result.failures == []


@pytest.mark.parametrize("suite", SUITES, ids=lambda suite: suite.__name__)
def test_full_suites_pass(suite):
    result = suite(quick=False)
    assert result.failures == []
