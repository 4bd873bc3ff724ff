import pytest

from src.core.config import DEFAULT_SETTINGS, Settings
from src.core.errors import UnknownSuiteError
from src.harness.suites import SUITES, run_all, run_suite

ASSERTING = {
    "james-carry", "psi-criterion", "oracle-h0", "oracle-h1-twopart", "andersen", "doty-lattice",
    "twist-multiplicity", "shift-factors", "steinberg-lemmas", "generic-twopart", "generic-oracle",
    "shift-stability", "first-row-h0",
}
REPORT_ONLY = {"conjecture-83", "first-row-h1", "single-twist"}

FAST = ["psi-criterion", "twist-multiplicity", "first-row-h0", "generic-twopart",
        "generic-oracle", "single-twist"]


def test_registry():
    assert set(SUITES) == ASSERTING | REPORT_ONLY
    assert {name for name, s in SUITES.items() if not s.asserting} == REPORT_ONLY
    assert all(s.description for s in SUITES.values())


def test_unknown_suite():
    with pytest.raises(UnknownSuiteError):
        run_suite("nope", DEFAULT_SETTINGS)


@pytest.mark.parametrize("name", FAST)
def test_fast_suites_pass(name):
    report = run_suite(name, DEFAULT_SETTINGS)
    assert report.ok, report.failures[:5]
    assert report.cases > 0
    assert report.wall_time is not None
    if SUITES[name].asserting:
        assert report.passed == report.cases


def test_generic_oracle_notes_skipped_heavy_side():
    report = run_suite("generic-oracle", DEFAULT_SETTINGS)
    assert report.cases == 3
    assert any("--heavy" in note for note in report.notes)


def test_single_twist_finds_changes():
    report = run_suite("single-twist", DEFAULT_SETTINGS)
    assert report.failures
    assert report.ok
    assert "change under one twist" in report.notes[0]


def test_reports_do_not_depend_on_threads():
    one = run_suite("twist-multiplicity", DEFAULT_SETTINGS)
    two = run_suite("twist-multiplicity", Settings(threads=2))
    assert one.to_dict(timing=False) == two.to_dict(timing=False)


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(ASSERTING))
def test_asserting_suites_pass(name):
    report = run_suite(name, DEFAULT_SETTINGS)
    assert report.ok, report.failures[:5]


@pytest.mark.slow
def test_steinberg_notes():
    report = run_suite("steinberg-lemmas", DEFAULT_SETTINGS)
    assert any("vacuous" in note for note in report.notes)
    assert len(report.notes) == 5


@pytest.mark.slow
def test_run_all_covers_every_suite():
    reports = run_all(DEFAULT_SETTINGS)
    assert [r.suite for r in reports] == list(SUITES)
