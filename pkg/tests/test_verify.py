from __future__ import annotations

import json

import pytest

from lagrev.verify import (
    check_eq16_constant,
    check_eq18_eta,
    emit_report,
    report_as_dict,
    run_suite,
)

VALID_STATUSES = {"pass", "fail", "recorded", "skipped"}


@pytest.fixture(scope="module")
def classical():
    return run_suite("classical")


@pytest.fixture(scope="module")
def paper():
    return run_suite("paper")


class TestClassicalSuite:
    def test_all_pass(self, classical):
        assert all(c.status == "pass" for c in classical.checks)

    def test_at_least_fifteen(self, classical):
        assert len(classical.checks) >= 15

    def test_tier(self, classical):
        assert all(c.tier == "A" for c in classical.checks)

    def test_sorted_by_id(self, classical):
        ids = [c.id for c in classical.checks]
        assert ids == sorted(ids)

    def test_pass_iff_below_tolerance(self, classical):
        for c in classical.checks:
            assert (c.status == "pass") == (c.max_abs_error < c.tolerance)


class TestPaperSuite:
    def test_statuses_valid(self, paper):
        assert all(c.status in VALID_STATUSES for c in paper.checks)

    def test_no_failures(self, paper):
        # the recorded entries are findings; nothing should outright fail
        assert not any(c.status == "fail" for c in paper.checks)

    def test_recorded_findings_present(self, paper):
        recorded = {c.id for c in paper.checks if c.status == "recorded"}
        assert "coefficient_prefactor" in recorded
        assert "modular_sum_constant" in recorded
        assert "thm19_small_r_range" in recorded

    def test_fitted_constants_in_notes(self, paper):
        by_id = {c.id: c for c in paper.checks}
        assert "0.3" in by_id["lambert_involution"].notes
        assert "fitted" in by_id["thm20_shift_fit"].notes


class TestNamedChecks:
    def test_eq16(self):
        c = check_eq16_constant()
        assert c.status == "recorded"
        assert c.max_abs_error < 1e-8
        assert "-8.413" in c.notes

    def test_eq18(self):
        c = check_eq18_eta()
        assert c.status == "pass"
        assert c.max_abs_error < 1e-6


class TestReports:
    def test_determinism(self, classical):
        again = run_suite("classical")
        assert report_as_dict(again) == report_as_dict(classical)

    def test_empty_suite(self):
        report = run_suite("nosuch")
        assert report.checks == ()
        assert report_as_dict(report)["checks"] == []

    def test_field_order(self, classical):
        d = report_as_dict(classical)
        assert list(d) == ["suite", "tolerance_default", "versions", "checks"]
        assert list(d["versions"]) == ["engine"]
        for c in d["checks"]:
            assert list(c) == [
                "id",
                "tier",
                "status",
                "max_abs_error",
                "tolerance",
                "samples",
                "notes",
            ]

    def test_emit_round_trip(self, classical, tmp_path):
        path = tmp_path / "report.json"
        emit_report(classical, path)
        with open(path, encoding="utf-8") as fh:
            assert json.load(fh) == report_as_dict(classical)

    def test_tolerance_override(self):
        report = run_suite("classical", tol=1e-6)
        assert report.tolerance_default == 1e-6

    def test_all_suite_contains_both_tiers(self):
        report = run_suite("all")
        tiers = {c.tier for c in report.checks}
        assert tiers == {"A", "B"}
