"""CheckReport container and the combine() composite semantics."""

import pytest

from opoly.reports import CheckReport, combine


def test_status_is_validated():
    with pytest.raises(ValueError):
        CheckReport("x", "maybe", 3)


def test_passing_constructor():
    report = CheckReport.passing("x", 5, alpha="1/4")
    assert report.passed
    assert report.status == "pass"
    assert report.max_level == 5
    assert report.first_failure is None
    assert report.predicate == "exact"
    assert report.details == {"alpha": "1/4"}


def test_failing_constructor():
    report = CheckReport.failing("x", 5, {"level": 2}, predicate="normalized")
    assert not report.passed
    assert report.first_failure == {"level": 2}
    assert report.predicate == "normalized"


def test_to_json_shape():
    report = CheckReport.passing("x", 3)
    assert report.to_json() == {
        "identity": "x",
        "status": "pass",
        "max_level": 3,
        "first_failure": None,
        "predicate": "exact",
        "details": {},
    }


def test_combine_passes_when_all_parts_pass():
    report = combine(
        "whole",
        [CheckReport.passing("p1", 4), CheckReport.passing("p2", 7)],
        c="1",
    )
    assert report.passed
    assert report.identity == "whole"
    assert report.max_level == 4  # weakest part bounds the whole
    assert report.predicate == "composite"
    assert report.details["parts"] == {"p1": "pass", "p2": "pass"}
    assert report.details["c"] == "1"


def test_combine_points_at_the_first_failing_part():
    report = combine(
        "whole",
        [
            CheckReport.passing("p1", 4),
            CheckReport.failing("p2", 7, {"block": 3}),
            CheckReport.failing("p3", 2, {"block": 1}),
        ],
    )
    assert not report.passed
    assert report.first_failure == {"part": "p2", "failure": {"block": 3}}
    assert report.details["parts"] == {"p1": "pass", "p2": "fail", "p3": "fail"}


def test_repr_is_compact():
    assert "pass" in repr(CheckReport.passing("x", 3))
