"""Structured pass/fail reports for identity checks."""


class CheckReport:
    """Outcome of verifying one identity up to some level.

    `max_level` is the highest index/degree/block actually checked;
    `first_failure` is None on success, otherwise a small dict locating
    the earliest failing level.  `predicate` names the equality notion
    used (e.g. "exact", "normalized").
    """

    __slots__ = ("identity", "status", "max_level", "first_failure", "predicate", "details")

    def __init__(self, identity, status, max_level, first_failure=None, predicate="exact", details=None):
        if status not in ("pass", "fail"):
            raise ValueError("status must be 'pass' or 'fail'")
        self.identity = identity
        self.status = status
        self.max_level = int(max_level)
        self.first_failure = first_failure
        self.predicate = predicate
        self.details = dict(details or {})

    @property
    def passed(self):
        return self.status == "pass"

    @classmethod
    def passing(cls, identity, max_level, predicate="exact", **details):
        return cls(identity, "pass", max_level, None, predicate, details)

    @classmethod
    def failing(cls, identity, max_level, first_failure, predicate="exact", **details):
        return cls(identity, "fail", max_level, first_failure, predicate, details)

    def to_json(self):
        return {
            "identity": self.identity,
            "status": self.status,
            "max_level": self.max_level,
            "first_failure": self.first_failure,
            "predicate": self.predicate,
            "details": self.details,
        }

    def __repr__(self):
        return "CheckReport(%r, %s, max_level=%d)" % (self.identity, self.status, self.max_level)


def combine(identity, reports, **details):
    """Merge sub-checks: passes iff all pass; failure points at the first bad part."""
    reports = list(reports)
    max_level = min((r.max_level for r in reports), default=0)
    merged = dict(details)
    merged["parts"] = {r.identity: r.status for r in reports}
    for r in reports:
        if not r.passed:
            return CheckReport.failing(
                identity,
                max_level,
                {"part": r.identity, "failure": r.first_failure},
                predicate="composite",
                **merged,
            )
    return CheckReport.passing(identity, max_level, predicate="composite", **merged)
