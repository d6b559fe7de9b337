"""
Verification reports.
A report is an ordered list of named checks, each with a PASS/WARN/FAIL status.
"""
import logging

from discrete_wigner.base.constants import Status

_LOG = logging.getLogger(__name__)


class CheckResult(object):
    """
    Outcome of a single named check.
    """

    def __init__(self, name, status, detail="", residual=None, data=None):
        """
        :param str name: The check name, ex: "mub.unbiased.d4"
        :param Status status: The check outcome.
        :param str detail: A human readable explanation.
        :param float residual: The numeric deviation measured by the check, if any.
        :param dict data: Extra structured values to expose in reports.
        """
        self.name = name
        self.status = Status(status)
        self.detail = detail
        self.residual = residual
        self.data = data or {}

    def __repr__(self):
        return "<CheckResult %s %s>" % (self.name, self.status.value)

    def __str__(self):
        text = "[%s] %s" % (self.status.value, self.name)
        if self.residual is not None:
            text += " (residual %.3g)" % self.residual
        if self.detail:
            text += ": %s" % self.detail
        return text

    def to_dict(self):
        """
        :return: A json-compatible representation.
        :rtype: dict
        """
        return {
            "name": self.name,
            "status": self.status.value,
            "detail": self.detail,
            "residual": self.residual,
            "data": self.data,
        }


class Report(object):
    """
    Ordered collection of check results.
    """

    def __init__(self, title, checks=None):
        self.title = title
        self.checks = list(checks or [])

    def __repr__(self):
        return "<Report %r %d checks>" % (self.title, len(self.checks))

    def __iter__(self):
        return iter(self.checks)

    def __len__(self):
        return len(self.checks)

    def add(self, name, status, detail="", residual=None, data=None):
        """
        Register a new check.

        :return: The registered check.
        :rtype: CheckResult
        """
        check = CheckResult(name, status, detail=detail, residual=residual, data=data)
        if check.status is Status.failed:
            _LOG.error("%s", check)
        elif check.status is Status.warning:
            _LOG.warning("%s", check)
        else:
            _LOG.debug("%s", check)
        self.checks.append(check)
        return check

    def add_threshold(self, name, residual, tol, detail="", warn=False, data=None):
        """
        Register a check that passes when a residual is below a tolerance.

        :param str name: The check name.
        :param float residual: The measured deviation.
        :param float tol: The tolerance.
        :param str detail: A human readable explanation.
        :param bool warn: If True, exceeding the tolerance is a WARN instead of a FAIL.
        :return: The registered check.
        :rtype: CheckResult
        """
        if residual <= tol:
            status = Status.passed
        else:
            status = Status.warning if warn else Status.failed
        return self.add(name, status, detail=detail, residual=float(residual), data=data)

    def extend(self, other, prefix=""):
        """
        Append every check of another report.

        :param Report other: The report to merge.
        :param str prefix: A prefix added to the merged check names.
        """
        for check in other:
            if prefix:
                check.name = "%s.%s" % (prefix, check.name)
            self.checks.append(check)

    def get(self, name):
        """
        :param str name: A check name.
        :return: The first check with that name.
        :rtype: CheckResult
        :raise KeyError: If no check has that name.
        """
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def count(self, status):
        """
        :param Status status: A status.
        :return: The number of checks with that status.
        :rtype: int
        """
        return sum(1 for check in self.checks if check.status is Status(status))

    @property
    def ok(self):
        """
        :return: True if no check failed.
        :rtype: bool
        """
        return self.count(Status.failed) == 0

    @property
    def violations(self):
        """
        :return: The checks that did not pass.
        :rtype: list(CheckResult)
        """
        return [check for check in self.checks if check.status is not Status.passed]

    def summary(self):
        """
        :return: A one-line count summary.
        :rtype: str
        """
        return "%s: %d PASS, %d WARN, %d FAIL" % (
            self.title,
            self.count(Status.passed),
            self.count(Status.warning),
            self.count(Status.failed),
        )

    def to_dict(self):
        """
        :return: A json-compatible representation.
        :rtype: dict
        """
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [check.to_dict() for check in self.checks],
        }
