"""Exceptions raised by the check harness."""

from delannoy_schroder.core.exact.errors import DelannoyError


class UnknownIdError(DelannoyError):
    """No catalog entry has the requested id."""

    pass


class MissingParamError(DelannoyError):
    """A check was requested without one of its required parameters."""

    pass


class PredicateViolatedError(DelannoyError):
    """Parameters are ill-formed for the check, as opposed to merely not applicable."""

    pass


class ReportWriteError(DelannoyError):
    """The report could not be written to its destination."""

    pass
