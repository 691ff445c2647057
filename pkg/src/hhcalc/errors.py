"""Exception hierarchy.

Every error raised on purpose by the library derives from :class:`HHCalcError`.
The CLI maps :class:`UsageError` subclasses to exit code 2 and everything else
to exit code 1.
"""

from __future__ import annotations


class HHCalcError(Exception):
    """Base class for computation errors."""


class UsageError(HHCalcError):
    """Bad input shape or an unknown name; the caller has to fix the request."""


class NegativeDimension(HHCalcError):
    def __init__(self, degree: int, detail: str = "") -> None:
        self.degree = degree
        msg = f"negative dimension in degree {degree}"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class InvalidSpec(HHCalcError):
    pass


class NotApplicable(HHCalcError):
    pass


class MalformedSummand(HHCalcError):
    pass


class MalformedDatum(HHCalcError):
    pass


class Inconsistent(HHCalcError):
    def __init__(self, degree: int, detail: str = "") -> None:
        self.degree = degree
        msg = f"no consistent assignment in degree {degree}"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class NotAdditive(HHCalcError):
    """Hochschild cohomology was fed to an operation that needs homology."""


class SchemaError(UsageError):
    def __init__(self, path: str, message: str) -> None:
        self.path = path
        super().__init__(f"{path}: {message}")


class UnknownScenario(UsageError):
    pass
