"""Exception hierarchy shared by all kinemetry modules."""


class KinemetryError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(KinemetryError, ValueError):
    """Input violates a documented invariant (convexity, unit norm, ranges...)."""


class UnsupportedError(KinemetryError, NotImplementedError):
    """The operation is not defined for this combination of inputs."""


class IndexRangeError(ValidationError):
    """A Hermitian basis index lies outside its admissible range."""


class FormatError(ValidationError):
    """A JSON document does not follow its schema.

    ``location`` names the offending element, e.g. ``terms[3].k2``.
    """

    def __init__(self, message, location=None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)
