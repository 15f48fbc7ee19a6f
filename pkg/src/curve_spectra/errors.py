"""Exception hierarchy shared by every module of the package."""


class CurveSpectraError(Exception):
    """Base class for all errors raised by curve_spectra."""


class ParseError(CurveSpectraError):
    """The input is not well-formed JSON."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class SchemaError(CurveSpectraError):
    """A required field is missing or has the wrong type."""

    def __init__(self, field, detail=""):
        msg = f"schema error in field {field!r}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.field = field


class InvalidConfiguration(CurveSpectraError):
    """Raised when an operation needs a valid configuration and did not get one."""

    def __init__(self, report):
        super().__init__(f"invalid configuration: {report}")
        self.report = report


class NonOrientableOrInconsistent(CurveSpectraError):
    """The Euler characteristic bookkeeping has no orientable solution."""


class ReductionToDisjoint(CurveSpectraError):
    """Bigon removal would leave the two curves disjoint."""


class PreconditionViolated(CurveSpectraError):
    pass


class NotDistanceTwo(CurveSpectraError):
    def __init__(self, distance):
        super().__init__(f"configuration is not at distance 2 (got {distance.value})")
        self.distance = distance


class NoPairFound(CurveSpectraError):
    """Bounded search exhausted without a certified filling pair.

    This says nothing about existence; raise ``max_v`` and retry.
    """

    def __init__(self, key, max_v):
        super().__init__(f"no filling pair of type {key} found with V <= {max_v}")
        self.key = key
        self.max_v = max_v


class OutOfSpectrum(CurveSpectraError):
    def __init__(self, genus, punctures, k, allowed):
        super().__init__(
            f"k={k} is not in the distance-2 spectrum of ({genus}, {punctures}): "
            f"{sorted(allowed)}"
        )
        self.k = k


class SporadicSurface(CurveSpectraError):
    """The surface type carries no pair of disjoint essential curves."""


class CertificationFailed(CurveSpectraError):
    """An engine recount disagreed with the count a builder promised."""
