"""Exception types raised across cistkit."""


class CistkitError(Exception):
    """Base class; the CLI maps subclasses to exit code 2."""


class InvalidInput(CistkitError, ValueError):
    pass


class IsolatedVertex(InvalidInput):
    pass


class NotSplit(InvalidInput):
    pass


class TooFewVertices(InvalidInput):
    pass


class Infeasible(CistkitError):
    pass


class InvalidCertificate(CistkitError):
    pass


class InvalidClasses(InvalidInput):
    pass


class NotBipanchromatic(InvalidInput):
    pass


class PreconditionViolated(InvalidInput):
    pass


class TooLarge(InvalidInput):
    pass


class NotConnected(InvalidInput):
    pass


class WitnessInvalid(InvalidInput):
    pass


class FormatError(InvalidInput):
    pass


class VerificationFailure(CistkitError, AssertionError):
    """A constructor produced a certificate that its own verifier rejected.

    Maps to CLI exit code 3.
    """
