"""Exception and warning types shared across the package."""


class PcalibError(ValueError):
    """Base class for all errors raised on invalid inputs."""


class DomainError(PcalibError):
    """Argument outside the mathematical domain of a function."""


class BracketError(PcalibError):
    """Root-finding target does not lie inside the supplied bracket."""


class DegenerateBracketError(PcalibError):
    """A bracketed log argument such as ``chi2 + q*log(n) + C`` is not positive."""


class DegreesOfFreedomError(PcalibError):
    """Sample size too small for the number of parameters."""


class DesignError(PcalibError):
    """Invalid design quantity (non-positive determinant ratio, bad shapes)."""


class CollinearityError(DesignError):
    """Predictors are perfectly correlated."""


class ConfigurationError(PcalibError):
    """A required constant was not supplied."""


class DegenerateLikelihoodError(PcalibError):
    """Likelihood vanishes identically for the supplied null value."""


class DataError(PcalibError):
    """Malformed input data file."""


class DegenerateInputWarning(UserWarning):
    """Input sits on a boundary where only a limiting value is returned."""
