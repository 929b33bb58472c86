"""Calibrating p-values into minimum Bayes factors and posterior bounds."""

__version__ = "0.1.0"

from .adapters import *  # noqa: F401,F403
from .adapters import __all__ as _adapters_all
from .adaptive_alpha import *  # noqa: F401,F403
from .adaptive_alpha import __all__ as _alpha_all
from .bayes_factors import *  # noqa: F401,F403
from .bayes_factors import __all__ as _bf_all
from .calibration import *  # noqa: F401,F403
from .calibration import __all__ as _calibration_all
from .errors import (
    BracketError,
    CollinearityError,
    ConfigurationError,
    DataError,
    DegenerateBracketError,
    DegenerateInputWarning,
    DegenerateLikelihoodError,
    DegreesOfFreedomError,
    DesignError,
    DomainError,
    PcalibError,
)
from .harness import *  # noqa: F401,F403
from .harness import __all__ as _harness_all
from .numerics import *  # noqa: F401,F403
from .numerics import __all__ as _numerics_all

__all__ = [
    "__version__",
    *_calibration_all, *_alpha_all, *_bf_all, *_adapters_all, *_harness_all, *_numerics_all,
    "PcalibError", "DomainError", "BracketError", "DegenerateBracketError",
    "DegreesOfFreedomError", "DesignError", "CollinearityError", "ConfigurationError",
    "DegenerateLikelihoodError", "DataError", "DegenerateInputWarning",
]
