"""Tolerances and environment settings for credit-equilibrium."""
import os
from dataclasses import dataclass, replace

# Absolute tolerance on sum of asset holdings
MARKET_CLEARING_TOL = 1e-9

# Relative tolerance handed to the root finders
ROOT_TOL = 1e-12

# Residual tolerance for the dynamic path verifier
VERIFY_TOL = 1e-9

# Threshold on the transversality proxy
TVC_TOL = 1e-6

MAX_ITERATIONS = 200

# Log-spaced grid used to sample custom technologies
SAMPLE_POINTS = 64
SAMPLE_LOW = 1e-6
SAMPLE_HIGH = 1e6

# Default truncation horizon for infinite-horizon objects
DEFAULT_HORIZON = 100

# Log level for the command line - never affects solving
LOG_LEVEL = os.getenv('CREDIT_EQ_LOG_LEVEL', 'WARNING')

# Directory for bare output file names
OUTPUT_DIR = os.getenv('CREDIT_EQ_OUTPUT_DIR', '.')


@dataclass(frozen=True)
class Tolerances:
    """Bundle of numerical tolerances, overridable per call."""

    market_clearing: float = MARKET_CLEARING_TOL
    root: float = ROOT_TOL
    verify: float = VERIFY_TOL
    tvc: float = TVC_TOL
    max_iterations: int = MAX_ITERATIONS

    def with_verify(self, tol):
        """Return a copy with the verifier tolerance replaced."""
        return replace(self, verify=tol)

    def as_dict(self):
        return {
            'market_clearing': self.market_clearing,
            'root': self.root,
            'verify': self.verify,
            'tvc': self.tvc,
            'max_iterations': self.max_iterations,
        }


DEFAULT_TOLERANCES = Tolerances()
