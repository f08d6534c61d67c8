"""Production technologies F(k) = A f(k)."""
import logging
from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np

from ..config import SAMPLE_HIGH, SAMPLE_LOW, SAMPLE_POINTS

logger = logging.getLogger(__name__)


class TechnologyKind(str, Enum):
    LINEAR = 'linear'
    COBB_DOUGLAS = 'cobb_douglas'
    CUSTOM = 'custom'


def sample_grid():
    """Log-spaced capital grid used for sampled admissibility checks."""
    return np.logspace(np.log10(SAMPLE_LOW), np.log10(SAMPLE_HIGH), SAMPLE_POINTS)


@dataclass(frozen=True)
class Technology:
    """
    A producer's technology.

    Linear technologies use f(k) = k, Cobb-Douglas ones f(k) = k**alpha, and
    custom ones take the caller's f and f_prime. The derivative of a custom f
    is never approximated numerically.

    Attributes:
        kind: Technology family
        A: TFP scale, positive
        alpha: Capital share for Cobb-Douglas
        f: Base production function for custom technologies
        f_prime: Derivative of f for custom technologies
        elasticity_limit: Optional known limit of k f'(k)/f(k) as k grows
    """

    kind: TechnologyKind
    A: float
    alpha: float | None = None
    f: object = field(default=None, compare=False, repr=False)
    f_prime: object = field(default=None, compare=False, repr=False)
    elasticity_limit: float | None = None

    @classmethod
    def linear(cls, A):
        return cls(TechnologyKind.LINEAR, float(A))

    @classmethod
    def cobb_douglas(cls, A, alpha):
        return cls(TechnologyKind.COBB_DOUGLAS, float(A), alpha=float(alpha))

    @classmethod
    def custom(cls, A, f, f_prime, elasticity_limit=None):
        return cls(TechnologyKind.CUSTOM, float(A), f=f, f_prime=f_prime,
                   elasticity_limit=elasticity_limit)

    @property
    def is_linear(self):
        return self.kind is TechnologyKind.LINEAR

    def base(self, k):
        """Evaluate f(k)."""
        if self.kind is TechnologyKind.LINEAR:
            return k
        if self.kind is TechnologyKind.COBB_DOUGLAS:
            return np.power(k, self.alpha)
        return self.f(k)

    def base_prime(self, k):
        """Evaluate f'(k)."""
        if self.kind is TechnologyKind.LINEAR:
            return np.ones_like(k) if isinstance(k, np.ndarray) else 1.0
        if self.kind is TechnologyKind.COBB_DOUGLAS:
            return self.alpha * np.power(k, self.alpha - 1.0)
        return self.f_prime(k)

    def output(self, k):
        """Evaluate F(k) = A f(k)."""
        return self.A * self.base(k)

    def marginal(self, k):
        """Evaluate F'(k) = A f'(k)."""
        return self.A * self.base_prime(k)

    def elasticity(self, k):
        """Output elasticity k f'(k) / f(k)."""
        return k * self.base_prime(k) / self.base(k)

    def limit_elasticity(self):
        """
        Limit of k f'(k)/f(k) as k grows.

        Credit constraints of agents whose credit limit is at or above this
        value never bind.

        Returns:
            float: 1 for linear, alpha for Cobb-Douglas, the supplied limit or
            the largest sampled elasticity for custom technologies
        """
        if self.kind is TechnologyKind.LINEAR:
            return 1.0
        if self.kind is TechnologyKind.COBB_DOUGLAS:
            return self.alpha
        if self.elasticity_limit is not None:
            return self.elasticity_limit
        return float(np.max(self.elasticity(sample_grid())))

    def scaled(self, x):
        """Return the technology with A multiplied by x."""
        return replace(self, A=self.A * x)

    def with_A(self, A):
        return replace(self, A=float(A))

    def admissibility_violations(self):
        """
        Check the technology's shape rules.

        Custom technologies are sampled on the log grid: f(0) = 0, f strictly
        increasing, f strictly concave, and k f'/f nondecreasing.

        Returns:
            list: Names of violated rules
        """
        problems = []
        if not self.A > 0:
            problems.append('nonpositive productivity')
        if self.kind is TechnologyKind.COBB_DOUGLAS:
            if self.alpha is None or not 0 < self.alpha < 1:
                problems.append('alpha out of (0,1)')
        if self.kind is not TechnologyKind.CUSTOM:
            return problems

        if self.f is None or self.f_prime is None:
            problems.append('custom technology needs f and f_prime')
            return problems

        grid = sample_grid()
        values = np.asarray([self.f(k) for k in grid], dtype=float)
        slopes = np.asarray([self.f_prime(k) for k in grid], dtype=float)

        if abs(float(self.f(0.0))) > 0:
            problems.append('f(0) != 0')
        if np.any(np.diff(values) <= 0) or np.any(slopes <= 0):
            problems.append('f not strictly increasing')
        if np.any(np.diff(slopes) >= 0):
            problems.append('f not strictly concave')
        ratio = grid * slopes / values
        # Allow rounding noise on flat elasticity curves
        if np.any(np.diff(ratio) < -1e-12 * np.abs(ratio[1:])):
            problems.append('elasticity k f\'/f decreasing')

        if problems:
            logger.debug("Custom technology failed sampling: %s", problems)
        return problems
