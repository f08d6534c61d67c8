"""Comparative statics of equilibrium output."""
import logging
from dataclasses import dataclass

import numpy as np

from ..errors import RegimeMismatchError
from ..models import RegimeKind, require_valid
from ..solvers import classify_regime, interior_rate, solve_equilibrium

logger = logging.getLogger(__name__)

PARAMETER_NAMES = ('A', 'gamma')


@dataclass(frozen=True)
class Parameter:
    """A perturbable primitive: agent id and one of 'A', 'gamma'."""

    agent_id: int
    name: str

    def __post_init__(self):
        if self.name not in PARAMETER_NAMES:
            raise ValueError(f'unknown parameter {self.name!r}')

    def value(self, econ):
        agent = econ.agent(self.agent_id)
        return agent.A if self.name == 'A' else agent.gamma

    def apply(self, econ, value):
        """Return the economy with this parameter set to value."""
        return econ.replace_agent(self.agent_id, **{self.name: float(value)})

    def __str__(self):
        return f'{self.name}{self.agent_id}'


@dataclass(frozen=True)
class SensitivityReport:
    """
    Analytic and central-difference derivatives of Y in one parameter.

    When the perturbed economies straddle a regime boundary the analytic
    value is withheld and the one-sided differences are reported instead.
    """

    param: Parameter
    analytic: float | None
    finite_diff: float
    regime_boundary_flag: bool
    forward: float
    backward: float

    @property
    def agrees(self):
        if self.analytic is None or self.regime_boundary_flag:
            return True
        return abs(self.analytic - self.finite_diff) <= 1e-5 * (1 + abs(self.analytic))


def _position(econ, agent_id):
    return econ.index_of(agent_id) + 1


def _interior_terms(econ, n):
    # Rate and the borrower-side sums shared by the interior derivatives
    A, gamma, S = econ.productivity, econ.gamma, econ.wealth
    R = interior_rate(A, gamma, S, n)
    A_b, g_b, S_b = A[n:], gamma[n:], S[n:]
    gap = R - g_b * A_b
    slope = float(np.sum(g_b * A_b * S_b / gap ** 2))
    reach = float(np.sum(g_b * A_b ** 2 * S_b / gap ** 2))
    return R, slope, reach


def _linear_regime(econ):
    require_valid(econ)
    if not econ.is_linear:
        raise RegimeMismatchError('analytic derivatives need a linear economy')
    return classify_regime(econ)


def dY_dA_linear(econ, j):
    """
    Derivative of equilibrium output in agent j's productivity.

    Args:
        econ: Linear economy
        j: Agent id

    Returns:
        float: dY/dA_j
    """
    regime = _linear_regime(econ)
    A, gamma, S = econ.productivity, econ.gamma, econ.wealth
    n, p = regime.n, _position(econ, j)

    if regime.kind is RegimeKind.AT_TFP:
        A_n = A[n - 1]
        if p > n:
            g, a, s = gamma[p - 1], A[p - 1], S[p - 1]
            return float(A_n ** 2 * (1 - g) * s / (A_n - g * a) ** 2)
        if p == n:
            tail = gamma[n:], A[n:], S[n:]
            g, a, s = tail
            return float(np.sum(S[:n]) - np.sum((1 - g) * g * s / (A_n / a - g) ** 2))
        return 0.0

    if p <= n:
        return 0.0
    R, slope, reach = _interior_terms(econ, n)
    g, a, s = gamma[p - 1], A[p - 1], S[p - 1]
    gap = R - g * a
    dR = R * g * s / gap ** 2 / slope
    return float(R * s / gap + a * R * g * s / gap ** 2 - dR * reach)


def dR_dGamma_linear(econ, i):
    """Derivative of the rate in agent i's credit limit; zero in AtTFP regimes."""
    regime = _linear_regime(econ)
    n, p = regime.n, _position(econ, i)
    if regime.kind is RegimeKind.AT_TFP or p <= n:
        return 0.0
    R, slope, _ = _interior_terms(econ, n)
    g, a, s = econ.gamma[p - 1], econ.productivity[p - 1], econ.wealth[p - 1]
    return float(R * a * s / (R - g * a) ** 2 / slope)


def dY_dGamma_linear(econ, i):
    """
    Derivative of equilibrium output in agent i's credit limit.

    Args:
        econ: Linear economy
        i: Agent id

    Returns:
        float: dY/dgamma_i
    """
    regime = _linear_regime(econ)
    A, gamma, S = econ.productivity, econ.gamma, econ.wealth
    n, p = regime.n, _position(econ, i)
    if p <= n:
        # Lenders and the marginal agent do not feel their credit limit
        return 0.0
    g, a, s = gamma[p - 1], A[p - 1], S[p - 1]
    if regime.kind is RegimeKind.AT_TFP:
        A_n = A[n - 1]
        return float(A_n * a * s * (a - A_n) / (A_n - g * a) ** 2)
    R, slope, reach = _interior_terms(econ, n)
    dR = R * a * s / (R - g * a) ** 2 / slope
    return float(dR * (a * slope - reach))


def _analytic(econ, param):
    if not econ.is_linear:
        return None
    if param.name == 'A':
        return dY_dA_linear(econ, param.agent_id)
    return dY_dGamma_linear(econ, param.agent_id)


def finite_diff_sensitivity(econ, param, h=None, solver=solve_equilibrium):
    """
    Central-difference derivative of Y with regime-boundary detection.

    Args:
        econ: Admissible economy
        param: Parameter to perturb
        h: Step, defaults to 1e-6 (1 + |x|)
        solver: Static solver returning a StaticEquilibrium

    Returns:
        SensitivityReport: Analytic (linear economies) and numeric derivatives

    Raises:
        ValidationError: If a perturbed economy is not admissible
    """
    x = param.value(econ)
    h = h if h is not None else 1e-6 * (1 + abs(x))
    up = require_valid(param.apply(econ, x + h))
    down = require_valid(param.apply(econ, x - h))

    base, eq_up, eq_down = solver(econ), solver(up), solver(down)
    central = (eq_up.Y - eq_down.Y) / (2 * h)
    forward = (eq_up.Y - base.Y) / h
    backward = (base.Y - eq_down.Y) / h
    boundary = len({str(base.regime), str(eq_up.regime), str(eq_down.regime)}) > 1

    analytic = None
    if not boundary:
        analytic = _analytic(econ, param)
    else:
        logger.info("Perturbing %s crosses a regime boundary (%s, %s)",
                    param, eq_down.regime, eq_up.regime)
    return SensitivityReport(param=param, analytic=analytic, finite_diff=float(central),
                             regime_boundary_flag=boundary,
                             forward=float(forward), backward=float(backward))


def two_agent_turning_point(econ):
    """A_1 at which dY/dA_1 vanishes: gamma_2 A_2 + A_2 sqrt(gamma_2 (1-gamma_2) S_2 / S_1)."""
    if econ.m != 2:
        raise RegimeMismatchError('turning point formula needs two agents')
    (S1, S2), A2, g2 = econ.wealth, econ.productivity[1], econ.gamma[1]
    return float(g2 * A2 + A2 * np.sqrt(g2 * (1 - g2) * S2 / S1))
