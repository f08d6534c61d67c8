"""Path constructors for the Ramsey economy."""
import logging

import numpy as np

from ..errors import ConditionFailure, RegimeMismatchError, SolverError
from ..models import RegimeKind, StaticEconomy
from ..solvers import classify_regime
from .closed_forms import output_closed_form_magents, rate_closed_form_interior_all
from .engine import roll_forward
from .models import RegimeHypothesis

logger = logging.getLogger(__name__)

# Agreement required between a general construction and its closed form
CLOSED_FORM_TOL = 1e-10


def _horizon(economy, T):
    return economy.horizon if T is None else int(T)


def _require_ordering(economy, T):
    A = economy.productivity_matrix(T)
    for t in range(1, T + 2):
        if np.any(np.diff(A[:, t]) <= 0):
            raise ConditionFailure(t - 1, 'productivities strictly increasing')


def _check_position(economy, index, label):
    if not 1 <= index <= economy.m:
        raise RegimeMismatchError(f'{label}={index} outside 1..{economy.m}')


def construct_path_Ah(economy, h, T=None):
    """
    Path with R_t = A_{h,t} at every date.

    Agents below h lend everything, agents above h borrow to their limit and
    agent h absorbs the rest of the funds.

    Args:
        economy: DynamicEconomy
        h: One-based position of the marginal producer
        T: Horizon, defaults to economy.horizon

    Returns:
        EquilibriumPath: The path

    Raises:
        ConditionFailure: At the first date where k_h <= 0 or agent h's
            constraint is violated
    """
    T = _horizon(economy, T)
    _check_position(economy, h, 'h')
    _require_ordering(economy, T)
    return roll_forward(economy, T, lambda t, s, A: ('tfp', h), RegimeHypothesis('Ah', h=h))


def construct_frictionless_path(economy, T=None):
    """The R_t = A_m path, which coincides with the frictionless equilibrium when valid."""
    return construct_path_Ah(economy, economy.m, T)


def _interior_then_tfp(economy, n, h, T):
    _check_position(economy, n, 'n')
    _check_position(economy, h, 'h')
    _require_ordering(economy, T)
    schedule = lambda t, s, A: ('interior', n) if t == 0 else ('tfp', h)  # noqa: E731
    return roll_forward(economy, T, schedule, RegimeHypothesis('interior_then_Ah', n=n, h=h))


def construct_path_interior_then_Ah(economy, n, h, T=None):
    """
    Path with an interior date-0 rate and R_t = A_h afterwards.

    At date 0 agents below n lend and agents n..m borrow to the limit, with
    A_{n-1} < R_1 < A_n. When n = h = m the result is cross-checked against
    the all-capital-to-agent-m closed form.

    Args:
        economy: DynamicEconomy
        n: First date-0 borrower (one-based, at least 2)
        h: Marginal producer from date 1 on, n <= h
        T: Horizon

    Returns:
        EquilibriumPath: The path
    """
    T = _horizon(economy, T)
    if not 2 <= n <= h:
        raise RegimeMismatchError(f'need 2 <= n <= h, got n={n}, h={h}')
    path = _interior_then_tfp(economy, n, h, T)
    if n == h == economy.m:
        expected = output_closed_form_magents(economy, T)
        _compare(path.output[1:], expected[1:], 'output closed form (n=h=m)')
    return path


def construct_path_m1mh(economy, h, T=None):
    """
    Path where only agent m borrows at date 0 and R_t = A_h (h < m) afterwards.

    Only agent m produces at date 1; agents h..m produce from date 2 on.
    """
    T = _horizon(economy, T)
    if not 1 <= h < economy.m:
        raise RegimeMismatchError(f'need 1 <= h < m, got h={h}')
    path = _interior_then_tfp(economy, economy.m, h, T)
    rate = economy.gamma[-1] * economy.productivity(1)[-1] * np.sum(economy.s0) / np.sum(economy.s0[:-1])
    _compare(path.rates[1:2], np.array([rate]), 'date-1 rate closed form')
    return path


def construct_path_interior_all(economy, T=None):
    """Path where only agent m borrows at every date and every rate is interior."""
    T = _horizon(economy, T)
    if economy.m < 2:
        raise RegimeMismatchError('interior path needs at least two agents')
    _require_ordering(economy, T)
    m = economy.m
    path = roll_forward(economy, T, lambda t, s, A: ('interior', m),
                        RegimeHypothesis('interior_all'))
    _compare(path.rates[1:T + 1], rate_closed_form_interior_all(economy, T)[1:T + 1],
             'interior rate closed form')
    return path


def simulate_path(economy, T=None):
    """
    Path built by classifying the static market at every date.

    Uses no regime hypothesis, so it serves as an oracle for the
    closed-form constructors.
    """
    T = _horizon(economy, T)
    ids = economy.ids

    def schedule(t, s, A):
        static = StaticEconomy.linear(A, economy.gamma, s, ids=ids)
        regime = classify_regime(static)
        if regime.kind is RegimeKind.AT_TFP:
            return ('tfp', regime.n)
        return ('interior', regime.n + 1)

    _require_ordering(economy, T)
    return roll_forward(economy, T, schedule, RegimeHypothesis('sequential'))


def _compare(actual, expected, what):
    scale = np.maximum(1.0, np.abs(expected))
    gap = np.max(np.abs(actual - expected) / scale) if len(expected) else 0.0
    if not gap <= CLOSED_FORM_TOL:
        raise SolverError(f'{what} disagrees with construction by {gap:.3g}')
