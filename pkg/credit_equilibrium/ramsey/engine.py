"""Forward recursion shared by every path constructor.

Under log utility each agent saves s = beta W and consumes (1 - beta) W out of
net worth W. Given date-t savings the date-t market is a static linear
economy with wealth s_t and productivities A_{t+1}, so a path is a chain of
static equilibria tied together by net worth.
"""
import logging

import numpy as np

from ..errors import ConditionFailure
from ..solvers import interior_rate
from .models import EquilibriumPath

logger = logging.getLogger(__name__)

# Relative slack on the marginal producer's borrowing constraint
CONSTRAINT_SLACK = 1e-12


def _tfp_step(t, h, A_next, gamma, s):
    # R = A_h: agents below h lend, above h borrow to the limit, h clears
    R = float(A_next[h - 1])
    m = len(s)
    k, b = np.zeros(m), np.zeros(m)
    b[:h - 1] = -s[:h - 1]
    pledge = gamma[h:] * A_next[h:]
    if np.any(R <= pledge):
        raise ConditionFailure(t, 'unbounded borrowing', f'R={R!r}')
    k[h:] = R * s[h:] / (R - pledge)
    b[h:] = pledge * s[h:] / (R - pledge)

    b_h = -(np.sum(b[:h - 1]) + np.sum(b[h:]))
    k_h = s[h - 1] + b_h
    if not k_h > 0:
        raise ConditionFailure(t, f'k_{h} > 0', f'k={k_h!r}')
    limit = gamma[h - 1] * A_next[h - 1] * k_h
    if R * b_h > limit + CONSTRAINT_SLACK * max(1.0, abs(limit)):
        raise ConditionFailure(t, f'borrowing limit of agent {h}', f'Rb={R * b_h!r} > {limit!r}')
    k[h - 1], b[h - 1] = k_h, b_h
    return R, k, b


def _interior_step(t, n, A_next, gamma, s):
    # Agents below n lend, agents n..m borrow to the limit
    if n < 2:
        raise ConditionFailure(t, 'interior regime needs a lender')
    R = interior_rate(A_next, gamma, s, n - 1)
    if not A_next[n - 2] < R < A_next[n - 1]:
        raise ConditionFailure(
            t, f'A_{n - 1} < R < A_{n}',
            f'R={R!r} outside ({A_next[n - 2]!r}, {A_next[n - 1]!r})')
    m = len(s)
    k, b = np.zeros(m), np.zeros(m)
    b[:n - 1] = -s[:n - 1]
    pledge = gamma[n - 1:] * A_next[n - 1:]
    k[n - 1:] = R * s[n - 1:] / (R - pledge)
    b[n - 1:] = pledge * s[n - 1:] / (R - pledge)
    return R, k, b


def roll_forward(economy, T, schedule, hypothesis):
    """
    Build a path date by date from a regime schedule.

    Args:
        economy: DynamicEconomy
        T: Last decision date
        schedule: Callable (t, savings, A_next) -> ('tfp', h) or ('interior', n)
        hypothesis: RegimeHypothesis recorded on the path

    Returns:
        EquilibriumPath: The path

    Raises:
        ConditionFailure: At the first date whose regime is inconsistent
    """
    m = economy.m
    beta, gamma = economy.beta, economy.gamma
    rates = np.full(T + 2, np.nan)
    output = np.full(T + 1, np.nan)
    capital, assets = np.zeros((m, T + 1)), np.zeros((m, T + 1))
    consumption, savings = np.zeros((m, T + 1)), np.zeros((m, T + 1))

    wealth = economy.w0.copy()
    for t in range(T + 1):
        s = beta * wealth
        savings[:, t] = s
        consumption[:, t] = (1 - beta) * wealth
        A_next = economy.productivity(t + 1)

        kind, index = schedule(t, s, A_next)
        if kind == 'tfp':
            R, k, b = _tfp_step(t, index, A_next, gamma, s)
        else:
            R, k, b = _interior_step(t, index, A_next, gamma, s)

        capital[:, t], assets[:, t] = k, b
        rates[t + 1] = R
        if t + 1 <= T:
            output[t + 1] = float(np.sum(A_next * k))
        wealth = A_next * k - R * b

    logger.debug("Built %s path to T=%d", hypothesis.name, T)
    return EquilibriumPath(hypothesis=hypothesis, ids=economy.ids, rates=rates,
                           capital=capital, assets=assets, consumption=consumption,
                           savings=savings, output=output)
