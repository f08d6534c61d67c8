"""Analytic output derivatives along Ramsey paths."""
import logging

import numpy as np

from ..errors import RegimeMismatchError

logger = logging.getLogger(__name__)


def _stationary_A(economy):
    if not economy.is_stationary:
        raise RegimeMismatchError('analytic path derivatives need stationary productivities')
    return economy.productivity(1)


def dYt_dGamma_analytic(economy, path, v, t):
    """
    dY_t / dgamma_v along an interior-then-A_h path.

    Date-0 borrowers n..m produce at R_1, so Y_1 responds to gamma_v through
    R_1 and, when v borrows, through its own leverage. From date 1 on the
    rate is A_h and the response propagates through date-1 savings and the
    geometric leverage factors of agents above h.

    Args:
        economy: Stationary DynamicEconomy the path was built from
        path: EquilibriumPath of kind interior_then_Ah (m1mh included)
        v: Agent id whose credit limit moves
        t: Date, 1 <= t <= path.T

    Returns:
        float: The derivative

    Raises:
        RegimeMismatchError: For other path kinds or time-varying productivities
    """
    hyp = path.hypothesis
    if hyp.kind != 'interior_then_Ah':
        raise RegimeMismatchError(f'path {hyp.name} is not interior_then_Ah')
    if not 1 <= t <= path.T:
        raise ValueError(f't={t} outside 1..{path.T}')
    A = _stationary_A(economy)
    beta, gamma = economy.beta, economy.gamma
    p = economy.index_of(v)
    n, h = hyp.n, hyp.h

    R1 = path.rates[1]
    s0, s1 = path.savings[:, 0], path.savings[:, 1]
    borrowers = np.arange(economy.m) >= n - 1
    pledge = gamma * A

    gap = (R1 - pledge) ** 2
    denom = np.sum((pledge * s0 / gap)[borrowers])
    dR = R1 * A[p] * s0[p] / gap[p] / denom if borrowers[p] else 0.0

    if t == 1:
        dY = -dR * np.sum((pledge * A * s0 / gap)[borrowers])
        if borrowers[p]:
            dY += A[p] ** 2 * R1 * s0[p] / gap[p]
        return float(dY)

    ds1 = np.where(borrowers, 0.0, beta * s0 * dR)
    direct = np.zeros(economy.m)
    direct[p] = R1 * (A[p] - R1) / gap[p]
    ds1 = np.where(borrowers,
                   beta * A * s0 * (-(1 - gamma) * pledge / gap * dR + direct),
                   ds1)

    tau = t - 1
    A_h = A[h - 1]
    above = np.arange(economy.m) >= h
    c = (1 - gamma) * A / (A_h - pledge)
    total = np.sum((beta ** (tau - 1) * ds1)[~above])
    total += np.sum((beta ** (tau - 1) * c ** tau * ds1)[above])
    if above[p]:
        dc = A[p] * (A[p] - A_h) / (A_h - pledge[p]) ** 2
        total += beta[p] ** (tau - 1) * tau * c[p] ** (tau - 1) * dc * s1[p]
    return float(A_h ** tau * total)


def dYt_dAh_analytic(economy, h, t):
    """
    dY_t / dA_h along the stationary R_t = A_h path.

    Returns:
        float: t A_h^(t-1) [sum_{i<=h} beta_i^(t-1) s_i
               - sum_{j>h} x_j^(t-1) (1-gamma_j) gamma_j A_j^2 / (A_h - gamma_j A_j)^2 s_j]
               with x_j = beta_j (1-gamma_j) A_j / (A_h - gamma_j A_j)
    """
    A = _stationary_A(economy)
    beta, gamma, s0 = economy.beta, economy.gamma, economy.s0
    A_h = A[h - 1]
    j = slice(h, None)
    x = beta[j] * (1 - gamma[j]) * A[j] / (A_h - gamma[j] * A[j])
    drag = (1 - gamma[j]) * gamma[j] * A[j] ** 2 / (A_h - gamma[j] * A[j]) ** 2
    inner = np.sum(beta[:h] ** (t - 1) * s0[:h]) - np.sum(x ** (t - 1) * drag * s0[j])
    return float(t * A_h ** (t - 1) * inner)


def ah_shock_sign(economy, h):
    """
    Classify the response of output to a permanent rise in A_h.

    Returns:
        str: 'increasing' when output rises at every date, 'negative then
            nonnegative' when it first falls and eventually recovers,
            'indeterminate sign' otherwise
    """
    A = _stationary_A(economy)
    beta, gamma, s0 = economy.beta, economy.gamma, economy.s0
    A_h = A[h - 1]
    j = slice(h, None)
    drag = np.sum((1 - gamma[j]) * gamma[j] * A[j] ** 2 / (A_h - gamma[j] * A[j]) ** 2 * s0[j])
    patient = np.sum(s0[:h][np.isclose(beta[:h], beta[h - 1])])
    if patient > drag:
        return 'increasing'
    if np.sum(s0[:h]) < drag:
        return 'negative then nonnegative'
    return 'indeterminate sign'


def first_persistent_sign_date(values, sign, start=1):
    """
    First date t0 >= start from which values[t] keeps the given sign.

    Args:
        values: Sequence indexed by date
        sign: +1 for strictly positive, -1 for strictly negative
        start: First date considered

    Returns:
        int | None: t0, or None if the last value has the other sign
    """
    values = np.asarray(values, dtype=float)
    dates = np.arange(len(values))
    ok = np.sign(values) == np.sign(sign)
    ok = ok | (dates < start)
    if len(values) <= start or not ok[-1]:
        return None
    bad = np.nonzero(~ok)[0]
    return int(bad[-1] + 1) if bad.size else int(start)
