"""Validity conditions of the Ramsey path hypotheses.

Dates up to T are checked by building the path. Past T, with stationary
productivities, the marginal producer's capital and borrowing slack are sums
of geometric sequences; the largest base with a nonzero coefficient fixes
their eventual sign, and the dates before it dominates are scanned.
"""
import logging

import numpy as np

from ..errors import ConditionFailure
from .closed_forms import interior_all_rate_limit
from .models import ConditionCheck
from .paths import (
    construct_path_Ah, construct_path_interior_all, construct_path_interior_then_Ah,
    construct_path_m1mh,
)

logger = logging.getLogger(__name__)

# Longest stretch past T that is scanned before giving up
ASYMPTOTIC_CAP = 100_000


def _group(terms):
    # Merge equal bases and drop vanishing coefficients
    merged = {}
    for coef, base in terms:
        key = next((b for b in merged if np.isclose(b, base, rtol=1e-14, atol=0)), base)
        merged[key] = merged.get(key, 0.0) + coef
    biggest = max((abs(c) for c in merged.values()), default=0.0)
    kept = [(c, b) for b, c in merged.items() if abs(c) > 1e-14 * biggest]
    return sorted(kept, key=lambda cb: -cb[1])


def eventual_sign_scan(terms, strict, cap=ASYMPTOTIC_CAP, tol=1e-12):
    """
    Check sum_c coef_c * base_c^tau for tau = 1, 2, ...

    Args:
        terms: (coefficient, base) pairs with positive bases
        strict: Require > 0 instead of >= 0
        cap: Largest tau scanned
        tol: Relative slack for the non-strict check

    Returns:
        tuple: (ok, first failing tau or None)
    """
    grouped = _group(terms)
    if not grouped:
        return (False, 1) if strict else (True, None)
    lead_c, lead_b = grouped[0]
    others = grouped[1:]

    horizon = 1
    for coef, base in others:
        need = np.log(len(others) * abs(coef) / abs(lead_c)) / np.log(lead_b / base)
        horizon = max(horizon, int(np.ceil(need)) + 1)
    horizon = min(horizon, cap)

    taus = np.arange(1, horizon + 1)
    values = np.full(len(taus), lead_c, dtype=float)
    scale = np.full(len(taus), abs(lead_c), dtype=float)
    for coef, base in others:
        decay = np.power(base / lead_b, taus)
        values += coef * decay
        scale += abs(coef) * decay
    bad = values <= 0 if strict else values < -tol * scale
    hits = np.nonzero(bad)[0]
    if hits.size:
        return False, int(taus[hits[0]])
    if lead_c < 0:
        return False, horizon
    return True, None


def _tail_terms(economy, h, x, A):
    beta, gamma = economy.beta, economy.gamma
    A_h = A[h - 1]
    g = gamma[h:] * A[h:] / (A_h - gamma[h:] * A[h:])
    bases = beta[h:] * (1 - gamma[h:]) * A[h:] / (A_h - gamma[h:] * A[h:])
    lower = [(x[i], beta[i]) for i in range(h)]
    lower += [(-gj * xj, bj) for gj, xj, bj in zip(g, x[h:], bases)]
    upper = [(x[h - 1] * gamma[h - 1] / (1 - gamma[h - 1]), beta[h - 1])]
    upper += [(-x[i], beta[i]) for i in range(h - 1)]
    upper += [(gj * xj, bj) for gj, xj, bj in zip(g, x[h:], bases)]
    return lower, upper, bases


def dominance_Ah(economy, h, A=None):
    """
    beta_h = max_{i<=h} beta_i > max_{j>h} beta_j (1-gamma_j) A_j / (A_h - gamma_j A_j).
    """
    A = economy.productivity(economy.stationary_after()) if A is None else A
    beta = economy.beta
    _, _, bases = _tail_terms(economy, h, economy.s0, A)
    top = beta[h - 1] >= np.max(beta[:h])
    return bool(top and (bases.size == 0 or beta[h - 1] > np.max(bases)))


def asymptotic_check_Ah(economy, path, h, T):
    """Dates past T of an R_t = A_h tail, starting from the path's date-T savings."""
    if economy.stationary_after() > T + 1:
        A = economy.productivity(T + 1)
        return ConditionCheck(True, dominance=dominance_Ah(economy, h, A),
                              detail='productivities vary past T; checked through T')
    A = economy.productivity(T + 1)
    dominance = dominance_Ah(economy, h, A)
    lower, upper, _ = _tail_terms(economy, h, path.savings[:, T], A)

    ok, tau = eventual_sign_scan(lower, strict=True)
    if not ok:
        return ConditionCheck(False, T + tau, f'k_{h} > 0', dominance)
    ok, tau = eventual_sign_scan(upper, strict=False)
    if not ok:
        return ConditionCheck(False, T + tau, f'borrowing limit of agent {h}', dominance)
    return ConditionCheck(True, dominance=dominance)


def _checked(build, economy, h, T, name):
    try:
        path = build()
    except ConditionFailure as exc:
        logger.debug("%s fails at t=%s: %s", name, exc.period, exc)
        dominance = dominance_Ah(economy, h) if h is not None else None
        return ConditionCheck(False, exc.period, exc.condition, dominance, str(exc))
    if h is None:
        return path
    return asymptotic_check_Ah(economy, path, h, T)


def check_conditions_Ah(economy, h, T=None):
    """
    Check the R_t = A_h hypothesis on every date.

    Args:
        economy: DynamicEconomy
        h: Marginal producer (one-based)
        T: Horizon checked date by date

    Returns:
        ConditionCheck: Verdict, first failing date and the dominance flag
    """
    T = economy.horizon if T is None else T
    return _checked(lambda: construct_path_Ah(economy, h, T), economy, h, T, f'Ah(h={h})')


def check_conditions_interior_then_Ah(economy, n, h, T=None):
    """Check the interior-then-A_h hypothesis on every date."""
    T = economy.horizon if T is None else T
    return _checked(lambda: construct_path_interior_then_Ah(economy, n, h, T),
                    economy, h, T, f'interior_then_Ah(n={n},h={h})')


def check_conditions_m1mh(economy, h, T=None):
    """Check the only-m-borrows-then-A_h hypothesis on every date."""
    T = economy.horizon if T is None else T
    return _checked(lambda: construct_path_m1mh(economy, h, T), economy, h, T, f'm1mh(h={h})')


def check_conditions_interior_all(economy, T=None):
    """
    Check the always-interior hypothesis.

    Past T the rates fall monotonically toward their limit, so the lower
    bracket A_{m-1} < R_t is scanned until it either fails or the limit
    clears it.
    """
    T = economy.horizon if T is None else T
    result = _checked(lambda: construct_path_interior_all(economy, T), economy, None, T,
                      'interior_all')
    if isinstance(result, ConditionCheck):
        return result
    if economy.stationary_after() > T + 1:
        return ConditionCheck(True, detail='productivities vary past T; checked through T')

    A = economy.productivity(T + 1)
    limit = interior_all_rate_limit(economy)
    dominance = bool(limit > A[-2])
    if dominance:
        return ConditionCheck(True, dominance=True)

    beta, s0, g = economy.beta, economy.s0, economy.gamma[-1]
    lend_beta, lend_s = beta[:-1], s0[:-1]
    top = np.max(lend_beta)
    dates = np.arange(T + 1, T + ASYMPTOTIC_CAP)
    # Normalise by the largest lender discount factor to avoid underflow
    weights = np.power.outer(lend_beta / top, dates - 1) * lend_s[:, None]
    ratio = weights.sum(axis=0) / (weights * (lend_beta / top)[:, None]).sum(axis=0) / top
    rates = A[-1] * (g + (1 - g) * beta[-1] * ratio)
    hits = np.nonzero(rates <= A[-2])[0]
    if hits.size:
        return ConditionCheck(False, int(dates[hits[0]]), f'A_{economy.m - 1} < R < A_{economy.m}',
                              dominance=False)
    return ConditionCheck(True, dominance=False)
