"""Independent check of the sufficient equilibrium conditions on a path.

With log utility the multipliers are recovered from consumption alone:
lambda_{i,t} = beta_i^t / c_{i,t}, mu_{i,t+1} from the Euler equation of the
bond and eta_{i,t} from the capital first-order condition. Everything is
reported scaled by lambda_{i,t+1} so residuals are dimensionless.
"""
import logging
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from ..config import TVC_TOL, VERIFY_TOL

logger = logging.getLogger(__name__)

# Final periods over which the transversality proxy must decay
TVC_WINDOW = 10

CONDITIONS = [
    'budget', 'savings', 'output', 'market_clearing', 'borrowing',
    'mu', 'eta', 'slackness_k', 'slackness_mu', 'feasibility',
]


@dataclass(frozen=True)
class Multipliers:
    """
    Recovered multipliers.

    Attributes:
        lambda_: beta_i^t / c_{i,t}, shape (m, T+1)
        mu: Borrowing-constraint multipliers, column t+1 for t = 0..T-1
        eta: Nonnegativity multipliers on capital, column t for t = 0..T-1
    """

    lambda_: np.ndarray
    mu: np.ndarray
    eta: np.ndarray


@dataclass(frozen=True)
class VerificationReport:
    """
    Outcome of verify_path.

    Attributes:
        residuals: DataFrame indexed by date, one column per condition,
            holding the largest violation over agents
        multipliers: Multipliers
        tvc_proxy: max_i lambda_{i,T} s_{i,T}
        tvc_decay: max_i of the proxy's last one-period ratio
        tvc_ok: Every agent's proxy is below tvc_tol or has decayed at
            no more than its own beta over the final TVC_WINDOW periods
        failures: (period, condition, agent_id, value) tuples
        tol: Residual tolerance used
        tvc_tol: Proxy threshold used
    """

    residuals: pd.DataFrame
    multipliers: Multipliers
    tvc_proxy: float
    tvc_decay: float
    tvc_ok: bool
    failures: list = field(default_factory=list)
    tol: float = VERIFY_TOL
    tvc_tol: float = TVC_TOL

    @property
    def passed(self):
        return not self.failures and self.tvc_ok

    @property
    def max_residual(self):
        values = self.residuals.to_numpy(dtype=float)
        return float(np.nanmax(values)) if np.isfinite(values).any() else 0.0

    def first_failure(self):
        return self.failures[0] if self.failures else None


def _shifted(values, fill):
    # values[:, t-1] moved to column t
    out = np.full_like(values, fill)
    out[:, 1:] = values[:, :-1]
    return out


def verify_path(economy, path, tol=VERIFY_TOL, tvc_tol=TVC_TOL):
    """
    Check budgets, market clearing, constraints, first-order conditions,
    complementary slackness and transversality on dates 0..T.

    Never raises for a failing path; the report carries the verdict.

    Args:
        economy: DynamicEconomy the path claims to solve
        path: EquilibriumPath
        tol: Residual tolerance
        tvc_tol: Threshold on the transversality proxy

    Returns:
        VerificationReport: Residuals, multipliers and verdict
    """
    T, m = path.T, path.m
    ids = list(path.ids)
    beta = economy.beta[:, None]
    gamma = economy.gamma[:, None]
    A = economy.productivity_matrix(T)  # column t is A_t
    R = path.rates
    k, b, c, s = path.capital, path.assets, path.consumption, path.savings

    A_now = np.where(np.isnan(A[:, :T + 1]), 0.0, A[:, :T + 1])
    R_now = np.nan_to_num(R[:T + 1])[None, :]
    k_prev, b_prev = _shifted(k, 0.0), _shifted(b, 0.0)
    wealth = A_now * k_prev - R_now * b_prev
    wealth[:, 0] = economy.w0

    scale = np.maximum(1.0, np.abs(A_now * k_prev) + np.abs(R_now * b_prev)
                       + np.abs(c) + np.abs(k) + np.abs(b))
    scale[:, 0] = np.maximum(scale[:, 0], np.abs(economy.w0))

    agent_checks = {}
    aggregate_checks = {}

    agent_checks['budget'] = np.abs(c + k - b - wealth) / scale
    agent_checks['savings'] = np.abs(s - (k - b)) / scale

    output = np.full(T + 1, 0.0)
    if T >= 1:
        recomputed = np.sum(A[:, 1:T + 1] * k[:, :T], axis=0)
        output[1:] = np.abs(path.output[1:] - recomputed) / np.maximum(1.0, np.abs(recomputed))
    aggregate_checks['output'] = output
    aggregate_checks['market_clearing'] = (
        np.abs(b.sum(axis=0)) / np.maximum(1.0, np.abs(b).sum(axis=0)))

    A_next = A[:, 1:T + 2]
    R_next = R[1:T + 2][None, :]
    pledge = gamma * A_next * k
    scale_next = np.maximum(scale, np.abs(R_next * b) + np.abs(pledge))
    agent_checks['borrowing'] = np.maximum(0.0, R_next * b - pledge) / scale_next
    agent_checks['feasibility'] = np.maximum(
        np.maximum(0.0, -k / scale), np.where(c > 0, 0.0, 1.0))

    mu_tilde = np.full((m, T + 1), np.nan)
    eta_tilde = np.full((m, T + 1), np.nan)
    if T >= 1:
        growth = c[:, 1:] / c[:, :-1]
        mu_tilde[:, :T] = growth / (beta * R[1:T + 1][None, :]) - 1.0
        eta_tilde[:, :T] = growth / beta - A[:, 1:T + 1] * (1.0 + gamma * mu_tilde[:, :T])

    agent_checks['mu'] = np.nan_to_num(np.maximum(0.0, -mu_tilde))
    agent_checks['eta'] = np.nan_to_num(np.maximum(0.0, -eta_tilde))
    agent_checks['slackness_k'] = np.nan_to_num(np.abs(eta_tilde * k / scale))
    slack = gamma * A_next * k - R_next * b
    agent_checks['slackness_mu'] = np.nan_to_num(np.abs(mu_tilde * slack / scale_next))

    lambda_ = np.power(beta, np.arange(T + 1)[None, :]) / c
    mu = np.full((m, T + 2), np.nan)
    eta = np.full((m, T + 1), np.nan)
    if T >= 1:
        mu[:, 1:T + 1] = mu_tilde[:, :T] * lambda_[:, 1:]
        eta[:, :T] = eta_tilde[:, :T] * lambda_[:, 1:]
    multipliers = Multipliers(lambda_=lambda_, mu=mu, eta=eta)

    failures = []
    columns = {}
    for name in CONDITIONS:
        if name in agent_checks:
            values = agent_checks[name]
            columns[name] = values.max(axis=0)
            bad_i, bad_t = np.nonzero(values > tol)
            failures.extend((int(t), name, ids[i], float(values[i, t])) for i, t in zip(bad_i, bad_t))
        else:
            values = aggregate_checks[name]
            columns[name] = values
            failures.extend((int(t), name, None, float(values[t])) for t in np.nonzero(values > tol)[0])
    failures.sort(key=lambda f: (f[0], CONDITIONS.index(f[1])))

    residuals = pd.DataFrame(columns, index=pd.RangeIndex(T + 1, name='t'))

    # lambda_{i,t} (k_{i,t} - b_{i,t}), the discounted value of terminal assets
    with np.errstate(divide='ignore', invalid='ignore'):
        proxy_series = lambda_ * s
    tvc_proxy = float(np.max(proxy_series[:, T]))
    small = proxy_series[:, T] <= tvc_tol
    if T >= 1:
        window = min(T, TVC_WINDOW)
        with np.errstate(divide='ignore', invalid='ignore'):
            ratios = proxy_series[:, T - window + 1:] / proxy_series[:, T - window:T]
        tvc_decay = float(np.max(ratios[:, -1]))
        # Each agent's proxy must shrink at least at its own discount rate
        decaying = (np.all(np.isfinite(ratios), axis=1) & np.all(ratios <= beta + tol, axis=1)
                    & np.all(ratios < 1.0, axis=1))
    else:
        tvc_decay = float('nan')
        decaying = np.zeros(m, dtype=bool)
    tvc_ok = bool(np.all(small | decaying))

    report = VerificationReport(residuals=residuals, multipliers=multipliers,
                                tvc_proxy=tvc_proxy, tvc_decay=tvc_decay, tvc_ok=tvc_ok,
                                failures=failures, tol=tol, tvc_tol=tvc_tol)
    if not report.passed:
        first = report.first_failure()
        logger.warning("Path %s fails verification%s", path.hypothesis.name,
                       f' at t={first[0]} ({first[1]}, agent {first[2]})' if first else ' (TVC)')
    return report
