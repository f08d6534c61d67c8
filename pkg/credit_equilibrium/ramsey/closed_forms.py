"""Closed-form outputs, rates and growth of the Ramsey economy."""
from dataclasses import dataclass

import numpy as np


def steady_state_rate(economy):
    """Steady-state gross rate 1 / max_i beta_i."""
    return float(1.0 / np.max(economy.beta))


@dataclass(frozen=True)
class FrictionlessPath:
    """Frictionless output Y*_t and growth G*_t; index 0 (and G* at 1) unused."""

    Y: np.ndarray
    G: np.ndarray


def _cumulative(values):
    # values[t] for t = 1..T -> products over 1..t, index 0 set to 1
    out = np.ones(len(values))
    out[1:] = np.cumprod(values[1:])
    return out


def _powers(base, T):
    # base^(t-1) for t = 0..T with base shape (k,) -> shape (k, T+1)
    exponents = np.arange(T + 1) - 1
    return np.power.outer(base, exponents.clip(min=0)) * (exponents >= 0)


def frictionless_path(economy, T=None):
    """
    Frictionless output Y*_t = A_{m,t}...A_{m,1} sum_i beta_i^(t-1) s_{i,0}.

    Growth is G*_t = Y*_t / Y*_{t-1}.

    Returns:
        FrictionlessPath: Sequences indexed by date
    """
    T = economy.horizon if T is None else T
    A_top = economy.productivity_matrix(T)[-1, :T + 1]
    scale = _cumulative(A_top)
    weights = _powers(economy.beta, T).T @ economy.s0
    Y = scale * weights
    Y[0] = np.nan
    G = np.full(T + 1, np.nan)
    G[2:] = Y[2:] / Y[1:-1]
    return FrictionlessPath(Y=Y, G=G)


def output_closed_form_Ah(economy, h, T=None):
    """
    Output of the R_t = A_{h,t} path with time-varying productivities.

    Y_t = prod_{tau<=t} A_{h,tau} sum_{i<=h} beta_i^(t-1) s_{i,0}
        + sum_{j>h} beta_j^(t-1) prod_{tau<=t} c_{j,tau} s_{j,0},
    with c_{j,tau} = (1-gamma_j) A_{j,tau} A_{h,tau} / (A_{h,tau} - gamma_j A_{j,tau}).

    Returns:
        np.ndarray: Y_t for t = 0..T, index 0 NaN
    """
    T = economy.horizon if T is None else T
    A = economy.productivity_matrix(T)[:, :T + 1]
    beta, gamma, s0 = economy.beta, economy.gamma, economy.s0

    A_h = A[h - 1]
    lenders = _cumulative(A_h) * (_powers(beta[:h], T).T @ s0[:h])
    Y = lenders.copy()
    for j in range(h, economy.m):
        factor = (1 - gamma[j]) * A[j] * A_h / (A_h - gamma[j] * A[j])
        Y += _powers(np.array([beta[j]]), T)[0] * _cumulative(factor) * s0[j]
    Y[0] = np.nan
    return Y


def output_closed_form_magents(economy, T=None):
    """
    Output when only agent m borrows at date 0 and R_t = A_m afterwards.

    Y_1 = A_{m,1} S_0 and, for t >= 2,
    Y_t = S_0 prod A_{m,tau} (gamma_m sum_{i!=m} beta_i^(t-1) s_i / sum_{i!=m} s_i
                              + beta_m^(t-1) (1 - gamma_m)).
    """
    T = economy.horizon if T is None else T
    A_top = economy.productivity_matrix(T)[-1, :T + 1]
    beta, s0, g = economy.beta, economy.s0, economy.gamma[-1]
    S0, lenders = np.sum(s0), np.sum(s0[:-1])
    share = g * (_powers(beta[:-1], T).T @ s0[:-1]) / lenders
    share += (1 - g) * _powers(beta[-1:], T)[0]
    Y = S0 * _cumulative(A_top) * share
    Y[0] = np.nan
    return Y


def rate_closed_form_interior_all(economy, T=None):
    """
    Rates when only agent m borrows at every date.

    R_1 = gamma_m A_{m,1} S_0 / sum_{i<m} s_{i,0} and
    R_{t+1} = A_{m,t+1} (gamma_m + (1-gamma_m) beta_m
              sum_{i<m} beta_i^(t-1) s_{i,0} / sum_{i<m} beta_i^t s_{i,0}).

    Returns:
        np.ndarray: R_t for t = 0..T+1, index 0 NaN
    """
    T = economy.horizon if T is None else T
    A_top = economy.productivity_matrix(T)[-1]
    beta, s0, g = economy.beta, economy.s0, economy.gamma[-1]
    R = np.full(T + 2, np.nan)
    R[1] = g * A_top[1] * np.sum(s0) / np.sum(s0[:-1])
    for t in range(1, T + 1):
        ratio = np.sum(beta[:-1] ** (t - 1) * s0[:-1]) / np.sum(beta[:-1] ** t * s0[:-1])
        R[t + 1] = A_top[t + 1] * (g + (1 - g) * beta[-1] * ratio)
    return R


def interior_all_rate_limit(economy):
    """Limit A_m (gamma_m + (beta_m / max_{i<m} beta_i) (1 - gamma_m)) of the interior rates."""
    A_m = economy.agents[-1].A_path[-1]
    g, beta = economy.gamma[-1], economy.beta
    return float(A_m * (g + beta[-1] / np.max(beta[:-1]) * (1 - g)))


def growth_rates(path):
    """G_t = Y_t / Y_{t-1} for t >= 2; earlier entries NaN."""
    G = np.full(len(path.output), np.nan)
    G[2:] = path.output[2:] / path.output[1:-1]
    return G
