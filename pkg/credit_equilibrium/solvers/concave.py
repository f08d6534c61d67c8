"""Equilibria of economies with strictly concave technologies."""
import logging
from dataclasses import dataclass

import numpy as np

from ..config import MAX_ITERATIONS, ROOT_TOL
from ..errors import InsolvableError, SolverError
from ..models import (
    AgentAllocation, RegimeKind, RegimeLabel, StaticEquilibrium, TechnologyKind,
    aggregate_output, require_valid,
)
from .roots import MIN_RTOL, find_root

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BindingThreshold:
    """Rate R at or below which the agent's credit constraint binds."""

    agent_id: int
    R: float


def kn_cobb_douglas(A, alpha, R):
    """Unconstrained capital (alpha A / R)^(1/(1-alpha))."""
    return (alpha * A / R) ** (1.0 / (1.0 - alpha))


def threshold_cobb_douglas(A, alpha, gamma, S):
    """Binding threshold alpha A S^(alpha-1) (1 - gamma/alpha)^(1-alpha), for gamma < alpha."""
    return alpha * A * S ** (alpha - 1.0) * (1.0 - gamma / alpha) ** (1.0 - alpha)


def frictionless_allocation_cobb_douglas(econ):
    """Frictionless capital k_i proportional to A_i^(1/(1-alpha)) under a common alpha."""
    alphas = {a.tech.alpha for a in econ.agents}
    if len(alphas) != 1 or any(a.tech.kind is not TechnologyKind.COBB_DOUGLAS for a in econ.agents):
        raise SolverError('closed-form frictionless allocation needs a common Cobb-Douglas alpha')
    alpha = alphas.pop()
    weights = econ.productivity ** (1.0 / (1.0 - alpha))
    return econ.total_wealth * weights / weights.sum()


def _bracket_positive(func, start, grow, maxsteps=MAX_ITERATIONS):
    # Move start with grow() until func changes sign from its value at start
    point = start
    for _ in range(maxsteps):
        if func(point) > 0:
            return point
        point = grow(point)
    raise SolverError(f'could not bracket root from {start!r}')


def kn(tech, R, method='auto'):
    """
    Unconstrained optimal capital, the solution of A f'(k) = R.

    Args:
        tech: Concave technology
        R: Gross interest rate
        method: 'auto' uses the Cobb-Douglas closed form when available,
            'numeric' always solves with Brent's method

    Returns:
        float: Capital
    """
    if tech.is_linear:
        raise SolverError('unconstrained capital is not unique for linear technologies')
    if not R > 0:
        raise SolverError(f'rate must be positive, got {R!r}')
    if tech.kind is TechnologyKind.COBB_DOUGLAS and method != 'numeric':
        return float(kn_cobb_douglas(tech.A, tech.alpha, R))

    gap = lambda k: tech.marginal(k) - R  # noqa: E731
    lo = _bracket_positive(gap, 1.0, lambda k: k / 2.0)
    hi = _bracket_positive(lambda k: -gap(k), 1.0, lambda k: k * 2.0)
    return find_root(gap, lo, hi, rtol=ROOT_TOL)


def kb(tech, gamma, S, R):
    """
    Capital when the credit constraint binds, R (k - S) = gamma A f(k) with k > S.

    Raises:
        InsolvableError: If the equation has no solution above S
    """
    if tech.is_linear:
        if R <= gamma * tech.A:
            raise InsolvableError(f'R={R!r} <= gamma*A={gamma * tech.A!r}')
        return float(R * S / (R - gamma * tech.A))

    gap = lambda k: R * (k - S) - gamma * tech.output(k)  # noqa: E731
    try:
        hi = _bracket_positive(gap, 2.0 * S, lambda k: S + 2.0 * (k - S))
    except SolverError as exc:
        raise InsolvableError(f'no binding capital above S={S!r} at R={R!r}') from exc
    return find_root(gap, S, hi, rtol=ROOT_TOL)


def binding_ratio(agent, R):
    """R (kn - S) / (A f(kn)); the constraint binds when this is at least gamma."""
    k = kn(agent.tech, R)
    return R * (k - agent.S) / agent.tech.output(k)


def threshold_Ri(agent, method='auto'):
    """
    Binding threshold of one agent.

    Solved in capital space: k* > S solves f'(k)(k - S)/f(k) = gamma, then
    R_i = A f'(k*).

    Args:
        agent: StaticAgent with a concave technology
        method: 'auto' uses the Cobb-Douglas closed form, 'numeric' never does

    Returns:
        BindingThreshold, or None when gamma is at or above the limit
        elasticity and the constraint never binds
    """
    tech = agent.tech
    if tech.is_linear:
        return BindingThreshold(agent.id, tech.A)
    if agent.gamma >= tech.limit_elasticity():
        return None
    if tech.kind is TechnologyKind.COBB_DOUGLAS and method != 'numeric':
        return BindingThreshold(
            agent.id, float(threshold_cobb_douglas(tech.A, tech.alpha, agent.gamma, agent.S)))

    S = agent.S
    gap = lambda k: tech.base_prime(k) * (k - S) / tech.base(k) - agent.gamma  # noqa: E731
    hi = _bracket_positive(gap, 2.0 * S, lambda k: S + 2.0 * (k - S))
    k_star = find_root(gap, S, hi, rtol=ROOT_TOL)
    return BindingThreshold(agent.id, float(tech.marginal(k_star)))


def individual_choice_concave(agent, R):
    """
    Optimal allocation of a concave producer at rate R.

    Returns:
        AgentAllocation: binding with k = kb when the binding ratio reaches
        gamma, otherwise slack with k = kn
    """
    tech = agent.tech
    k_free = kn(tech, R)
    binding = R * (k_free - agent.S) >= agent.gamma * tech.output(k_free)
    k = kb(tech, agent.gamma, agent.S, R) if binding else k_free
    b = k - agent.S
    return AgentAllocation(k=float(k), b=float(b), binding=bool(binding),
                           profit=float(tech.output(k) - R * b))


def _solve_rate(econ, demand):
    S = econ.total_wealth
    excess = lambda R: demand(R) - S  # noqa: E731
    start = max(
        agent.gamma * agent.tech.marginal(S) * (1 - 1e-9) for agent in econ.agents
    )
    start = max(start, 1e-12)
    lo = _bracket_positive(excess, start, lambda R: R / 2.0)
    hi = _bracket_positive(lambda R: -excess(R), lo * 2.0, lambda R: R * 2.0)
    logger.debug("Concave rate bracket [%.6g, %.6g]", lo, hi)
    # Machine precision: clearing is checked to an absolute tolerance
    return find_root(excess, lo, hi, rtol=MIN_RTOL)


def _require_concave(econ):
    require_valid(econ)
    if not econ.is_concave:
        raise SolverError('concave solver needs strictly concave technologies')


def _label(R, thresholds, m):
    values = [t.R if t is not None else 0.0 for t in thresholds]
    count = sum(1 for v in values if v < R)
    if count == m:
        return RegimeLabel(RegimeKind.FRICTIONLESS_CONCAVE)
    ordered = all(lo < hi or lo == hi == 0.0 for lo, hi in zip(values, values[1:]))
    if not ordered:
        return RegimeLabel(RegimeKind.UNORDERED_THRESHOLDS)
    return RegimeLabel.interior(count)


def solve_equilibrium_concave(econ):
    """
    Equilibrium of a concave economy.

    Aggregate demand is continuous and strictly decreasing in R, so its
    crossing with supply is found by bracketing and Brent's method. The
    label is FrictionlessConcave when every threshold lies below R,
    Interior(n) when exactly agents n+1..m bind under ordered thresholds,
    and UnorderedThresholds otherwise.

    Args:
        econ: Admissible concave economy

    Returns:
        StaticEquilibrium: The equilibrium
    """
    _require_concave(econ)
    demand = lambda R: sum(individual_choice_concave(a, R).k for a in econ.agents)  # noqa: E731
    R = _solve_rate(econ, demand)

    allocations = {a.id: individual_choice_concave(a, R) for a in econ.agents}
    thresholds = [threshold_Ri(a) for a in econ.agents]
    regime = _label(R, thresholds, econ.m)
    Y = aggregate_output(econ, allocations)
    logger.debug("Concave equilibrium %s: R=%.12g Y=%.12g", regime, R, Y)
    return StaticEquilibrium(R=float(R), allocations=allocations, regime=regime, Y=Y)


def frictionless_concave(econ):
    """
    Output-maximising allocation, found where unconstrained demand meets supply.

    Returns:
        StaticEquilibrium: Labelled FrictionlessConcave, with no binding agent
    """
    _require_concave(econ)
    demand = lambda R: sum(kn(a.tech, R) for a in econ.agents)  # noqa: E731
    R = _solve_rate(econ, demand)
    allocations = {}
    for agent in econ.agents:
        k = kn(agent.tech, R)
        allocations[agent.id] = AgentAllocation(
            k=float(k), b=float(k - agent.S), binding=False,
            profit=float(agent.tech.output(k) - R * (k - agent.S)))
    Y = aggregate_output(econ, allocations)
    return StaticEquilibrium(R=float(R), allocations=allocations,
                             regime=RegimeLabel(RegimeKind.FRICTIONLESS_CONCAVE), Y=Y)


def binding_thresholds(econ):
    """Thresholds of every agent, None for agents that never bind."""
    return [threshold_Ri(a) for a in econ.agents]


def demand_curve(econ, rates):
    """Aggregate constrained capital demand evaluated on an array of rates."""
    return np.array([
        sum(individual_choice_concave(a, float(R)).k for a in econ.agents) for R in rates
    ])
