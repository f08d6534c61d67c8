"""Admissibility checks and aggregate accounting for static economies."""
import logging
from dataclasses import dataclass

import numpy as np

from ..config import MARKET_CLEARING_TOL
from ..errors import ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Violation:
    """One broken rule, attributed to an agent when possible."""

    agent_id: int | None
    rule: str
    detail: str = ''

    def __str__(self):
        where = 'economy' if self.agent_id is None else f'agent {self.agent_id}'
        if self.detail:
            return f'{where}: {self.rule} ({self.detail})'
        return f'{where}: {self.rule}'


def validate_economy(econ):
    """
    List every admissibility violation of a static economy.

    Args:
        econ: StaticEconomy to check

    Returns:
        list: Violation records, empty when the economy is admissible
    """
    violations = []
    if econ.m == 0:
        return [Violation(None, 'empty economy')]

    seen = set()
    for agent in econ.agents:
        if agent.id in seen:
            violations.append(Violation(agent.id, 'duplicate id'))
        seen.add(agent.id)
        if not 0 < agent.gamma < 1:
            violations.append(Violation(agent.id, 'gamma out of (0,1)', f'gamma={agent.gamma}'))
        if not agent.S > 0:
            violations.append(Violation(agent.id, 'nonpositive wealth', f'S={agent.S}'))
        for rule in agent.tech.admissibility_violations():
            violations.append(Violation(agent.id, rule))

    if not (econ.is_linear or econ.is_concave):
        violations.append(Violation(None, 'mixed linear and concave technologies'))

    if econ.is_linear:
        # Ties are rejected rather than aggregated
        for prev, cur in zip(econ.agents, econ.agents[1:]):
            if not cur.A > prev.A:
                violations.append(Violation(
                    cur.id, 'non-strict A ordering', f'A={cur.A} after A={prev.A}'))

    if violations:
        logger.debug("Economy has %d violation(s)", len(violations))
    return violations


def require_valid(econ):
    """Raise ValidationError when validate_economy finds anything."""
    violations = validate_economy(econ)
    if violations:
        raise ValidationError(violations)
    return econ


def _capital_of(allocations, agent_id):
    try:
        value = allocations[agent_id]
    except KeyError:
        raise ValidationError([Violation(agent_id, 'missing allocation')]) from None
    return float(getattr(value, 'k', value))


def aggregate_output(econ, allocations):
    """
    Aggregate output Y = sum_i F_i(k_i).

    Args:
        econ: StaticEconomy
        allocations: Mapping of agent id to AgentAllocation or to capital

    Returns:
        float: Aggregate output
    """
    return float(sum(
        agent.tech.output(_capital_of(allocations, agent.id)) for agent in econ.agents
    ))


def marginal_products(econ, allocations):
    """Map each agent id to A_i f_i'(k_i) at its allocated capital."""
    result = {}
    for agent in econ.agents:
        k = _capital_of(allocations, agent.id)
        if not agent.tech.is_linear and k == 0:
            result[agent.id] = float('inf')
        else:
            result[agent.id] = float(agent.tech.marginal(k))
    return result


def equilibrium_violations(econ, eq, tol=MARKET_CLEARING_TOL, frictionless_Y=None):
    """
    Check a solved equilibrium against the feasibility invariants.

    Budget and borrowing constraints use tol scaled by (1 + |k|); both
    market-clearing sums use tol as an absolute bound.

    Args:
        econ: StaticEconomy that was solved
        eq: StaticEquilibrium to check
        tol: Absolute tolerance
        frictionless_Y: Benchmark output, checked as an upper bound if given

    Returns:
        list: Violation records
    """
    problems = []
    for agent in econ.agents:
        alloc = eq.allocations.get(agent.id)
        if alloc is None:
            problems.append(Violation(agent.id, 'missing allocation'))
            continue
        scale = 1.0 + abs(alloc.k)
        if alloc.k < -tol * scale:
            problems.append(Violation(agent.id, 'negative capital', f'k={alloc.k}'))
        if alloc.k > agent.S + alloc.b + tol * scale:
            problems.append(Violation(agent.id, 'budget', f'k={alloc.k}, S+b={agent.S + alloc.b}'))
        pledge = agent.gamma * agent.tech.output(max(alloc.k, 0.0))
        if eq.R * alloc.b > pledge + tol * scale * max(1.0, eq.R):
            problems.append(Violation(agent.id, 'borrowing constraint', f'Rb={eq.R * alloc.b}'))

    S = econ.total_wealth
    b_sum = float(np.sum(eq.assets))
    k_sum = float(np.sum(eq.capital))
    if abs(b_sum) > tol:
        problems.append(Violation(None, 'asset market clearing', f'sum b={b_sum}'))
    if abs(k_sum - S) > tol:
        problems.append(Violation(None, 'capital market clearing', f'sum k={k_sum}'))
    if frictionless_Y is not None and eq.Y > frictionless_Y * (1 + tol) + tol:
        problems.append(Violation(None, 'output above frictionless', f'Y={eq.Y}'))
    return problems
