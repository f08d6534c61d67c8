"""Exact equilibria of economies with linear technologies."""
import logging
from dataclasses import dataclass

import numpy as np

from ..errors import (
    RegimeClassificationError, RegimeMismatchError, SolverError,
)
from ..models import (
    AgentAllocation, RegimeKind, RegimeLabel, StaticEquilibrium,
    aggregate_output, require_valid,
)
from .roots import MIN_RTOL, expand_upward, find_root, shrink_toward

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Unbounded:
    """R <= gamma*A: the agent would borrow without limit."""

    reason: str = 'no solution (k = infinity)'


@dataclass(frozen=True)
class Indeterminate:
    """
    R = A: every asset position in [b_low, b_high] is optimal.

    Attributes:
        b_low: Lending everything, -S
        b_high: Borrowing to the limit, gamma*S/(1-gamma)
        A: Agent productivity, equal to the rate
        S: Agent wealth
    """

    b_low: float
    b_high: float
    A: float
    S: float

    def contains(self, b, tol=1e-9):
        scale = tol * max(1.0, abs(self.b_low), abs(self.b_high))
        return self.b_low - scale <= b <= self.b_high + scale

    def allocation(self, b, tol=1e-9):
        """Pick the position b and return the matching allocation."""
        b = min(max(b, self.b_low), self.b_high)
        binding = b >= self.b_high - tol * max(1.0, abs(self.b_high))
        return AgentAllocation(k=b + self.S, b=b, binding=binding, profit=self.A * self.S)


UNBOUNDED = Unbounded()


@dataclass(frozen=True)
class LinearBounds:
    """
    Regime bounds for agent n (one-based).

    D is the sum of A_n S_i/(A_n - gamma_i A_i) over i >= n and B the same sum
    over i > n. Both exist only when A_n exceeds every gamma_i A_i.
    """

    n: int
    D: float
    B: float
    defined: bool


def individual_choice_linear(A, gamma, S, R):
    """
    Optimal (k, b) of one linear producer facing the rate R.

    Args:
        A: Productivity
        gamma: Credit limit
        S: Initial wealth
        R: Gross interest rate

    Returns:
        AgentAllocation, Indeterminate or UNBOUNDED
    """
    if R <= gamma * A:
        return UNBOUNDED
    if R > A:
        return AgentAllocation(k=0.0, b=-S, binding=False, profit=R * S)
    if R == A:
        return Indeterminate(b_low=-S, b_high=gamma * S / (1 - gamma), A=A, S=S)
    k = R * S / (R - gamma * A)
    b = gamma * A * S / (R - gamma * A)
    return AgentAllocation(k=k, b=b, binding=True, profit=A * k - R * b)


def _arrays(econ):
    return econ.productivity, econ.gamma, econ.wealth


def compute_bounds(econ):
    """
    Regime bounds D_n and B_n for every agent position.

    Args:
        econ: Linear economy ordered by increasing A

    Returns:
        list: LinearBounds for n = 1..m; entries with A_n <= max gamma*A are
        marked undefined and carry NaN
    """
    A, gamma, S = _arrays(econ)
    cap = float(np.max(gamma * A))
    bounds = []
    for idx in range(econ.m):
        n = idx + 1
        if not A[idx] > cap:
            bounds.append(LinearBounds(n, float('nan'), float('nan'), False))
            continue
        terms = A[idx] * S[idx:] / (A[idx] - gamma[idx:] * A[idx:])
        bounds.append(LinearBounds(n, float(np.sum(terms)), float(np.sum(terms[1:])), True))
    return bounds


def _capital_demand(R, A, gamma, S, n):
    # Demand of the borrowers n+1..m (zero-based slice n:)
    return float(np.sum(R * S[n:] / (R - gamma[n:] * A[n:])))


def classify_regime(econ):
    """
    Classify a linear economy into its unique regime.

    AtTFP(n) holds when A_n > max gamma*A and B_n <= S <= D_n. Interior(n)
    holds when A_{n+1} > max gamma*A, S > D_{n+1}, and either S < B_n (when
    B_n exists) or the interior rate exceeds max gamma*A.

    Args:
        econ: Linear economy ordered by increasing A

    Returns:
        RegimeLabel: The regime

    Raises:
        RegimeClassificationError: If the predicates do not pick exactly one cell
    """
    A, gamma, S_i = _arrays(econ)
    S = float(np.sum(S_i))
    cap = float(np.max(gamma * A))
    bounds = compute_bounds(econ)

    labels = []
    for bd in bounds:
        # Ties at S = B_n or S = D_n go to AtTFP(n)
        if bd.defined and bd.B <= S <= bd.D:
            labels.append(RegimeLabel.at_tfp(bd.n))

    for idx in range(econ.m - 1):
        here, nxt = bounds[idx], bounds[idx + 1]
        if not nxt.defined or not S > nxt.D:
            continue
        if here.defined:
            inside = S < here.B
        else:
            tail_cap = float(np.max(gamma[idx + 1:] * A[idx + 1:]))
            # Demand is decreasing on (tail_cap, inf), so the root exceeds cap
            # exactly when demand at cap still exceeds supply
            inside = tail_cap >= cap or _capital_demand(cap, A, gamma, S_i, idx + 1) > S
        if inside:
            labels.append(RegimeLabel.interior(here.n))

    if len(labels) != 1:
        raise RegimeClassificationError(
            f'expected one regime, found {[str(label) for label in labels]}')
    logger.debug("Classified regime %s", labels[0])
    return labels[0]


def interior_rate(A, gamma, S_i, n, total=None):
    """
    Greatest root of the capital-demand equation with lenders 1..n.

    Solves sum_{i>n} R S_i/(R - gamma_i A_i) = S, in closed form for one or two
    borrowers and with Brent's method otherwise.

    Args:
        A: Productivities (array)
        gamma: Credit limits (array)
        S_i: Wealth or savings (array)
        n: Number of lenders, counted from the least productive agent
        total: Supply of funds, defaults to sum of S_i

    Returns:
        float: The rate
    """
    A = np.asarray(A, dtype=float)
    gamma = np.asarray(gamma, dtype=float)
    S_i = np.asarray(S_i, dtype=float)
    S = float(np.sum(S_i)) if total is None else float(total)
    lenders = S - float(np.sum(S_i[n:]))
    pledge = gamma[n:] * A[n:]
    if lenders <= 0:
        raise SolverError('interior rate needs positive lender wealth')

    borrowers = len(A) - n
    if borrowers == 1:
        return float(pledge[0] * S / lenders)
    if borrowers == 2:
        a, c = pledge
        S_j, S_k = S_i[n:]
        linear = a * (S - S_k) + c * (S - S_j)
        disc = linear * linear - 4.0 * lenders * S * a * c
        return float((linear + np.sqrt(max(disc, 0.0))) / (2.0 * lenders))

    tail_cap = float(np.max(pledge))
    excess = lambda R: _capital_demand(R, A, gamma, S_i, n) - S  # noqa: E731
    lo = shrink_toward(excess, tail_cap * (1 + 1e-9), tail_cap)
    hi = expand_upward(excess, max(float(np.max(A)) * 10.0, lo * 2.0))
    # Machine precision: clearing is checked to an absolute tolerance
    return find_root(excess, lo, hi, rtol=MIN_RTOL)


def solve_R_interior(n, econ):
    """
    Interest rate of a linear economy in regime Interior(n).

    Raises:
        RegimeMismatchError: If the economy is not in Interior(n)
    """
    regime = classify_regime(econ)
    if regime != RegimeLabel.interior(n):
        raise RegimeMismatchError(f'economy is in {regime}, not Interior({n})')
    A, gamma, S_i = _arrays(econ)
    return interior_rate(A, gamma, S_i, n)


def _require_linear(econ):
    require_valid(econ)
    if not econ.is_linear:
        raise SolverError('linear solver needs linear technologies')


def solve_equilibrium_linear(econ):
    """
    Equilibrium of a linear economy from its regime.

    At AtTFP(n) the indifferent agent n absorbs the market-clearing residual;
    its position is asserted to lie in its optimal interval.

    Args:
        econ: Admissible linear economy

    Returns:
        StaticEquilibrium: The equilibrium
    """
    _require_linear(econ)
    regime = classify_regime(econ)
    A, gamma, S_i = _arrays(econ)

    if regime.kind is RegimeKind.AT_TFP:
        R = float(A[regime.n - 1])
    else:
        R = interior_rate(A, gamma, S_i, regime.n)

    cap = float(np.max(gamma * A))
    if not R > cap:
        raise SolverError(f'rate {R!r} at or below max gamma*A={cap!r}')

    choices = [individual_choice_linear(a.A, a.gamma, a.S, R) for a in econ.agents]
    allocations = {}
    marginal = None
    for agent, choice in zip(econ.agents, choices):
        if isinstance(choice, Unbounded):
            raise SolverError(f'agent {agent.id} unbounded at R={R!r}')
        if isinstance(choice, Indeterminate):
            marginal = (agent, choice)
            continue
        allocations[agent.id] = choice

    if marginal is not None:
        agent, interval = marginal
        b = -sum(a.b for a in allocations.values())
        if not interval.contains(b):
            raise RegimeClassificationError(
                f'agent {agent.id} position b={b!r} outside [{interval.b_low}, {interval.b_high}]')
        allocations[agent.id] = interval.allocation(b)

    allocations = {a.id: allocations[a.id] for a in econ.agents}
    Y = aggregate_output(econ, allocations)
    logger.debug("Linear equilibrium %s: R=%.12g Y=%.12g", regime, R, Y)
    return StaticEquilibrium(R=R, allocations=allocations, regime=regime, Y=Y)


def frictionless_output_linear(econ):
    """Frictionless benchmark A_m * S for a linear economy."""
    return float(np.max(econ.productivity) * econ.total_wealth)


def _demand_interval(R, A, gamma, S_i):
    # Aggregate capital demand bounds at each rate in R (vectorised)
    R = R[:, None]
    borrow = np.where((R > gamma * A) & (R < A), R * S_i / np.maximum(R - gamma * A, 1e-300), 0.0)
    at_A = R == A
    low = borrow.sum(axis=1)
    high = low + np.where(at_A, S_i / (1 - gamma), 0.0).sum(axis=1)
    return low, high


def oracle_equilibrium_linear(econ, grid_size=100_000):
    """
    Approximate the equilibrium rate by scanning a grid of rates.

    Demand is interval-valued at each R = A_i, so the grid always contains
    the productivities. The returned R is the first grid rate whose minimal
    demand does not exceed supply, which lies within one grid step above the
    true rate.

    Args:
        econ: Linear economy
        grid_size: Number of grid points on (max gamma*A, A_m]

    Returns:
        float: Approximate equilibrium rate
    """
    A, gamma, S_i = _arrays(econ)
    S = float(np.sum(S_i))
    cap = float(np.max(gamma * A))
    top = float(np.max(A))
    grid = np.linspace(cap, top, grid_size + 1)[1:]
    grid = np.union1d(grid, A[A > cap])

    low, high = _demand_interval(grid, A, gamma, S_i)
    hits = np.nonzero(low <= S)[0]
    if hits.size == 0:
        return top
    R = float(grid[hits[0]])
    if high[hits[0]] >= S:
        logger.debug("Oracle bracket at R=%.12g", R)
    return R


def two_agent_closed_form(econ):
    """
    Closed-form (R, Y) of a two-agent linear economy.

    Agent 1's credit limit never matters here since agent 1 never borrows.

    Returns:
        tuple: (R, Y)
    """
    if econ.m != 2:
        raise RegimeMismatchError('two-agent closed form needs exactly two agents')
    (S1, S2), (A1, A2), (_, g2) = econ.wealth, econ.productivity, econ.gamma
    if S1 <= g2 * S2 / (1 - g2):
        return float(A2), float(A2 * (S1 + S2))
    if A1 > g2 * A2 and S1 >= g2 * A2 * S2 / (A1 - g2 * A2):
        return float(A1), float(A1 * S1 + A2 * S2 * A1 * (1 - g2) / (A1 - g2 * A2))
    return float(g2 * A2 * (S1 + S2) / S1), float(A2 * (S1 + S2))


def three_agent_rate_cases(econ):
    """
    Closed-form rate of a three-agent economy with max(gamma_2 A_2, gamma_3 A_3) < A_1.

    Returns:
        tuple: (R, RegimeLabel)
    """
    if econ.m != 3:
        raise RegimeMismatchError('three-agent closed form needs exactly three agents')
    (S1, S2, S3), (A1, A2, A3), (_, g2, g3) = econ.wealth, econ.productivity, econ.gamma
    a, c = g2 * A2, g3 * A3
    if not max(a, c) < A1:
        raise RegimeMismatchError('three-agent closed form needs max(gamma*A) < A_1')

    if S1 >= a * S2 / (A1 - a) + c * S3 / (A1 - c):
        return float(A1), RegimeLabel.at_tfp(1)
    if S1 > a * S2 / (A2 - a) + c * S3 / (A2 - c):
        B = (S1 + S2) * a + (S1 + S3) * c
        disc = B * B - 4.0 * S1 * (S1 + S2 + S3) * a * c
        return float((B + np.sqrt(disc)) / (2.0 * S1)), RegimeLabel.interior(1)
    if S1 + S2 >= c * S3 / (A2 - c):
        return float(A2), RegimeLabel.at_tfp(2)
    if S1 + S2 > g3 * S3 / (1 - g3):
        return float(c * (1 + S3 / (S1 + S2))), RegimeLabel.interior(2)
    return float(A3), RegimeLabel.at_tfp(3)


def is_frictionless_linear(econ, eq=None, tol=1e-12):
    """
    Whether equilibrium output equals the frictionless benchmark A_m S.

    True in AtTFP(m), in Interior(m-1), and in AtTFP(m-1) exactly at
    A_{m-1} S_m/(A_{m-1} - gamma_m A_m) = S.
    """
    eq = eq if eq is not None else solve_equilibrium_linear(econ)
    m = econ.m
    if eq.regime == RegimeLabel.at_tfp(m) or eq.regime == RegimeLabel.interior(m - 1):
        return True
    if eq.regime == RegimeLabel.at_tfp(m - 1):
        A, gamma, S_i = _arrays(econ)
        edge = A[m - 2] * S_i[m - 1] / (A[m - 2] - gamma[m - 1] * A[m - 1])
        return abs(edge - econ.total_wealth) <= tol * econ.total_wealth
    return False
