"""Types for the infinite-horizon economy with log utility."""
from dataclasses import dataclass, field, replace

import numpy as np

from ..config import DEFAULT_HORIZON
from ..models import Violation


@dataclass(frozen=True)
class DynamicAgent:
    """
    One producer in the Ramsey economy.

    A_path[t-1] is the effective productivity A_{i,t}; dates past the end of
    the path repeat its last value, so a one-element path is stationary.

    Attributes:
        id: Agent identifier
        beta: Discount factor
        gamma: Credit limit
        w0: Initial wealth
        A_path: Productivities from date 1 on
    """

    id: int
    beta: float
    gamma: float
    w0: float
    A_path: tuple

    def __post_init__(self):
        object.__setattr__(self, 'A_path', tuple(float(a) for a in self.A_path))

    @classmethod
    def from_savings(cls, id, beta, gamma, s0, A_path):
        """Build an agent from its date-0 savings s0 = beta * w0."""
        if isinstance(A_path, (int, float)):
            A_path = (A_path,)
        return cls(int(id), float(beta), float(gamma), float(s0) / float(beta), tuple(A_path))

    @property
    def s0(self):
        return self.beta * self.w0

    def A(self, t):
        """Productivity A_{i,t} for t >= 1."""
        return self.A_path[min(max(t, 1), len(self.A_path)) - 1]

    @property
    def is_stationary(self):
        return len(set(self.A_path)) == 1


@dataclass(frozen=True)
class DynamicEconomy:
    """Ordered agents plus the truncation horizon T."""

    agents: tuple
    horizon: int = DEFAULT_HORIZON

    def __post_init__(self):
        object.__setattr__(self, 'agents', tuple(self.agents))

    @classmethod
    def linear(cls, beta, gamma, A, s0=None, w0=None, horizon=DEFAULT_HORIZON, ids=None):
        """
        Build a stationary economy from parallel sequences.

        Exactly one of s0 and w0 must be given.
        """
        if (s0 is None) == (w0 is None):
            raise ValueError('give exactly one of s0 and w0')
        ids = ids if ids is not None else range(1, len(beta) + 1)
        wealth = w0 if w0 is not None else [s / b for s, b in zip(s0, beta)]
        return cls(tuple(
            DynamicAgent(int(i), float(b), float(g), float(w), (float(a),))
            for i, b, g, w, a in zip(ids, beta, gamma, wealth, A)
        ), horizon)

    @property
    def m(self):
        return len(self.agents)

    @property
    def ids(self):
        return [a.id for a in self.agents]

    @property
    def beta(self):
        return np.array([a.beta for a in self.agents], dtype=float)

    @property
    def gamma(self):
        return np.array([a.gamma for a in self.agents], dtype=float)

    @property
    def w0(self):
        return np.array([a.w0 for a in self.agents], dtype=float)

    @property
    def s0(self):
        return self.beta * self.w0

    def productivity(self, t):
        return np.array([a.A(t) for a in self.agents], dtype=float)

    def productivity_matrix(self, T):
        """Array of shape (m, T+2) whose column t holds A_{i,t}; column 0 is NaN."""
        matrix = np.full((self.m, T + 2), np.nan)
        for t in range(1, T + 2):
            matrix[:, t] = self.productivity(t)
        return matrix

    @property
    def is_stationary(self):
        return all(a.is_stationary for a in self.agents)

    def stationary_after(self):
        """First date from which every productivity is constant."""
        return max(len(a.A_path) for a in self.agents)

    def index_of(self, agent_id):
        for i, a in enumerate(self.agents):
            if a.id == agent_id:
                return i
        raise KeyError(f'no agent with id {agent_id}')

    def replace_agent(self, agent_id, **changes):
        """
        Copy with one agent changed.

        Args:
            agent_id: Agent to change
            **changes: Any of beta, gamma, w0, s0, A (stationary), A_path
        """
        idx = self.index_of(agent_id)
        agent = self.agents[idx]
        if 'A' in changes:
            changes['A_path'] = (float(changes.pop('A')),)
        if 's0' in changes:
            beta = changes.get('beta', agent.beta)
            changes['w0'] = float(changes.pop('s0')) / beta
        agents = list(self.agents)
        agents[idx] = replace(agent, **changes)
        return replace(self, agents=tuple(agents))

    def with_horizon(self, T):
        return replace(self, horizon=int(T))


def validate_dynamic(economy):
    """
    Primitive checks on a dynamic economy.

    Returns:
        list: Violation records
    """
    problems = []
    if economy.m == 0:
        return [Violation(None, 'empty economy')]
    if economy.horizon < 1:
        problems.append(Violation(None, 'horizon must be positive'))
    for a in economy.agents:
        if not 0 < a.beta < 1:
            problems.append(Violation(a.id, 'beta out of (0,1)', f'beta={a.beta}'))
        if not 0 < a.gamma < 1:
            problems.append(Violation(a.id, 'gamma out of (0,1)', f'gamma={a.gamma}'))
        if not a.w0 > 0:
            problems.append(Violation(a.id, 'nonpositive wealth', f'w0={a.w0}'))
        if not a.A_path or min(a.A_path) <= 0:
            problems.append(Violation(a.id, 'nonpositive productivity'))
    return problems


def ordering_violations(economy, T):
    """
    Dates t = 1..T+1 at which max gamma*A < A_1 < ... < A_m fails.

    Returns:
        list: (date, message) pairs
    """
    failures = []
    gamma = economy.gamma
    for t in range(1, T + 2):
        A = economy.productivity(t)
        if np.any(np.diff(A) <= 0):
            failures.append((t, 'productivities not strictly increasing'))
        elif not np.max(gamma * A) < A[0]:
            failures.append((t, 'max gamma*A not below A_1'))
    return failures


@dataclass(frozen=True)
class RegimeHypothesis:
    """
    Which rate regime a path was built under.

    kind is one of 'Ah' (R_t = A_h every date), 'interior_then_Ah' (date-0
    interior rate with borrowers n..m, then R_t = A_h), 'interior_all'
    (interior with only agent m borrowing at every date) and 'sequential'
    (date-by-date static classification).
    """

    kind: str
    n: int | None = None
    h: int | None = None

    @property
    def name(self):
        if self.kind == 'Ah':
            return f'Ah(h={self.h})'
        if self.kind == 'interior_then_Ah':
            return f'interior_then_Ah(n={self.n},h={self.h})'
        return self.kind

    def describe(self):
        if self.kind == 'Ah':
            return f'R_t = A_{self.h}'
        if self.kind == 'interior_then_Ah':
            return f'R_1 interior (borrowers {self.n}..m), R_t = A_{self.h}'
        if self.kind == 'interior_all':
            return 'R_t interior for all t'
        return 'date-by-date static regimes'

    @classmethod
    def parse(cls, text):
        """Inverse of name."""
        text = text.strip()
        if '(' not in text:
            return cls(text)
        kind, rest = text.split('(', 1)
        values = dict(part.split('=') for part in rest.rstrip(')').split(','))
        return cls(kind, int(values['n']) if 'n' in values else None,
                   int(values['h']) if 'h' in values else None)


@dataclass
class EquilibriumPath:
    """
    Equilibrium sequences on dates 0..T.

    rates[t] is R_t (index 0 unused, index T+1 the rate on date-T positions);
    output[t] is Y_t (index 0 unused). Agent arrays have shape (m, T+1).
    """

    hypothesis: RegimeHypothesis
    ids: list
    rates: np.ndarray
    capital: np.ndarray
    assets: np.ndarray
    consumption: np.ndarray
    savings: np.ndarray
    output: np.ndarray
    notes: list = field(default_factory=list)

    @property
    def T(self):
        return self.capital.shape[1] - 1

    @property
    def m(self):
        return self.capital.shape[0]

    def copy(self):
        return EquilibriumPath(self.hypothesis, list(self.ids), self.rates.copy(),
                               self.capital.copy(), self.assets.copy(),
                               self.consumption.copy(), self.savings.copy(),
                               self.output.copy(), list(self.notes))


@dataclass(frozen=True)
class ConditionCheck:
    """
    Outcome of a path hypothesis check.

    Attributes:
        ok: Conditions hold on every checked date and asymptotically
        failing_period: First failing date, None when ok
        condition: Name of the failing condition
        dominance: Whether the geometric-base dominance condition holds
        detail: Free-form explanation
    """

    ok: bool
    failing_period: int | None = None
    condition: str | None = None
    dominance: bool | None = None
    detail: str = ''
