"""Static economy and equilibrium value types."""
from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np

from .technology import Technology


@dataclass(frozen=True)
class StaticAgent:
    """
    One producer in the two-period economy.

    Attributes:
        id: Agent identifier
        tech: Production technology
        gamma: Credit limit, the pledgeable share of output
        S: Initial wealth
    """

    id: int
    tech: Technology
    gamma: float
    S: float

    @property
    def A(self):
        return self.tech.A


@dataclass(frozen=True)
class StaticEconomy:
    """Ordered collection of static agents."""

    agents: tuple

    def __post_init__(self):
        object.__setattr__(self, 'agents', tuple(self.agents))

    @classmethod
    def linear(cls, A, gamma, S, ids=None):
        """
        Build an economy of linear producers from parallel sequences.

        Args:
            A: Productivities
            gamma: Credit limits
            S: Initial wealth levels
            ids: Agent ids, defaults to 1..m

        Returns:
            StaticEconomy: The economy
        """
        ids = ids if ids is not None else range(1, len(A) + 1)
        return cls(tuple(
            StaticAgent(int(i), Technology.linear(a), float(g), float(s))
            for i, a, g, s in zip(ids, A, gamma, S)
        ))

    @classmethod
    def cobb_douglas(cls, A, alpha, gamma, S, ids=None):
        """Build an economy of Cobb-Douglas producers; alpha may be a scalar."""
        alphas = np.broadcast_to(np.asarray(alpha, dtype=float), (len(A),))
        ids = ids if ids is not None else range(1, len(A) + 1)
        return cls(tuple(
            StaticAgent(int(i), Technology.cobb_douglas(a, al), float(g), float(s))
            for i, a, al, g, s in zip(ids, A, alphas, gamma, S)
        ))

    @property
    def m(self):
        return len(self.agents)

    @property
    def ids(self):
        return [a.id for a in self.agents]

    @property
    def wealth(self):
        return np.array([a.S for a in self.agents], dtype=float)

    @property
    def total_wealth(self):
        return float(np.sum(self.wealth))

    @property
    def productivity(self):
        return np.array([a.A for a in self.agents], dtype=float)

    @property
    def gamma(self):
        return np.array([a.gamma for a in self.agents], dtype=float)

    @property
    def is_linear(self):
        return all(a.tech.is_linear for a in self.agents)

    @property
    def is_concave(self):
        return all(not a.tech.is_linear for a in self.agents)

    def agent(self, agent_id):
        for a in self.agents:
            if a.id == agent_id:
                return a
        raise KeyError(f'no agent with id {agent_id}')

    def index_of(self, agent_id):
        """Zero-based position of an agent in the ordered list."""
        for i, a in enumerate(self.agents):
            if a.id == agent_id:
                return i
        raise KeyError(f'no agent with id {agent_id}')

    def replace_agent(self, agent_id, **changes):
        """
        Return a copy with one agent's primitives changed.

        Args:
            agent_id: Agent to change
            **changes: Any of A, alpha, gamma, S

        Returns:
            StaticEconomy: Modified economy
        """
        idx = self.index_of(agent_id)
        agent = self.agents[idx]
        tech = agent.tech
        if 'A' in changes:
            tech = tech.with_A(changes.pop('A'))
        if 'alpha' in changes:
            tech = replace(tech, alpha=float(changes.pop('alpha')))
        updated = replace(agent, tech=tech, **changes)
        agents = list(self.agents)
        agents[idx] = updated
        return StaticEconomy(tuple(agents))

    def scaled(self, x):
        """Return the economy with every productivity multiplied by x."""
        return StaticEconomy(tuple(
            replace(a, tech=a.tech.scaled(x)) for a in self.agents
        ))


@dataclass(frozen=True)
class AgentAllocation:
    """Capital k, asset b (negative means lending), binding flag and profit."""

    k: float
    b: float
    binding: bool
    profit: float


class RegimeKind(str, Enum):
    AT_TFP = 'AtTFP'
    INTERIOR = 'Interior'
    FRICTIONLESS_CONCAVE = 'FrictionlessConcave'
    UNORDERED_THRESHOLDS = 'UnorderedThresholds'


@dataclass(frozen=True)
class RegimeLabel:
    """
    Cell of the regime partition.

    n is a one-based position in the ordered agent list. AtTFP(n) means
    R = A_n, Interior(n) means the rate lies strictly between agent n's and
    agent n+1's (productivities for linear, thresholds for concave economies).
    """

    kind: RegimeKind
    n: int | None = None

    @classmethod
    def at_tfp(cls, n):
        return cls(RegimeKind.AT_TFP, n)

    @classmethod
    def interior(cls, n):
        return cls(RegimeKind.INTERIOR, n)

    def __str__(self):
        if self.n is None:
            return self.kind.value
        return f'{self.kind.value}({self.n})'

    @classmethod
    def parse(cls, text):
        """Inverse of str()."""
        text = text.strip()
        if '(' not in text:
            return cls(RegimeKind(text))
        name, rest = text.split('(', 1)
        return cls(RegimeKind(name), int(rest.rstrip(')')))


@dataclass(frozen=True)
class StaticEquilibrium:
    """
    Solved two-period equilibrium.

    Attributes:
        R: Gross interest rate
        allocations: Agent id to AgentAllocation, in agent order
        regime: Regime label
        Y: Aggregate output
    """

    R: float
    allocations: dict = field(hash=False)
    regime: RegimeLabel
    Y: float

    @property
    def capital(self):
        return np.array([a.k for a in self.allocations.values()], dtype=float)

    @property
    def assets(self):
        return np.array([a.b for a in self.allocations.values()], dtype=float)

    @property
    def binding(self):
        return [a.binding for a in self.allocations.values()]
