"""Shared economies for the test suite."""
import numpy as np
import pytest

from credit_equilibrium.models import StaticEconomy
from credit_equilibrium.ramsey import DynamicEconomy


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def two_agent():
    """S = (1, 0.7), A = (0.5, 1), gamma2 = 0.2: AtTFP(1)."""
    return StaticEconomy.linear(A=(0.5, 1.0), gamma=(0.2, 0.2), S=(1.0, 0.7))


@pytest.fixture
def two_agent_interior():
    """S = (0.5, 0.7), A = (0.4, 1), gamma2 = 0.2: Interior(1) with R = 0.48."""
    return StaticEconomy.linear(A=(0.4, 1.0), gamma=(0.2, 0.2), S=(0.5, 0.7))


@pytest.fixture
def three_agent():
    """S = (4, 4, 3), A = (1, 1.2, 1.5), gamma = (0.2, 0.3, 0.3)."""
    return StaticEconomy.linear(A=(1.0, 1.2, 1.5), gamma=(0.2, 0.3, 0.3), S=(4.0, 4.0, 3.0))


@pytest.fixture
def ramsey_two_agent():
    """s0 = (200, 100), beta = (0.99, 0.4), A = (1.5, 2.25), gamma = 0.4."""
    return DynamicEconomy.linear(beta=(0.99, 0.4), gamma=(0.4, 0.4), A=(1.5, 2.25),
                                 s0=(200.0, 100.0), horizon=50)


@pytest.fixture
def ramsey_three_agent():
    """s0 = (4, 4, 3), beta = (0.2, 0.2, 0.95), A = (1, 1.2, 1.5), gamma = (0.2, 0.3, 0.3)."""
    return DynamicEconomy.linear(beta=(0.2, 0.2, 0.95), gamma=(0.2, 0.3, 0.3),
                                 A=(1.0, 1.2, 1.5), s0=(4.0, 4.0, 3.0), horizon=50)


@pytest.fixture
def ramsey_top_borrows():
    """Only agent 2 borrows at date 0, then R_t = A_2: R_1 = 1.6."""
    return DynamicEconomy.linear(beta=(0.5, 0.9), gamma=(0.3, 0.4), A=(1.0, 2.0),
                                 s0=(1.0, 1.0), horizon=40)


@pytest.fixture
def ramsey_interior_all():
    """Agent 3 borrows at an interior rate on every date: R_1 = 1.125."""
    return DynamicEconomy.linear(beta=(0.9, 0.6, 0.5), gamma=(0.2, 0.2, 0.45),
                                 A=(1.0, 1.1, 2.0), s0=(2.0, 2.0, 1.0), horizon=60)


def random_linear_economy(rng, m=None):
    """Admissible linear economy with up to six agents and distinct productivities."""
    m = int(rng.integers(1, 7)) if m is None else m
    A = np.sort(rng.uniform(0.5, 3.0, size=m))
    while m > 1 and np.min(np.diff(A)) < 1e-3:
        A = np.sort(rng.uniform(0.5, 3.0, size=m))
    gamma = rng.uniform(0.05, 0.6, size=m)
    S = rng.uniform(0.1, 5.0, size=m)
    return StaticEconomy.linear(A=A, gamma=gamma, S=S)
