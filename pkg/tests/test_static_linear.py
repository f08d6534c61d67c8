from dataclasses import replace

import numpy as np
import pytest

from credit_equilibrium.errors import RegimeMismatchError, ValidationError
from credit_equilibrium.models import RegimeLabel, StaticEconomy, equilibrium_violations
from credit_equilibrium.solvers import (
    UNBOUNDED, Indeterminate, classify_regime, compute_bounds, frictionless_output,
    individual_choice_linear, is_frictionless_linear, oracle_equilibrium_linear,
    solve_equilibrium, solve_R_interior, three_agent_rate_cases, two_agent_closed_form,
)
from credit_equilibrium.presets import three_agent_economy, two_agent_economy

from .conftest import random_linear_economy


def test_choice_unbounded_at_or_below_pledge_rate():
    assert individual_choice_linear(1.0, 0.2, 1.0, 0.1) is UNBOUNDED
    assert individual_choice_linear(1.0, 0.2, 1.0, 0.2) is UNBOUNDED


def test_choice_lends_everything_above_productivity():
    choice = individual_choice_linear(1.0, 0.2, 1.0, 2.0)
    assert choice.k == 0.0
    assert choice.b == -1.0
    assert not choice.binding


def test_choice_indeterminate_at_productivity():
    choice = individual_choice_linear(1.0, 0.2, 1.0, 1.0)
    assert isinstance(choice, Indeterminate)
    assert choice.b_low == -1.0
    assert choice.b_high == pytest.approx(0.25)


def test_choice_borrows_to_the_limit_in_between():
    choice = individual_choice_linear(1.0, 0.2, 1.0, 0.5)
    assert choice.k == pytest.approx(5 / 3)
    assert choice.b == pytest.approx(2 / 3)
    assert choice.binding
    assert 0.5 * choice.b == pytest.approx(0.2 * 1.0 * choice.k)


def test_two_agent_bounds(two_agent):
    bounds = compute_bounds(two_agent)
    assert bounds[0].defined
    assert bounds[0].B == pytest.approx(7 / 6)
    assert bounds[0].D == pytest.approx(2.416666666666667)


def test_two_agent_at_tfp(two_agent):
    eq = solve_equilibrium(two_agent)
    assert eq.regime == RegimeLabel.at_tfp(1)
    assert eq.R == 0.5
    assert eq.Y == pytest.approx(1.4333333333333333, rel=1e-12)
    assert eq.allocations[2].k == pytest.approx(7 / 6)
    assert eq.allocations[1].k == pytest.approx(1.7 - 7 / 6)
    assert equilibrium_violations(two_agent, eq) == []


def test_two_agent_interior(two_agent_interior):
    assert classify_regime(two_agent_interior) == RegimeLabel.interior(1)
    assert solve_R_interior(1, two_agent_interior) == pytest.approx(0.48)
    eq = solve_equilibrium(two_agent_interior)
    assert eq.Y == pytest.approx(1.2)
    assert eq.allocations[1].k == 0.0


def test_solve_r_interior_rejects_other_regimes(two_agent):
    with pytest.raises(RegimeMismatchError):
        solve_R_interior(1, two_agent)


def test_two_agent_output_at_higher_a1():
    eq = solve_equilibrium(two_agent_economy(0.9))
    assert eq.regime == RegimeLabel.at_tfp(1)
    assert eq.Y == pytest.approx(1.62)


@pytest.mark.parametrize('A1', np.linspace(0.21, 0.99, 27))
def test_two_agent_closed_form_matches_solver(A1):
    econ = two_agent_economy(A1)
    eq = solve_equilibrium(econ)
    R, Y = two_agent_closed_form(econ)
    assert eq.R == pytest.approx(R, rel=1e-10)
    assert eq.Y == pytest.approx(Y, rel=1e-10)


@pytest.mark.parametrize('gamma2', np.linspace(0.15, 0.45, 31))
def test_three_agent_cases_match_solver(gamma2):
    econ = three_agent_economy(gamma2)
    eq = solve_equilibrium(econ)
    R, label = three_agent_rate_cases(econ)
    assert eq.regime == label
    assert eq.R == pytest.approx(R, rel=1e-9)


@pytest.mark.parametrize('gamma2, label', [
    (0.232, RegimeLabel.at_tfp(1)),
    (0.233, RegimeLabel.interior(1)),
    (0.354, RegimeLabel.interior(1)),
    (0.356, RegimeLabel.at_tfp(2)),
])
def test_three_agent_regime_boundaries(gamma2, label):
    assert classify_regime(three_agent_economy(gamma2)) == label


def test_output_flat_once_middle_agent_sets_the_rate():
    Y = [solve_equilibrium(three_agent_economy(g)).Y for g in (0.38, 0.41, 0.44)]
    assert Y == pytest.approx([Y[0]] * 3, rel=1e-12)


def test_frictionless_when_top_agent_sets_the_rate():
    econ = StaticEconomy.linear(A=(0.5, 1.0), gamma=(0.2, 0.5), S=(0.1, 1.0))
    eq = solve_equilibrium(econ)
    assert eq.regime == RegimeLabel.at_tfp(2)
    assert is_frictionless_linear(econ, eq)
    assert eq.Y == pytest.approx(1.1)
    assert frictionless_output(econ) == pytest.approx(1.1)


def test_constrained_output_below_benchmark(two_agent):
    assert not is_frictionless_linear(two_agent)
    assert solve_equilibrium(two_agent).Y < frictionless_output(two_agent)


def test_invalid_economy_is_rejected():
    econ = StaticEconomy.linear(A=(1.0, 1.0), gamma=(0.2, 0.2), S=(1.0, 1.0))
    with pytest.raises(ValidationError):
        solve_equilibrium(econ)


def test_homogeneous_of_degree_one_in_productivity(three_agent):
    eq = solve_equilibrium(three_agent)
    scaled = solve_equilibrium(three_agent.scaled(1.3))
    assert scaled.Y == pytest.approx(1.3 * eq.Y, rel=1e-10)
    assert scaled.R == pytest.approx(1.3 * eq.R, rel=1e-10)
    assert scaled.regime == eq.regime


def test_random_economies_clear_and_match_oracle(rng):
    for _ in range(40):
        econ = random_linear_economy(rng)
        eq = solve_equilibrium(econ)
        assert equilibrium_violations(econ, eq, frictionless_Y=frictionless_output(econ)) == []

        cap = float(np.max(econ.gamma * econ.productivity))
        step = (float(np.max(econ.productivity)) - cap) / 100_000
        approx = oracle_equilibrium_linear(econ)
        assert -1e-9 * eq.R <= approx - eq.R <= step * (1 + 1e-9) + 1e-12


@pytest.mark.slow
def test_random_economies_match_oracle_on_fine_grid(rng):
    for _ in range(100):
        econ = random_linear_economy(rng)
        eq = solve_equilibrium(econ)
        cap = float(np.max(econ.gamma * econ.productivity))
        step = (float(np.max(econ.productivity)) - cap) / 1_000_000
        approx = oracle_equilibrium_linear(econ, grid_size=1_000_000)
        assert -1e-9 * eq.R <= approx - eq.R <= step * (1 + 1e-9) + 1e-12


def _regimes_by_definition(econ):
    # Every regime whose defining inequalities hold, evaluated from the primitives
    A, gamma, S_i = econ.productivity, econ.gamma, econ.wealth
    S, cap = float(S_i.sum()), float(np.max(gamma * A))

    def tail(rate, start):
        return float(np.sum(rate * S_i[start:] / (rate - gamma[start:] * A[start:])))

    found = []
    for idx in range(econ.m):
        if A[idx] > cap and tail(A[idx], idx + 1) <= S <= tail(A[idx], idx):
            found.append(RegimeLabel.at_tfp(idx + 1))
    for idx in range(econ.m - 1):
        if not (A[idx + 1] > cap and S > tail(A[idx + 1], idx + 1)):
            continue
        if A[idx] > cap:
            inside = S < tail(A[idx], idx + 1)
        else:
            # Borrower demand is infinite at cap when a borrower sets it
            with np.errstate(divide='ignore'):
                inside = tail(cap, idx + 1) > S
        if inside:
            found.append(RegimeLabel.interior(idx + 1))
    return found


def _best_payoff(A, gamma, S, R):
    # Lend everything, or borrow to the limit R b = gamma A k
    k_max = R * S / (R - gamma * A)
    return max(R * S, A * k_max - R * (k_max - S))


def _check_equilibrium_by_definition(econ):
    eq = solve_equilibrium(econ)
    assert _regimes_by_definition(econ) == [eq.regime]
    assert abs(float(np.sum(eq.capital)) - econ.total_wealth) <= 1e-9
    assert abs(float(np.sum(eq.assets))) <= 1e-9
    for agent in econ.agents:
        alloc = eq.allocations[agent.id]
        scale = 1.0 + abs(alloc.k)
        assert alloc.k >= -1e-12 * scale
        assert alloc.k <= agent.S + alloc.b + 1e-9 * scale
        assert eq.R * alloc.b <= agent.gamma * agent.A * alloc.k + 1e-9 * scale * eq.R
        best = _best_payoff(agent.A, agent.gamma, agent.S, eq.R)
        assert agent.A * alloc.k - eq.R * alloc.b >= best - 1e-9 * (1 + abs(best))


def test_random_economies_satisfy_equilibrium_definition(rng):
    for _ in range(300):
        _check_equilibrium_by_definition(random_linear_economy(rng))


@pytest.mark.slow
def test_many_random_economies_satisfy_equilibrium_definition(rng):
    for _ in range(10_000):
        _check_equilibrium_by_definition(random_linear_economy(rng))


def test_bounds_form_a_decreasing_chain(rng):
    for _ in range(200):
        bounds = compute_bounds(random_linear_economy(rng))
        for here, nxt in zip(bounds, bounds[1:]):
            if here.defined:
                assert here.B < here.D
            if here.defined and nxt.defined:
                assert nxt.D < here.B


def test_lender_credit_limit_leaves_equilibrium_unchanged(rng):
    checked = 0
    while checked < 100:
        econ = random_linear_economy(rng)
        eq = solve_equilibrium(econ)
        pledges = econ.gamma * econ.productivity
        for idx, agent in enumerate(econ.agents):
            if not agent.A < eq.R:
                continue
            others = np.delete(pledges, idx)
            cap = float(np.max(others)) if others.size else 0.0
            new_gamma = float(rng.uniform(0.01, 0.95))
            # The lender must not become the agent with the largest pledge
            if not pledges[idx] < cap or not new_gamma * agent.A < cap:
                continue
            moved = solve_equilibrium(econ.replace_agent(agent.id, gamma=new_gamma))
            assert moved.R == eq.R
            assert moved.Y == eq.Y
            assert moved.regime == eq.regime
            checked += 1


def test_clearing_tolerance_is_absolute_for_large_economies():
    econ = StaticEconomy.linear(A=(1.0, 1.2, 1.5), gamma=(0.2, 0.4, 0.3), S=(400.0, 400.0, 300.0))
    eq = solve_equilibrium(econ)
    assert eq.regime == RegimeLabel.at_tfp(2)
    assert equilibrium_violations(econ, eq) == []

    lender = eq.allocations[1]
    assert lender.k == 0.0
    allocations = dict(eq.allocations)
    allocations[1] = replace(lender, k=5e-9, b=lender.b + 5e-9)
    rules = {v.rule for v in equilibrium_violations(econ, replace(eq, allocations=allocations))}
    assert rules == {'asset market clearing', 'capital market clearing'}
