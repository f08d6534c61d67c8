import numpy as np
import pytest

from credit_equilibrium.errors import ValidationError
from credit_equilibrium.models import (
    RegimeLabel, StaticAgent, StaticEconomy, Technology, aggregate_output, marginal_products,
    validate_economy,
)


def _rules(violations):
    return {(v.agent_id, v.rule) for v in violations}


def test_admissible_economy_has_no_violations(three_agent):
    assert validate_economy(three_agent) == []


def test_gamma_out_of_range_is_reported():
    econ = StaticEconomy.linear(A=(1.0, 2.0), gamma=(0.2, 1.2), S=(1.0, 1.0))
    assert (2, 'gamma out of (0,1)') in _rules(validate_economy(econ))


def test_duplicate_ids_are_reported():
    econ = StaticEconomy.linear(A=(1.0, 2.0), gamma=(0.2, 0.2), S=(1.0, 1.0), ids=(7, 7))
    assert (7, 'duplicate id') in _rules(validate_economy(econ))


def test_productivity_tie_is_attributed_to_later_agent():
    econ = StaticEconomy.linear(A=(1.0, 1.0, 2.0), gamma=(0.2, 0.2, 0.2), S=(1.0, 1.0, 1.0))
    assert _rules(validate_economy(econ)) == {(2, 'non-strict A ordering')}


def test_nonpositive_wealth_is_reported():
    econ = StaticEconomy.linear(A=(1.0, 2.0), gamma=(0.2, 0.2), S=(0.0, 1.0))
    assert (1, 'nonpositive wealth') in _rules(validate_economy(econ))


def test_mixed_technologies_are_rejected():
    agents = (
        StaticAgent(1, Technology.linear(1.0), 0.2, 1.0),
        StaticAgent(2, Technology.cobb_douglas(1.0, 0.5), 0.2, 1.0),
    )
    violations = validate_economy(StaticEconomy(agents))
    assert (None, 'mixed linear and concave technologies') in _rules(violations)


def test_custom_concave_technology_passes_sampling():
    tech = Technology.custom(1.0, np.sqrt, lambda k: 0.5 / np.sqrt(k))
    assert tech.admissibility_violations() == []


def test_convex_technology_fails_sampling():
    tech = Technology.custom(1.0, lambda k: k ** 2, lambda k: 2 * k)
    assert 'f not strictly concave' in tech.admissibility_violations()


def test_cobb_douglas_alpha_must_be_fractional():
    assert 'alpha out of (0,1)' in Technology.cobb_douglas(1.0, 1.5).admissibility_violations()


def test_aggregate_output_requires_every_allocation(two_agent):
    with pytest.raises(ValidationError):
        aggregate_output(two_agent, {1: 1.0})
    assert aggregate_output(two_agent, {1: 1.0, 2: 0.7}) == pytest.approx(1.2)


def test_marginal_product_of_idle_concave_producer_is_infinite():
    econ = StaticEconomy.cobb_douglas(A=(1.0, 2.0), alpha=0.5, gamma=(0.2, 0.2), S=(1.0, 1.0))
    products = marginal_products(econ, {1: 0.0, 2: 4.0})
    assert products[1] == float('inf')
    assert products[2] == pytest.approx(0.5)


@pytest.mark.parametrize('label', [RegimeLabel.at_tfp(1), RegimeLabel.interior(2)])
def test_regime_label_parses_its_own_text(label):
    assert RegimeLabel.parse(str(label)) == label


def test_regime_label_text():
    assert str(RegimeLabel.at_tfp(1)) == 'AtTFP(1)'
    assert str(RegimeLabel.interior(3)) == 'Interior(3)'


def test_replace_agent_leaves_original_untouched(two_agent):
    changed = two_agent.replace_agent(1, A=0.8)
    assert changed.agent(1).A == 0.8
    assert two_agent.agent(1).A == 0.5
    assert changed.agent(2) == two_agent.agent(2)


def test_scaled_multiplies_every_productivity(three_agent):
    assert np.allclose(three_agent.scaled(2.0).productivity, 2.0 * three_agent.productivity)
