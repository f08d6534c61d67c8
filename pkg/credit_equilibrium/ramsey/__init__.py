"""Infinite-horizon economy with log utility and linear technologies."""
from .models import *
from .closed_forms import *
from .paths import *
from .conditions import *
from .verifier import *
from .derivatives import *
from .search import *

__all__ = [
    'DynamicAgent',
    'DynamicEconomy',
    'validate_dynamic',
    'ordering_violations',
    'RegimeHypothesis',
    'EquilibriumPath',
    'ConditionCheck',
    'steady_state_rate',
    'FrictionlessPath',
    'frictionless_path',
    'output_closed_form_Ah',
    'output_closed_form_magents',
    'rate_closed_form_interior_all',
    'interior_all_rate_limit',
    'growth_rates',
    'construct_path_Ah',
    'construct_frictionless_path',
    'construct_path_interior_then_Ah',
    'construct_path_m1mh',
    'construct_path_interior_all',
    'simulate_path',
    'eventual_sign_scan',
    'dominance_Ah',
    'asymptotic_check_Ah',
    'check_conditions_Ah',
    'check_conditions_interior_then_Ah',
    'check_conditions_m1mh',
    'check_conditions_interior_all',
    'Multipliers',
    'VerificationReport',
    'verify_path',
    'dYt_dGamma_analytic',
    'dYt_dAh_analytic',
    'ah_shock_sign',
    'first_persistent_sign_date',
    'candidate_hypotheses',
    'auto_construct',
]
