"""Static equilibrium solvers."""
from .roots import find_root
from .linear import *
from .concave import *
from .dispatch import *

__all__ = [
    'find_root',
    'Unbounded',
    'UNBOUNDED',
    'Indeterminate',
    'LinearBounds',
    'individual_choice_linear',
    'compute_bounds',
    'classify_regime',
    'interior_rate',
    'solve_R_interior',
    'solve_equilibrium_linear',
    'frictionless_output_linear',
    'oracle_equilibrium_linear',
    'two_agent_closed_form',
    'three_agent_rate_cases',
    'is_frictionless_linear',
    'BindingThreshold',
    'kn',
    'kb',
    'kn_cobb_douglas',
    'threshold_cobb_douglas',
    'frictionless_allocation_cobb_douglas',
    'binding_ratio',
    'threshold_Ri',
    'binding_thresholds',
    'individual_choice_concave',
    'solve_equilibrium_concave',
    'frictionless_concave',
    'demand_curve',
    'solve_equilibrium',
    'frictionless_output',
]
