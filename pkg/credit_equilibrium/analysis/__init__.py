"""Comparative statics, sweeps and shock analysis."""
from .comparative import *
from .sweeps import *
from .shocks import *

__all__ = [
    'Parameter',
    'SensitivityReport',
    'dY_dA_linear',
    'dY_dGamma_linear',
    'dR_dGamma_linear',
    'finite_diff_sensitivity',
    'two_agent_turning_point',
    'SweepRow',
    'SweepTable',
    'sweep_grid',
    'sweep',
    'locate_turning_point',
    'ShockVerdict',
    'shocked',
    'asymmetric_shock_check',
    'TFPAccount',
    'tfp_accounting',
]
