"""Hard-coded experiments behind the `reproduce` command."""
import logging

import numpy as np
import pandas as pd

from .analysis import Parameter, sweep
from .models import StaticEconomy
from .ramsey import DynamicEconomy, auto_construct

logger = logging.getLogger(__name__)

# Grid sizes for the figure sweeps
A1_SWEEP_POINTS = 133
GAMMA_SWEEP_POINTS = 61

# Horizon of the dynamic comparisons
SHOCK_HORIZON = 50


def two_agent_economy(A1=0.5):
    """S = (1, 0.7), A = (A1, 1), gamma2 = 0.2."""
    return StaticEconomy.linear(A=(A1, 1.0), gamma=(0.2, 0.2), S=(1.0, 0.7))


def three_agent_economy(gamma2=0.3, gamma3=0.3):
    """S = (4, 4, 3), A = (1, 1.2, 1.5), gamma = (0.2, gamma2, gamma3)."""
    return StaticEconomy.linear(A=(1.0, 1.2, 1.5), gamma=(0.2, gamma2, gamma3), S=(4.0, 4.0, 3.0))


def two_agent_ramsey(A1=1.5, horizon=SHOCK_HORIZON):
    """s0 = (200, 100), beta = (0.99, 0.4), A = (A1, 2.25), gamma2 = 0.4."""
    return DynamicEconomy.linear(beta=(0.99, 0.4), gamma=(0.4, 0.4), A=(A1, 2.25),
                                 s0=(200.0, 100.0), horizon=horizon)


def three_agent_ramsey(gamma2=0.3, horizon=SHOCK_HORIZON):
    """s0 = (4, 4, 3), beta = (0.2, 0.2, 0.95), A = (1, 1.2, 1.5), gamma = (0.2, gamma2, 0.3)."""
    return DynamicEconomy.linear(beta=(0.2, 0.2, 0.95), gamma=(0.2, gamma2, 0.3),
                                 A=(1.0, 1.2, 1.5), s0=(4.0, 4.0, 3.0), horizon=horizon)


def _figure_columns(table):
    df = table.to_frame()
    return df[[str(table.param), 'R', 'Y', 'regime']]


def fig_a1():
    """Output against A1 in the two-agent economy over the open interval (0.34, 1)."""
    logger.warning("The A1 figure is described as running up to A2=2 while A2=1; "
                   "sweeping the open interval (0.34, 1)")
    table = sweep(two_agent_economy(), Parameter(1, 'A'), 0.34, 1.0, A1_SWEEP_POINTS,
                  open_interval=True)
    return _figure_columns(table), {'preset': 'fig-a1'}


def fig_gamma2():
    """Rate, output and regime against gamma2 in [0.15, 0.45]."""
    table = sweep(three_agent_economy(), Parameter(2, 'gamma'), 0.15, 0.45, GAMMA_SWEEP_POINTS)
    return _figure_columns(table), {'preset': 'fig-gamma2'}


def fig_gamma3():
    """Rate, output and regime against gamma3 in [0.15, 0.45] with gamma2 = 0.3."""
    table = sweep(three_agent_economy(), Parameter(3, 'gamma'), 0.15, 0.45, GAMMA_SWEEP_POINTS)
    return _figure_columns(table), {'preset': 'fig-gamma3'}


def _outputs(economy):
    path = auto_construct(economy)
    logger.info("Using %s path", path.hypothesis.name)
    return path.output[1:], path.hypothesis.name


def ramsey_a1_shock():
    """Output paths for A1 = 1.5, 1.53 and 1.95 and their differences."""
    base, base_name = _outputs(two_agent_ramsey(1.5))
    small, _ = _outputs(two_agent_ramsey(1.53))
    large, _ = _outputs(two_agent_ramsey(1.95))
    df = pd.DataFrame({
        't': np.arange(1, SHOCK_HORIZON + 1),
        'Y_A1_1.5': base,
        'Y_A1_1.53': small,
        'Y_A1_1.95': large,
        'dY_1.53': small - base,
        'dY_1.95': large - base,
    })
    return df, {'preset': 'ramsey-a1-shock', 'hypothesis': base_name}


def ramsey_gamma2_compare():
    """Output paths for gamma2 = 0.30 and 0.35 in the three-agent economy."""
    low, low_name = _outputs(three_agent_ramsey(0.30))
    high, _ = _outputs(three_agent_ramsey(0.35))
    df = pd.DataFrame({
        't': np.arange(1, SHOCK_HORIZON + 1),
        'Y_gamma2_0.30': low,
        'Y_gamma2_0.35': high,
        'dY': high - low,
    })
    return df, {'preset': 'ramsey-gamma2-compare', 'hypothesis': low_name}


PRESETS = {
    'fig-a1': fig_a1,
    'fig-gamma2': fig_gamma2,
    'fig-gamma3': fig_gamma3,
    'ramsey-a1-shock': ramsey_a1_shock,
    'ramsey-gamma2-compare': ramsey_gamma2_compare,
}


def run_preset(name):
    """
    Run one preset.

    Returns:
        tuple: (DataFrame, metadata dict)

    Raises:
        KeyError: For an unknown preset name
    """
    logger.info("Reproducing %s", name)
    return PRESETS[name]()
