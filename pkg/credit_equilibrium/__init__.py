"""Equilibria of production economies with earnings-based borrowing constraints."""
__version__ = '0.1.0'

from .errors import *
from .models import StaticEconomy, StaticEquilibrium, RegimeLabel, validate_economy
from .solvers import solve_equilibrium, frictionless_output
from .ramsey import DynamicEconomy, EquilibriumPath, auto_construct, verify_path

__all__ = [
    '__version__',
    'CreditEquilibriumError',
    'ValidationError',
    'RegimeMismatchError',
    'RegimeClassificationError',
    'SolverError',
    'InsolvableError',
    'ConditionFailure',
    'NoConstructorError',
    'ScenarioError',
    'StaticEconomy',
    'StaticEquilibrium',
    'RegimeLabel',
    'validate_economy',
    'solve_equilibrium',
    'frictionless_output',
    'DynamicEconomy',
    'EquilibriumPath',
    'auto_construct',
    'verify_path',
]
