"""Shared domain types for credit-equilibrium."""
from .technology import *
from .economy import *
from .validation import *

__all__ = [
    'Technology',
    'TechnologyKind',
    'sample_grid',
    'StaticAgent',
    'StaticEconomy',
    'AgentAllocation',
    'RegimeKind',
    'RegimeLabel',
    'StaticEquilibrium',
    'Violation',
    'validate_economy',
    'require_valid',
    'aggregate_output',
    'marginal_products',
    'equilibrium_violations',
]
