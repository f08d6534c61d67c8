"""Table builders and formatting helpers."""
from .helpers import *
from .data_processing import *

__all__ = [
    'format_regime',
    'format_number',
    'scenario_digest',
    'equilibrium_frame',
    'allocation_frame',
    'sweep_frame',
    'path_frame',
    'path_from_frame',
    'verification_frame',
    'failures_frame',
]
