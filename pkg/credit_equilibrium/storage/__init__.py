"""Scenario parsing and result files."""
from .scenario import *
from .files import *

__all__ = [
    'AgentRecord',
    'SweepTarget',
    'SweepSpec',
    'Scenario',
    'parse_scenario',
    'serialize_scenario',
    'to_static_economy',
    'to_dynamic_economy',
    'resolve_output_path',
    'render_table',
    'write_table',
    'read_metadata',
    'read_table',
]
