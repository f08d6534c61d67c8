"""Small formatting helpers for credit-equilibrium."""
import hashlib
import math


def format_regime(regime):
    """
    Render a regime label or path hypothesis for display.

    Args:
        regime: RegimeLabel, RegimeHypothesis, string or None

    Returns:
        str: Display text, empty when regime is None
    """
    if regime is None:
        return ""
    name = getattr(regime, 'name', None)
    if isinstance(name, str) and hasattr(regime, 'describe'):
        return f"{name}: {regime.describe()}"
    return str(regime)


def format_number(value, digits=6):
    """Format a float compactly, with NaN shown as a dash."""
    if value is None or (isinstance(value, float) and math.isnan(value)):
        return "-"
    return f"{value:.{digits}g}"


def scenario_digest(raw):
    """
    SHA-256 of a scenario file's bytes.

    Args:
        raw: bytes or str

    Returns:
        str: Hex digest
    """
    if isinstance(raw, str):
        raw = raw.encode('utf-8')
    return hashlib.sha256(raw).hexdigest()
