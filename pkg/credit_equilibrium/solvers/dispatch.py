"""Pick the solver matching an economy's technologies."""
from ..models import require_valid
from .concave import frictionless_concave, solve_equilibrium_concave
from .linear import frictionless_output_linear, solve_equilibrium_linear


def solve_equilibrium(econ):
    """
    Solve a static economy with the linear or concave solver.

    Args:
        econ: Admissible StaticEconomy

    Returns:
        StaticEquilibrium: The equilibrium
    """
    require_valid(econ)
    if econ.is_linear:
        return solve_equilibrium_linear(econ)
    return solve_equilibrium_concave(econ)


def frictionless_output(econ):
    """Output of the economy without credit constraints."""
    require_valid(econ)
    if econ.is_linear:
        return frictionless_output_linear(econ)
    return frictionless_concave(econ).Y
