"""One-parameter sweeps over static equilibria."""
import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from ..errors import CreditEquilibriumError, SolverError
from ..solvers import solve_equilibrium

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepRow:
    """One grid point: parameter value, rate, output, regime, capital by agent id."""

    value: float
    R: float
    Y: float
    regime: str
    capital: dict
    error: str = ''


@dataclass(frozen=True)
class SweepTable:
    """Rows of a sweep in grid order, plus what is needed to refine it."""

    param: object
    grid: np.ndarray = field(compare=False)
    rows: tuple
    econ: object = field(default=None, compare=False, repr=False)
    solver: object = field(default=None, compare=False, repr=False)

    def column(self, name):
        return np.array([getattr(row, name) for row in self.rows], dtype=float)

    def to_frame(self):
        from ..utils.data_processing import sweep_frame
        return sweep_frame(self)


def sweep_grid(start, stop, steps, open_interval=False):
    """
    Evenly spaced grid, optionally excluding both end points.

    Args:
        start: First value (or open lower end)
        stop: Last value (or open upper end)
        steps: Number of points
        open_interval: Drop the end points and keep steps interior points

    Returns:
        np.ndarray: Strictly increasing grid
    """
    if steps < 1 or not stop > start:
        raise ValueError('sweep needs steps >= 1 and stop > start')
    if open_interval:
        return np.linspace(start, stop, steps + 2)[1:-1]
    return np.linspace(start, stop, steps)


def _row(econ, param, value, solver):
    try:
        eq = solver(param.apply(econ, value))
    except CreditEquilibriumError as exc:
        logger.warning("Sweep point %s=%.6g failed: %s", param, value, exc)
        capital = {a.id: float('nan') for a in econ.agents}
        return SweepRow(float(value), float('nan'), float('nan'), '', capital, str(exc))
    capital = {aid: alloc.k for aid, alloc in eq.allocations.items()}
    return SweepRow(float(value), eq.R, eq.Y, str(eq.regime), capital)


def sweep(econ, param, start, stop, steps, open_interval=False, solver=solve_equilibrium):
    """
    Solve the economy at every grid value of one parameter.

    Per-point solver errors are stored in the row instead of aborting.

    Args:
        econ: Base economy
        param: Parameter to vary
        start: Grid start
        stop: Grid end
        steps: Number of grid points
        open_interval: Exclude the end points
        solver: Static solver

    Returns:
        SweepTable: One row per grid point
    """
    grid = sweep_grid(start, stop, steps, open_interval)
    logger.info("Sweeping %s over %d points in [%g, %g]", param, len(grid), start, stop)
    rows = tuple(_row(econ, param, value, solver) for value in grid)
    return SweepTable(param=param, grid=grid, rows=rows, econ=econ, solver=solver)


def locate_turning_point(table, column='Y', kind='min', xatol=1e-6):
    """
    Refine a sweep extremum with bounded golden-section search.

    Args:
        table: SweepTable holding its economy and solver
        column: 'Y' or 'R'
        kind: 'min' or 'max'
        xatol: Absolute tolerance on the parameter

    Returns:
        float: Parameter value at the extremum

    Raises:
        SolverError: If the extremum sits on the edge of the grid
    """
    values = table.column(column)
    sign = 1.0 if kind == 'min' else -1.0
    idx = int(np.nanargmin(sign * values))
    if idx == 0 or idx == len(values) - 1:
        raise SolverError(f'{kind} of {column} is at the edge of the sweep')

    def objective(x):
        eq = table.solver(table.param.apply(table.econ, x))
        return sign * getattr(eq, column)

    lo, hi = table.grid[idx - 1], table.grid[idx + 1]
    result = minimize_scalar(objective, bounds=(lo, hi), method='bounded',
                             options={'xatol': xatol})
    logger.debug("Turning point of %s near %.8g", column, result.x)
    return float(result.x)
