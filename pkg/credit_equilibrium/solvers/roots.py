"""Bracketing and root-finding helpers shared by the solvers."""
import logging

import numpy as np
from scipy.optimize import brentq

from ..config import MAX_ITERATIONS, ROOT_TOL
from ..errors import SolverError

logger = logging.getLogger(__name__)

# brentq refuses rtol below four machine epsilons
MIN_RTOL = 4 * np.finfo(float).eps


def find_root(func, lo, hi, rtol=ROOT_TOL, xtol=1e-300, maxiter=MAX_ITERATIONS):
    """
    Find a root of func on [lo, hi] with Brent's method.

    Args:
        func: Continuous scalar function with a sign change on [lo, hi]
        lo: Lower end of the bracket
        hi: Upper end of the bracket
        rtol: Relative tolerance on the root
        xtol: Absolute tolerance on the root
        maxiter: Iteration cap

    Returns:
        float: The root

    Raises:
        SolverError: If the bracket has no sign change or Brent does not converge
    """
    try:
        root, info = brentq(func, lo, hi, xtol=xtol, rtol=max(rtol, MIN_RTOL),
                            maxiter=maxiter, full_output=True, disp=False)
    except ValueError as exc:
        raise SolverError(f'bad bracket [{lo!r}, {hi!r}]: {exc}') from exc
    if not info.converged:
        raise SolverError(f'root finding did not converge on [{lo!r}, {hi!r}] ({info.flag})')
    logger.debug("Root %.17g on [%.6g, %.6g] after %d iterations", root, lo, hi, info.iterations)
    return float(root)


def expand_upward(func, start, maxsteps=MAX_ITERATIONS):
    """
    Double start until func turns nonpositive.

    Args:
        func: Function that is positive at start and eventually negative
        start: Positive starting point
        maxsteps: Number of doublings allowed

    Returns:
        float: A point where func <= 0

    Raises:
        SolverError: If no such point is found
    """
    hi = start
    for _ in range(maxsteps):
        if func(hi) <= 0:
            return hi
        hi *= 2.0
    raise SolverError(f'could not bracket from above starting at {start!r}')


def shrink_toward(func, start, floor, maxsteps=MAX_ITERATIONS):
    """
    Halve the gap between start and floor until func turns positive.

    Returns:
        float: A point in (floor, start] where func > 0

    Raises:
        SolverError: If the gap collapses first
    """
    lo = start
    for _ in range(maxsteps):
        if func(lo) > 0:
            return lo
        lo = floor + (lo - floor) / 2.0
        if lo <= floor:
            break
    raise SolverError(f'could not bracket from below near {floor!r}')
