"""Pick the first path hypothesis that yields a verified equilibrium."""
import logging

from ..config import TVC_TOL, VERIFY_TOL
from ..errors import ConditionFailure, NoConstructorError, RegimeMismatchError, SolverError
from .conditions import asymptotic_check_Ah, check_conditions_interior_all
from .paths import (
    construct_frictionless_path, construct_path_Ah, construct_path_interior_all,
    construct_path_interior_then_Ah, construct_path_m1mh,
)
from .verifier import verify_path

logger = logging.getLogger(__name__)


def candidate_hypotheses(m):
    """
    Hypotheses in the order they are tried.

    Returns:
        list: (name, kind, n, h) tuples
    """
    candidates = [('frictionless', 'Ah', None, m)]
    candidates += [(f'Ah(h={h})', 'Ah', None, h) for h in range(m - 1, 0, -1)]
    candidates += [(f'interior_then_Ah(n={n},h={h})', 'interior_then_Ah', n, h)
                   for h in range(m, 1, -1) for n in range(h, 1, -1)]
    candidates += [(f'm1mh(h={h})', 'm1mh', m, h) for h in range(m - 1, 0, -1)]
    if m >= 2:
        candidates.append(('interior_all', 'interior_all', m, None))
    return candidates


def _build(economy, kind, n, h, T):
    if kind == 'Ah':
        if h == economy.m:
            return construct_frictionless_path(economy, T)
        return construct_path_Ah(economy, h, T)
    if kind == 'interior_then_Ah':
        return construct_path_interior_then_Ah(economy, n, h, T)
    if kind == 'm1mh':
        return construct_path_m1mh(economy, h, T)
    return construct_path_interior_all(economy, T)


def auto_construct(economy, T=None, tol=VERIFY_TOL, tvc_tol=TVC_TOL):
    """
    Try every closed-form hypothesis and return the first verified path.

    Args:
        economy: DynamicEconomy
        T: Horizon, defaults to economy.horizon
        tol: Verifier tolerance
        tvc_tol: Transversality threshold

    Returns:
        EquilibriumPath: Accepted path; notes list the rejected hypotheses

    Raises:
        NoConstructorError: Every hypothesis was rejected
    """
    T = economy.horizon if T is None else T
    rejections = []
    for name, kind, n, h in candidate_hypotheses(economy.m):
        try:
            path = _build(economy, kind, n, h, T)
        except (ConditionFailure, RegimeMismatchError, SolverError) as exc:
            rejections.append((name, str(exc)))
            continue

        if kind == 'interior_all':
            check = check_conditions_interior_all(economy, T)
        else:
            check = asymptotic_check_Ah(economy, path, h, T)
        if not check.ok:
            rejections.append((name, f'{check.condition} fails at t={check.failing_period}'))
            continue

        report = verify_path(economy, path, tol=tol, tvc_tol=tvc_tol)
        if not report.passed:
            first = report.first_failure()
            reason = f'{first[1]} residual {first[3]:.3g} at t={first[0]}' if first else 'transversality'
            rejections.append((name, f'verification failed: {reason}'))
            continue

        for rejected, reason in rejections:
            logger.info("Rejected %s: %s", rejected, reason)
        logger.info("Selected %s", name)
        path.notes = [f'rejected {r}: {why}' for r, why in rejections]
        return path

    for rejected, reason in rejections:
        logger.warning("Rejected %s: %s", rejected, reason)
    raise NoConstructorError(rejections)
