"""Productivity shocks: asymmetry conditions and aggregate TFP accounting."""
import logging
from dataclasses import dataclass

import numpy as np

from ..solvers import frictionless_output, solve_equilibrium

logger = logging.getLogger(__name__)

# Relative tolerance when reading the sign of an output change
SIGN_TOL = 1e-12


@dataclass(frozen=True)
class ShockVerdict:
    """
    Predicted and realized direction of output after a productivity shock.

    predicted_sign is +1 for "Y does not fall", -1 for "Y falls" and None when
    no condition fires. in_neighborhood is False when the shock changes the
    regime or leaves the region where the two-agent conditions hold; no
    two-agent prediction is made then.
    """

    conditions: dict
    predicted_sign: int | None
    realized_sign: int
    Y_before: float
    Y_after: float
    in_neighborhood: bool = True

    @property
    def delta_Y(self):
        return self.Y_after - self.Y_before

    @property
    def consistent(self):
        if self.predicted_sign is None:
            return True
        if self.predicted_sign > 0:
            return self.realized_sign >= 0
        return self.realized_sign < 0


def shocked(econ, new_As):
    """Economy with productivities replaced by new_As, in agent order."""
    for agent, A in zip(econ.agents, new_As):
        econ = econ.replace_agent(agent.id, A=float(A))
    return econ


def _sign(delta, scale):
    if abs(delta) <= SIGN_TOL * max(1.0, abs(scale)):
        return 0
    return 1 if delta > 0 else -1


def _two_agent_conditions(econ, new_As):
    (S1, S2), (A1, A2), g2 = econ.wealth, econ.productivity, econ.gamma[1]
    B1, B2 = new_As
    low = (g2 < A1 / A2 * S1 / (S1 + S2)) and (g2 < B1 / B2 * S1 / (S1 + S2))
    fast = B2 / A2 >= B1 / A1 >= 1
    dispersion = S1 / S2 * (A1 / A2 - g2) ** 2 < (1 - g2) * g2
    dispersion_after = S1 / S2 * (B1 / B2 - g2) ** 2 < (1 - g2) * g2
    rate = False
    if B1 != A1:
        bound = g2 * A2 / A1 - S1 * (A1 - g2 * A2) ** 2 / (S2 * A1 * A2 * (1 - g2))
        rate = (B2 / A2 - 1) / (B1 / A1 - 1) < bound
    return {'low_credit_limit': low, 'A2fast': fast, 'dispersion': dispersion,
            'dispersion_after': dispersion_after, 'rate': rate}


def asymmetric_shock_check(econ, new_As, solver=solve_equilibrium):
    """
    Compare the predicted and realized sign of Y(A') - Y(A).

    Two-agent economies are checked against the growth-ratio, dispersion and
    rate conditions; any economy is checked for a homogeneous shock, under
    which output scales exactly with the common factor.

    Args:
        econ: Linear economy before the shock
        new_As: Productivities after the shock, in agent order
        solver: Static solver

    Returns:
        ShockVerdict: Conditions, prediction and realized sign
    """
    new_As = np.asarray(new_As, dtype=float)
    before = solver(econ)
    after = solver(shocked(econ, new_As))
    realized = _sign(after.Y - before.Y, before.Y)

    growth = new_As / econ.productivity
    conditions = {
        'homogeneous': bool(np.allclose(growth, growth[0], rtol=0, atol=1e-15)),
        'same_regime': before.regime == after.regime,
    }
    in_neighborhood = conditions['same_regime']
    predicted = None
    if conditions['homogeneous']:
        predicted = 1 if growth[0] >= 1 else -1
    if econ.m == 2:
        conditions.update(_two_agent_conditions(econ, new_As))
        falls = conditions['dispersion'] and not conditions['A2fast']
        if conditions['low_credit_limit'] and falls:
            # The output-falls region must contain both productivity pairs
            in_neighborhood = in_neighborhood and conditions['dispersion_after']
        if conditions['low_credit_limit'] and in_neighborhood:
            if conditions['A2fast']:
                predicted = 1
            elif conditions['dispersion'] and conditions['rate']:
                predicted = -1 if new_As[0] > econ.productivity[0] else 1
    if not in_neighborhood:
        logger.info("Shock leaves the starting neighborhood (regime %s -> %s)",
                    before.regime, after.regime)

    verdict = ShockVerdict(conditions=conditions, predicted_sign=predicted,
                           realized_sign=realized, Y_before=before.Y, Y_after=after.Y,
                           in_neighborhood=in_neighborhood)
    if not verdict.consistent:
        logger.warning("Shock prediction %s contradicts realized sign %s", predicted, realized)
    return verdict


@dataclass(frozen=True)
class TFPAccount:
    """Aggregate TFP before and after a shock with the individual-growth bounds."""

    tfp_before: float
    tfp_after: float
    ratio: float
    min_growth: float
    max_growth: float
    within_bounds: bool
    frictionless_ratio: float
    frictionless_within_bounds: bool


def tfp_accounting(econ_before, econ_after, f_ref=None, solver=solve_equilibrium, tol=1e-12):
    """
    Aggregate TFP Y / f(S) before and after a shock.

    Args:
        econ_before: Economy before the shock
        econ_after: Same agents after the shock
        f_ref: Common base production function, defaults to the first agent's
        solver: Static solver
        tol: Relative slack on the bounds

    Returns:
        TFPAccount: TFP levels, their ratio and the bound verdicts
    """
    f_ref = f_ref if f_ref is not None else econ_before.agents[0].tech.base
    base = float(f_ref(econ_before.total_wealth))
    Y, Y_new = solver(econ_before).Y, solver(econ_after).Y
    growth = econ_after.productivity / econ_before.productivity
    lo, hi = float(growth.min()), float(growth.max())

    ratio = Y_new / Y
    free_ratio = frictionless_output(econ_after) / frictionless_output(econ_before)
    inside = lambda r: lo * (1 - tol) <= r <= hi * (1 + tol)  # noqa: E731

    account = TFPAccount(tfp_before=Y / base, tfp_after=Y_new / base, ratio=ratio,
                         min_growth=lo, max_growth=hi, within_bounds=inside(ratio),
                         frictionless_ratio=free_ratio,
                         frictionless_within_bounds=inside(free_ratio))
    if not account.frictionless_within_bounds:
        logger.warning("Frictionless TFP ratio %.12g outside [%.12g, %.12g]", free_ratio, lo, hi)
    return account
