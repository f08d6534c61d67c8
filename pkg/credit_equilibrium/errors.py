"""Exception hierarchy for credit-equilibrium."""


class CreditEquilibriumError(Exception):
    """Base class for every error raised by the package."""


class ValidationError(CreditEquilibriumError):
    """An economy violates one of its admissibility rules."""

    def __init__(self, violations):
        self.violations = list(violations)
        detail = '; '.join(str(v) for v in self.violations) or 'invalid economy'
        super().__init__(detail)


class RegimeMismatchError(CreditEquilibriumError):
    """An operation was asked for a regime the economy is not in."""


class RegimeClassificationError(CreditEquilibriumError):
    """Regime predicates did not select exactly one cell."""


class SolverError(CreditEquilibriumError):
    """Root bracketing failed or iteration did not converge."""


class InsolvableError(SolverError):
    """The binding-capital equation has no solution for this agent."""


class ConditionFailure(CreditEquilibriumError):
    """A dynamic path hypothesis fails at some date."""

    def __init__(self, period, condition, detail=''):
        self.period = period
        self.condition = condition
        message = f'{condition} fails at t={period}'
        if detail:
            message = f'{message}: {detail}'
        super().__init__(message)


class NoConstructorError(CreditEquilibriumError):
    """No path hypothesis produced a verified equilibrium."""

    def __init__(self, rejections):
        self.rejections = list(rejections)
        lines = [f'{name}: {reason}' for name, reason in self.rejections]
        super().__init__('no constructor applies\n' + '\n'.join(lines))


class ScenarioError(CreditEquilibriumError):
    """A scenario file could not be parsed into an economy."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__('\n'.join(self.diagnostics) or 'invalid scenario')
