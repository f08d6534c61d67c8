"""DataFrame builders for equilibria, sweeps, paths and verification reports."""
import numpy as np
import pandas as pd

from ..ramsey.models import EquilibriumPath, RegimeHypothesis

PATH_FIELDS = ('k', 'b', 'c', 's')
_ATTR = {'k': 'capital', 'b': 'assets', 'c': 'consumption', 's': 'savings'}


def equilibrium_frame(eq):
    """
    A static equilibrium as a single row.

    Args:
        eq: StaticEquilibrium

    Returns:
        pd.DataFrame: Columns R, Y, regime, then k_<id> and b_<id> per agent
    """
    record = {'R': eq.R, 'Y': eq.Y, 'regime': str(eq.regime)}
    record.update({f'k_{aid}': a.k for aid, a in eq.allocations.items()})
    record.update({f'b_{aid}': a.b for aid, a in eq.allocations.items()})
    return pd.DataFrame([record])


def allocation_frame(eq):
    """
    One row per agent of a static equilibrium.

    Returns:
        pd.DataFrame: Columns id, k, b, binding, profit
    """
    if not eq.allocations:
        return pd.DataFrame(columns=['id', 'k', 'b', 'binding', 'profit'])

    return pd.DataFrame([
        {'id': aid, 'k': a.k, 'b': a.b, 'binding': a.binding, 'profit': a.profit}
        for aid, a in eq.allocations.items()
    ])


def sweep_frame(table):
    """
    Tabulate a sweep.

    Args:
        table: SweepTable

    Returns:
        pd.DataFrame: Parameter column named after the parameter, then R, Y,
            regime, k_<id> for every agent and error
    """
    label = str(table.param)
    ids = list(table.rows[0].capital) if table.rows else []
    columns = [label, 'R', 'Y', 'regime'] + [f'k_{i}' for i in ids] + ['error']
    if not table.rows:
        return pd.DataFrame(columns=columns)

    records = []
    for row in table.rows:
        record = {label: row.value, 'R': row.R, 'Y': row.Y, 'regime': row.regime}
        record.update({f'k_{i}': row.capital.get(i, np.nan) for i in ids})
        record['error'] = row.error
        records.append(record)
    return pd.DataFrame(records, columns=columns)


def path_frame(path):
    """
    One row per date t = 0..T.

    R is R_t (blank at t = 0), R_next the rate on date-t positions and Y is
    Y_t; per-agent columns k_<id>, b_<id>, c_<id>, s_<id> follow.
    """
    T = path.T
    data = {
        't': np.arange(T + 1),
        'R': path.rates[:T + 1],
        'R_next': path.rates[1:T + 2],
        'Y': path.output,
    }
    for name in PATH_FIELDS:
        values = getattr(path, _ATTR[name])
        for row, aid in enumerate(path.ids):
            data[f'{name}_{aid}'] = values[row]
    return pd.DataFrame(data)


def path_from_frame(df, hypothesis='sequential'):
    """
    Rebuild an EquilibriumPath from path_frame output.

    Args:
        df: DataFrame with the path_frame columns
        hypothesis: RegimeHypothesis or its name

    Returns:
        EquilibriumPath: The path

    Raises:
        ValueError: If a required column is missing
    """
    required = {'t', 'R_next', 'Y'}
    missing = required - set(df.columns)
    if missing:
        raise ValueError(f'path table lacks columns {sorted(missing)}')
    df = df.sort_values('t').reset_index(drop=True)
    ids = [int(c[2:]) for c in df.columns if c.startswith('k_')]
    for name in PATH_FIELDS:
        absent = [aid for aid in ids if f'{name}_{aid}' not in df.columns]
        if absent:
            raise ValueError(f'path table lacks {name} columns for agents {absent}')

    T = len(df) - 1
    rates = np.full(T + 2, np.nan)
    rates[1:] = df['R_next'].to_numpy(dtype=float)
    arrays = {
        _ATTR[name]: np.vstack([df[f'{name}_{aid}'].to_numpy(dtype=float) for aid in ids])
        for name in PATH_FIELDS
    }
    if isinstance(hypothesis, str):
        hypothesis = RegimeHypothesis.parse(hypothesis)
    return EquilibriumPath(hypothesis=hypothesis, ids=ids, rates=rates,
                           output=df['Y'].to_numpy(dtype=float), **arrays)


def verification_frame(report):
    """Residual table of a VerificationReport with the date as a column."""
    if report.residuals.empty:
        return pd.DataFrame(columns=['t'] + list(report.residuals.columns))
    return report.residuals.reset_index()


def failures_frame(report):
    """
    Failing checks of a VerificationReport.

    Returns:
        pd.DataFrame: Columns t, condition, agent, value
    """
    if not report.failures:
        return pd.DataFrame(columns=['t', 'condition', 'agent', 'value'])
    return pd.DataFrame(report.failures, columns=['t', 'condition', 'agent', 'value'])
