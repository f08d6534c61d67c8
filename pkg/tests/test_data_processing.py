import json
import os

import numpy as np
import pytest

from credit_equilibrium.analysis import Parameter, sweep
from credit_equilibrium.errors import ScenarioError
from credit_equilibrium.models import RegimeLabel
from credit_equilibrium.presets import two_agent_economy
from credit_equilibrium.ramsey import RegimeHypothesis, construct_path_Ah
from credit_equilibrium.solvers import solve_equilibrium
from credit_equilibrium.storage import (
    parse_scenario, read_metadata, read_table, render_table, resolve_output_path,
    serialize_scenario, to_dynamic_economy, to_static_economy, write_table,
)
from credit_equilibrium.utils import (
    allocation_frame, equilibrium_frame, format_number, format_regime, path_frame,
    path_from_frame, scenario_digest, sweep_frame,
)

STATIC = {
    'model': 'static',
    'agents': [
        {'id': 1, 'A': 0.5, 'gamma': 0.2, 'S': 1.0},
        {'id': 2, 'A': 1.0, 'gamma': 0.2, 'S': 0.7},
    ],
    'sweep': {'target': {'agent': 1, 'param': 'A'}, 'from': 0.34, 'to': 1.0, 'steps': 5,
              'open': True},
}

RAMSEY = {
    'model': 'ramsey',
    'horizon': 30,
    'agents': [
        {'id': 1, 'A': 1.5, 'gamma': 0.4, 'beta': 0.99, 's0': 200.0},
        {'id': 2, 'A': 2.25, 'gamma': 0.4, 'beta': 0.4, 's0': 100.0},
    ],
}


def _raw(data):
    return json.dumps(data).encode('utf-8')


def _diagnostics(data):
    with pytest.raises(ScenarioError) as info:
        parse_scenario(_raw(data))
    return info.value.diagnostics


def test_static_scenario_builds_economy():
    scenario = parse_scenario(_raw(STATIC))
    econ = to_static_economy(scenario)
    assert econ == two_agent_economy(0.5)
    assert scenario.sweep.start == 0.34
    assert scenario.sweep.open


def test_scenario_serialization_keeps_aliases():
    scenario = parse_scenario(_raw(STATIC))
    text = serialize_scenario(scenario)
    assert b'"from": 0.34' in text
    assert parse_scenario(text) == scenario


def test_ramsey_scenario_builds_economy():
    economy = to_dynamic_economy(parse_scenario(_raw(RAMSEY)))
    assert economy.horizon == 30
    assert np.allclose(economy.s0, (200.0, 100.0))
    assert to_dynamic_economy(parse_scenario(_raw(RAMSEY)), horizon=5).horizon == 5


def test_out_of_range_gamma_is_located():
    data = json.loads(json.dumps(STATIC))
    data['agents'][0]['gamma'] = 1.2
    assert any(d.startswith('agents[0].gamma') for d in _diagnostics(data))


def test_unknown_field_is_rejected():
    data = json.loads(json.dumps(STATIC))
    data['agents'][1]['colour'] = 'red'
    assert any(d.startswith('agents[1].colour') for d in _diagnostics(data))


def test_semantic_problems_are_all_reported():
    data = json.loads(json.dumps(RAMSEY))
    del data['agents'][0]['s0']
    data['agents'][1]['A_path'] = [2.25, 2.3]
    data['agents'][1]['id'] = 1
    problems = _diagnostics(data)
    assert 'agents[1].id: duplicate id 1' in problems
    assert 'agents[0]: give exactly one of w0 and s0' in problems
    assert 'agents[1]: give exactly one of A and A_path' in problems


def test_short_productivity_path_is_rejected():
    data = json.loads(json.dumps(RAMSEY))
    del data['agents'][0]['A']
    data['agents'][0]['A_path'] = [1.5, 1.5]
    assert any('A_path shorter than horizon' in d for d in _diagnostics(data))


def test_sweep_target_must_exist():
    data = json.loads(json.dumps(STATIC))
    data['sweep']['target']['agent'] = 9
    assert 'sweep.target.agent: no agent with id 9' in _diagnostics(data)


def test_equilibrium_frame(two_agent):
    df = equilibrium_frame(solve_equilibrium(two_agent))
    assert list(df.columns) == ['R', 'Y', 'regime', 'k_1', 'k_2', 'b_1', 'b_2']
    assert df.loc[0, 'regime'] == 'AtTFP(1)'
    assert df.loc[0, 'R'] == 0.5


def test_allocation_frame(two_agent):
    df = allocation_frame(solve_equilibrium(two_agent))
    assert list(df['id']) == [1, 2]
    assert df['binding'].tolist() == [False, True]


def test_sweep_frame_columns(two_agent):
    table = sweep(two_agent, Parameter(1, 'A'), 0.34, 1.0, 4, open_interval=True)
    df = sweep_frame(table)
    assert list(df.columns) == ['A1', 'R', 'Y', 'regime', 'k_1', 'k_2', 'error']
    assert len(df) == 4
    assert (df['error'] == '').all()


def test_path_frame_round_trip(ramsey_two_agent):
    path = construct_path_Ah(ramsey_two_agent, 1, T=6)
    df = path_frame(path)
    assert len(df) == 7
    assert np.isnan(df.loc[0, 'R'])
    rebuilt = path_from_frame(df, path.hypothesis.name)
    assert rebuilt.hypothesis == RegimeHypothesis('Ah', h=1)
    assert rebuilt.ids == [1, 2]
    np.testing.assert_array_equal(rebuilt.rates[1:], path.rates[1:])
    np.testing.assert_array_equal(rebuilt.capital, path.capital)
    np.testing.assert_array_equal(rebuilt.output, path.output)


def test_path_from_frame_reports_missing_columns(ramsey_two_agent):
    df = path_frame(construct_path_Ah(ramsey_two_agent, 1, T=3)).drop(columns=['c_2'])
    with pytest.raises(ValueError, match='c columns'):
        path_from_frame(df)


def test_render_table_header_and_precision():
    import pandas as pd
    text = render_table(pd.DataFrame({'x': [1 / 3]}), {'b': 2, 'a': 1})
    lines = text.split('\n')
    assert lines[:3] == ['# a=1', '# b=2', 'x']
    assert float(lines[3]) == 1 / 3


def test_write_table_round_trip(tmp_path, ramsey_two_agent):
    df = path_frame(construct_path_Ah(ramsey_two_agent, 1, T=4))
    out = write_table(df, str(tmp_path / 'nested' / 'path.csv'), {'hypothesis': 'Ah(h=1)'})
    assert read_metadata(out) == {'hypothesis': 'Ah(h=1)'}
    back = read_table(out)
    np.testing.assert_array_equal(back['k_1'].to_numpy(), df['k_1'].to_numpy())
    assert [p.name for p in out.parent.iterdir()] == ['path.csv']


def test_bare_names_go_to_output_dir(monkeypatch, tmp_path):
    monkeypatch.setattr('credit_equilibrium.storage.files.OUTPUT_DIR', str(tmp_path))
    assert resolve_output_path('result.csv') == tmp_path / 'result.csv'
    assert resolve_output_path(os.path.join('sub', 'result.csv')).parent.name == 'sub'


def test_helpers():
    assert format_regime(RegimeLabel.at_tfp(2)) == 'AtTFP(2)'
    assert format_regime(RegimeHypothesis('Ah', h=1)) == 'Ah(h=1): R_t = A_1'
    assert format_number(float('nan')) == '-'
    assert format_number(1 / 3, digits=3) == '0.333'
    assert scenario_digest('abc') == scenario_digest(b'abc')
    assert len(scenario_digest(b'')) == 64
