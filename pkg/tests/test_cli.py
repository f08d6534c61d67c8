import json

import numpy as np
import pytest

from credit_equilibrium import __version__
from credit_equilibrium.cli import (
    EXIT_INVALID, EXIT_OK, EXIT_SOLVER, EXIT_VERIFY_FAILED, build_parser, main,
)
from credit_equilibrium.presets import GAMMA_SWEEP_POINTS
from credit_equilibrium.ramsey import auto_construct
from credit_equilibrium.storage import read_metadata, read_table, write_table
from credit_equilibrium.utils import path_frame

from .test_data_processing import RAMSEY, STATIC


@pytest.fixture
def scenario_file(tmp_path):
    def _write(data, name='scenario.json'):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return path
    return _write


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as info:
        build_parser().parse_args(['--version'])
    assert info.value.code == 0
    assert __version__ in capsys.readouterr().out


def test_static_solve(tmp_path, scenario_file, capsys):
    out = tmp_path / 'solve.csv'
    assert main(['static', 'solve', str(scenario_file(STATIC)), '--out', str(out)]) == EXIT_OK
    assert 'R=0.5 ' in capsys.readouterr().out
    df = read_table(out)
    assert df.loc[0, 'Y'] == pytest.approx(1.4333333333333333)
    assert df.loc[0, 'regime'] == 'AtTFP(1)'
    metadata = read_metadata(out)
    assert len(metadata['scenario_sha256']) == 64
    assert metadata['version'] == __version__
    assert out.read_text().startswith('# scenario_sha256=')


def test_static_solve_is_deterministic(tmp_path, scenario_file):
    scenario = str(scenario_file(STATIC))
    first, second = tmp_path / 'a.csv', tmp_path / 'b.csv'
    main(['static', 'solve', scenario, '--out', str(first)])
    main(['static', 'solve', scenario, '--out', str(second)])
    assert first.read_bytes() == second.read_bytes()


def test_static_sweep(tmp_path, scenario_file):
    out = tmp_path / 'sweep.csv'
    assert main(['static', 'sweep', str(scenario_file(STATIC)), '--out', str(out)]) == EXIT_OK
    df = read_table(out)
    assert list(df.columns[:4]) == ['A1', 'R', 'Y', 'regime']
    assert len(df) == 5
    assert df['A1'].min() > 0.34


def test_sweep_without_sweep_section(tmp_path, scenario_file, capsys):
    data = {key: value for key, value in STATIC.items() if key != 'sweep'}
    code = main(['static', 'sweep', str(scenario_file(data)), '--out', str(tmp_path / 'x.csv')])
    assert code == EXIT_INVALID
    assert 'sweep' in capsys.readouterr().err


def test_invalid_scenario_exits_with_located_message(tmp_path, scenario_file, capsys):
    data = json.loads(json.dumps(STATIC))
    data['agents'][0]['gamma'] = 1.2
    code = main(['static', 'solve', str(scenario_file(data)), '--out', str(tmp_path / 'x.csv')])
    assert code == EXIT_INVALID
    assert 'agents[0].gamma' in capsys.readouterr().err
    assert not (tmp_path / 'x.csv').exists()


def test_tied_productivities_exit_invalid(tmp_path, scenario_file):
    data = json.loads(json.dumps(STATIC))
    data['agents'][0]['A'] = 1.0
    code = main(['static', 'solve', str(scenario_file(data)), '--out', str(tmp_path / 'x.csv')])
    assert code == EXIT_INVALID


def test_missing_scenario_file(tmp_path):
    code = main(['static', 'solve', str(tmp_path / 'absent.json'), '--out', str(tmp_path / 'x.csv')])
    assert code == EXIT_INVALID


def test_ramsey_simulate_then_verify(tmp_path, scenario_file, capsys):
    scenario = str(scenario_file(RAMSEY))
    out = tmp_path / 'path.csv'
    assert main(['ramsey', 'simulate', scenario, '--out', str(out)]) == EXIT_OK
    assert 'Ah(h=1)' in capsys.readouterr().out
    assert read_metadata(out)['hypothesis'] == 'Ah(h=1)'
    df = read_table(out)
    assert len(df) == 31
    assert df.loc[1, 'Y'] == pytest.approx(637.5)

    report = tmp_path / 'residuals.csv'
    assert main(['ramsey', 'verify', str(out), scenario, '--out', str(report)]) == EXIT_OK
    assert capsys.readouterr().out.startswith('PASS')
    assert read_metadata(report)['verdict'] == 'PASS'


def test_ramsey_horizon_override(tmp_path, scenario_file):
    out = tmp_path / 'path.csv'
    main(['ramsey', 'simulate', str(scenario_file(RAMSEY)), '--out', str(out), '--horizon', '8'])
    assert len(read_table(out)) == 9


def test_ramsey_verify_rejects_tampered_path(tmp_path, scenario_file, capsys):
    scenario = str(scenario_file(RAMSEY))
    out = tmp_path / 'path.csv'
    main(['ramsey', 'simulate', scenario, '--out', str(out)])
    df = read_table(out)
    df.loc[5, 'b_2'] = df.loc[5, 'b_2'] * (1 + 1e-4)
    write_table(df, str(out), read_metadata(out))
    capsys.readouterr()

    assert main(['ramsey', 'verify', str(out), scenario]) == EXIT_VERIFY_FAILED
    printed = capsys.readouterr().out
    assert printed.startswith('FAIL')
    assert 'budget' in printed


def test_ramsey_without_constructor_exits_solver(tmp_path, scenario_file):
    data = json.loads(json.dumps(RAMSEY))
    data['horizon'] = 3
    del data['agents'][0]['A']
    data['agents'][0]['A_path'] = [1.5, 3.0, 3.0]
    code = main(['ramsey', 'simulate', str(scenario_file(data)), '--out', str(tmp_path / 'p.csv')])
    assert code == EXIT_SOLVER


def test_reproduce_gamma2(tmp_path):
    out = tmp_path / 'gamma2.csv'
    assert main(['reproduce', 'fig-gamma2', '--out', str(out)]) == EXIT_OK
    df = read_table(out)
    assert list(df.columns) == ['gamma2', 'R', 'Y', 'regime']
    assert len(df) == GAMMA_SWEEP_POINTS
    assert read_metadata(out)['preset'] == 'fig-gamma2'


def test_reproduce_a1_shock(tmp_path):
    out = tmp_path / 'shock.csv'
    assert main(['reproduce', 'ramsey-a1-shock', '--out', str(out)]) == EXIT_OK
    df = read_table(out)
    assert np.all(df['dY_1.53'].to_numpy()[:4] < 0)
    assert np.all(df['dY_1.95'].to_numpy() > 0)


def test_unknown_preset_is_a_usage_error(tmp_path):
    with pytest.raises(SystemExit) as info:
        main(['reproduce', 'nope', '--out', str(tmp_path / 'x.csv')])
    assert info.value.code == 2


def test_simulated_file_matches_library_path(tmp_path, scenario_file, ramsey_two_agent):
    out = tmp_path / 'path.csv'
    main(['ramsey', 'simulate', str(scenario_file(RAMSEY)), '--out', str(out)])
    expected = path_frame(auto_construct(ramsey_two_agent.with_horizon(30)))
    df = read_table(out)
    assert list(df.columns) == list(expected.columns)
    np.testing.assert_array_equal(df['k_2'].to_numpy(), expected['k_2'].to_numpy())
