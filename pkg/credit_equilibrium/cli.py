"""Command-line interface: credit-eq static|ramsey|reproduce."""
import argparse
import logging
import sys

from . import __version__
from .config import DEFAULT_TOLERANCES, LOG_LEVEL
from .errors import CreditEquilibriumError, ScenarioError, ValidationError
from .analysis import Parameter, sweep
from .presets import PRESETS, run_preset
from .ramsey import auto_construct, validate_dynamic, verify_path
from .solvers import solve_equilibrium
from .storage import (
    parse_scenario, read_metadata, read_table, to_dynamic_economy, to_static_economy,
    write_table,
)
from .utils import (
    equilibrium_frame, failures_frame, format_number, format_regime, path_frame, path_from_frame,
    scenario_digest, verification_frame,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID = 2
EXIT_SOLVER = 3


def _metadata(raw=None, tolerances=DEFAULT_TOLERANCES, **extra):
    metadata = {'version': __version__}
    if raw is not None:
        metadata['scenario_sha256'] = scenario_digest(raw)
    for key, value in tolerances.as_dict().items():
        metadata[f'tol_{key}'] = repr(value)
    metadata.update(extra)
    return metadata


def _load(path):
    with open(path, 'rb') as handle:
        raw = handle.read()
    return raw, parse_scenario(raw)


def _dynamic(scenario, horizon=None):
    economy = to_dynamic_economy(scenario, horizon)
    problems = validate_dynamic(economy)
    if problems:
        raise ValidationError(problems)
    return economy


def cmd_static_solve(args):
    raw, scenario = _load(args.scenario)
    eq = solve_equilibrium(to_static_economy(scenario))
    print(f"R={format_number(eq.R, 12)} Y={format_number(eq.Y, 12)} regime={format_regime(eq.regime)}")
    write_table(equilibrium_frame(eq), args.out, _metadata(raw))
    return EXIT_OK


def cmd_static_sweep(args):
    raw, scenario = _load(args.scenario)
    if scenario.sweep is None:
        raise ScenarioError(['sweep: required for static sweep'])
    spec = scenario.sweep
    table = sweep(to_static_economy(scenario), Parameter(spec.target.agent, spec.target.param),
                  spec.start, spec.stop, spec.steps, open_interval=spec.open)
    write_table(table.to_frame(), args.out, _metadata(raw))
    return EXIT_OK


def cmd_ramsey_simulate(args):
    raw, scenario = _load(args.scenario)
    economy = _dynamic(scenario, args.horizon)
    path = auto_construct(economy)
    print(format_regime(path.hypothesis))
    for note in path.notes:
        logger.info(note)
    metadata = _metadata(raw, hypothesis=path.hypothesis.name, horizon=path.T)
    write_table(path_frame(path), args.out, metadata)
    return EXIT_OK


def cmd_ramsey_verify(args):
    raw, scenario = _load(args.scenario)
    metadata = read_metadata(args.path)
    try:
        path = path_from_frame(read_table(args.path), metadata.get('hypothesis', 'sequential'))
    except ValueError as exc:
        raise ScenarioError([f'{args.path}: {exc}']) from exc
    economy = _dynamic(scenario, path.T)
    if list(economy.ids) != list(path.ids):
        raise ScenarioError([f'{args.path}: agents {path.ids} do not match scenario {economy.ids}'])

    tolerances = DEFAULT_TOLERANCES if args.tol is None else DEFAULT_TOLERANCES.with_verify(args.tol)
    report = verify_path(economy, path, tol=tolerances.verify, tvc_tol=tolerances.tvc)
    verdict = 'PASS' if report.passed else 'FAIL'
    print(f"{verdict} max_residual={report.max_residual:.3g} "
          f"tvc_proxy={report.tvc_proxy:.3g} tvc_decay={report.tvc_decay:.6g}")
    if not report.passed:
        print(failures_frame(report).head(20).to_string(index=False))
    if args.out:
        write_table(verification_frame(report), args.out,
                    _metadata(raw, tolerances, verdict=verdict))
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_reproduce(args):
    df, metadata = run_preset(args.preset)
    write_table(df, args.out, _metadata(**metadata))
    return EXIT_OK


def build_parser():
    """The argparse parser for every subcommand."""
    parser = argparse.ArgumentParser(prog='credit-eq',
                                     description='Equilibria of economies with borrowing constraints')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='store_true', help='Log at INFO level')
    groups = parser.add_subparsers(dest='group', required=True)

    static = groups.add_parser('static', help='Two-period economies')
    static_cmds = static.add_subparsers(dest='command', required=True)
    solve = static_cmds.add_parser('solve', help='Solve one scenario')
    solve.add_argument('scenario')
    solve.add_argument('--out', required=True)
    solve.set_defaults(func=cmd_static_solve)
    sweep_cmd = static_cmds.add_parser('sweep', help="Sweep the scenario's sweep parameter")
    sweep_cmd.add_argument('scenario')
    sweep_cmd.add_argument('--out', required=True)
    sweep_cmd.set_defaults(func=cmd_static_sweep)

    ramsey = groups.add_parser('ramsey', help='Infinite-horizon economies')
    ramsey_cmds = ramsey.add_subparsers(dest='command', required=True)
    simulate = ramsey_cmds.add_parser('simulate', help='Construct a verified path')
    simulate.add_argument('scenario')
    simulate.add_argument('--out', required=True)
    simulate.add_argument('--horizon', type=int, default=None, help='Truncation date T')
    simulate.set_defaults(func=cmd_ramsey_simulate)
    verify = ramsey_cmds.add_parser('verify', help='Check a path file against a scenario')
    verify.add_argument('path')
    verify.add_argument('scenario')
    verify.add_argument('--tol', type=float, default=None, help='Residual tolerance')
    verify.add_argument('--out', default=None, help='Write the residual table here')
    verify.set_defaults(func=cmd_ramsey_verify)

    reproduce = groups.add_parser('reproduce', help='Run a built-in experiment')
    reproduce.add_argument('preset', choices=sorted(PRESETS))
    reproduce.add_argument('--out', required=True)
    reproduce.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None):
    """
    Entry point.

    Returns:
        int: 0 on success, 1 when verification fails, 2 for invalid input,
            3 for solver failures
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level='INFO' if args.verbose else LOG_LEVEL.upper(),
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        return args.func(args)
    except (ValidationError, ScenarioError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CreditEquilibriumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == '__main__':
    sys.exit(main())
