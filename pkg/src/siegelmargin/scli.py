# !/usr/bin/env python
# -*- coding: utf-8 -*-

"""
@Time    : 2025-11-08
@Author  : Rey
@Contact : reyxbo@163.com
@Explain : Command line methods.
"""


from typing import Any, Literal
from collections.abc import Callable, Sequence
from argparse import ArgumentParser, Namespace
from dataclasses import dataclass, field
from math import ceil, log
import sys
import logging
from reykit.ros import File

from .sbase import (
    SiegelBase,
    SiegelExitCLI,
    InvalidArgumentError,
    UnsupportedDomainError,
    PoleError,
    ConvergenceError,
    CertificationError,
    exit_cli
)
from .sreport import VerificationReport, to_csv, to_json, format_number
from .sprime import (
    DUSART_START,
    PROP_LOWER_END,
    MertensConstants,
    epsilon_samples,
    proposition_window,
    verify_proposition,
    check_dusart
)
from .scache import cached_table
from .squad import (
    reduced_forms,
    check_nu_oracle,
    check_dedekind,
    check_lemma_h,
    lemma_h_chain,
    lemma_h_sample,
    check_class_number_formula
)
from .sanalytic import QuadratureSpec, compute_J, check_j_values, j_samples
from .sbound import (
    CASE1_END,
    CASE2_END,
    CASE2_ELL,
    BoundConstants,
    case2_corners,
    case2_error_term,
    case2_scan,
    theorem1_curves,
    theorem1_certificate,
    check_theorem2
)


__all__ = (
    'SUBCOMMANDS',
    'DEFAULT_TOLERANCES',
    'CERTIFY_TABLE_LIMIT',
    'RunConfig',
    'CommandResult',
    'build_parser',
    'build_config',
    'run',
    'main'
)


logger = logging.getLogger(__name__)


SUBCOMMANDS = (
    'prop-verify',
    'dusart-check',
    'j-integrals',
    'case-scan',
    'certify-theorem1',
    'class-number',
    'lemma-h',
    'nu',
    'dedekind-check',
    'theorem2',
    'constants-audit'
)
'Subcommand names.'
DEFAULT_TOLERANCES = {
    'mertens_tail': 1e-9,
    'quadrature': 1e-8,
    'j_reference': 1e-5,
    'j_stability': 1e-7,
    'slack_floor': 1e-7
}
'Default tolerances by name.'
CERTIFY_TABLE_LIMIT = 2_300_000
'Prime power table limit of theorem one certificate.'
OutputFormat = Literal['json', 'csv', 'text']


@dataclass(frozen=True)
class RunConfig(SiegelBase):
    """
    Run configuration type.
    Defaults reproduce every acceptance run, output is identical for identical configuration
    when `timestamp` is off, whatever the count of workers.
    """

    subcommand: str
    'Subcommand name, see `SUBCOMMANDS`.'
    tolerances: dict[str, float] = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))
    'Tolerances by name, missing names take `DEFAULT_TOLERANCES` values.'
    grid_step: float = 1e-3
    'Grid step in `log d` of case scans.'
    output_format: OutputFormat = 'json'
    'Output format.'
    output_path: str | None = None
    'Output file path, `None` is standard output.'
    seed: int = 0
    'Random seed of sampled discriminants.'
    workers: int = 1
    'Count of worker threads.'
    timestamp: bool = True
    'Whether JSON output carries a timestamp field.'
    cache_dir: str | None = None
    'Prime power table cache directory, `None` uses environment variable `SIEGEL_MARGIN_CACHE`.'
    options: dict[str, Any] = field(default_factory=dict)
    'Subcommand options.'


    def __post_init__(self) -> None:
        """
        Check configuration.
        """

        # Check.
        if self.subcommand not in SUBCOMMANDS:
            raise InvalidArgumentError(f'unknown subcommand "{self.subcommand}"')
        if self.output_format not in ('json', 'csv', 'text'):
            raise InvalidArgumentError(f'unknown output format "{self.output_format}"')
        unknown = set(self.tolerances) - set(DEFAULT_TOLERANCES)
        if unknown:
            raise InvalidArgumentError(f'unknown tolerance names {sorted(unknown)}')
        for name, value in self.tolerances.items():
            if not value > 0:
                raise InvalidArgumentError(f'tolerance "{name}" must be positive, got {value!r}')
        if not self.grid_step > 0:
            raise InvalidArgumentError(f'grid step must be positive, got {self.grid_step!r}')
        if self.workers < 1:
            raise InvalidArgumentError(f'workers must be at least 1, got {self.workers}')


    def tolerance(self, name: str) -> float:
        """
        Get tolerance by name.

        Parameters
        ----------
        name : Tolerance name.

        Returns
        -------
        Tolerance.
        """

        # Get.
        value = self.tolerances.get(name, DEFAULT_TOLERANCES[name])

        return value


    def option(self, name: str, default: Any = None) -> Any:
        """
        Get subcommand option, `None` values take the default.
        """

        value = self.options.get(name)
        if value is None:
            value = default

        return value


@dataclass
class CommandResult(SiegelBase):
    """
    Subcommand result type.
    """

    report: VerificationReport
    'Verification report.'
    header: Sequence[str] | None = None
    'CSV column names, `None` emits the report summary as key value rows.'
    rows: list[Sequence[Any]] = field(default_factory=list)
    'CSV rows.'


def _collect(claim: str, reports: list[VerificationReport]) -> VerificationReport:
    """
    Collect reports of different points into one report of claim.

    Parameters
    ----------
    claim : Claim identifier.
    reports : Reports.

    Returns
    -------
    Report.
    """

    # Collect.
    report = VerificationReport(
        claim,
        (
            min(item.checked_range[0] for item in reports),
            max(item.checked_range[1] for item in reports)
        )
    )
    for item in reports:
        report.failures.extend(item.failures)
        report.marginal.extend(item.marginal)
        report.min_slack = min(report.min_slack, item.min_slack)

    return report


def _run_prop_verify(config: RunConfig) -> CommandResult:
    """
    Run subcommand `prop-verify`.
    """

    # Parameter.
    table = cached_table(PROP_LOWER_END, config.cache_dir)
    constants = MertensConstants.build(config.tolerance('mertens_tail'))

    # Verify.
    report = verify_proposition(table, constants, config.tolerance('slack_floor'), config.workers)
    implied, stated, inside = proposition_window(DUSART_START)
    report.record(DUSART_START, 'prop-window', 1.0 if inside else -1.0)
    dusart_ok = check_dusart(table, constants, DUSART_START)
    report.record(DUSART_START, 'dusart', 1.0 if dusart_ok else -1.0)
    report.extra.update({
        'prime_powers': int(table.index(PROP_LOWER_END)) + 1,
        'C': constants.C,
        'B1': constants.B1,
        'mertens_deviation': constants.cross_check(table, 1e6),
        'window_implied': implied,
        'window_stated': stated
    })

    # Sample.
    if not config.option('samples', False):
        return CommandResult(report)
    points, errors, lower = epsilon_samples(table, constants)
    rows = list(zip(points.tolist(), errors.tolist(), lower.tolist()))
    report.extra['samples'] = len(rows)

    return CommandResult(report, ('x', 'eps', 'lower'), rows)


def _run_dusart_check(config: RunConfig) -> CommandResult:
    """
    Run subcommand `dusart-check`.
    """

    # Check.
    x = config.option('x', float(DUSART_START))
    if x < DUSART_START:
        raise InvalidArgumentError(f'x = {x!r} below {DUSART_START}')

    # Verify.
    table = cached_table(ceil(x), config.cache_dir)
    constants = MertensConstants.build(config.tolerance('mertens_tail'))
    deviation = constants.cross_check(table, x)
    bound = 0.2 / log(x) ** 3
    report = VerificationReport('dusart', (x, x))
    report.record(x, 'dusart', bound - abs(deviation), strict=False)
    implied, stated, inside = proposition_window(x)
    report.record(x, 'prop-window', 1.0 if inside else -1.0)
    report.extra = {
        'x': x,
        'deviation': deviation,
        'bound': bound,
        'window_implied': implied,
        'window_stated': stated
    }

    return CommandResult(report)


def _run_j_integrals(config: RunConfig) -> CommandResult:
    """
    Run subcommand `j-integrals`.
    """

    # Compute.
    spec = QuadratureSpec(abs_tolerance=config.tolerance('quadrature'))
    j = compute_J(spec)
    report = check_j_values(j, config.tolerance('j_reference'))

    # Stability.
    if config.option('stability', False):
        halved = compute_J(spec.halved())
        limit = config.tolerance('j_stability')
        for index, (value, other) in enumerate(zip(j.values, halved.values), 1):
            report.record(index, f'J{index} stability', limit - abs(value - other), strict=False)
        report.extra['halved'] = halved.to_dict()
    report.extra['quadrature'] = spec.to_dict()

    # Sample.
    if config.option('samples', False):
        rows = j_samples()
        report.extra['samples'] = len(rows)
        return CommandResult(report, ('t', 'j1', 'j2', 'j3', 'j4'), rows)

    # Row.
    rows = [
        (f'J{index}', value, error)
        for index, (value, error) in enumerate(zip(j.values, j.error_estimates), 1)
    ]

    return CommandResult(report, ('name', 'value', 'error_estimate'), rows)


def _run_case_scan(config: RunConfig) -> CommandResult:
    """
    Run subcommand `case-scan`.
    """

    # Parameter.
    start = config.option('start', CASE1_END)
    stop = config.option('stop', CASE2_END)
    constants = BoundConstants()
    table = cached_table(CASE2_ELL, config.cache_dir)

    # Scan.
    curve = case2_scan(config.grid_step, table, start, stop, constants)
    report = VerificationReport('case2', (start, stop))
    report.record_many(curve.logd, 'case2', curve.bound - constants.assumption_const)
    errors = case2_error_term(curve.k0, constants)
    report.extra = {
        'grid_step': config.grid_step,
        'samples': len(curve.logd),
        'min_bound': curve.min_bound,
        'argmin_logd': curve.argmin_logd,
        'corners': case2_corners(start, stop)
    }
    rows = [
        (*row, error)
        for row, error in zip(curve.rows(), errors.tolist())
    ]

    return CommandResult(report, ('logd', 'k0', 'sigma', 'bound', 'error_term'), rows)


def _run_certify_theorem1(config: RunConfig) -> CommandResult:
    """
    Run subcommand `certify-theorem1`.
    """

    # Certify.
    table = cached_table(CERTIFY_TABLE_LIMIT, config.cache_dir)
    curves = theorem1_curves(table, config.grid_step, case3_count=config.option('case3_count', 2000))
    report = theorem1_certificate(table, curves=curves)
    rows = list(curves.rows())

    return CommandResult(report, ('logd', 'k0', 'sigma', 'bound', 'case'), rows)


def _run_class_number(config: RunConfig) -> CommandResult:
    """
    Run subcommand `class-number`.
    """

    # Compute.
    d = config.option('d')
    forms = reduced_forms(d)
    report = check_class_number_formula(forms.discriminant, config.option('terms', 1_000_000))
    expect = config.option('expect')
    if expect is not None:
        report.record(d, 'class-number', 1.0 if forms.class_number == expect else -abs(forms.class_number - expect))
        report.extra['expect'] = expect
    report.extra['forms'] = forms.forms

    return CommandResult(report, ('a', 'b', 'c'), list(forms.forms))


def _run_lemma_h(config: RunConfig) -> CommandResult:
    """
    Run subcommand `lemma-h`.
    """

    # Parameter.
    ds = config.option('d')
    if ds is None:
        ds = lemma_h_sample(config.seed, config.option('sample'))

    # Verify.
    reports = [check_lemma_h(d) for d in ds]
    report = _collect('lemma-h', reports)
    rows = []
    for item in reports:
        extra = item.extra
        lhs, rhs, _ = lemma_h_chain(extra['h'])
        report.record(extra['d'], 'lemma-h-chain', rhs - lhs, strict=False)
        rows.append((extra['d'], extra['h'], extra['x'], extra['sum_nu'], extra['sum_nu_over_a'], extra['h'] / 11))
    report.extra = {
        'seed': config.seed,
        'rows': [item.extra for item in reports]
    }

    return CommandResult(report, ('d', 'h', 'x', 'sum_nu', 'sum_nu_over_a', 'h_over_11'), rows)


def _run_nu(config: RunConfig) -> CommandResult:
    """
    Run subcommand `nu`.
    """

    # Verify.
    report = check_nu_oracle(config.option('d'), config.option('max_a', 2000))
    rows = report.extra.pop('rows')

    return CommandResult(report, ('a', 'nu', 'brute_force'), rows)


def _run_dedekind_check(config: RunConfig) -> CommandResult:
    """
    Run subcommand `dedekind-check`.
    """

    # Verify.
    report = check_dedekind(config.option('d'), config.option('max_n', 10_000))

    return CommandResult(report)


def _run_theorem2(config: RunConfig) -> CommandResult:
    """
    Run subcommand `theorem2`.
    """

    # Verify.
    h_grid = config.option('h_grid', (1_000, 10_000, 100_000, 1_000_000))
    report = check_theorem2(h_grid)
    rows = [
        (row['h'], row['y'], row['ratio'], row['ratio_over_2pi'])
        for row in report.extra['ratio_rows']
    ]

    return CommandResult(report, ('h', 'y', 'ratio', 'ratio_over_2pi'), rows)


def _run_constants_audit(config: RunConfig) -> CommandResult:
    """
    Run subcommand `constants-audit`.
    """

    # Audit.
    constants = BoundConstants(assumption_const=config.option('assumption_const', 6.5))
    records = constants.audit()
    report = VerificationReport('constants', (0, len(records) - 1))
    for index, record in enumerate(records):
        if record.direction_ok:
            slack = abs(record.slack)
        else:
            slack = -abs(record.slack) if record.slack else -1.0
        report.record(index, record.name, slack, strict=False)
    floor, fraction = constants.beta_floor()
    report.extra = {
        'assumption_const': constants.assumption_const,
        'beta_floor': floor,
        'pi_fraction': fraction,
        'records': records
    }
    rows = [
        (record.name, record.expression_value, record.stored_value, record.direction, record.direction_ok)
        for record in records
    ]

    return CommandResult(report, ('name', 'expression_value', 'stored_value', 'direction', 'direction_ok'), rows)


_HANDLERS: dict[str, Callable[[RunConfig], CommandResult]] = {
    'prop-verify': _run_prop_verify,
    'dusart-check': _run_dusart_check,
    'j-integrals': _run_j_integrals,
    'case-scan': _run_case_scan,
    'certify-theorem1': _run_certify_theorem1,
    'class-number': _run_class_number,
    'lemma-h': _run_lemma_h,
    'nu': _run_nu,
    'dedekind-check': _run_dedekind_check,
    'theorem2': _run_theorem2,
    'constants-audit': _run_constants_audit
}


def _render(config: RunConfig, result: CommandResult) -> str:
    """
    Render result in configured format.

    Parameters
    ----------
    config : Run configuration.
    result : Subcommand result.

    Returns
    -------
    Text.
    """

    # Parameter.
    report = result.report
    data = {'subcommand': config.subcommand, **report.to_dict()}

    # Render.
    match config.output_format:
        case 'json':
            if result.header is not None:
                data['columns'] = list(result.header)
                data['rows'] = result.rows
            text = to_json(data, config.timestamp)
        case 'csv':
            if result.header is None:
                rows = [
                    (key, value)
                    for key, value in data.items()
                    if isinstance(value, (bool, int, float, str)) or value is None
                ]
                text = to_csv(('key', 'value'), rows)
            else:
                text = to_csv(result.header, result.rows)
        case 'text':
            lines = [report.message()]
            for key, value in data.items():
                if isinstance(value, float):
                    lines.append(f'{key}: {format_number(value)}')
                elif isinstance(value, (bool, int, str)):
                    lines.append(f'{key}: {value}')
            text = '\n'.join(lines) + '\n'

    return text


def run(config: RunConfig) -> int:
    """
    Run subcommand, emit its report, and exit with status 1 when any check failed.

    Parameters
    ----------
    config : Run configuration.

    Returns
    -------
    Exit status 0.
    """

    # Run.
    logger.info('run subcommand "%s"', config.subcommand)
    handler = _HANDLERS[config.subcommand]
    try:
        result = handler(config)
    except CertificationError as error:
        exit_cli(1, f'certification failed: {error}')

    # Emit.
    text = _render(config, result)
    if config.output_path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        file = File(config.output_path)
        file(text.encode())
        logger.info('output written to "%s"', config.output_path)

    # Judge.
    if not result.report.passed:
        exit_cli(1, result.report.message())

    return 0


def _parse_tolerance(text: str) -> tuple[str, float]:
    """
    Parse `name=value` tolerance argument.
    """

    # Parse.
    name, sep, value = text.partition('=')
    if not sep:
        raise InvalidArgumentError(f'tolerance "{text}" not in form name=value')
    try:
        number = float(value)
    except ValueError:
        raise InvalidArgumentError(f'tolerance "{text}" value not a number') from None

    return name, number


def _parse_h_grid(text: str) -> tuple[int, ...]:
    """
    Parse comma separated class numbers.
    """

    # Parse.
    try:
        grid = tuple(int(item) for item in text.split(','))
    except ValueError:
        raise InvalidArgumentError(f'h grid "{text}" not comma separated integers') from None

    return grid


def build_parser() -> ArgumentParser:
    """
    Build command line parser.

    Returns
    -------
    Parser.
    """

    # Common.
    common = ArgumentParser(add_help=False)
    common.add_argument('--format', dest='output_format', choices=('json', 'csv', 'text'), default='json', help='output format')
    common.add_argument('--output', dest='output_path', default=None, help='output file path, default standard output')
    common.add_argument('--no-timestamp', dest='timestamp', action='store_false', help='omit JSON timestamp field')
    common.add_argument('--verbose', action='store_true', help='log progress to standard error')
    common.add_argument('--seed', type=int, default=0, help='random seed of sampled discriminants')
    common.add_argument('--workers', type=int, default=1, help='count of worker threads')
    common.add_argument('--cache-dir', default=None, help='prime power table cache directory')
    common.add_argument('--tolerance', action='append', default=[], metavar='NAME=VALUE', help=f'override tolerance, names {", ".join(DEFAULT_TOLERANCES)}')

    # Parser.
    parser = ArgumentParser(prog='siegelmargin', description='Explicit Siegel zero bound verification.')
    subparsers = parser.add_subparsers(dest='subcommand', required=True)
    add = lambda name, text: subparsers.add_parser(name, parents=[common], help=text, description=text)

    ## Prime power reciprocal sums.
    sub = add('prop-verify', 'check prime power reciprocal sum window at every prime power')
    sub.add_argument('--samples', action='store_true', help='emit error samples at prime powers and midpoints')
    sub.add_argument('--slack-floor', type=float, default=None, help='flag passed points with smaller slack')
    sub = add('dusart-check', 'check Dusart prime reciprocal bound at a point')
    sub.add_argument('--x', type=float, default=float(DUSART_START), help='real point, at least 2278383')

    ## Analytic.
    sub = add('j-integrals', 'compute line integral constants J1..J4')
    sub.add_argument('--stability', action='store_true', help='recompute with halved tolerance')
    sub.add_argument('--samples', action='store_true', help='emit integrand samples on t in [0, 50] instead of constants')

    ## Case analysis.
    sub = add('case-scan', 'sample case two lower bound')
    sub.add_argument('--from', dest='start', type=float, default=CASE1_END, help='range start in log d, exclusive')
    sub.add_argument('--to', dest='stop', type=float, default=CASE2_END, help='range stop in log d, inclusive')
    sub.add_argument('--step', dest='grid_step', type=float, default=1e-3, help='grid step in log d')
    sub = add('certify-theorem1', 'certify lower bound over the full log d range')
    sub.add_argument('--step', dest='grid_step', type=float, default=1e-3, help='grid step in log d')
    sub.add_argument('--case3-count', type=int, default=2000, help='count of case three grid points')
    sub = add('constants-audit', 'recompute rounded constants and their rounding direction')
    sub.add_argument('--assumption-const', type=float, default=6.5, help='assumed constant of 1 - beta <= c / sqrt d')

    ## Quadratic fields.
    sub = add('class-number', 'enumerate reduced forms and cross check class number formula')
    sub.add_argument('--d', type=int, required=True, help='positive d of discriminant -d')
    sub.add_argument('--terms', type=int, default=1_000_000, help='truncation point of L(1, chi) series')
    sub.add_argument('--expect', type=int, default=None, help='expected class number')
    sub = add('lemma-h', 'check ideal norm sum bound below sqrt(d) / 2')
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument('--d', type=int, nargs='+', default=None, help='positive d values above 3e8')
    group.add_argument('--sample', type=int, default=None, help='count of smallest and of random d values')
    sub = add('nu', 'compare nu formula with congruence count brute force')
    sub.add_argument('--d', type=int, required=True, help='positive d of discriminant -d')
    sub.add_argument('--max-a', type=int, default=2000, help='largest a')
    sub = add('dedekind-check', 'check Dedekind zeta coefficient identity')
    sub.add_argument('--d', type=int, required=True, help='positive d of discriminant -d')
    sub.add_argument('--max-n', type=int, default=10_000, help='largest n')
    sub = add('theorem2', 'tabulate class number asymptotic ratio')
    sub.add_argument('--h-grid', default='1000,10000,100000,1000000', help='comma separated ascending class numbers')

    return parser


def build_config(args: Namespace) -> RunConfig:
    """
    Build run configuration from parsed arguments.

    Parameters
    ----------
    args : Parsed arguments.

    Returns
    -------
    Run configuration.
    """

    # Parameter.
    values = vars(args).copy()
    common = {
        name: values.pop(name)
        for name in ('subcommand', 'output_format', 'output_path', 'timestamp', 'seed', 'workers', 'cache_dir')
    }
    values.pop('verbose')
    tolerances = dict(DEFAULT_TOLERANCES)
    for text in values.pop('tolerance'):
        name, number = _parse_tolerance(text)
        tolerances[name] = number
    slack_floor = values.pop('slack_floor', None)
    if slack_floor is not None:
        tolerances['slack_floor'] = slack_floor
    grid_step = values.pop('grid_step', 1e-3)
    if 'h_grid' in values:
        values['h_grid'] = _parse_h_grid(values['h_grid'])

    # Build.
    config = RunConfig(tolerances=tolerances, grid_step=grid_step, options=values, **common)

    return config


def main(argv: Sequence[str] | None = None) -> int:
    """
    Command line entry.

    Parameters
    ----------
    argv : Arguments.
        - `None`: Use `sys.argv`.

    Returns
    -------
    Exit status 0, failures exit through `SiegelExitCLI` with status 1 or 2.
    """

    # Parameter.
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s'
    )

    # Run.
    try:
        try:
            config = build_config(args)
            status = run(config)
        except (InvalidArgumentError, UnsupportedDomainError) as error:
            exit_cli(2, f'invalid configuration: {error}')
        except (PoleError, ConvergenceError) as error:
            exit_cli(2, f'computation failed: {error}')
    except SiegelExitCLI as error:
        logger.error(error.text)
        raise

    return status


if __name__ == '__main__':
    raise SystemExit(main())
