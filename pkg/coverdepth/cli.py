"""
Command line interface::

    coverdepth expect  --family golay3 --method refined --format json
    coverdepth weights --code data/c1.code --extended --m 0 --m 2
    coverdepth verify  --family hamming --q 2 --r 3
    coverdepth table   --sweep "simplex:q=2;k=2..5" --format csv

Reports go to standard output. Diagnostics go to standard error through
the coverdepth logger, and a failing command writes nothing to standard
output.
"""
from .codes import full_space, hamming, read_code_file, reed_muller_1, reed_solomon, simplex
from .coverage import (ExpectationResult, expectation_chain_oracle, expectation_exact,
                       expectation_from_weights, expectation_golay, expectation_hamming,
                       expectation_refined, expectation_reed_muller, expectation_simplex,
                       expectation_via_dual, mds_lower_bound)
from .enumeration import (extended_enumerator, extension_weight_distribution, macwilliams_dual,
                          weight_distribution)
from .golay import extended_ternary_golay, ternary_golay
from .io import (FORMATS, render_expectation, render_table, render_verification, render_weights,
                 table_record)
from .log import DEBUG, INFO, error, info, set_log_level
from .simulation import BIT_GENERATORS, SimulationConfig, simulate
from .verification import verify_all_methods
import argparse
import itertools
import sys


__all__ = ['main', 'build_parser', 'FAMILIES', 'METHODS', 'build_code', 'closed_form',
           'parse_sweep', 'cmd_expect', 'cmd_weights', 'cmd_verify', 'cmd_table']


# Parameters required by each family
FAMILIES = {
    'simplex': ('q', 'k'),
    'hamming': ('q', 'r'),
    'golay3': (),
    'golay3x': (),
    'rm1': ('q', 's'),
    'rs': ('q', 'n', 'k'),
    'full': ('q', 'n'),
    'file': (),
}

METHODS = ('exact', 'refined', 'dual', 'weights', 'closed-form', 'chain', 'mc')


def _require(family, params):
    missing = [name for name in FAMILIES[family] if params.get(name) is None]
    if missing:
        raise ValueError(f"Family '{family}' needs {', '.join('--' + m for m in missing)}")
    return [params[name] for name in FAMILIES[family]]


def build_code(family, params, path=None):
    """
    Construct the code named by a family and its parameters.
    """
    if family not in FAMILIES:
        raise ValueError(f"Unknown family '{family}'; choose from {', '.join(FAMILIES)}")
    if family == 'file':
        if path is None:
            raise ValueError("Family 'file' needs --code PATH")
        return read_code_file(path)
    args = _require(family, params)
    constructor = {
        'simplex': simplex,
        'hamming': hamming,
        'golay3': ternary_golay,
        'golay3x': extended_ternary_golay,
        'rm1': reed_muller_1,
        'rs': reed_solomon,
        'full': full_space,
    }[family]
    return constructor(*args)


def closed_form(family, params):
    """
    The closed-form coverage depth of a family, or None if it has none.
    """
    if family not in FAMILIES:
        raise ValueError(f"Unknown family '{family}'; choose from {', '.join(FAMILIES)}")
    if family == 'file':
        return None
    args = _require(family, params)
    if family == 'simplex':
        return expectation_simplex(*args)
    if family == 'hamming':
        return expectation_hamming(*args)
    if family in ('golay3', 'golay3x'):
        return expectation_golay(extended=family == 'golay3x')
    if family == 'rm1':
        return expectation_reed_muller(*args)
    if family == 'rs':
        q, n, k = args
        return mds_lower_bound(n, k)
    q, n = args
    return mds_lower_bound(n, n)


def _source(args):
    """
    Resolve the code source of a request to a family name.
    """
    family = args.family
    if args.code is not None:
        if family not in (None, 'file'):
            raise ValueError("Give either --family or --code, not both")
        family = 'file'
    if family is None:
        raise ValueError("No code given: use --family or --code")
    return family


def _params(args):
    return {name: getattr(args, name) for name in ('q', 'k', 'r', 's', 'n')}


def cmd_expect(args):
    """
    Compute the coverage depth of one code by one method.
    """
    family = _source(args)
    params = _params(args)
    if args.method == 'closed-form':
        value = closed_form(family, params)
        if value is None:
            raise ValueError("Codes read from a file have no closed form")
        name = args.code if family == 'file' else family
        return render_expectation(ExpectationResult('closed-form', value), args.format, name)
    C = build_code(family, params, args.code)
    if args.method == 'mc':
        cfg = SimulationConfig(args.trials, seed=args.seed, rng=args.rng)
        result = simulate(C, cfg)
    else:
        func = {
            'exact': expectation_exact,
            'refined': expectation_refined,
            'dual': expectation_via_dual,
            'weights': expectation_from_weights,
            'chain': expectation_chain_oracle,
        }[args.method]
        result = ExpectationResult(args.method, func(C))
    return render_expectation(result, args.format, C.name)


def cmd_weights(args):
    """
    Weight distribution of a code and of its dual, with the extended
    weight enumerator and extension distributions on request.
    """
    family = _source(args)
    C = build_code(family, _params(args), args.code)
    W = weight_distribution(C)
    report = {
        'code': C.name,
        'weights': W,
        'dual': macwilliams_dual(W, C.q, C.k),
        'extended': None,
        'extensions': [],
    }
    if args.extended or args.m:
        E = extended_enumerator(C)
        if args.extended:
            report['extended'] = E
        report['extensions'] = [(m, extension_weight_distribution(E, C.q, m)) for m in args.m or []]
    return render_weights(report, args.format)


def cmd_verify(args):
    """
    Run every method on one code and report their agreement.

    :return: rendered report and whether every check passed
    """
    family = _source(args)
    params = _params(args)
    C = build_code(family, params, args.code)
    report = verify_all_methods(C, closed_form=closed_form(family, params), trials=args.trials,
                                seed=args.seed)
    return render_verification(report, args.format), report.passed


def _parse_values(name, text):
    values = []
    for item in filter(None, (part.strip() for part in text.split(','))):
        try:
            if '..' in item:
                lo, hi = item.split('..')
                values.extend(range(int(lo), int(hi) + 1))
            else:
                values.append(int(item))
        except ValueError:
            raise ValueError(f"Bad value '{item}' for parameter {name} in sweep")
    return values


def parse_sweep(sweep):
    """
    Parse a sweep ``family:name=values;name=values``, where values are
    comma-separated integers or inclusive ranges ``a..b``.

    :return: the family and the list of parameter dicts on the grid
    """
    family, _, grid = sweep.partition(':')
    family = family.strip()
    if family not in FAMILIES or family == 'file':
        raise ValueError(f"Cannot sweep over family '{family}'")
    axes = {}
    for part in filter(None, (p.strip() for p in grid.split(';'))):
        name, sep, values = part.partition('=')
        name = name.strip()
        if not sep or name not in FAMILIES[family]:
            raise ValueError(f"Bad sweep parameter '{part}' for family '{family}'")
        axes[name] = _parse_values(name, values)
    missing = [name for name in FAMILIES[family] if name not in axes]
    if missing:
        raise ValueError(f"Sweep over '{family}' needs values for {', '.join(missing)}")
    names = list(FAMILIES[family])
    cells = [dict(zip(names, combo)) for combo in itertools.product(*(axes[n] for n in names))]
    return family, cells


def _table_cell(family, params):
    kwargs = {}
    try:
        kwargs['closed_form'] = closed_form(family, params)
        C = build_code(family, params)
        kwargs.update(n=C.n, k=C.k, mds_bound=mds_lower_bound(C.n, C.k))
        try:
            kwargs.update(exact=expectation_exact(C), method='exact')
        except ValueError as exc:
            info(f"table: {C.name}: {exc}; falling back to the chain oracle")
            kwargs.update(exact=expectation_chain_oracle(C), method='chain')
    except (ValueError, RuntimeError, ZeroDivisionError) as exc:
        info(f"table: {family} {params}: {exc}")
        kwargs['error'] = str(exc)
    return table_record(family, params, **kwargs)


def cmd_table(args):
    """
    Tabulate the coverage depth and the MDS bound over parameter sweeps.
    """
    records = []
    for sweep in args.sweep:
        family, cells = parse_sweep(sweep)
        records.extend(_table_cell(family, params) for params in cells)
    return render_table(records, args.format)


def build_parser():
    parser = argparse.ArgumentParser(
        prog='coverdepth',
        description="Coverage depth of linear codes over finite fields.",
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default='human', help="output format")
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help="log progress (-v) or debugging detail (-vv) to standard error")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument('--family', choices=list(FAMILIES), help="named code family")
    source.add_argument('--code', metavar='PATH', help="read the code from a .code file")
    for name, meaning in [('q', "field order"), ('k', "dimension"), ('r', "redundancy"),
                          ('s', "Reed-Muller dimension"), ('n', "length")]:
        source.add_argument(f'--{name}', type=int, help=meaning)

    simulation = argparse.ArgumentParser(add_help=False)
    simulation.add_argument('--seed', type=int, default=0, help="Monte Carlo seed")
    simulation.add_argument('--rng', choices=sorted(BIT_GENERATORS), default='philox',
                            help="Monte Carlo bit generator")

    expect = subparsers.add_parser('expect', parents=[common, source, simulation],
                                   help="coverage depth of one code")
    expect.add_argument('--method', choices=METHODS, default='exact')
    expect.add_argument('--trials', type=int, default=100000, help="Monte Carlo trials")
    expect.set_defaults(func=cmd_expect)

    weights = subparsers.add_parser('weights', parents=[common, source],
                                    help="weight distributions and enumerators")
    weights.add_argument('--extended', action='store_true',
                         help="print the extended weight enumerator")
    weights.add_argument('--m', type=int, action='append',
                         help="extension degree (repeatable)")
    weights.set_defaults(func=cmd_weights)

    verify = subparsers.add_parser('verify', parents=[common, source, simulation],
                                   help="cross-check every method on one code")
    verify.add_argument('--trials', type=int, default=20000, help="Monte Carlo trials")
    verify.set_defaults(func=cmd_verify)

    table = subparsers.add_parser('table', parents=[common],
                                  help="coverage depth over parameter sweeps")
    table.add_argument('--sweep', action='append', required=True, metavar='SWEEP',
                       help="family:name=values;... with values like 2,3 or 2..5 (repeatable)")
    table.set_defaults(func=cmd_table)
    return parser


def main(argv=None):
    """
    Entry point of the ``coverdepth`` command.

    :return: the exit status
    """
    args = build_parser().parse_args(argv)
    if args.verbose:
        set_log_level(DEBUG if args.verbose > 1 else INFO)
    passed = True
    try:
        output = args.func(args)
        if isinstance(output, tuple):
            output, passed = output
    except (ValueError, RuntimeError, NotImplementedError, ZeroDivisionError, OSError) as exc:
        error(f"coverdepth {args.command}: {exc}")
        return 1
    sys.stdout.write(output)
    return 0 if passed else 1
