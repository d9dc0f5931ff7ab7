"""
Rendering of results as JSON, CSV or plain text.

JSON output keeps a fixed key order and prints decimals with 12
significant digits, so identical runs produce identical bytes. CSV output
always has a header row, even when there are no records.
"""
from fractions import Fraction
import json
import pandas as pd


__all__ = ['FORMATS', 'dump_json', 'records_to_csv', 'format_decimal', 'render_expectation',
           'render_weights', 'render_verification', 'render_table', 'table_record',
           'TABLE_COLUMNS']


FORMATS = ('json', 'csv', 'human')

TABLE_COLUMNS = ['family', 'params', 'n', 'k', 'method', 'exact', 'decimal', 'closed_form',
                 'agree', 'mds_bound', 'mds_decimal', 'error']


def format_decimal(value, digits=12):
    """
    Decimal rendering of a number with ``digits`` significant digits.
    """
    if value is None:
        return ''
    return f"{float(value):.{digits}g}"


def dump_json(data):
    return json.dumps(data, indent=2) + '\n'


def records_to_csv(records, columns):
    """
    Render a list of dicts as CSV with the given columns.
    """
    frame = pd.DataFrame(records, columns=columns, dtype=object)
    return frame.to_csv(index=False, lineterminator='\n')


def _check_format(fmt):
    if fmt not in FORMATS:
        raise ValueError(f"Unknown output format '{fmt}'; choose from {', '.join(FORMATS)}")


def _exact_text(value):
    return '' if value is None else str(Fraction(value))


def render_expectation(result, fmt, code_name=''):
    """
    Render an :class:`ExpectationResult`.
    """
    _check_format(fmt)
    if fmt == 'json':
        return dump_json({'code': code_name, **result.to_json()})
    record = {
        'code': code_name,
        'method': result.method,
        'exact': _exact_text(result.value),
        'decimal': format_decimal(result.approx),
        'stderr': '' if result.is_exact else format_decimal(result.stderr),
        'trials': '' if result.is_exact else result.trials,
        'seed': '' if result.is_exact else result.seed,
    }
    if fmt == 'csv':
        return records_to_csv([record], list(record))
    if result.is_exact:
        return (f"E[{code_name}] = {result.value} ~ {format_decimal(result.value)}"
                + f" ({result.method})\n")
    return (f"E[{code_name}] ~ {format_decimal(result.mean)}"
            + f" +/- {format_decimal(result.stderr)}"
            + f" ({result.trials} trials, seed {result.seed})\n")


def render_weights(report, fmt):
    """
    Render the output of the ``weights`` command.

    :arg report: dict with keys ``code``, ``weights``, ``dual``,
        ``extended`` (or None) and ``extensions`` (list of
        ``(m, WeightDistribution)`` pairs)
    """
    _check_format(fmt)
    extended = report['extended']
    if fmt == 'json':
        return dump_json({
            'code': report['code'],
            'weights': report['weights'].to_json(),
            'dual': report['dual'].to_json(),
            'extended': None if extended is None else extended.to_json(),
            'extensions': [{'m': m, 'weights': W.to_json()} for m, W in report['extensions']],
        })
    rows = [('weights', '', report['weights']), ('dual', '', report['dual'])]
    rows += [('extension', m, W) for m, W in report['extensions']]
    if fmt == 'csv':
        records = [
            {'kind': kind, 'm': m, 'weight': i, 'count': count}
            for kind, m, W in rows
            for i, count in enumerate(W.counts)
        ]
        if extended is not None:
            records += [
                {'kind': f'B_{t}', 'm': '', 'weight': j, 'count': c}
                for t, poly in enumerate(extended.b_polys)
                for j, c in enumerate(poly)
            ]
        return records_to_csv(records, ['kind', 'm', 'weight', 'count'])
    lines = [f"Code {report['code']}"]
    for kind, m, W in rows:
        label = kind if m == '' else f"{kind} m={m}"
        terms = ', '.join(f"W_{i}={c}" for i, c in enumerate(W.counts) if c)
        lines.append(f"  {label:14s} {terms}")
    if extended is not None:
        for t, poly in enumerate(extended.b_polys):
            terms = ' + '.join(f"{c}*U^{j}" for j, c in enumerate(poly) if c) or '0'
            lines.append(f"  B_{t}(U) = {terms}")
    return '\n'.join(lines) + '\n'


def render_verification(report, fmt):
    """
    Render a :class:`VerificationReport`.
    """
    _check_format(fmt)
    if fmt == 'json':
        return dump_json(report.to_json())
    if fmt == 'csv':
        records = [
            {'check': check.name, 'passed': 'true' if check.passed else 'false',
             'detail': check.detail}
            for check in report.checks
        ]
        return records_to_csv(records, ['check', 'passed', 'detail'])
    lines = [f"Verification of {report.code_name}"]
    for method, result in report.results.items():
        if result.is_exact:
            lines.append(f"  {method:12s} {result.value} ~ {format_decimal(result.value)}")
        else:
            lines.append(f"  {method:12s} {format_decimal(result.mean)}"
                         + f" +/- {format_decimal(result.stderr)}")
    for method, reason in report.skipped.items():
        lines.append(f"  {method:12s} skipped: {reason}")
    for check in report.checks:
        lines.append(f"  [{'pass' if check.passed else 'FAIL'}] {check.name}")
    lines.append(f"{'PASSED' if report.passed else 'FAILED'}:"
                 + f" {len(report.checks) - len(report.failures)}/{len(report.checks)} checks")
    return '\n'.join(lines) + '\n'


def table_record(family, params, **kwargs):
    """
    One row of a parameter sweep. Missing values render as empty cells.
    """
    exact = kwargs.get('exact')
    closed_form = kwargs.get('closed_form')
    bound = kwargs.get('mds_bound')
    agree = ''
    if exact is not None and closed_form is not None:
        agree = 'true' if exact == closed_form else 'false'
    return {
        'family': family,
        'params': ' '.join(f"{key}={value}" for key, value in params.items()),
        'n': kwargs.get('n', ''),
        'k': kwargs.get('k', ''),
        'method': kwargs.get('method', ''),
        'exact': _exact_text(exact),
        'decimal': format_decimal(exact),
        'closed_form': _exact_text(closed_form),
        'agree': agree,
        'mds_bound': _exact_text(bound),
        'mds_decimal': format_decimal(bound),
        'error': kwargs.get('error', ''),
    }


def render_table(records, fmt):
    """
    Render the rows of a parameter sweep.
    """
    _check_format(fmt)
    if fmt == 'json':
        return dump_json({'columns': TABLE_COLUMNS, 'rows': records})
    if fmt == 'csv':
        return records_to_csv(records, TABLE_COLUMNS)
    widths = {column: len(column) for column in TABLE_COLUMNS}
    for record in records:
        for column in TABLE_COLUMNS:
            widths[column] = max(widths[column], len(str(record[column])))
    lines = ['  '.join(f"{column:{widths[column]}s}" for column in TABLE_COLUMNS).rstrip()]
    for record in records:
        lines.append('  '.join(f"{str(record[c]):{widths[c]}s}" for c in TABLE_COLUMNS).rstrip())
    return '\n'.join(lines) + '\n'
