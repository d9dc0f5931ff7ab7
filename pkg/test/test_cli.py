"""
Test the ``coverdepth`` command line interface.
"""
from coverdepth.cli import main, parse_sweep
from coverdepth.io import TABLE_COLUMNS
from utility import data_file
import csv
import io
import json
import pytest


def run(capsys, *argv):
    status = main(list(argv))
    return status, capsys.readouterr().out


def read_csv(text):
    return list(csv.DictReader(io.StringIO(text)))


# ---------------------------
# standard tests for pytest
# ---------------------------

@pytest.fixture(params=['json', 'csv', 'human'])
def fmt(request):
    return request.param


def test_expect_golay(capsys):
    status, out = run(capsys, 'expect', '--family', 'golay3', '--method', 'refined',
                      '--format', 'json')
    assert status == 0
    data = json.loads(out)
    assert list(data) == ['code', 'method', 'exact', 'mc']
    assert data['code'] == 'golay3' and data['method'] == 'refined'
    assert (data['exact']['num'], data['exact']['den']) == ('21209', '2520')
    assert data['mc'] is None


def test_expect_file(capsys):
    status, out = run(capsys, 'expect', '--code', data_file('c1.code'))
    assert status == 0
    assert "= 1229/210 ~ 5.85238095238 (exact)" in out


def test_expect_formats(capsys, fmt):
    """
    Check every output format of the closed-form method.
    """
    status, out = run(capsys, 'expect', '--family', 'simplex', '--q', '2', '--k', '3',
                      '--method', 'closed-form', '--format', fmt)
    assert status == 0
    if fmt == 'json':
        assert json.loads(out)['exact']['num'] == '47'
    elif fmt == 'csv':
        rows = read_csv(out)
        assert len(rows) == 1
        assert rows[0]['exact'] == '47/12' and rows[0]['method'] == 'closed-form'
    else:
        assert out == "E[simplex] = 47/12 ~ 3.91666666667 (closed-form)\n"


@pytest.mark.parametrize("method", ['exact', 'refined', 'dual', 'weights', 'chain'])
def test_expect_methods(capsys, method):
    status, out = run(capsys, 'expect', '--family', 'rm1', '--q', '3', '--s', '2',
                      '--method', method, '--format', 'json')
    assert status == 0
    assert json.loads(out)['exact']['approx'] == 2.5


def test_expect_monte_carlo(capsys):
    argv = ['expect', '--family', 'hamming', '--q', '2', '--r', '3', '--method', 'mc',
            '--trials', '2000', '--seed', '4', '--format', 'json']
    status, out = run(capsys, *argv)
    assert status == 0
    data = json.loads(out)
    assert data['exact'] is None
    assert data['mc']['trials'] == 2000 and data['mc']['seed'] == 4
    assert abs(data['mc']['mean'] - 347/60) <= 4*data['mc']['stderr']
    assert run(capsys, *argv)[1] == out


@pytest.mark.parametrize("argv", [
    ['expect', '--family', 'simplex', '--q', '2'],
    ['expect', '--family', 'simplex', '--q', '6', '--k', '2'],
    ['expect'],
    ['expect', '--family', 'golay3', '--code', 'c1.code'],
    ['expect', '--code', 'no/such/file.code'],
    ['expect', '--code', 'BAD_RANK'],
    ['expect', '--code', 'C1', '--method', 'closed-form'],
    ['weights', '--family', 'rs', '--q', '5', '--n', '6', '--k', '2'],
])
def test_errors(capsys, argv):
    """
    Check that failing commands exit with status one and print nothing
    on standard output.
    """
    paths = {'BAD_RANK': data_file('bad_rank.code'), 'C1': data_file('c1.code')}
    status, out = run(capsys, *[paths.get(arg, arg) for arg in argv])
    assert status == 1
    assert out == ''


def test_usage_errors(capsys):
    with pytest.raises(SystemExit):
        main(['expect', '--method', 'bogus'])
    with pytest.raises(SystemExit):
        main(['table'])


def test_weights(capsys):
    status, out = run(capsys, 'weights', '--family', 'hamming', '--q', '2', '--r', '3',
                      '--format', 'json')
    assert status == 0
    data = json.loads(out)
    assert data['weights']['counts'] == ['1', '0', '0', '7', '7', '0', '0', '1']
    assert data['dual']['counts'] == ['1', '0', '0', '0', '7', '0', '0', '0']
    assert data['extended'] is None and data['extensions'] == []


def test_weights_extended(capsys, fmt):
    """
    Check the extended enumerator and extension distributions.
    """
    status, out = run(capsys, 'weights', '--code', data_file('c1.code'), '--extended',
                      '--m', '0', '--m', '2', '--format', fmt)
    assert status == 0
    if fmt == 'json':
        data = json.loads(out)
        assert data['extended']['b'][0] == ['-1', '0', '0', '1']
        assert [e['m'] for e in data['extensions']] == [0, 2]
        assert sum(int(c) for c in data['extensions'][1]['weights']['counts']) == 4**3
    elif fmt == 'csv':
        rows = read_csv(out)
        assert {row['kind'] for row in rows} >= {'weights', 'dual', 'extension', 'B_0', 'B_12'}
    else:
        assert "B_0(U) = -1*U^0 + 1*U^3" in out
        assert "extension m=0  W_0=1" in out


def test_verify(capsys, fmt):
    status, out = run(capsys, 'verify', '--family', 'simplex', '--q', '3', '--k', '2',
                      '--trials', '2000', '--format', fmt)
    assert status == 0
    if fmt == 'json':
        data = json.loads(out)
        assert data['passed'] and data['code'] == 'simplex(3, 2)'
    elif fmt == 'csv':
        assert all(row['passed'] == 'true' for row in read_csv(out))
    else:
        assert out.splitlines()[-1].startswith("PASSED")


def test_table_csv(capsys):
    """
    Check a sweep over simplex codes, including one past the census
    guard which falls back to the chain oracle.
    """
    status, out = run(capsys, 'table', '--sweep', 'simplex:q=2;k=2..3,5', '--format', 'csv')
    assert status == 0
    assert out.splitlines()[0] == ','.join(TABLE_COLUMNS)
    rows = read_csv(out)
    assert [row['params'] for row in rows] == ['q=2 k=2', 'q=2 k=3', 'q=2 k=5']
    assert [row['method'] for row in rows] == ['exact', 'exact', 'chain']
    assert all(row['agree'] == 'true' for row in rows)
    assert rows[0]['exact'] == '5/2' and rows[0]['mds_bound'] == '5/2'
    assert rows[1]['exact'] == '47/12'


def test_table_json(capsys):
    status, out = run(capsys, 'table', '--sweep', 'rs:q=5;n=4,5;k=2', '--sweep', 'golay3x:',
                      '--sweep', 'simplex:q=6;k=2', '--format', 'json')
    assert status == 0
    data = json.loads(out)
    assert data['columns'] == TABLE_COLUMNS
    rows = data['rows']
    assert len(rows) == 4
    assert all(row['agree'] == 'true' for row in rows[:3])
    assert rows[2]['family'] == 'golay3x' and rows[2]['n'] == 12
    assert rows[3]['error'] != '' and rows[3]['exact'] == ''


def test_table_human(capsys):
    status, out = run(capsys, 'table', '--sweep', 'full:q=2;n=1..3')
    assert status == 0
    lines = out.splitlines()
    assert lines[0].split() == TABLE_COLUMNS
    assert len(lines) == 4


def test_parse_sweep():
    assert parse_sweep('hamming:q=2,3;r=2') == ('hamming', [{'q': 2, 'r': 2}, {'q': 3, 'r': 2}])
    assert parse_sweep('golay3') == ('golay3', [{}])
    assert parse_sweep('simplex:q=2;k=') == ('simplex', [])
    for sweep in ['file:', 'nothing:q=2', 'simplex:q=2', 'simplex:q=2;k=x', 'simplex:q=2;z=1']:
        with pytest.raises(ValueError):
            parse_sweep(sweep)
