from __future__ import division, absolute_import

import io
import json
import subprocess
import sys

import pytest

from fatflats import cli
from fatflats.classify import MISSING_EXPECTED, UNEXPECTED, scan
from fatflats.diagnostics import filter_log, load_log


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize('argv, expected', [
    (['vdim', '--n', '4', '--mults', '3,3,3,3,3', '--t', '13'], '135'),
    (['vdim', '--n', '3', '--mults', '3,3', '--t', '4'], '-9'),
    (['sform', '--n', '4', '--s', '5', '--t', '7'], '160'),
    (['sform', '--n', '2', '--s', '11', '--t', '2'], '-5'),
    (['conds', '--n', '6', '--codim', '2', '--mult', '3', '--t', '1'], '7'),
    (['adim-bound', '--n', '4', '--s', '12', '--t', '2'], '0'),
    (['certify', '--n', '4', '--s', '12', '--t', '2'], 'false'),
    (['adim-family', '--n', '21', '--k', '4'], '1337982976'),
    (['edim', '--n', '3', '--mults', '3,3', '--t', '4'], '0'),
    (['oracle', '--n', '2', '--mults', '2,2', '--t', '2', '--seed', '4'], '1'),
])
def test_scalar_commands(argv, expected):
    code, out, err = run(*argv)
    assert code == 0, err
    assert out == expected + '\n'


def test_transform_table():
    code, out, _ = run('transform', '--n', '4', '--degree', '7',
                       '--mults', '1,1,1,1,1')
    assert code == 0
    header, row = out.splitlines()
    assert header.split() == ['n', 'degree', 'mults', 'valid']
    assert row.split() == ['4', '13', '3,3,3,3,3', 'true']


def test_transform_negative_multiplicities():
    code, out, _ = run('transform', '--n', '2', '--degree', '-1',
                       '--mults=-1,-1,-1', '--format', 'json')
    assert code == 0
    assert json.loads(out) == {'n': '2', 'degree': '1', 'mults': '1,1,1',
                               'valid': True}


def test_json_scalars_are_strings():
    code, out, _ = run('adim-family', '--n', '21', '--k', '4', '--format', 'json')
    assert code == 0
    assert json.loads(out) == {'adim': '1337982976'}


def test_classify_json():
    code, out, _ = run('classify', '--n', '21', '--k', '4', '--format', 'json')
    assert code == 0
    data = json.loads(out)
    assert data['vdim'] == '12094627905536'
    assert data['deg_target'] == '85'
    assert data['verdict'] == MISSING_EXPECTED


def test_scan_csv_roundtrip(tmp_path):
    path = tmp_path / 'k4.csv'
    code, out, err = run('scan', '--k', '4', '--n-min', '3', '--n-max', '30',
                         '--format', 'csv', '--out', str(path))
    assert code == 0, err
    assert out == ''
    text = path.read_text()
    assert text.splitlines()[0] == 'n,k,deg_source,deg_target,adim,vdim,verdict'
    records = cli.read_scan_csv(text)
    assert records == scan(4, 3, 30)
    assert records[0].verdict == UNEXPECTED
    assert records[-1].verdict == MISSING_EXPECTED


def test_scan_json_list():
    code, out, _ = run('scan', '--k', '3', '--n-min', '3', '--n-max', '5',
                       '--format', 'json', '--jobs', '2')
    assert code == 0
    data = json.loads(out)
    assert [row['n'] for row in data] == ['3', '4', '5']
    assert data[1]['adim'] == '160'


def test_summary():
    code, out, _ = run('summary', '--k', '5', '--n-min', '3', '--n-max', '50',
                       '--format', 'csv')
    assert code == 0
    assert out.splitlines() == ['verdict,n_first,n_last',
                                'Unexpected,3,17',
                                'MissingExpected,18,41',
                                'Unexpected,42,50']


def test_report_and_profile():
    code, out, _ = run('report', '--n', '4', '--s', '5', '--t', '7',
                       '--format', 'json')
    assert code == 0
    data = json.loads(out)
    assert data['status'] == 'ExactKnown'
    assert data['adim_exact'] == '160'
    assert data['lower_certified'] is True

    code, out, _ = run('profile', '--n', '2', '--mults', '3,3', '--t-min', '3',
                       '--t-max', '4', '--format', 'csv')
    assert code == 0
    assert out.splitlines()[-1] == '4,3'


@pytest.mark.parametrize('argv', [
    [],
    ['vdim', '--n', '4', '--t', '2'],
    ['vdim', '--n', 'four', '--mults', '1', '--t', '2'],
    ['sform', '--n', '4', '--s', '5', '--t', '7', '--format', 'xml'],
    ['frobnicate'],
])
def test_usage_errors(argv):
    code, out, err = run(*argv)
    assert code == 1
    assert out == ''
    assert 'error' in err


@pytest.mark.parametrize('argv', [
    ['vdim', '--n', '1', '--mults', '1', '--t', '2'],
    ['adim-family', '--n', '4', '--k', '2'],
    ['transform', '--n', '4', '--degree', '7', '--mults', '1,1'],
    ['oracle', '--n', '4', '--mults', '1,1,1,1,1', '--t', '7', '--prime', '101'],
    ['scan', '--k', '3', '--n-min', '9', '--n-max', '4'],
    ['sform', '--n', '1', '--s', '1', '--t', '1'],
    ['certify', '--n', '0', '--s', '3', '--t', '2'],
])
def test_precondition_errors(argv):
    code, out, err = run(*argv)
    assert code == 2
    assert out == ''
    assert err.startswith('fatflats: ')


def test_verify_failure_exit_code(monkeypatch):
    monkeypatch.setattr(cli, 'run_verify',
                        lambda **kw: (3, ['golden_recursion: broken']))
    code, out, err = run('verify', '--grid-max', '4')
    assert code == 3
    assert 'golden_recursion: broken' in err
    assert out.splitlines()[1].split() == ['3', '1']


def test_verify_passes_settings(monkeypatch):
    seen = {}

    def fake(**kw):
        seen.update(kw)
        return 11, []
    monkeypatch.setattr(cli, 'run_verify', fake)
    code, _, _ = run('verify', '--seeds', '2')
    assert code == 0
    assert seen['grid_max'] == 12
    assert seen['seeds'] == 2
    assert seen['oracle_config'].prime == 2147483647


def test_config_and_event_log(tmp_path):
    cfg = tmp_path / 'cfg.yaml'
    cfg.write_text("scan:\n  format: csv\noracle:\n  seed: 2\n")
    logpath = tmp_path / 'events.json'
    code, out, err = run('--config', str(cfg), '--log', str(logpath), '--verbose',
                         'oracle', '--n', '3', '--mults', '1,1', '--t', '2')
    assert code == 0
    # the configured format is for scans; scalars stay bare
    assert out == '4\n'
    assert "event='oracle_rank'" in err
    events = load_log(str(logpath))
    (matrix,) = filter_log(events, 'oracle_matrix').values()
    assert matrix['seed'] == 2
    assert matrix['command'] == 'oracle'


def test_precondition_logged(tmp_path):
    logpath = tmp_path / 'events.json'
    code, _, _ = run('--log', str(logpath), 'sform', '--n', '1', '--s', '1',
                     '--t', '1')
    assert code == 2
    (ev,) = load_log(str(logpath)).values()
    assert ev['status'] == 'user_error'


def test_bad_config_file(tmp_path):
    cfg = tmp_path / 'cfg.yaml'
    cfg.write_text("plot:\n  dpi: 3\n")
    code, _, err = run('--config', str(cfg), 'sform', '--n', '4', '--s', '5',
                       '--t', '7')
    assert code == 1
    assert 'configuration' in err


def test_module_entry_point():
    cp = subprocess.run([sys.executable, '-m', 'fatflats', 'sform', '--n', '3',
                         '--s', '4', '--t', '6'], capture_output=True, text=True)
    assert cp.returncode == 0, cp.stderr
    assert cp.stdout.strip() == '56'


def test_configured_format_applies_to_scans(tmp_path):
    cfg = tmp_path / 'cfg.yaml'
    cfg.write_text("scan:\n  format: csv\n")
    code, out, _ = run('--config', str(cfg), 'scan', '--k', '3', '--n-min', '3',
                       '--n-max', '4')
    assert code == 0
    assert out.splitlines()[0] == ','.join(cli.SCAN_COLUMNS)
    code, out, _ = run('--config', str(cfg), 'sform', '--n', '4', '--s', '5',
                       '--t', '7')
    assert out == '160\n'


def test_unknown_config_key(tmp_path):
    cfg = tmp_path / 'cfg.yaml'
    cfg.write_text("oracle:\n  sede: 3\n")
    code, out, err = run('--config', str(cfg), 'oracle', '--n', '3',
                         '--mults', '1,1', '--t', '2')
    assert code == 1
    assert out == ''
    assert 'oracle.sede' in err


def test_unwritable_output(tmp_path):
    target = tmp_path / 'missing' / 'k3.csv'
    code, out, err = run('scan', '--k', '3', '--n-min', '3', '--n-max', '4',
                         '--out', str(target))
    assert code == 1
    assert out == ''
    assert 'cannot write output' in err
