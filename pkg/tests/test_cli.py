"""
This file is part of pcollect which is released under MIT.
See file LICENSE.txt for full license details.
"""


import json
import pytest
from pcollect import cli
from pcollect import resource
from pcollect.interface import Workbench
from pcollect.pipeline import PASS


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_classes(capsys):
    assert cli.main(['classes', '--group', 'sym4']) == cli.EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith('sym4: 5 classes')


def test_classes_as_json(capsys):
    assert cli.main(['classes', '--group', 'sym5', '--format', 'json']) == cli.EXIT_OK
    data = _json(capsys)
    assert [entry['size'] for entry in data['classes']] == [1, 10, 15, 20, 20, 30, 24]


def test_classify(capsys):
    assert cli.main(['classify', '--group', 'sym5', '--prime', '2', '--format', 'json']) == 0
    data = _json(capsys)
    assert not data['local']
    assert data['parabolic']
    assert data['local_witnesses']


def test_collections(capsys, tmp_path):
    dump = tmp_path / 'hatB.txt'
    status = cli.main([
        'collections', '--group', 'sym5', '--prime', '2', '--kind', 'hatB',
        '--format', 'json', '--dump', str(dump),
    ])
    assert status == cli.EXIT_OK
    data = _json(capsys)
    assert data['subgroups'] == 20
    assert data['poset']['elements'] == 20
    assert data['poset']['relations'] == 15
    assert data['poset']['homology']['0'] == {'rank': 4, 'torsion': []}
    assert dump.read_text().startswith('# 20 elements, 15 comparabilities')


def test_frak_collection(capsys):
    status = cli.main([
        'collections', '--group', 'sym5', '--prime', '2', '--kind', 'frakS',
        '--t', '(1,2)', '--format', 'json',
    ])
    assert status == cli.EXIT_OK
    data = _json(capsys)
    assert data['subgroups'] == 3
    assert [entry['holds'] for entry in data['hypotheses']] == [True, True, True]
    assert data['hypotheses'][0]['name'] == 'G has parabolic characteristic p'


def test_frak_collection_needs_t(capsys):
    status = cli.main(['collections', '--group', 'sym5', '--prime', '2', '--kind', 'frakS'])
    assert status == cli.EXIT_ERROR
    assert 'UsageError' in capsys.readouterr().err


def test_fixed(capsys):
    status = cli.main([
        'fixed', '--group', 'sym5', '--prime', '2', '--kind', 'hatB',
        '--subgroup', '(1,2)', '--format', 'json',
    ])
    assert status == cli.EXIT_OK
    data = _json(capsys)
    assert data['elements'] == 6
    assert data['verdict'] == 'non-acyclic'


def test_lefschetz(capsys):
    status = cli.main([
        'lefschetz', '--group', 'sym5', '--prime', '2', '--kind', 'hatB',
        '--format', 'json',
    ])
    assert status == cli.EXIT_OK
    data = _json(capsys)
    assert data['values'] == [4, 2, 0, 1, -1, 0, -1]
    assert data['routes_agree']
    assert data['nonprojective']


def test_verify(capsys):
    status = cli.main(['verify', '--theorem', 'P3.4', '--group', 'sym4', '--prime', '2'])
    assert status == cli.EXIT_OK
    assert '  verdict: pass' in capsys.readouterr().out


def test_verify_writes_to_a_file(tmp_path):
    out = tmp_path / 'report.json'
    status = cli.main([
        'verify', '--theorem', 'T4.12', '--group', 'sym5', '--prime', '2',
        '--t', '(1,2)', '--format', 'json', '--out', str(out),
    ])
    assert status == cli.EXIT_OK
    assert json.loads(out.read_text())['verdict'] == 'pass'


def test_bad_group_is_an_error(capsys):
    status = cli.main(['classes', '--group', 'nope'])
    assert status == cli.EXIT_ERROR
    assert 'LibraryLookupError' in capsys.readouterr().err


def test_exceeded_cap_is_an_error(capsys):
    status = cli.main(['classes', '--group', 'sym6', '--max-order', '100'])
    assert status == cli.EXIT_ERROR
    assert 'max_order' in capsys.readouterr().err


def test_unknown_theorem_is_rejected_by_the_parser():
    with pytest.raises(SystemExit):
        cli.main(['verify', '--theorem', 'P9.9', '--group', 'sym4', '--prime', '2'])


def test_empty_suite(tmp_path, capsys):
    config = tmp_path / 'empty.cfg'
    config.write_text('# no runs\n')
    assert cli.main(['suite', '--config', str(config), '--format', 'json']) == cli.EXIT_OK
    assert _json(capsys) == {'reports': []}


def test_suite_keeps_config_order(tmp_path):
    config = tmp_path / 'suite.cfg'
    config.write_text(
        'format = json\n'
        '[run]\ngroup = sym4\nprime = 2\ntheorem = P3.4\n'
        '[run]\ngroup = sym3\nprime = 7\ntheorem = P3.4\n'
        '[run]\ngroup = sym5\nprime = 2\ntheorem = P3.1\n'
    )
    out = tmp_path / 'report.json'
    assert cli.main(['suite', '--config', str(config), '--out', str(out)]) == cli.EXIT_OK
    reports = json.loads(out.read_text())['reports']
    assert [report['target']['group'] for report in reports] == ['sym(4)', 'sym(3)', 'sym(5)']
    assert [report['verdict'] for report in reports] == ['pass', 'not-applicable', 'pass']


def test_suite_reports_errors(tmp_path, capsys):
    config = tmp_path / 'suite.cfg'
    config.write_text(
        'max_order = 100\n'
        '[run]\ngroup = sym5\nprime = 2\ntheorem = P3.4\n'
        '[run]\ngroup = sym5\nprime = 2\ntheorem = P3.1\nexploratory = true\n'
    )
    status = cli.main(['suite', '--config', str(config), '--format', 'json'])
    assert status == cli.EXIT_CHECK_FAILED
    reports = _json(capsys)['reports']
    assert [report['verdict'] for report in reports] == ['error', 'error']
    assert 'ResourceError' in reports[0]['notes'][0]


def test_exploratory_errors_do_not_fail_the_suite():
    config = resource.parse_config(
        'max_order = 100\n'
        '[run]\ngroup = sym5\nprime = 2\ntheorem = P3.1\nexploratory = true\n'
    )
    with Workbench(config.limits) as workbench:
        result = workbench.run_suite(config)
    assert result.get_reports()[0].verdict == 'error'
    assert result.get_failures() == ()
    assert result.get_exit_status() == 0


def test_suite_with_workers():
    config = resource.parse_config(
        '[run]\ngroup = sym4\nprime = 2\ntheorem = P3.4\n'
        '[run]\ngroup = sym3\nprime = 3\ntheorem = P3.1\n'
    )
    with Workbench(config.limits, num_workers=2) as workbench:
        result = workbench.run_suite(config)
    assert result.get_reports()[0].verdict == PASS
    assert len(result.get_reports()) == 2


def test_workbench_caches_groups():
    with Workbench() as workbench:
        first = workbench.load_group('sym4')
        assert workbench.load_group('sym(4)') is first
        workbench.unload_group('sym4')
        assert workbench.load_group('sym4') is not first
