# -*- coding: utf-8 -*-
from __future__ import absolute_import, print_function, division

import io
import json

import pytest

from pyOFG.cli.ofg import run
from pyOFG.graph import counting
from pyOFG.headers import MAX_N_ENV_VARIABLE
from pyOFG.ofg_metadata import read_path, write_pattern
from pyOFG.vertex.crease_pattern import CreasePattern

EXAMPLE = '45,15,60,85,75,80'


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), out=out, err=err)
    return status, out.getvalue(), err.getvalue()


def test_count():
    assert _run('count', '--n', '5', '--what', 'edges') == \
        (0, '1820 1820 OK\n', '')
    status, out, _ = _run('count', '--n', '4', '--what', 'vertices',
                          '--method', 'formula')
    assert (status, out) == (0, '112\n')
    status, out, _ = _run('count', '--n', '4', '--what', 'degrees')
    assert out.splitlines() == ['6: 16 16 OK', '7: 64 64 OK', '8: 32 32 OK']
    with pytest.warns(UserWarning):
        status, out, _ = _run('count', '--n', '1', '--what', 'degrees')
    assert (status, out) == (0, '2: 2\n')


def test_count_mismatch(monkeypatch):
    monkeypatch.setitem(counting._FORMULA, 'edges', lambda n: 0)
    status, out, err = _run('count', '--n', '3', '--what', 'edges')
    assert status == 2
    assert out == '84 0 MISMATCH\n'
    assert err.startswith('error [E_CONSISTENCY]')


def test_path(tmp_path):
    status, out, _ = _run('path', '--n', '2', '--from', 'MMMV', '--to',
                          'VVVM', '--verify')
    assert (status, out) == (0, '1 3\nverify OK\n')
    status, out, _ = _run('path', '--n', '3', '--from', 'MMVVMM', '--to',
                          'MMMVVM', '--algo', 'shwoop')
    assert (status, out) == (0, '4 3\n')
    filename = str(tmp_path / 'path.txt')
    status, out, _ = _run('path', '--n', '2', '--from', 'MMMV', '--to',
                          'MMMV', '--out', filename)
    assert (status, out) == (0, '\n')
    assert len(read_path(filename)) == 0


def test_sequence_and_diameter():
    status, out, _ = _run('sequence', '--max-n', '13')
    assert status == 0
    assert out == ('2, 16, 84, 400, 1820, 8064, 35112, 151008, 643500, '
                   '2722720, 11454872, 47969376, 200107544\n')
    status, out, _ = _run('sequence', '--max-n', '5', '--method', 'both')
    assert out == '2, 16, 84, 400, 1820\n'
    assert _run('diameter', '--n', '3') == (0, '3 3 OK\n', '')
    assert _run('diameter', '--n', '4', '--method', 'formula') == \
        (0, '4\n', '')
    assert _run('--workers', '2', 'diameter', '--n', '4', '--method',
                'bfs') == (0, '4\n', '')


def test_enumerate_and_graph(tmp_path):
    assert _run('enumerate', '--n', '1') == (0, 'VV\nMM\n', '')
    status, out, _ = _run('enumerate', '--n', '3', '--majority', 'valley')
    assert len(out.splitlines()) == 15
    filename = tmp_path / 'a4.json'
    status, out, _ = _run('graph', '--n', '2', '--out', str(filename))
    assert status == 0
    assert out == 'wrote 8 vertices, 16 edges to {}\n'.format(filename)
    assert len(json.loads(filename.read_text())['edges']) == 16
    status, out, _ = _run('graph', '--n', '2', '--format', 'csv')
    assert len(out.splitlines()) == 17


def test_vertex(tmp_path):
    assert _run('vertex', '--angles', EXAMPLE, '--count') == (0, '8\n', '')
    status, out, _ = _run('vertex', '--angles', EXAMPLE)
    assert status == 0
    assert 'components: 2' in out.splitlines()
    assert 'bipartite: yes' in out.splitlines()
    filename = str(tmp_path / 'vertex.txt')
    write_pattern(CreasePattern.from_string(EXAMPLE), filename)
    assert _run('vertex', '--pattern-file', filename, '--count') == \
        (0, '8\n', '')
    status, out, _ = _run('vertex', '--angles', EXAMPLE, '--trace', 'MMVMVM')
    assert out.splitlines()[-1].endswith('(valid)')
    status, out, _ = _run('vertex', '--angles', EXAMPLE, '--graph', 'dot')
    assert out.startswith('graph ofg_c {')


def test_embed():
    status, out, _ = _run('embed', '--angles', EXAMPLE, '--reflections')
    lines = out.splitlines()
    assert status == 0
    assert lines[:6] == ['rotation {}: preserves edges: yes'.format(r)
                         for r in range(6)]
    assert lines[6:] == ['rotational copies: 3',
                         'additional reflected copies: 0']
    status, out, _ = _run('embed', '--angles', EXAMPLE, '--rotation', '1')
    assert json.loads(out)['rotation'] == 1
    status, out, _ = _run('embed', '--angles', EXAMPLE, '--all',
                          '--reflections')
    documents = [json.loads(line) for line in out.splitlines()]
    assert [(d['rotation'], d['reflected']) for d in documents] == \
        [(r, reflected) for reflected in (False, True) for r in range(6)]
    assert all(len(d['pairs']) == 8 for d in documents)


@pytest.mark.parametrize('argv, code', [
    (['path', '--n', '2', '--from', 'MMMM', '--to', 'VVVM'], 'E_VALIDATION'),
    (['path', '--n', '3', '--from', 'MMMV', '--to', 'VVVM'], 'E_VALIDATION'),
    (['--max-n', '3', 'graph', '--n', '4'], 'E_LIMIT'),
    (['--max-n', '3', 'enumerate', '--n', '4'], 'E_LIMIT'),
    (['vertex', '--angles', '45,15,60,85,75,81'], 'E_VALIDATION'),
    (['embed', '--angles', '60,60,60,60,60,60'], 'E_VALIDATION'),
    ])
def test_validation_errors(argv, code):
    status, out, err = _run(*argv)
    assert (status, out) == (1, '')
    assert err.startswith('error [{}]'.format(code))


def test_limit_from_environment(monkeypatch):
    monkeypatch.setenv(MAX_N_ENV_VARIABLE, '3')
    status, _, err = _run('count', '--n', '4', '--method', 'brute')
    assert status == 1
    assert 'E_LIMIT' in err


@pytest.mark.parametrize('argv', [
    ['count'],
    ['frobnicate'],
    ['vertex', '--angles', EXAMPLE, '--pattern-file', 'x'],
    ['embed', '--angles', EXAMPLE, '--rotation', '1', '--all'],
    ])
def test_usage_errors(capsys, argv):
    status, out, err = _run(*argv)
    assert (status, out) == (1, '')
    assert err.startswith('error [E_USAGE]')
    assert 'usage:' in err
    assert capsys.readouterr().err == ''
