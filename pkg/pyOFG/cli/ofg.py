# -*- coding: utf-8 -*-
"""
Command line front end of pyOFG.

.. rubric:: Instructions:

Type ``pyOFG -h`` for the list of subcommands and ``pyOFG <command> -h``
for the options of each.

**Examples**
::

    $ pyOFG count --n 5 --what edges --method both
    1820 1820 OK

    $ pyOFG path --n 2 --from MMMV --to VVVM --algo halves --verify
    1 3
    verify OK

    $ pyOFG sequence --max-n 5
    2, 16, 84, 400, 1820

    $ pyOFG vertex --angles 45,15,60,85,75,80 --count
    8

Results go to standard output. Errors go to standard error as
``error [CODE]: message`` with exit status 1 for invalid input and 2 for
internal consistency failures. Progress printed with ``--verbose`` also
goes to standard error.

.. module:: ofg

:author:
    pyOFG developers

:copyright:
    pyOFG developers

:license:
    This code is distributed under the terms of the
    GNU Lesser General Public License, Version 3
    (https://www.gnu.org/copyleft/lesser.html)
"""
from __future__ import absolute_import, print_function, division

import argparse
from contextlib import redirect_stdout
import sys

from obspy.core.util import AttribDict
from scipy.sparse import csgraph

from ..errors import (ValidationError, ConsistencyError, EnumerationLimitError,
                      UsageError, OFGError)
from ..headers import (MAJORITY, EXPORT_FORMATS, PATH_ALGORITHMS,
                       COUNT_TARGETS, COUNT_METHODS, DIAMETER_METHODS,
                       SEQUENCE_METHODS, EXIT_OK, EXIT_VALIDATION,
                       EXIT_CONSISTENCY, ERROR_CODES)
from ..utils import check_n, get_enumeration_limit
from ..vertex import (MVAssignment, CreasePattern, crimp_trace,
                      embed_into_uniform, count_rotational_copies,
                      count_reflected_copies)
from ..paths import fea_shwoop, fea_halves, verify_path
from ..graph import (enumerate_valid, build_ofg_uniform, build_ofg_general,
                     export_graph, count_report, edge_count_sequence,
                     diameter_formula, bfs_metrics, is_bipartite)
from ..ofg_metadata import read_pattern, write_path


class CliConfig(AttribDict):
    """
    Parsed command line: every option of the chosen subcommand plus the
    resolved enumeration ``limit``.
    """
    def __init__(self, args):
        super(CliConfig, self).__init__(vars(args))
        self.limit = get_enumeration_limit(args.limit)


class DefaultHelpParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message, usage=self.format_help())


def _add_pattern_arguments(parser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument('--angles', action='store', default=None,
                       help='Comma separated sector angles in degrees, '
                            'e.g. "45,15,60,85,75,80" or "180/7,...".')
    group.add_argument('--pattern-file', action='store', default=None,
                       help='Path of a crease pattern document.')


def build_parser():
    parser = DefaultHelpParser(
        prog='pyOFG',
        description='Origami flip graphs of flat-foldable single vertices.'
    )
    parser.add_argument('--max-n', dest='limit', type=int, default=None,
                        help='Largest n enumerated by brute force '
                             '(default: $OFG_MAX_N or 13).')
    parser.add_argument('--workers', type=int, default=1,
                        help='Threads used for BFS (default: %(default)s).')
    parser.add_argument('--verbose', action='store_true',
                        help='Print progress to standard error.')
    commands = parser.add_subparsers(dest='command', metavar='command',
                                     parser_class=DefaultHelpParser)
    commands.required = True

    sub = commands.add_parser('enumerate',
                              help='List the valid assignments of A_2n.')
    sub.add_argument('--n', type=int, required=True)
    sub.add_argument('--majority', choices=sorted(MAJORITY), default='both')

    sub = commands.add_parser('graph', help='Export OFG(A_2n).')
    sub.add_argument('--n', type=int, required=True)
    sub.add_argument('--format', choices=EXPORT_FORMATS, default='json')
    sub.add_argument('--out', default=None,
                     help='Output file (default: standard output).')

    sub = commands.add_parser('path',
                              help='Flip path between two assignments.')
    sub.add_argument('--n', type=int, required=True)
    sub.add_argument('--from', dest='start', required=True,
                     help='Start MV string, e.g. MMMV.')
    sub.add_argument('--to', dest='end', required=True,
                     help='End MV string.')
    sub.add_argument('--algo', choices=PATH_ALGORITHMS, default='halves')
    sub.add_argument('--verify', action='store_true',
                     help='Replay the path and check every step.')
    sub.add_argument('--out', default=None,
                     help='Also write the path document to this file.')

    sub = commands.add_parser('count',
                              help='Count vertices, edges or degrees.')
    sub.add_argument('--n', type=int, required=True)
    sub.add_argument('--what', choices=COUNT_TARGETS, default='edges')
    sub.add_argument('--method', choices=COUNT_METHODS, default='both')

    sub = commands.add_parser('sequence',
                              help='The edge counts of OFG(A_2n), n = 1..N.')
    sub.add_argument('--max-n', dest='max_n', type=int, required=True)
    sub.add_argument('--method', choices=SEQUENCE_METHODS,
                     default='formula')
    sub.add_argument('--brute-max', type=int, default=9,
                     help='Largest n brute forced with --method both '
                          '(default: %(default)s).')

    sub = commands.add_parser('diameter', help='Diameter of OFG(A_2n).')
    sub.add_argument('--n', type=int, required=True)
    sub.add_argument('--method', choices=DIAMETER_METHODS, default='both')

    sub = commands.add_parser('vertex',
                              help='Analyse a general single vertex.')
    _add_pattern_arguments(sub)
    sub.add_argument('--graph', choices=EXPORT_FORMATS, default=None,
                     help='Export its flip graph in this format.')
    sub.add_argument('--count', action='store_true',
                     help='Only print the number of valid assignments.')
    sub.add_argument('--trace', default=None, metavar='MV',
                     help='Show the crimp reduction of this assignment.')

    sub = commands.add_parser('embed',
                              help='Embed OFG(C) into OFG(A_2n).')
    _add_pattern_arguments(sub)
    rotation = sub.add_mutually_exclusive_group()
    rotation.add_argument('--rotation', type=int, default=None)
    rotation.add_argument('--all', action='store_true',
                          help='Print the embedding of every rotation, '
                               'one JSON document per line.')
    sub.add_argument('--reflections', action='store_true',
                     help='Also report reflected copies.')
    return parser


def _check_limit(config, n):
    n = check_n(n)
    if n > config.limit:
        msg = 'n = {} exceeds the enumeration limit of {}'
        raise EnumerationLimitError(msg.format(n, config.limit))
    return n


def _assignment(text, n):
    mv = MVAssignment.from_string(text)
    if mv.degree != 2 * n:
        msg = 'MV string {} has {} creases, expected {} for n = {}'
        raise ValidationError(msg.format(text, mv.degree, 2 * n, n))
    return mv


def _pattern(config):
    if config.pattern_file:
        return read_pattern(config.pattern_file)
    return CreasePattern.from_string(config.angles)


def _write(text, out):
    try:
        with open(out, 'w') as fh:
            fh.write(text)
    except (IOError, OSError) as e:
        raise IOError('Could not write {}: {}'.format(out, e))


def _enumerate(config):
    n = _check_limit(config, config.n)
    return [str(mv) for mv in enumerate_valid(n, config.majority)]


def _graph(config):
    g = build_ofg_uniform(config.n, limit=config.limit,
                          verbose=config.verbose)
    document = export_graph(g, config.format)
    if config.out:
        _write(document, config.out)
        return ['wrote {} vertices, {} edges to {}'.format(
            len(g), len(g.edges), config.out)]
    return [document.rstrip('\n')]


def _path(config):
    n = check_n(config.n)
    mu = _assignment(config.start, n)
    nu = _assignment(config.end, n)
    finder = fea_halves if config.algo == 'halves' else fea_shwoop
    path = finder(mu, nu)
    lines = [' '.join(str(k) for k in path.faces)]
    if config.out:
        write_path(path, config.out, algorithm=config.algo)
    if config.verify:
        ok, message = verify_path(path, diagnostic=True)
        if not ok:
            raise ConsistencyError('verify FAILED: {}'.format(message))
        lines.append('verify OK')
    return lines


def _format_count(report):
    if report.what != 'degrees':
        values = [report[key] for key in ('brute', 'formula')
                  if report[key] is not None]
        line = ' '.join(str(value) for value in values)
        if report.agree is not None:
            line += ' OK' if report.agree else ' MISMATCH'
        return [line]
    lines = []
    brute = report.brute or {}
    formula = report.formula or {}
    for k in sorted(set(brute) | set(formula)):
        values = [str(source.get(k, 0)) for source in (report.brute,
                                                        report.formula)
                  if source is not None]
        line = '{}: {}'.format(k, ' '.join(values))
        if report.agree is not None:
            line += ' OK' if brute.get(k, 0) == formula.get(k, 0) \
                else ' MISMATCH'
        lines.append(line)
    return lines


def _count(config, out):
    report = count_report(config.n, config.what, config.method,
                          limit=config.limit, verbose=config.verbose,
                          strict=False)
    lines = _format_count(report)
    if report.agree is False:
        _emit(lines, out)
        msg = '{} of OFG(A_{}): brute force and formula disagree'
        raise ConsistencyError(msg.format(report.what, 2 * report.n))
    return lines


def _sequence(config):
    method = config.method
    brute_max = min(config.brute_max, config.max_n)
    sequence = edge_count_sequence(config.max_n, method=method,
                                   brute_max=brute_max, limit=config.limit,
                                   verbose=config.verbose)
    return [', '.join(str(value) for value in sequence)]


def _diameter(config):
    n = check_n(config.n)
    values = []
    if config.method in ('bfs', 'both'):
        g = build_ofg_uniform(n, limit=config.limit, verbose=config.verbose)
        metrics = bfs_metrics(g, workers=config.workers,
                              verbose=config.verbose)
        if not metrics.connected:
            msg = 'OFG(A_{}) is not connected'
            raise ConsistencyError(msg.format(2 * n))
        values.append(metrics.diameter)
    if config.method in ('formula', 'both'):
        values.append(diameter_formula(n))
    line = ' '.join(str(value) for value in values)
    if config.method == 'both':
        if values[0] != values[1]:
            msg = 'Diameter of OFG(A_{}): BFS {} != formula {}'
            raise ConsistencyError(msg.format(2 * n, values[0], values[1]))
        line += ' OK'
    return [line]


def _vertex(config):
    pattern = _pattern(config)
    if config.trace:
        return crimp_trace(pattern, MVAssignment.from_string(config.trace))
    g = build_ofg_general(pattern, verbose=config.verbose)
    if config.count:
        return [str(len(g))]
    if config.graph:
        return [export_graph(g, config.graph).rstrip('\n')]
    components, _ = csgraph.connected_components(g.adjacency(),
                                                 directed=False)
    lines = ['pattern: {}'.format(pattern),
             'degree: {}'.format(pattern.degree),
             'uniform: {}'.format('yes' if pattern.uniform else 'no'),
             'vertices: {}'.format(len(g)),
             'edges: {}'.format(len(g.edges)),
             'components: {}'.format(components),
             'bipartite: {}'.format('yes' if is_bipartite(g) else 'no')]
    lines += ['  {}'.format(mv) for mv in g.vertices]
    return lines


def _embed(config):
    pattern = _pattern(config)
    g = build_ofg_general(pattern, verbose=config.verbose)
    if config.rotation is not None:
        embedding = embed_into_uniform(pattern, config.rotation)
        return [embedding.to_json(g)]
    if config.all:
        reflections = (False, True) if config.reflections else (False,)
        return [embed_into_uniform(pattern, r, reflected).to_json(g)
                for reflected in reflections
                for r in range(pattern.degree)]
    lines = []
    for r in range(pattern.degree):
        embedding = embed_into_uniform(pattern, r)
        lines.append('rotation {}: preserves edges: {}'.format(
            r, 'yes' if embedding.preserves_edges(g) else 'no'))
    lines.append('rotational copies: {}'.format(
        count_rotational_copies(pattern, g)))
    if config.reflections:
        lines.append('additional reflected copies: {}'.format(
            count_reflected_copies(pattern, g)))
    return lines


_HANDLERS = {'enumerate': _enumerate,
             'graph': _graph,
             'path': _path,
             'sequence': _sequence,
             'diameter': _diameter,
             'vertex': _vertex,
             'embed': _embed}


def _emit(lines, out):
    for line in lines:
        out.write(line + '\n')
    out.flush()


def _fail(err, code, message):
    err.write('error [{}]: {}\n'.format(code, message))
    err.flush()


def run(argv=None, out=None, err=None):
    """
    Run the command line interface and return its exit status.

    Parameters
    ----------
    argv : list of str, optional
        Arguments without the program name (default: ``sys.argv[1:]``).

    out, err : file-like, optional
        Output and diagnostic streams (default: standard output and
        standard error).
    """
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        _fail(err, e.code, e)
        err.write(e.usage)
        err.flush()
        return EXIT_VALIDATION
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_VALIDATION
    try:
        config = CliConfig(args)
        with redirect_stdout(err):
            if config.command == 'count':
                lines = _count(config, out)
            else:
                lines = _HANDLERS[config.command](config)
    except ConsistencyError as e:
        _fail(err, e.code, e)
        return EXIT_CONSISTENCY
    except OFGError as e:
        _fail(err, e.code, e)
        return EXIT_VALIDATION
    except (IOError, OSError) as e:
        _fail(err, ERROR_CODES['io'], e)
        return EXIT_VALIDATION
    _emit(lines, out)
    return EXIT_OK


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
