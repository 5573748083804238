# -*- coding: utf-8 -*-
"""
Origami flip graphs: materialization, conversion and export.

.. module:: flip_graph

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

import json
import sys

import networkx as nx
import numpy as np
from scipy import sparse

from ..errors import ValidationError, EnumerationLimitError
from ..headers import (EXPORT_FORMATS, DOT_GRAPH_NAME, CSV_HEADER,
                       DEFAULT_MAX_GENERAL_DEGREE)
from ..utils import check_n, face_mask, get_enumeration_limit
from ..vertex.assignment import MVAssignment, as_assignment
from ..vertex.crease_pattern import CreasePattern, uniform_pattern
from ..vertex.general import enumerate_valid_general
from .enumeration import enumerate_valid_codes


class FlipGraph(object):
    """
    The flip graph of a single vertex: valid assignments joined by single
    face flips.

    Vertices are stored as an ascending ``uint64`` array of packed codes;
    vertex ``i`` is the ``i``-th smallest code. Edges are rows
    ``(u, v, face)`` with ``u < v`` and a 1-based face, sorted.

    Parameters
    ----------
    codes : array-like
        Packed codes of the valid assignments, ascending and unique.

    degree : int
        Number of creases :math:`2n`.

    edges : array-like
        ``(m, 3)`` integer array of ``(u, v, face)`` rows.

    pattern : :class:`~pyOFG.vertex.crease_pattern.CreasePattern`, optional
        Defaults to :math:`A_{2n}`.
    """
    def __init__(self, codes, degree, edges, pattern=None):
        codes = np.array(codes, dtype=np.uint64).reshape(-1)
        if codes.size > 1 and not (np.diff(codes.astype(np.int64)) > 0).all():
            msg = 'Vertex codes must be ascending and unique'
            raise ValidationError(msg)
        edges = np.array(edges, dtype=np.int64).reshape(-1, 3)
        if pattern is None:
            pattern = uniform_pattern(degree // 2)
        if pattern.degree != degree:
            msg = 'Pattern {} has degree {}, graph has {}'
            raise ValidationError(msg.format(pattern, pattern.degree, degree))
        codes.flags.writeable = False
        edges.flags.writeable = False
        self.codes = codes
        self.degree = int(degree)
        self.edges = edges
        self.pattern = pattern
        self._vertices = None

    @property
    def n(self):
        return self.degree // 2

    @property
    def uniform(self):
        return self.pattern.uniform

    @property
    def multigraph(self):
        """
        True if two faces join the same pair of vertices (only
        :math:`A_2`).
        """
        if len(self.edges) < 2:
            return False
        pairs = self.edges[:, 0] * len(self.codes) + self.edges[:, 1]
        return np.unique(pairs).size < pairs.size

    @property
    def vertices(self):
        if self._vertices is None:
            self._vertices = [MVAssignment(int(code), self.degree)
                              for code in self.codes]
        return self._vertices

    def vertex(self, i):
        return MVAssignment(int(self.codes[i]), self.degree)

    def index_of(self, mv):
        """
        Index of the vertex ``mv`` (an assignment or MV string).

        Raises
        ------
        ~pyOFG.errors.ValidationError
            If ``mv`` is not a vertex of the graph.
        """
        mv = as_assignment(mv)
        if mv.degree == self.degree:
            i = int(np.searchsorted(self.codes, np.uint64(mv.code)))
            if i < len(self.codes) and int(self.codes[i]) == mv.code:
                return i
        msg = '{} is not a vertex of this flip graph of {}'
        raise ValidationError(msg.format(mv, self.pattern))

    def degrees(self):
        """
        Vertex degrees, parallel edges counted separately.
        """
        size = len(self.codes)
        return np.bincount(self.edges[:, 0], minlength=size) + \
            np.bincount(self.edges[:, 1], minlength=size)

    def adjacency(self):
        """
        Symmetric 0/1 adjacency matrix as a
        :class:`scipy.sparse.csr_matrix`.
        """
        size = len(self.codes)
        rows = np.concatenate([self.edges[:, 0], self.edges[:, 1]])
        cols = np.concatenate([self.edges[:, 1], self.edges[:, 0]])
        data = np.ones(rows.size, dtype=np.int8)
        matrix = sparse.csr_matrix((data, (rows, cols)), shape=(size, size))
        matrix.data[:] = 1
        return matrix

    def to_networkx(self):
        """
        :class:`networkx.MultiGraph` with MV strings as nodes and a
        ``face`` attribute on every edge.
        """
        graph = nx.MultiGraph(name=DOT_GRAPH_NAME[self.uniform])
        labels = [str(mv) for mv in self.vertices]
        graph.add_nodes_from(labels)
        for u, v, k in self.edges:
            graph.add_edge(labels[u], labels[v], face=int(k))
        return graph

    def is_isomorphic(self, other):
        return nx.is_isomorphic(self.to_networkx(), other.to_networkx())

    def __len__(self):
        return len(self.codes)

    def __repr__(self):
        return 'FlipGraph({}: {} vertices, {} edges)'.format(
            self.pattern, len(self.codes), len(self.edges))


def _flip_edges(codes, degree):
    """
    All ``(u, v, face)`` with ``u < v`` such that flipping ``face`` turns
    ``codes[u]`` into ``codes[v]``, sorted.
    """
    codes = np.asarray(codes, dtype=np.uint64)
    size = codes.size
    blocks = []
    if size == 0:
        return np.zeros((0, 3), dtype=np.int64)
    sources = np.arange(size, dtype=np.int64)
    for k in range(1, degree + 1):
        flipped = codes ^ np.uint64(face_mask(k, degree))
        targets = np.searchsorted(codes, flipped)
        found = targets < size
        found[found] = codes[targets[found]] == flipped[found]
        keep = found & (sources < targets)
        blocks.append(np.column_stack([sources[keep], targets[keep],
                                       np.full(keep.sum(), k,
                                               dtype=np.int64)]))
    edges = np.concatenate(blocks)
    order = np.lexsort((edges[:, 2], edges[:, 1], edges[:, 0]))
    return edges[order]


def build_ofg_uniform(n, limit=None, verbose=False):
    """
    Materialize the flip graph of :math:`A_{2n}`.

    Parameters
    ----------
    n : int
        Half the degree, ``n >= 1``.

    limit : int, optional
        Largest ``n`` allowed, see
        :func:`~pyOFG.utils.utils.get_enumeration_limit`.

    verbose : bool
        Print progress.

    Raises
    ------
    ~pyOFG.errors.EnumerationLimitError
        If ``n`` exceeds the enumeration limit.

    Examples
    --------
    >>> g = build_ofg_uniform(2)
    >>> len(g), len(g.edges)
    (8, 16)
    """
    n = check_n(n)
    limit = get_enumeration_limit(limit)
    if n > limit:
        msg = 'n = {} exceeds the enumeration limit of {}'
        raise EnumerationLimitError(msg.format(n, limit))
    codes = enumerate_valid_codes(n, 'both', verbose=verbose)
    edges = _flip_edges(codes, 2 * n)
    if verbose:
        print('OFG(A_{}): {} vertices, {} edges'.format(2 * n, codes.size,
                                                       len(edges)))
        sys.stdout.flush()
    return FlipGraph(codes, 2 * n, edges)


def build_ofg_general(pattern, max_degree=DEFAULT_MAX_GENERAL_DEGREE,
                      verbose=False):
    """
    Materialize the flip graph of an arbitrary flat-foldable vertex.

    Vertices are the assignments accepted by
    :func:`~pyOFG.vertex.general.is_valid_general`; a face flip is an edge
    when both its ends are valid.

    Examples
    --------
    >>> g = build_ofg_general(CreasePattern([45, 15, 60, 85, 75, 80]))
    >>> len(g), len(g.edges)
    (8, 8)
    """
    codes = enumerate_valid_general(pattern, max_degree=max_degree,
                                    verbose=verbose)
    edges = _flip_edges(codes, pattern.degree)
    return FlipGraph(codes, pattern.degree, edges, pattern=pattern)


def _graph_document(g):
    document = {'degree': g.degree,
                'multigraph': bool(g.multigraph),
                'vertices': [str(mv) for mv in g.vertices],
                'edges': [[int(u), int(v), int(k)] for u, v, k in g.edges]}
    if not g.uniform:
        document['pattern'] = [str(angle) for angle in g.pattern.angles]
    return document


def export_graph(g, format='json'):
    """
    Serialize a flip graph.

    Parameters
    ----------
    g : :class:`FlipGraph`

    format : {'dot', 'json', 'csv'}
        ``dot``: undirected graph with MV string nodes and face labels;
        ``json``: ``{degree, multigraph, vertices, edges}`` plus
        ``pattern`` for non-uniform vertices; ``csv``: edge list with
        header ``u_mv,v_mv,face``.

    Returns
    -------
    str
    """
    if format not in EXPORT_FORMATS:
        msg = 'Unknown export format {!r}, expected one of {}'
        raise ValidationError(msg.format(format, ', '.join(EXPORT_FORMATS)))
    labels = [str(mv) for mv in g.vertices]
    if format == 'json':
        return json.dumps(_graph_document(g), sort_keys=True)
    if format == 'csv':
        lines = [CSV_HEADER]
        lines += ['{},{},{}'.format(labels[u], labels[v], k)
                  for u, v, k in g.edges]
        return '\n'.join(lines) + '\n'
    lines = ['graph {} {{'.format(DOT_GRAPH_NAME[g.uniform])]
    lines += ['  "{}";'.format(label) for label in labels]
    lines += ['  "{}" -- "{}" [label="{}"];'.format(labels[u], labels[v], k)
              for u, v, k in g.edges]
    lines.append('}')
    return '\n'.join(lines) + '\n'


def read_graph_json(document):
    """
    Rebuild a :class:`FlipGraph` from the output of
    :func:`export_graph` in ``json`` format.

    Every edge is checked to be a single face flip between its ends.
    """
    try:
        data = json.loads(document)
        degree = int(data['degree'])
        labels = data['vertices']
        edges = data['edges']
    except (ValueError, KeyError, TypeError) as e:
        msg = 'Malformed flip graph document: {}'
        raise ValidationError(msg.format(e))
    pattern = None
    if 'pattern' in data:
        pattern = CreasePattern(data['pattern'])
    vertices = [MVAssignment.from_string(label) for label in labels]
    if any(mv.degree != degree for mv in vertices):
        msg = 'Vertex lengths do not match degree {}'
        raise ValidationError(msg.format(degree))
    g = FlipGraph([mv.code for mv in vertices], degree, edges,
                  pattern=pattern)
    for u, v, k in g.edges:
        if not (0 <= u < v < len(g) and 1 <= k <= degree) or \
                int(g.codes[u]) ^ face_mask(k, degree) != int(g.codes[v]):
            msg = 'Edge ({}, {}, {}) is not a face flip'
            raise ValidationError(msg.format(u, v, k))
    return g
