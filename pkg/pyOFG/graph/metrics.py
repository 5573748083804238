# -*- coding: utf-8 -*-
"""
Distances in flip graphs: connectivity, eccentricities, diameter and
bipartiteness, plus a few checks of the path finders against BFS.

Rotations and reflections of the creases and the mountain-valley
complement are automorphisms of :math:`{\\rm OFG}(A_{2n})`, so BFS from
one representative per orbit is enough to know every eccentricity.

.. module:: metrics

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

from collections import Counter, namedtuple
from concurrent.futures import ThreadPoolExecutor
import sys
import warnings

import networkx as nx
import numpy as np
from scipy.sparse import csgraph

from ..errors import ValidationError
from ..headers import PATH_ALGORITHMS
from ..utils import check_n, full_mask, rotate_bits, reflect_bits
from ..vertex.assignment import MVAssignment, as_assignment, complement
from ..paths.halves import fea_halves
from ..paths.shwoop import fea_shwoop

BFSMetrics = namedtuple('BFSMetrics',
                        ['connected', 'diameter', 'eccentricities'])
BFSMetrics.__doc__ = """
``connected`` (bool), ``diameter`` (largest finite eccentricity) and
``eccentricities``, a dict from vertex index to eccentricity within its
component.
"""

SymmetryClasses = namedtuple('SymmetryClasses', ['representatives', 'labels'])
SymmetryClasses.__doc__ = """
``representatives``: ascending vertex indices, one per orbit (the orbit's
smallest code). ``labels[i]``: position in ``representatives`` of the
orbit of vertex ``i``.
"""


def symmetry_classes(g):
    """
    Orbits of the vertices of a uniform flip graph under rotations,
    reflections and complement.

    Raises
    ------
    ~pyOFG.errors.ValidationError
        If ``g`` is not the flip graph of :math:`A_{2n}`.
    """
    if not g.uniform:
        msg = 'Symmetry classes are defined for OFG(A_2n), not {}'
        raise ValidationError(msg.format(g.pattern))
    degree = g.degree
    codes = g.codes
    full = np.uint64(full_mask(degree))
    canonical = codes.copy()
    for base in (codes, codes ^ full):
        for r in range(degree):
            canonical = np.minimum(canonical, rotate_bits(base, r, degree))
            canonical = np.minimum(canonical, reflect_bits(base, r, degree))
    orbits, labels = np.unique(canonical, return_inverse=True)
    representatives = np.searchsorted(codes, orbits)
    return SymmetryClasses(representatives, labels.reshape(-1))


def _distances(adjacency, sources, workers):
    if workers <= 1 or len(sources) < 2:
        return csgraph.shortest_path(adjacency, directed=False,
                                     unweighted=True, indices=sources)
    blocks = np.array_split(sources, min(workers, len(sources)))
    with ThreadPoolExecutor(max_workers=workers) as executor:
        parts = list(executor.map(
            lambda block: csgraph.shortest_path(adjacency, directed=False,
                                                unweighted=True,
                                                indices=block),
            blocks))
    return np.vstack(parts)


def bfs_metrics(g, symmetry=None, workers=1, verbose=False):
    """
    Connectivity, diameter and eccentricities of a flip graph by BFS.

    Parameters
    ----------
    g : :class:`~pyOFG.graph.flip_graph.FlipGraph`

    symmetry : bool or None
        Run BFS from one vertex per :func:`symmetry_classes` orbit only.
        ``None`` uses the reduction whenever ``g`` is uniform.

    workers : int
        Number of threads the BFS sources are split over. The result does
        not depend on it.

    verbose : bool
        Print progress.

    Returns
    -------
    :data:`BFSMetrics`
        For a disconnected graph ``diameter`` is the largest finite
        eccentricity.

    Examples
    --------
    >>> from pyOFG.graph.flip_graph import build_ofg_uniform
    >>> bfs_metrics(build_ofg_uniform(3))[:2]
    (True, 3)
    """
    size = len(g)
    if size == 0:
        return BFSMetrics(False, 0, {})
    if symmetry and not g.uniform:
        warnings.warn('Symmetry reduction skipped: {} is not an equal-angle '
                      'vertex'.format(g.pattern))
        symmetry = False
    elif symmetry is None:
        symmetry = g.uniform
    if symmetry:
        classes = symmetry_classes(g)
        sources, labels = classes.representatives, classes.labels
    else:
        sources = np.arange(size)
        labels = np.arange(size)
    if verbose:
        print('BFS from {} of {} vertices'.format(len(sources), size))
        sys.stdout.flush()
    adjacency = g.adjacency()
    distances = _distances(adjacency, np.asarray(sources), int(workers))
    finite = np.where(np.isinf(distances), -1, distances)
    source_eccentricity = finite.max(axis=1).astype(np.int64)
    eccentricities = source_eccentricity[labels]
    components, _ = csgraph.connected_components(adjacency, directed=False)
    return BFSMetrics(components == 1, int(eccentricities.max()),
                      {i: int(e) for i, e in enumerate(eccentricities)})


def is_bipartite(g):
    """
    Whether the flip graph can be 2-coloured.
    """
    return nx.is_bipartite(g.to_networkx())


def graph_distance(g, mu, nu):
    """
    Number of flips on a shortest path from ``mu`` to ``nu`` in ``g``, or
    ``None`` if they lie in different components.
    """
    source = g.index_of(mu)
    target = g.index_of(nu)
    distances = csgraph.shortest_path(g.adjacency(), directed=False,
                                      unweighted=True, indices=[source])
    distance = distances[0, target]
    if np.isinf(distance):
        return None
    return int(distance)


def diameter_witness(n):
    """
    A valid assignment of :math:`A_{2n}` at distance ``n`` from its
    complement: mountains on the odd creases up to :math:`e_{2n-3}`,
    valleys on the even creases and on :math:`e_{2n-1}`.

    >>> str(diameter_witness(3))
    'MVMVVV'
    """
    n = check_n(n)
    code = 0
    for i in range(1, 2 * n - 2, 2):
        code |= 1 << (i - 1)
    return MVAssignment(code, 2 * n)


def path_length_gaps(g, algorithm='halves'):
    """
    How far a path finder is from optimal over every ordered pair of
    vertices of a uniform flip graph.

    Returns
    -------
    :class:`collections.Counter`
        ``{path length - BFS distance: number of pairs}``.
    """
    if algorithm not in PATH_ALGORITHMS:
        msg = 'algorithm must be one of {}, got {!r}'
        raise ValidationError(msg.format(', '.join(PATH_ALGORITHMS),
                                         algorithm))
    if not g.uniform:
        msg = 'Path finders work on OFG(A_2n), not {}'
        raise ValidationError(msg.format(g.pattern))
    finder = fea_halves if algorithm == 'halves' else fea_shwoop
    distances = csgraph.shortest_path(g.adjacency(), directed=False,
                                      unweighted=True)
    vertices = g.vertices
    gaps = Counter()
    for i, mu in enumerate(vertices):
        for j, nu in enumerate(vertices):
            gaps[len(finder(mu, nu)) - int(distances[i, j])] += 1
    return gaps


def distance_to_complement(g, mv):
    """
    :func:`graph_distance` from ``mv`` to its complement.
    """
    mv = as_assignment(mv)
    return graph_distance(g, mv, complement(mv))
