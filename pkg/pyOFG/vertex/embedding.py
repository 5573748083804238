# -*- coding: utf-8 -*-
"""
Embeddings of the flip graph of a general vertex :math:`C` into the flip
graph of the equal-angle vertex :math:`A_{2n}` of the same degree.

A valid assignment :math:`\\nu` of :math:`C` satisfies Maekawa's theorem,
so relabelling crease :math:`c_i` as :math:`e_{i+r}` gives a valid
assignment of :math:`A_{2n}`; flipping face :math:`\\beta_i` of :math:`C`
corresponds to flipping :math:`\\alpha_{i+r}`. Each of the :math:`2n`
rotations ``r`` therefore maps the flip graph of :math:`C` onto a
subgraph of the flip graph of :math:`A_{2n}`.

.. module:: embedding

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

import numpy as np

from ..errors import ValidationError
from ..utils import rotate_bits, reflect_bits
from .assignment import flip_face, is_valid_uniform, rotate, reflect


class EmbeddingMap(object):
    """
    The map :math:`\\nu \\mapsto \\mu` with :math:`\\mu(e_{i+r}) =
    \\nu(c_i)`, or, for a reflected map, :math:`\\mu(e_{r-i}) =
    \\nu(c_i)`.

    Parameters
    ----------
    pattern : :class:`~pyOFG.vertex.crease_pattern.CreasePattern`
        The general vertex :math:`C`.

    rotation : int
        Offset ``r`` in ``0 .. 2n-1``.

    reflected : bool
        Compose with the reflection of :math:`A_{2n}`.
    """
    def __init__(self, pattern, rotation, reflected=False):
        self.pattern = pattern
        self.rotation = rotation
        self.reflected = bool(reflected)

    @property
    def degree(self):
        return self.pattern.degree

    def image(self, nu):
        """
        Image of an assignment of :math:`C`.
        """
        if nu.degree != self.degree:
            msg = 'Assignment {} has {} creases, pattern has {}'
            raise ValidationError(msg.format(nu, nu.degree, self.degree))
        if self.reflected:
            return reflect(nu, self.rotation)
        return rotate(nu, self.rotation)

    def image_codes(self, codes):
        """
        Vectorized :meth:`image` on packed codes.
        """
        if self.reflected:
            return reflect_bits(codes, self.rotation, self.degree)
        return rotate_bits(np.asarray(codes, dtype=np.uint64),
                           self.rotation, self.degree)

    def face_image(self, k):
        """
        Face of :math:`A_{2n}` corresponding to face ``k`` of :math:`C`.
        """
        if self.reflected:
            return (self.rotation - k - 2) % self.degree + 1
        return (k - 1 + self.rotation) % self.degree + 1

    def vertex_images(self, ofg):
        """
        Frozen set of the packed image codes of every vertex of ``ofg``.
        """
        return frozenset(int(code) for code in self.image_codes(ofg.codes))

    def preserves_edges(self, ofg):
        """
        Whether every edge of the flip graph ``ofg`` of :math:`C` maps to
        an edge of the flip graph of :math:`A_{2n}`: both images valid and
        one flip of the corresponding face apart.
        """
        for u, v, k in ofg.edges:
            first = self.image(ofg.vertex(u))
            second = self.image(ofg.vertex(v))
            if not (is_valid_uniform(first) and is_valid_uniform(second)):
                return False
            if flip_face(first, self.face_image(k)) != second:
                return False
        return True

    def pairs(self, ofg):
        """
        ``[(C assignment, A assignment), ...]`` for every vertex of
        ``ofg`` as MV strings.
        """
        return [(str(nu), str(self.image(nu))) for nu in ofg.vertices]

    def to_json(self, ofg):
        """
        ``{rotation, reflected, pairs: [[C_mv, A_mv], ...]}``.
        """
        document = {'rotation': self.rotation,
                    'reflected': self.reflected,
                    'pairs': [list(pair) for pair in self.pairs(ofg)]}
        return json.dumps(document)

    def __repr__(self):
        return 'EmbeddingMap({!r}, rotation={}, reflected={})'.format(
            self.pattern, self.rotation, self.reflected)


def _check_embeddable(pattern):
    if pattern.uniform:
        msg = ('{} is the equal-angle vertex A_{}; embeddings are defined '
               'for the other patterns of that degree')
        raise ValidationError(msg.format(pattern, pattern.degree))


def embed_into_uniform(pattern, rotation, reflected=False):
    """
    The rotational embedding with offset ``rotation``.

    Raises
    ------
    ~pyOFG.errors.ValidationError
        If ``pattern`` is uniform or ``rotation`` is outside
        ``0 .. 2n-1``.
    """
    _check_embeddable(pattern)
    if isinstance(rotation, bool) or int(rotation) != rotation or \
            not 0 <= rotation < pattern.degree:
        msg = 'Rotation must be in 0..{}, got {!r}'
        raise ValidationError(msg.format(pattern.degree - 1, rotation))
    return EmbeddingMap(pattern, int(rotation), reflected)


def _image_sets(pattern, ofg, reflected):
    return [embed_into_uniform(pattern, r, reflected).vertex_images(ofg)
            for r in range(pattern.degree)]


def count_rotational_copies(pattern, ofg=None):
    """
    Number of distinct vertex-image sets among the :math:`2n` rotational
    embeddings. Equals :math:`2n` when the images are pairwise distinct.

    This is a lower bound on the number of copies of the flip graph of
    :math:`C` inside that of :math:`A_{2n}`; the exact count is not
    computed.

    Parameters
    ----------
    pattern : :class:`~pyOFG.vertex.crease_pattern.CreasePattern`
        A non-uniform pattern.

    ofg : :class:`~pyOFG.graph.flip_graph.FlipGraph`, optional
        Its flip graph, built if not given.
    """
    _check_embeddable(pattern)
    if ofg is None:
        from ..graph.flip_graph import build_ofg_general
        ofg = build_ofg_general(pattern)
    return len(set(_image_sets(pattern, ofg, False)))


def count_reflected_copies(pattern, ofg=None):
    """
    Number of distinct vertex-image sets produced by reflected embeddings
    that are not already among the rotational images. Reported on its own
    and never added to :func:`count_rotational_copies`.
    """
    _check_embeddable(pattern)
    if ofg is None:
        from ..graph.flip_graph import build_ofg_general
        ofg = build_ofg_general(pattern)
    rotational = set(_image_sets(pattern, ofg, False))
    extra = set(_image_sets(pattern, ofg, True)) - rotational
    return len(extra)
