# -*- coding: utf-8 -*-
"""
Enumeration, construction, counting and distance metrics of origami flip
graphs.
"""
from __future__ import absolute_import, print_function, division

from .enumeration import (rank_combination, unrank_combinations,
                          iter_valid_chunks, enumerate_valid_codes,
                          enumerate_valid)
from .flip_graph import (FlipGraph, build_ofg_uniform, build_ofg_general,
                         export_graph, read_graph_json)
from .counting import (vertex_count_formula, vertex_count_brute,
                       edge_count_formula, edge_count_brute,
                       degree_count_formula, degree_count_majority,
                       degree_histogram_formula, degree_histogram_brute,
                       bad_face_probability, expected_degree,
                       diameter_formula, uniform_degrees,
                       edge_count_sequence, count_report)
from .metrics import (BFSMetrics, SymmetryClasses, bfs_metrics,
                      symmetry_classes, is_bipartite, graph_distance,
                      diameter_witness, path_length_gaps,
                      distance_to_complement)
