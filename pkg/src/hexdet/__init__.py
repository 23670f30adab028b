"""Exact determinants of weighted graphs, with hexagonal grids as the main workload."""

from .det_oracles import BasicFigure, bareiss_det, enumerate_basic_figures, graph_det, sachs_det
from .graph_core import WeightedGraph, adjacency_matrix, graph_new
from .hexgrid import GridLabeling, GridSpec, build_grid, closed_form, peel_first_row, reduce_det
from .reductions import (
    ReductionStep,
    ReductionTrace,
    component_split_det,
    cycle_det,
    path_det,
    pendant_isolate,
    pendant_reduce,
    vertex_combine,
)

__version__ = "0.1.0"
