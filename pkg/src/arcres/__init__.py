"""Maximal arcs, resolvable Steiner 2-designs and compatible resolutions."""

from .design import (
    ArcParams,
    Resolution,
    SteinerDesign,
    block_graph,
    classify_resolution_pair,
    compatible_family_from_arc,
    make_resolution,
    parallel_class_from_point,
    parameter_table,
    resolution_from_exterior_line,
    restrict_to_arc,
    validate_steiner,
)
from .geometry import (
    Arc,
    ProjectivePlane,
    build_pg2,
    denniston_arc,
    dual_plane,
    exterior_lines,
    plane_for,
    regular_hyperoval,
    verify_maximal_arc,
)
from .gf import Field, field_create, field_inv, field_mul, trace
from .rank import RankReport, conjecture_check, p_rank
from .reconstruct import build_dual_design, build_structure_I, reconstruct_plane, verify_projective_plane
from .search import SearchBudget, enumerate_parallel_classes, enumerate_resolutions, max_compatible_set

__version__ = "0.1.0"
