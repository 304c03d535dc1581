"""Exact generalised friezes on cluster categories of type A.

The category is modelled by diagonals of an m-gon.  Starting from a rigid
set R inside a triangulation T, the package computes the modified
Caldero-Chapoton map on every indecomposable object as a Laurent polynomial
and checks the frieze relation on every Auslander-Reiten mesh.
"""

from .ccmap import (
    CCContext,
    FriezeReport,
    MeshResult,
    frieze_check,
    integer_context,
    original_cc_context,
)
from .emit import emit_dot, emit_json, emit_text_grid, emit_tikz, load_json_values
from .ktheory import (
    Epsilon,
    EpsilonError,
    IndexPropagationError,
    KTheory,
    SplitK0Class,
    default_epsilon,
    quotient_presentation,
    solve_index,
    subgroup_N,
)
from .laurent import LaurentPoly, LaurentRing
from .mesh import MeshCategory, mesh_category
from .modules import (
    FlClass,
    MeshImageClass,
    ThinModule,
    classify_mesh_image,
    compute_G,
    grassmannian_euler,
    submodule_class_counts,
)
from .polygon import ARMesh, Diagonal, PolygonCategory, PolygonError, crossing, random_triangulation

__version__ = "0.1.0"
