"""Enumerate incomplete open polyhedra: connected, non-planar, proper, non-empty
edge subsets of a symmetric wireframe, counted up to rotation."""

from ._backend import BACKEND
from .counting import brute_orbit_partition, burnside_orbit_count, histogram_of
from .enumeration import (
    EnumerationResult,
    FilterConfig,
    is_canonical,
    is_connected,
    is_planar_subset,
    sweep,
)
from .exactgeom import GoldenNumber, Point3, coplanar, triple_product
from .solids import BUILTIN_NAMES, Solid, SolidError, builtin_solid, edge_index, load_solid
from .symmetry import PermTable, RotationGroup, apply, close_group, compile_table, vertex_to_edge

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BUILTIN_NAMES",
    "EnumerationResult",
    "FilterConfig",
    "GoldenNumber",
    "PermTable",
    "Point3",
    "RotationGroup",
    "Solid",
    "SolidError",
    "apply",
    "brute_orbit_partition",
    "builtin_solid",
    "burnside_orbit_count",
    "close_group",
    "compile_table",
    "coplanar",
    "edge_index",
    "histogram_of",
    "is_canonical",
    "is_connected",
    "is_planar_subset",
    "load_solid",
    "sweep",
    "triple_product",
    "vertex_to_edge",
]
