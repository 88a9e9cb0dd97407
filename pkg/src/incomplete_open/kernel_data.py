"""Flat, integer-only inputs shared by the compiled and pure sweep kernels.

Geometry is reduced to vertex bitmasks ahead of time so the kernels never do
golden-ring arithmetic: ``planes[i, j, k]`` holds the set of vertices lying in
the plane through vertices ``i, j, k`` (zero when the three are collinear),
computed once with exact arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .solids import Solid
from .symmetry import RotationGroup

# filter flag bits, shared with both kernels
CONNECTED = 1
NONPLANAR = 2
NONEMPTY = 4
PROPER = 8


@dataclass(frozen=True)
class KernelInputs:
    edge_count: int
    vertex_count: int
    flags: int
    tables: np.ndarray  # (order - 1, runs, 256) uint32, identity excluded
    endpoints: np.ndarray  # (edges,) uint64 vertex masks
    incident: np.ndarray  # (vertices,) uint64 edge masks
    planes: np.ndarray  # (vertices**3,) uint64 vertex masks

    @property
    def full_mask(self) -> int:
        return (1 << self.edge_count) - 1


def plane_table(solid: Solid) -> np.ndarray:
    n = solid.vertex_count
    pts = solid.vertices
    planes = np.zeros(n * n * n, dtype=np.uint64)
    for i, j, k in itertools.combinations(range(n), 3):
        p0 = pts[i]
        normal = (pts[j] - p0).cross(pts[k] - p0)
        if normal.is_zero():
            continue
        members = 0
        for v in range(n):
            if normal.dot(pts[v] - p0).is_zero():
                members |= 1 << v
        for a, b, c in itertools.permutations((i, j, k)):
            planes[(a * n + b) * n + c] = members
    return planes


_PLANE_CACHE: dict[Solid, np.ndarray] = {}


def build_inputs(solid: Solid, group: RotationGroup, flags: int) -> KernelInputs:
    endpoints = np.array([(1 << lo) | (1 << hi) for lo, hi in solid.edges], dtype=np.uint64)
    incident = np.zeros(solid.vertex_count, dtype=np.uint64)
    for e, (lo, hi) in enumerate(solid.edges):
        incident[lo] |= np.uint64(1 << e)
        incident[hi] |= np.uint64(1 << e)
    if flags & NONPLANAR and solid not in _PLANE_CACHE:
        _PLANE_CACHE[solid] = plane_table(solid)
    return KernelInputs(
        edge_count=solid.edge_count,
        vertex_count=solid.vertex_count,
        flags=flags,
        tables=group.table_array,
        endpoints=endpoints,
        incident=incident,
        planes=_PLANE_CACHE[solid] if flags & NONPLANAR else np.zeros(1, dtype=np.uint64),
    )
