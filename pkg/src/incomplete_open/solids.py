"""Platonic solids and user wireframes with canonically indexed edges.

Edges are stored as sorted vertex pairs ``(lo, hi)`` and the edge list is kept
in lexicographic order, so an edge's index is its list position and a subset
of edges fits in the bits of one 32-bit word.

Solid-spec files are JSON::

    {"name": "cube",
     "vertices": [[[1, 0], [1, 0], [-1, 0]], ...],   # [a, b] means a + b*phi
     "edges": [[0, 1], ...],
     "generators": [[2, 0, 3, 1, ...], ...]}        # image form, one per rotation
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Any, Sequence

from .exactgeom import GoldenNumber, Point3

MAX_EDGES = 30
MAX_VERTICES = 64

BUILTIN_NAMES = ("tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron")

VertexPermutation = tuple[int, ...]


class SolidError(ValueError):
    """Raised for malformed solid definitions."""


@dataclass(frozen=True, eq=True)
class Solid:
    name: str
    vertices: tuple[Point3, ...]
    edges: tuple[tuple[int, int], ...]
    generators: tuple[VertexPermutation, ...]

    def __post_init__(self) -> None:
        _validate(self)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.edges)) - 1

    @cached_property
    def _index(self) -> dict[tuple[int, int], int]:
        return {pair: i for i, pair in enumerate(self.edges)}

    def edge_index(self, v1: int, v2: int) -> int:
        try:
            return self._index[(v1, v2) if v1 < v2 else (v2, v1)]
        except KeyError:
            raise KeyError(f"({v1}, {v2}) is not an edge of {self.name}") from None

    def edge_vertices(self, mask: int) -> list[int]:
        """Sorted vertex indices touched by the edges selected in ``mask``."""
        touched: set[int] = set()
        for e, (lo, hi) in enumerate(self.edges):
            if mask >> e & 1:
                touched.add(lo)
                touched.add(hi)
        return sorted(touched)


def edge_index(solid: Solid, v1: int, v2: int) -> int:
    return solid.edge_index(v1, v2)


def canonical_edges(pairs: Sequence[Sequence[int]]) -> tuple[tuple[int, int], ...]:
    """Sort each pair, then the whole list."""
    return tuple(sorted((min(p), max(p)) for p in pairs))


def _validate(solid: Solid) -> None:
    n = len(solid.vertices)
    if n == 0:
        raise SolidError("solid has no vertices")
    if n > MAX_VERTICES:
        raise SolidError(f"too many vertices ({n} > {MAX_VERTICES})")
    if len(set(solid.vertices)) != n:
        raise SolidError("duplicate vertex coordinates")
    if len(solid.edges) > MAX_EDGES:
        raise SolidError(f"too many edges ({len(solid.edges)} > {MAX_EDGES})")
    if not solid.edges:
        raise SolidError("solid has no edges")
    for lo, hi in solid.edges:
        if not (0 <= lo < hi < n):
            raise SolidError(f"invalid edge ({lo}, {hi})")
    if list(solid.edges) != sorted(solid.edges):
        raise SolidError("edge list is not in canonical order")
    if len(set(solid.edges)) != len(solid.edges):
        raise SolidError("duplicate edge")
    edge_set = set(solid.edges)
    for g in solid.generators:
        if len(g) != n or sorted(g) != list(range(n)):
            raise SolidError(f"generator {list(g)} is not a bijection on {n} vertices")
        for lo, hi in solid.edges:
            a, b = g[lo], g[hi]
            if (min(a, b), max(a, b)) not in edge_set:
                raise SolidError(f"generator {list(g)} does not preserve edge ({lo}, {hi})")


# --- built-in solids -------------------------------------------------------

_G = GoldenNumber
_PHI = _G(0, 1)
_INV_PHI = _G(-1, 1)  # 1/phi == phi - 1


def _cyclic(p: tuple) -> list[tuple]:
    x, y, z = p
    return [(x, y, z), (z, x, y), (y, z, x)]


def _signed(values: tuple) -> list[tuple]:
    """All sign choices on the nonzero entries of ``values``."""
    options = [(v,) if GoldenNumber.coerce(v).is_zero() else (v, -GoldenNumber.coerce(v)) for v in values]
    return list(itertools.product(*options))


def _coords(name: str) -> list[tuple]:
    if name == "tetrahedron":
        return [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    if name == "cube":
        return list(itertools.product((1, -1), repeat=3))
    if name == "octahedron":
        return [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    if name == "icosahedron":
        return [c for s in _signed((0, 1, _PHI)) for c in _cyclic(s)]
    if name == "dodecahedron":
        cube = list(itertools.product((1, -1), repeat=3))
        return cube + [c for s in _signed((0, _INV_PHI, _PHI)) for c in _cyclic(s)]
    raise SolidError(f"unknown solid {name!r}; expected one of {', '.join(BUILTIN_NAMES)}")


# Rotations as doubled matrices (entries in Z[phi]) so icosahedral rotations,
# whose entries are halves, stay exact.
_ROT3 = ((0, 2, 0), (0, 0, 2), (2, 0, 0))  # (x, y, z) -> (y, z, x), about (1, 1, 1)
_ROT2_Z = ((-2, 0, 0), (0, -2, 0), (0, 0, 2))  # half turn about z
_ROT4_Z = ((0, -2, 0), (2, 0, 0), (0, 0, 2))  # quarter turn about z
# Fifth turns. The two golden solids are placed in different orientations
# (the dodecahedron is not the face-centre dual of the icosahedron), so each
# needs its own axis.
_ROT5_ICOSA = (
    (1, _INV_PHI, _PHI),
    (_INV_PHI, _PHI, -1),
    (-_PHI, 1, _INV_PHI),
)
_ROT5_DODECA = (
    (1, _PHI, _INV_PHI),
    (-_PHI, _INV_PHI, 1),
    (_INV_PHI, -1, _PHI),
)

_GENERATORS = {
    "tetrahedron": (_ROT3, _ROT2_Z),
    "cube": (_ROT4_Z, _ROT3),
    "octahedron": (_ROT4_Z, _ROT3),
    "dodecahedron": (_ROT5_DODECA, _ROT3),
    "icosahedron": (_ROT5_ICOSA, _ROT3),
}


def rotation_permutation(vertices: Sequence[Point3], doubled_matrix) -> VertexPermutation:
    """Vertex permutation induced by a rotation given as twice its matrix."""
    rows = [Point3(*row) for row in doubled_matrix]
    lookup = {v.scale(2): i for i, v in enumerate(vertices)}
    image = []
    for v in vertices:
        moved = Point3(rows[0].dot(v), rows[1].dot(v), rows[2].dot(v))
        if moved not in lookup:
            raise SolidError(f"rotation does not map {v} onto a vertex")
        image.append(lookup[moved])
    return tuple(image)


def min_distance_edges(vertices: Sequence[Point3]) -> tuple[tuple[int, int], ...]:
    """All vertex pairs at the minimal nonzero squared distance."""
    dist = {(i, j): (vertices[i] - vertices[j]).norm2() for i, j in itertools.combinations(range(len(vertices)), 2)}
    shortest = min(d for d in dist.values() if not d.is_zero())
    return tuple(pair for pair, d in dist.items() if d == shortest)


_BUILTIN_CACHE: dict[str, Solid] = {}


def builtin_solid(name: str) -> Solid:
    if name in _BUILTIN_CACHE:
        return _BUILTIN_CACHE[name]
    points = sorted((Point3(*c) for c in _coords(name)), key=Point3.key)
    solid = Solid(
        name=name,
        vertices=tuple(points),
        edges=canonical_edges(min_distance_edges(points)),
        generators=tuple(rotation_permutation(points, m) for m in _GENERATORS[name]),
    )
    _BUILTIN_CACHE[name] = solid
    return solid


# --- solid-spec files ------------------------------------------------------


def _int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SolidError(f"{what} must be an integer, got {value!r}")
    return value


def _golden(value: Any) -> GoldenNumber:
    if not (isinstance(value, list) and len(value) == 2):
        raise SolidError(f"golden number must be an [a, b] pair, got {value!r}")
    return GoldenNumber(_int(value[0], "golden-number component"), _int(value[1], "golden-number component"))


def solid_from_dict(doc: dict) -> Solid:
    if not isinstance(doc, dict):
        raise SolidError("solid spec must be a JSON object")
    for key in ("name", "vertices", "edges", "generators"):
        if key not in doc:
            raise SolidError(f"solid spec is missing {key!r}")
    name = doc["name"]
    if not isinstance(name, str):
        raise SolidError("name must be a string")
    try:
        vertices = []
        for v in doc["vertices"]:
            if not (isinstance(v, list) and len(v) == 3):
                raise SolidError(f"vertex must have three coordinates, got {v!r}")
            vertices.append(Point3(*(_golden(c) for c in v)))
        pairs = []
        for e in doc["edges"]:
            if not (isinstance(e, list) and len(e) == 2):
                raise SolidError(f"edge must be a vertex pair, got {e!r}")
            pairs.append((_int(e[0], "vertex index"), _int(e[1], "vertex index")))
        generators = []
        for g in doc["generators"]:
            if not isinstance(g, list):
                raise SolidError(f"generator must be an integer array, got {g!r}")
            generators.append(tuple(_int(x, "generator entry") for x in g))
    except (TypeError, OverflowError) as exc:
        raise SolidError(str(exc)) from exc
    if len(pairs) > MAX_EDGES:
        raise SolidError(f"too many edges ({len(pairs)} > {MAX_EDGES})")
    return Solid(name, tuple(vertices), canonical_edges(pairs), tuple(generators))


def load_solid(document: str | bytes) -> Solid:
    """Parse and validate a solid-spec JSON document."""
    try:
        doc = json.loads(document)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise SolidError(f"cannot parse solid spec: {exc}") from exc
    return solid_from_dict(doc)


def load_solid_file(path: str | Path) -> Solid:
    return load_solid(Path(path).read_text(encoding="utf-8"))


def solid_to_dict(solid: Solid) -> dict:
    return {
        "name": solid.name,
        "vertices": [[c.to_pair() for c in v] for v in solid.vertices],
        "edges": [list(e) for e in solid.edges],
        "generators": [list(g) for g in solid.generators],
    }


def dump_solid(solid: Solid) -> str:
    return json.dumps(solid_to_dict(solid), indent=1) + "\n"


def resolve_solid(selector: str) -> Solid:
    """A built-in name, or a path to a solid-spec file."""
    if selector in BUILTIN_NAMES:
        return builtin_solid(selector)
    path = Path(selector)
    if path.suffix or path.exists():
        try:
            return load_solid_file(path)
        except OSError as exc:
            raise SolidError(f"cannot read solid spec {selector}: {exc}") from exc
    raise SolidError(f"unknown solid {selector!r}; expected one of {', '.join(BUILTIN_NAMES)} or a spec file path")
