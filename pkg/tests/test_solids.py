import itertools
import json

import pytest

from incomplete_open.exactgeom import GoldenNumber, Point3, triple_product
from incomplete_open.solids import (
    BUILTIN_NAMES,
    SolidError,
    builtin_solid,
    dump_solid,
    edge_index,
    load_solid,
    solid_to_dict,
)
from incomplete_open.symmetry import closure

COUNTS = {
    "tetrahedron": (4, 6),
    "cube": (8, 12),
    "octahedron": (6, 12),
    "dodecahedron": (20, 30),
    "icosahedron": (12, 30),
}

PHI = GoldenNumber(0, 1)


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_builtin_sizes(name):
    solid = builtin_solid(name)
    assert (solid.vertex_count, solid.edge_count) == COUNTS[name]


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_edges_canonical(name):
    solid = builtin_solid(name)
    assert all(lo < hi for lo, hi in solid.edges)
    assert list(solid.edges) == sorted(solid.edges)
    assert len(set(solid.edges)) == len(solid.edges)


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_vertices_sorted_lexicographically(name):
    verts = builtin_solid(name).vertices
    keys = [v.key() for v in verts]
    assert keys == sorted(keys)
    floats = [v.to_floats() for v in verts]
    assert floats == sorted(floats)


def test_icosahedron_coordinates():
    expected = set()
    for s1, s2 in itertools.product((1, -1), repeat=2):
        x, y, z = GoldenNumber(0), GoldenNumber(s1), PHI * s2
        expected |= {Point3(x, y, z), Point3(z, x, y), Point3(y, z, x)}
    assert set(builtin_solid("icosahedron").vertices) == expected


def test_dodecahedron_coordinates():
    inv_phi = PHI - 1
    expected = {Point3(*c) for c in itertools.product((1, -1), repeat=3)}
    for s1, s2 in itertools.product((1, -1), repeat=2):
        x, y, z = GoldenNumber(0), inv_phi * s1, PHI * s2
        expected |= {Point3(x, y, z), Point3(z, x, y), Point3(y, z, x)}
    assert set(builtin_solid("dodecahedron").vertices) == expected


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_every_vertex_has_same_degree(name):
    solid = builtin_solid(name)
    degree = [0] * solid.vertex_count
    for lo, hi in solid.edges:
        degree[lo] += 1
        degree[hi] += 1
    assert len(set(degree)) == 1


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_generators_preserve_edges(name):
    solid = builtin_solid(name)
    assert len(solid.generators) == 2
    for g in solid.generators:
        for lo, hi in solid.edges:
            solid.edge_index(g[lo], g[hi])


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_generators_are_rotations(name):
    # every built-in is centred at the origin, so a symmetry acts linearly on
    # vertex vectors; a rotation keeps the sign of every triple product
    solid = builtin_solid(name)
    pts = solid.vertices
    for g in solid.generators:
        for a, b, c in itertools.combinations(range(solid.vertex_count), 3):
            before = triple_product(pts[a], pts[b], pts[c])
            assert triple_product(pts[g[a]], pts[g[b]], pts[g[c]]) == before


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_vertex_transitive(name):
    solid = builtin_solid(name)
    elements = closure(solid.generators, solid.vertex_count)
    assert {g[0] for g in elements} == set(range(solid.vertex_count))


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_no_collinear_vertex_triples(name):
    solid = builtin_solid(name)
    pts = solid.vertices
    for a, b, c in itertools.combinations(pts, 3):
        assert not (b - a).cross(c - a).is_zero()


def test_edge_index_examples():
    cube = builtin_solid("cube")
    lo, hi = cube.edges[0]
    assert edge_index(cube, lo, hi) == 0
    assert edge_index(cube, hi, lo) == 0
    lo, hi = cube.edges[-1]
    assert edge_index(cube, hi, lo) == cube.edge_count - 1
    forward = [edge_index(cube, lo, hi) for lo, hi in cube.edges]
    backward = [edge_index(cube, hi, lo) for lo, hi in cube.edges]
    assert forward == backward == list(range(12))


def test_edge_index_rejects_non_edge():
    cube = builtin_solid("cube")
    non_edges = set(itertools.combinations(range(8), 2)) - set(cube.edges)
    v1, v2 = sorted(non_edges)[0]
    with pytest.raises(KeyError):
        edge_index(cube, v1, v2)


def test_unknown_builtin():
    with pytest.raises(SolidError):
        builtin_solid("rhombicuboctahedron")


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_round_trip(name):
    solid = builtin_solid(name)
    assert load_solid(dump_solid(solid)) == solid


def _cube_doc():
    return solid_to_dict(builtin_solid("cube"))


def test_load_canonicalises_edges():
    doc = _cube_doc()
    doc["edges"] = [[hi, lo] for lo, hi in reversed(doc["edges"])]
    assert load_solid(json.dumps(doc)) == builtin_solid("cube")


def test_load_prism(prism):
    assert prism.vertex_count == 6
    assert prism.edge_count == 9
    assert prism.edges == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (3, 5), (4, 5))


def test_too_many_edges():
    doc = {
        "name": "k9",
        "vertices": [[[i, 0], [i * i, 0], [i * i * i, 0]] for i in range(9)],
        "edges": [list(p) for p in itertools.combinations(range(9), 2)],
        "generators": [],
    }
    assert len(doc["edges"]) == 36
    with pytest.raises(SolidError, match="too many edges"):
        load_solid(json.dumps(doc))


@pytest.mark.parametrize(
    "mutate, message",
    [
        (lambda d: d["edges"].append(list(d["edges"][0])), "duplicate edge"),
        (lambda d: d["edges"].append([0, 0]), "invalid edge"),
        (lambda d: d["edges"].append([0, 99]), "invalid edge"),
        (lambda d: d["generators"].append([1, 0, 2, 3, 4, 5, 6, 7]), "does not preserve"),
        (lambda d: d["generators"].append([0, 0, 2, 3, 4, 5, 6, 7]), "not a bijection"),
        (lambda d: d["generators"].append([0, 1, 2]), "not a bijection"),
        (lambda d: d["vertices"][0].__setitem__(0, [1.0, 0]), "integer"),
        (lambda d: d["vertices"].__setitem__(1, d["vertices"][0]), "duplicate vertex"),
        (lambda d: d.pop("generators"), "missing"),
    ],
)
def test_load_rejects(mutate, message):
    doc = _cube_doc()
    mutate(doc)
    with pytest.raises(SolidError, match=message):
        load_solid(json.dumps(doc))


def test_load_parse_failure():
    with pytest.raises(SolidError, match="parse"):
        load_solid("{not json")
