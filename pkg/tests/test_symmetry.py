import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from incomplete_open.solids import BUILTIN_NAMES, builtin_solid, load_solid
from incomplete_open.symmetry import (
    GroupError,
    apply,
    apply_naive,
    close_group,
    closure,
    compile_table,
    compose,
    cycle_notation,
    cycle_type,
    cycles,
    group_from_edge_generators,
    identity,
    inverse,
    vertex_to_edge,
)

ORDERS = {"tetrahedron": 12, "cube": 24, "octahedron": 24, "dodecahedron": 60, "icosahedron": 60}


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_group_order(name, groups):
    group = groups[name]
    assert group.order == ORDERS[name]
    assert group.elements[0] == identity(builtin_solid(name).edge_count)


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_group_closed_with_inverses(name, groups):
    elements = set(groups[name].elements)
    for g in elements:
        assert inverse(g) in elements
    sample = random.Random(1).sample(sorted(elements), min(len(elements), 15))
    for g in sample:
        for h in sample:
            assert compose(g, h) in elements


def test_single_fifth_turn_is_cyclic():
    ico = builtin_solid("icosahedron")
    fifth = ico.generators[0]
    group = close_group(ico, [fifth])
    assert group.order == 5


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_generator_order_does_not_matter(name):
    solid = builtin_solid(name)
    a = close_group(solid, solid.generators)
    b = close_group(solid, solid.generators[::-1])
    assert set(a.elements) == set(b.elements)


def test_identity_vertex_permutation():
    cube = builtin_solid("cube")
    assert vertex_to_edge(cube, identity(8)) == identity(12)


def test_vertex_to_edge_rejects_non_symmetry():
    cube = builtin_solid("cube")
    with pytest.raises(GroupError):
        vertex_to_edge(cube, (1, 0, 2, 3, 4, 5, 6, 7))


def test_cube_half_turn_cycle_types(groups):
    # half turns about the 6 edge axes fix 2 edges and swap the other 10 in
    # pairs; the 3 face-axis half turns fix no edge
    halves = [g for g in groups["cube"].elements if g != identity(12) and compose(g, g) == identity(12)]
    types = sorted(cycle_type(g) for g in halves)
    edge_axis = (1, 1, 2, 2, 2, 2, 2)
    face_axis = (2, 2, 2, 2, 2, 2)
    assert types.count(edge_axis) == 6
    assert types.count(face_axis) == 3
    assert len(types) == 9


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_vertex_to_edge_is_a_homomorphism(name):
    solid = builtin_solid(name)
    vertex_group = closure(solid.generators, solid.vertex_count)
    rnd = random.Random(7)
    for _ in range(200):
        g, h = rnd.choice(vertex_group), rnd.choice(vertex_group)
        assert vertex_to_edge(solid, compose(g, h)) == compose(vertex_to_edge(solid, g), vertex_to_edge(solid, h))


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_inverse_has_same_cycle_type(name, groups):
    for g in groups[name].elements:
        assert cycle_type(g) == cycle_type(inverse(g))


def test_closure_safety_bound():
    # star of 12 spokes; the generators permute the leaves as the full S12
    doc = {
        "name": "star",
        "vertices": [[[0, 0], [0, 0], [0, 0]]] + [[[i, 0], [i * i, 0], [0, 0]] for i in range(1, 13)],
        "edges": [[0, i] for i in range(1, 13)],
        "generators": [[0, 2, 1] + list(range(3, 13)), [0] + list(range(2, 13)) + [1]],
    }
    star = load_solid(json.dumps(doc))
    with pytest.raises(GroupError, match="exceeds"):
        close_group(star)


def test_identity_table_twelve_edges():
    table = compile_table(identity(12), 12)
    assert len(table.chunks) == 2
    assert list(table.chunks[0]) == list(range(256))
    assert list(table.chunks[1]) == [j << 8 for j in range(16)]


@pytest.mark.parametrize("n, widths", [(6, [64]), (12, [256, 16]), (30, [256, 256, 256, 64])])
def test_run_layout(n, widths):
    perm = list(range(n))
    random.Random(n).shuffle(perm)
    table = compile_table(perm, n)
    assert [len(c) for c in table.chunks] == widths
    assert all(c[0] == 0 for c in table.chunks)


def test_singletons_reproduce_image():
    rnd = random.Random(3)
    for _ in range(20):
        perm = list(range(30))
        rnd.shuffle(perm)
        table = compile_table(perm, 30)
        for e in range(30):
            r, k = divmod(e, 8)
            assert table.chunks[r][1 << k] == 1 << perm[e]
        # singleton words in one run are disjoint single bits
        for run in table.chunks:
            singles = [run[1 << k] for k in range((len(run) - 1).bit_length())]
            assert all(bin(w).count("1") == 1 for w in singles)
            assert len(set(singles)) == len(singles)


def test_apply_matches_naive_on_random_pairs():
    rnd = random.Random(11)
    perms = []
    for _ in range(50):
        p = list(range(30))
        rnd.shuffle(p)
        perms.append((p, compile_table(p, 30)))
    for _ in range(10_000):
        p, table = rnd.choice(perms)
        m = rnd.getrandbits(30)
        assert apply(table, m) == apply_naive(p, m)


@given(st.permutations(list(range(30))), st.integers(0, 2**30 - 1))
def test_apply_preserves_popcount(perm, mask):
    table = compile_table(perm, 30)
    assert bin(apply(table, mask)).count("1") == bin(mask).count("1")
    assert apply(table, 0) == 0


@given(st.integers(0, 2**30 - 1))
def test_identity_table_fixes_masks(mask):
    assert apply(compile_table(identity(30), 30), mask) == mask


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_apply_is_a_group_action(name, groups):
    group = groups[name]
    rnd = random.Random(5)
    n = group.edge_count
    for _ in range(300):
        i, j = rnd.randrange(group.order), rnd.randrange(group.order)
        g, h = group.elements[i], group.elements[j]
        m = rnd.getrandbits(n)
        # apply g then h == apply (h o g)
        twice = apply(group.tables[j], apply(group.tables[i], m))
        assert twice == apply(compile_table(compose(h, g), n), m)


def test_cycles_and_notation():
    perm = (1, 0, 2, 4, 5, 3)
    assert cycles(perm) == [(0, 1), (2,), (3, 4, 5)]
    assert cycle_notation(perm) == "(0 1)(3 4 5)"
    assert cycle_notation(identity(4)) == "()"


def test_edge_generators_group():
    group = group_from_edge_generators([(1, 2, 3, 4, 0)], 5)
    assert group.order == 5
    assert group.table_array.shape == (4, 1, 256)
