"""Rotation groups acting on edge indices, and their chunked lookup tables.

Composition convention: ``compose(g, h)[i] == g[h[i]]``, i.e. apply ``h``
first.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .solids import Solid, VertexPermutation

EdgePermutation = tuple[int, ...]

CHUNK_BITS = 8
MAX_GROUP_ORDER = 1000


class GroupError(ValueError):
    pass


def compose(g: Sequence[int], h: Sequence[int]) -> tuple[int, ...]:
    return tuple(g[i] for i in h)


def inverse(g: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(g)
    for i, gi in enumerate(g):
        inv[gi] = i
    return tuple(inv)


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def cycles(perm: Sequence[int]) -> list[tuple[int, ...]]:
    """Disjoint cycles of ``perm``, fixed points included."""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = perm[i]
        out.append(tuple(cyc))
    return out


def cycle_count(perm: Sequence[int]) -> int:
    return len(cycles(perm))


def cycle_type(perm: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(len(c) for c in cycles(perm)))


def cycle_notation(perm: Sequence[int]) -> str:
    parts = ["(" + " ".join(map(str, c)) + ")" for c in cycles(perm) if len(c) > 1]
    return "".join(parts) or "()"


def vertex_to_edge(solid: Solid, g: VertexPermutation) -> EdgePermutation:
    """Edge action induced by a vertex permutation: ``[v1, v2] -> sorted [g v1, g v2]``."""
    try:
        return tuple(solid.edge_index(g[lo], g[hi]) for lo, hi in solid.edges)
    except KeyError as exc:
        raise GroupError(f"vertex permutation does not preserve edges: {exc.args[0]}") from None


def closure(generators: Iterable[Sequence[int]], degree: int, limit: int = MAX_GROUP_ORDER) -> list[tuple[int, ...]]:
    """Breadth-first closure of ``generators`` under composition; identity first."""
    gens = [tuple(g) for g in generators]
    ident = identity(degree)
    elements = [ident]
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(g, x)
            if y not in seen:
                seen.add(y)
                elements.append(y)
                if len(elements) > limit:
                    raise GroupError(f"group closure exceeds {limit} elements")
                queue.append(y)
    return elements


@dataclass(frozen=True)
class PermTable:
    """Chunked lookup form of an edge permutation.

    ``chunks[r][i]`` is the word of destination bits for the subset ``i`` of
    edges ``8r .. 8r+7``; run ``r`` has ``2**width`` entries, with the last run
    possibly narrower.
    """

    chunks: tuple[tuple[int, ...], ...]
    edge_count: int

    def apply(self, mask: int) -> int:
        out = 0
        for r, table in enumerate(self.chunks):
            out |= table[(mask >> (CHUNK_BITS * r)) & (len(table) - 1)]
        return out

    def padded(self) -> np.ndarray:
        """(runs, 256) uint32 array; unused tail entries are zero."""
        arr = np.zeros((len(self.chunks), 1 << CHUNK_BITS), dtype=np.uint32)
        for r, table in enumerate(self.chunks):
            arr[r, : len(table)] = table
        return arr


def compile_table(perm: Sequence[int], edge_count: int) -> PermTable:
    if len(perm) != edge_count or edge_count > 32:
        raise GroupError("permutation does not match the edge count")
    chunks = []
    for start in range(0, edge_count, CHUNK_BITS):
        width = min(CHUNK_BITS, edge_count - start)
        single = [1 << perm[start + k] for k in range(width)]
        table = [0] * (1 << width)
        for i in range(1, 1 << width):
            low = i & -i
            table[i] = table[i ^ low] | single[low.bit_length() - 1]
        chunks.append(tuple(table))
    return PermTable(tuple(chunks), edge_count)


def apply(table: PermTable, mask: int) -> int:
    return table.apply(mask)


def apply_naive(perm: Sequence[int], mask: int) -> int:
    out = 0
    for e, dest in enumerate(perm):
        if mask >> e & 1:
            out |= 1 << dest
    return out


@dataclass(frozen=True)
class RotationGroup:
    elements: tuple[EdgePermutation, ...]
    edge_count: int

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def tables(self) -> tuple[PermTable, ...]:
        return tuple(compile_table(g, self.edge_count) for g in self.elements)

    @cached_property
    def table_array(self) -> np.ndarray:
        """Non-identity tables stacked as a (order - 1, runs, 256) uint32 array."""
        runs = -(-self.edge_count // CHUNK_BITS)
        if self.order == 1:
            return np.zeros((0, runs, 1 << CHUNK_BITS), dtype=np.uint32)
        return np.ascontiguousarray(np.stack([t.padded() for t in self.tables[1:]]))


def close_group(solid: Solid, generators: Sequence[VertexPermutation] | None = None) -> RotationGroup:
    """Translate the solid's rotation generators to edges and close them."""
    gens = solid.generators if generators is None else generators
    edge_gens = [vertex_to_edge(solid, g) for g in gens]
    return RotationGroup(tuple(closure(edge_gens, solid.edge_count)), solid.edge_count)


def group_from_edge_generators(generators: Sequence[Sequence[int]], edge_count: int) -> RotationGroup:
    """Group generated directly by edge permutations (used for ad hoc groups)."""
    return RotationGroup(tuple(closure(generators, edge_count)), edge_count)
