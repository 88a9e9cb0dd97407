"""Independent counting oracles: Burnside's lemma and brute-force orbits.

These never touch the sweep kernels or the chunked tables; they act on the
raw edge permutations.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable

from .symmetry import RotationGroup, apply_naive, cycle_count

MAX_BRUTE_EDGES = 16


def cycle_structure(group: RotationGroup) -> list[int]:
    return [cycle_count(g) for g in group.elements]


def burnside_orbit_count(group: RotationGroup, edge_count: int | None = None) -> int:
    """Number of orbits of all edge subsets: mean of ``2**cycles(g)`` over the group."""
    if edge_count is not None and edge_count != group.edge_count:
        raise ValueError("edge count does not match the group")
    total = sum(1 << c for c in cycle_structure(group))
    orbits, rem = divmod(total, group.order)
    if rem:
        raise ArithmeticError(f"Burnside sum {total} is not divisible by |G| = {group.order}; group is corrupt")
    return orbits


def brute_orbit_partition(group: RotationGroup, edge_count: int | None = None) -> list[frozenset[int]]:
    """Every orbit of the power set, ordered by minimum element."""
    n = group.edge_count if edge_count is None else edge_count
    if n > MAX_BRUTE_EDGES:
        raise ValueError(f"brute-force partition is limited to {MAX_BRUTE_EDGES} edges")
    seen = bytearray(1 << n)
    orbits = []
    for mask in range(1 << n):
        if seen[mask]:
            continue
        orbit = frozenset(apply_naive(g, mask) for g in group.elements)
        for m in orbit:
            seen[m] = 1
        orbits.append(orbit)
    return orbits


def histogram_of(representatives: Iterable[int]) -> dict[int, int]:
    counts = Counter(int(m).bit_count() for m in representatives)
    return dict(sorted(counts.items()))
