"""Pure-Python sweep kernel; same contract as the compiled ``_ckernel``."""

from __future__ import annotations

import numpy as np

from .kernel_data import CONNECTED, NONEMPTY, NONPLANAR, PROPER, KernelInputs

NAME = "pure"


def _lowbit_index(x: int) -> int:
    return (x & -x).bit_length() - 1


def connected(m: int, endpoints: list[int], incident: list[int]) -> bool:
    e = _lowbit_index(m)
    reached = 1 << e
    verts = endpoints[e]
    done = 0
    while True:
        todo = verts & ~done
        if not todo:
            return reached == m
        while todo:
            low = todo & -todo
            todo ^= low
            done |= low
            new = incident[low.bit_length() - 1] & m & ~reached
            reached |= new
            while new:
                lowe = new & -new
                new ^= lowe
                verts |= endpoints[lowe.bit_length() - 1]


def planar(vm: int, planes: list[int], n: int) -> bool:
    p0 = _lowbit_index(vm)
    rest = vm & (vm - 1)
    if not rest:
        return True
    p1 = _lowbit_index(rest)
    rest &= rest - 1
    base = (p0 * n + p1) * n
    while rest:
        low = rest & -rest
        rest ^= low
        plane = planes[base + low.bit_length() - 1]
        if plane:
            return vm & ~plane == 0
    return True


def scan(start: int, stop: int, inputs: KernelInputs) -> tuple[np.ndarray, np.ndarray]:
    """Test masks in ``[start, stop)``; return accepted masks and a popcount histogram."""
    flags = inputs.flags
    full = inputs.full_mask
    n = inputs.vertex_count
    tables = [[list(run) for run in g] for g in inputs.tables.tolist()]
    endpoints = [int(x) for x in inputs.endpoints]
    incident = [int(x) for x in inputs.incident]
    planes = [int(x) for x in inputs.planes] if flags & NONPLANAR else []
    runs = len(tables[0]) if tables else 0

    reps: list[int] = []
    hist = [0] * 33
    for m in range(start, stop):
        if m == 0:
            if flags & (NONEMPTY | CONNECTED | NONPLANAR):
                continue
        elif m == full and flags & PROPER:
            continue
        canonical = True
        for g in tables:
            img = 0
            for r in range(runs):
                img |= g[r][(m >> (8 * r)) & 255]
            if img < m:
                canonical = False
                break
        if not canonical:
            continue
        if flags & CONNECTED and not connected(m, endpoints, incident):
            continue
        if flags & NONPLANAR:
            vm = 0
            x = m
            while x:
                low = x & -x
                x ^= low
                vm |= endpoints[low.bit_length() - 1]
            if planar(vm, planes, n):
                continue
        reps.append(m)
        hist[m.bit_count()] += 1
    return np.array(reps, dtype=np.uint32), np.array(hist, dtype=np.int64)
