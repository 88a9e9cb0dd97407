# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled sweep kernel. Same contract as ``_pykernel.scan``; runs without the GIL."""

from libc.stdint cimport uint32_t, uint64_t, int64_t

import numpy as np

NAME = "compiled"

cdef enum:
    CONNECTED = 1
    NONPLANAR = 2
    NONEMPTY = 4
    PROPER = 8

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcount(unsigned int) nogil


cdef inline bint _canonical(uint32_t m, const uint32_t* tables, Py_ssize_t ngroup, int runs) noexcept nogil:
    cdef Py_ssize_t g
    cdef int r
    cdef uint32_t img
    cdef const uint32_t* t
    for g in range(ngroup):
        t = tables + g * runs * 256
        img = t[m & 255]
        for r in range(1, runs):
            img |= t[r * 256 + ((m >> (8 * r)) & 255)]
        if img < m:
            return False
    return True


cdef inline bint _connected(uint64_t m, const uint64_t* endpoints, const uint64_t* incident) noexcept nogil:
    cdef int e = __builtin_ctzll(m)
    cdef uint64_t reached = (<uint64_t>1) << e
    cdef uint64_t verts = endpoints[e]
    cdef uint64_t done = 0
    cdef uint64_t todo, new
    cdef int v
    while True:
        todo = verts & ~done
        if todo == 0:
            return reached == m
        while todo:
            v = __builtin_ctzll(todo)
            todo &= todo - 1
            done |= (<uint64_t>1) << v
            new = incident[v] & m & ~reached
            reached |= new
            while new:
                verts |= endpoints[__builtin_ctzll(new)]
                new &= new - 1


cdef inline bint _planar(uint64_t vm, const uint64_t* planes, Py_ssize_t n) noexcept nogil:
    cdef Py_ssize_t p0 = __builtin_ctzll(vm)
    cdef uint64_t rest = vm & (vm - 1)
    cdef Py_ssize_t base
    cdef uint64_t plane
    if rest == 0:
        return True
    base = (p0 * n + __builtin_ctzll(rest)) * n
    rest &= rest - 1
    while rest:
        plane = planes[base + __builtin_ctzll(rest)]
        if plane:
            return (vm & ~plane) == 0
        rest &= rest - 1
    return True


def scan(uint64_t start, uint64_t stop, inputs):
    """Test masks in ``[start, stop)``; return accepted masks and a popcount histogram."""
    cdef int flags = inputs.flags
    cdef uint32_t full = <uint32_t>inputs.full_mask
    cdef Py_ssize_t n = inputs.vertex_count
    cdef const uint32_t[:, :, ::1] tables_v = inputs.tables
    cdef const uint64_t[::1] endpoints_v = inputs.endpoints
    cdef const uint64_t[::1] incident_v = inputs.incident
    cdef const uint64_t[::1] planes_v = inputs.planes
    cdef Py_ssize_t ngroup = tables_v.shape[0]
    cdef int runs = tables_v.shape[1]
    cdef const uint32_t* tables = &tables_v[0, 0, 0] if ngroup > 0 else NULL
    cdef const uint64_t* endpoints = &endpoints_v[0]
    cdef const uint64_t* incident = &incident_v[0]
    cdef const uint64_t* planes = &planes_v[0]

    out = np.empty(stop - start if stop > start else 0, dtype=np.uint32)
    hist = np.zeros(33, dtype=np.int64)
    cdef uint32_t[::1] out_v = out
    cdef int64_t[::1] hist_v = hist
    cdef Py_ssize_t count = 0
    cdef uint64_t mm, x, vm
    cdef uint32_t m

    with nogil:
        mm = start
        while mm < stop:
            m = <uint32_t>mm
            mm += 1
            if m == 0:
                if flags & (NONEMPTY | CONNECTED | NONPLANAR):
                    continue
            elif m == full and flags & PROPER:
                continue
            if not _canonical(m, tables, ngroup, runs):
                continue
            if flags & CONNECTED and not _connected(m, endpoints, incident):
                continue
            if flags & NONPLANAR:
                vm = 0
                x = m
                while x:
                    vm |= endpoints[__builtin_ctzll(x)]
                    x &= x - 1
                if _planar(vm, planes, n):
                    continue
            out_v[count] = m
            count += 1
            hist_v[__builtin_popcount(m)] += 1
    return out[:count].copy(), hist
