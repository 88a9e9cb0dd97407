"""The sweep over all edge subsets and the ruleset filters.

A mask survives when it passes, in order: the empty/full exclusions,
orbit-minimality under the rotation group, connectivity, and non-planarity.
The cheap canonicity test with early exit runs before the geometric tests.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _backend
from .exactgeom import coplanar
from .kernel_data import CONNECTED, NONEMPTY, NONPLANAR, PROPER, build_inputs
from .solids import MAX_EDGES, Solid
from .symmetry import RotationGroup, close_group

log = logging.getLogger(__name__)

FILTER_NAMES = ("connected", "nonplanar", "proper", "nonempty")

DEFAULT_CHUNK = 1 << 20


@dataclass(frozen=True)
class FilterConfig:
    require_connected: bool = True
    require_nonplanar: bool = True
    exclude_empty: bool = True
    exclude_full: bool = True

    @classmethod
    def none(cls) -> FilterConfig:
        return cls(False, False, False, False)

    @classmethod
    def from_names(cls, names: str | list[str]) -> FilterConfig:
        if isinstance(names, str):
            names = [n.strip() for n in names.split(",") if n.strip()]
        unknown = set(names) - set(FILTER_NAMES)
        if unknown:
            raise ValueError(f"unknown filter(s): {', '.join(sorted(unknown))}")
        return cls(
            require_connected="connected" in names,
            require_nonplanar="nonplanar" in names,
            exclude_empty="nonempty" in names,
            exclude_full="proper" in names,
        )

    @property
    def names(self) -> list[str]:
        on = (self.require_connected, self.require_nonplanar, self.exclude_full, self.exclude_empty)
        return [name for name, flag in zip(FILTER_NAMES, on) if flag]

    @property
    def flags(self) -> int:
        return (
            CONNECTED * self.require_connected
            | NONPLANAR * self.require_nonplanar
            | NONEMPTY * self.exclude_empty
            | PROPER * self.exclude_full
        )

    def __str__(self) -> str:
        return ",".join(self.names) or "none"


@dataclass
class EnumerationResult:
    solid_name: str
    config: FilterConfig
    representatives: np.ndarray
    histogram: dict[int, int]
    total: int
    seconds: float = 0.0
    backend: str = ""
    workers: int = 1
    extra: dict = field(default_factory=dict)


# --- public predicates (direct routes, independent of the kernels) ---------


def is_canonical(mask: int, group: RotationGroup) -> bool:
    """True iff no rotation maps ``mask`` to a smaller word."""
    for table in group.tables[1:]:
        if table.apply(mask) < mask:
            return False
    return True


def is_connected(solid: Solid, mask: int) -> bool:
    """Connectivity of the selected edges over the vertices they touch."""
    if mask == 0:
        raise ValueError("is_connected needs a non-empty edge set")
    parent: dict[int, int] = {}

    def find(v: int) -> int:
        root = v
        while parent[root] != root:
            root = parent[root]
        while parent[v] != root:
            parent[v], v = root, parent[v]
        return root

    for e, (lo, hi) in enumerate(solid.edges):
        if mask >> e & 1:
            parent.setdefault(lo, lo)
            parent.setdefault(hi, hi)
            parent[find(lo)] = find(hi)
    return len({find(v) for v in parent}) == 1


def is_planar_subset(solid: Solid, mask: int) -> bool:
    """Whether every endpoint of the selected edges lies in one plane."""
    if mask == 0:
        raise ValueError("is_planar_subset needs a non-empty edge set")
    return coplanar(solid.vertices[v] for v in solid.edge_vertices(mask))


def passes_filters(solid: Solid, group: RotationGroup, mask: int, config: FilterConfig) -> bool:
    """Reference per-mask pipeline built from the public predicates."""
    if mask == 0 and (config.exclude_empty or config.require_connected or config.require_nonplanar):
        return False
    if mask == solid.full_mask and config.exclude_full:
        return False
    if not is_canonical(mask, group):
        return False
    if config.require_connected and not is_connected(solid, mask):
        return False
    if config.require_nonplanar and is_planar_subset(solid, mask):
        return False
    return True


# --- the sweep ---------------------------------------------------------------


def partition(total: int, workers: int) -> list[tuple[int, int]]:
    """Split ``[0, total)`` into ``workers`` contiguous blocks."""
    return [(i * total // workers, (i + 1) * total // workers) for i in range(workers)]


def _run_block(backend: str, inputs, start: int, stop: int, chunk: int):
    kernel = _backend.get(backend)
    parts = []
    hist = np.zeros(33, dtype=np.int64)
    for lo in range(start, stop, chunk):
        hi = min(lo + chunk, stop)
        reps, h = kernel.scan(lo, hi, inputs)
        parts.append(reps)
        hist += h
        log.debug("scanned [%d, %d): %d accepted", lo, hi, len(reps))
    reps = np.concatenate(parts) if parts else np.zeros(0, dtype=np.uint32)
    return reps, hist


def sweep(
    solid: Solid,
    group: RotationGroup | None = None,
    config: FilterConfig | None = None,
    workers: int = 1,
    *,
    backend: str | None = None,
    chunk: int = DEFAULT_CHUNK,
) -> EnumerationResult:
    """Enumerate orbit-minimal edge subsets that pass ``config``.

    ``[0, 2**edges)`` is split into one contiguous block per worker and the
    blocks are merged in order, so the output does not depend on ``workers``.
    """
    if workers < 1:
        raise ValueError("workers must be at least 1")
    if solid.edge_count > MAX_EDGES:
        raise ValueError(f"{solid.edge_count} edges exceed the 32-bit representation")
    group = close_group(solid) if group is None else group
    config = FilterConfig() if config is None else config
    kernel = _backend.get(backend)
    t0 = time.monotonic()
    inputs = build_inputs(solid, group, config.flags)
    blocks = partition(1 << solid.edge_count, workers)

    if workers == 1:
        results = [_run_block(kernel.NAME, inputs, *blocks[0], chunk)]
    else:
        # the compiled kernel drops the GIL, so threads give real parallelism
        pool_cls = ThreadPoolExecutor if kernel.NAME == "compiled" else ProcessPoolExecutor
        with pool_cls(max_workers=workers) as pool:
            futures = [pool.submit(_run_block, kernel.NAME, inputs, lo, hi, chunk) for lo, hi in blocks]
            results = [f.result() for f in futures]

    reps = np.concatenate([r for r, _ in results])
    hist_arr = sum((h for _, h in results), np.zeros(33, dtype=np.int64))
    histogram = {int(k): int(v) for k, v in enumerate(hist_arr) if v}
    seconds = time.monotonic() - t0
    log.info("%s [%s]: %d representatives in %.3f s", solid.name, config, len(reps), seconds)
    return EnumerationResult(
        solid_name=solid.name,
        config=config,
        representatives=reps,
        histogram=histogram,
        total=int(len(reps)),
        seconds=seconds,
        backend=kernel.NAME,
        workers=workers,
    )
