"""Output writers: representative lists, histograms and OBJ wireframes."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .solids import Solid


def write_representatives(representatives: Iterable[int], path: str | Path) -> None:
    """One mask per line, lowercase hex without prefix, in the given (ascending) order."""
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for m in representatives:
            fh.write(f"{int(m):x}\n")


def read_representatives(path: str | Path) -> list[int]:
    with open(path, encoding="ascii") as fh:
        return [int(line, 16) for line in fh if line.strip()]


def write_histogram(histogram: dict[int, int], path: str | Path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("edges,count\n")
        for edges in sorted(histogram):
            fh.write(f"{edges},{histogram[edges]}\n")


def read_histogram(path: str | Path) -> dict[int, int]:
    with open(path, encoding="ascii") as fh:
        header = fh.readline().strip()
        if header != "edges,count":
            raise ValueError(f"unexpected histogram header {header!r}")
        rows = (line.strip().split(",") for line in fh if line.strip())
        return {int(e): int(c) for e, c in rows}


def wireframe_obj(solid: Solid, mask: int) -> str:
    lines = [f"# {solid.name} edge mask {mask:x}"]
    for p in solid.vertices:
        x, y, z = p.to_floats()
        lines.append(f"v {x:.9f} {y:.9f} {z:.9f}")
    for e, (lo, hi) in enumerate(solid.edges):
        if mask >> e & 1:
            lines.append(f"l {lo + 1} {hi + 1}")
    return "\n".join(lines) + "\n"


def write_wireframe(solid: Solid, mask: int, path: str | Path) -> None:
    Path(path).write_text(wireframe_obj(solid, mask), encoding="ascii")
