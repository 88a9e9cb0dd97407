"""Compare the compiled and pure-Python sweep kernels.

    python benchmarks/bench_sweep.py            # small solids + 2**20-mask windows
    python benchmarks/bench_sweep.py --full     # add full compiled 2**30 sweeps

The pure kernel cannot sweep the 30-edge solids in reasonable time, so both
kernels are also timed on identical windows at the start of the mask range,
where canonical masks (and so connectivity/planarity work) are densest.
"""

from __future__ import annotations

import argparse
import time

from incomplete_open import _backend
from incomplete_open.enumeration import FilterConfig, sweep
from incomplete_open.kernel_data import build_inputs
from incomplete_open.solids import builtin_solid
from incomplete_open.symmetry import close_group


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--window", type=int, default=1 << 16, help="masks per window for 30-edge solids")
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--full", action="store_true")
    args = parser.parse_args()

    backends = _backend.available()
    print(f"backends: {', '.join(backends)}")
    print(f"{'case':<34}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")

    for name in ("tetrahedron", "cube", "octahedron"):
        solid = builtin_solid(name)
        group = close_group(solid)
        times = [best_of(lambda b=b: sweep(solid, group, backend=b), args.repeat) for b in backends]
        row = f"{name + ' full sweep':<34}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        print(row + (f"{times[0] / times[-1]:>9.1f}x" if len(times) > 1 else ""))

    for name in ("dodecahedron", "icosahedron"):
        solid = builtin_solid(name)
        group = close_group(solid)
        inputs = build_inputs(solid, group, FilterConfig().flags)
        times = [
            best_of(lambda b=b: _backend.get(b).scan(0, args.window, inputs), args.repeat) for b in backends
        ]
        label = f"{name} [0, {args.window})"
        row = f"{label:<34}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        print(row + (f"{times[0] / times[-1]:>9.1f}x" if len(times) > 1 else ""))

    if args.full and "compiled" in backends:
        for name in ("dodecahedron", "icosahedron"):
            result = sweep(builtin_solid(name), backend="compiled")
            print(f"{name} full compiled sweep: total={result.total} in {result.seconds:.1f}s")


if __name__ == "__main__":
    main()
