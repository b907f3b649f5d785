"""Timing comparison of the two scan kernels on identical workloads.

Runs each scan once per backend and prints wall times plus the speedup.
Results are cross-checked before a time is reported; a mismatch aborts.
Numba rows are skipped when the package is missing.

    python benchmarks/bench_backends.py [--repeats N]
"""

import argparse
import time

from resonance_lab._kernels import _HAS_NUMBA
from resonance_lab.graphs import parse_graph
from resonance_lab.matroid import catalog
from resonance_lab.oracle import scan_component, scan_resonance
from resonance_lab.rings import make_ring


def _full_scan(name, spec):
    m = catalog(name)
    ring = make_ring(spec)
    def run(backend):
        rep = scan_resonance(m, ring, backend=backend)
        return rep.universe, len(rep.points)
    return run


def _component_scan(name, gtxt, spec):
    m = catalog(name)
    ring = make_ring(spec)
    graph = parse_graph(gtxt, m.n)
    def run(backend):
        rep = scan_component(graph, m, ring, backend=backend)
        return rep.universe, rep.strata
    return run


CASES = [
    ("nonfano full scan / F4", _full_scan("nonfano", "F4")),
    ("deletedB3 full scan / F4", _full_scan("deletedB3", "F4")),
    ("hessian component / F9", _component_scan("hessian", "123|456|789|αβγ", "F9")),
    ("braid component / F64", _component_scan("braid-K4", "12|34|56", "F64")),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    backends = ["numpy"] + (["numba"] if _HAS_NUMBA else [])
    if not _HAS_NUMBA:
        print("numba not importable, timing the numpy path only")

    for label, run in CASES:
        results, times = {}, {}
        for backend in backends:
            run(backend)  # warm up: jit compilation, catalog caches
            best = float("inf")
            for _ in range(args.repeats):
                t0 = time.perf_counter()
                results[backend] = run(backend)
                best = min(best, time.perf_counter() - t0)
            times[backend] = best
        if len(set(map(str, results.values()))) > 1:
            raise SystemExit(f"backend mismatch on {label}: {results}")
        line = f"{label:32s}"
        for backend in backends:
            line += f"  {backend} {times[backend] * 1000:9.2f} ms"
        if len(backends) == 2:
            line += f"  speedup x{times['numpy'] / times['numba']:.1f}"
        print(line)


if __name__ == "__main__":
    main()
