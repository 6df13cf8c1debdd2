"""Compiled vs pure-Python kernels on the workloads the witness search runs.

    python3 benchmarks/bench_kernels.py [--repeat N] [--preset MC ...] [--heavy]

Each row reports the best of N runs per backend and the speedup.  The
end-to-end rows swap the backend functions on ``fdekit.kernels`` so the
search itself is unchanged.
"""

from __future__ import annotations

import argparse
import timeit
from contextlib import contextmanager

from fdekit import _pykernels, kernels
from fdekit.contraclassic import WitnessSearchBounds, classical_benchmark, find_contra_witnesses, formula_pool
from fdekit.presets import get_preset

try:
    from fdekit import _ckernels
except ImportError:
    _ckernels = None

KERNEL_NAMES = ("map_unary", "map_binary", "truth_mask", "witness_scan")
CASES = {"MC": (2, 2), "PCON": (2, 2), "CP": (1, 3), "BLSUP": (2, 3)}
HEAVY = {"CP": (2, 3)}  # about two minutes per run on the pure backend


@contextmanager
def backend(module):
    saved = {n: getattr(kernels, n) for n in KERNEL_NAMES}
    for n in KERNEL_NAMES:
        setattr(kernels, n, getattr(module, n))
    try:
        yield
    finally:
        for n, f in saved.items():
            setattr(kernels, n, f)


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def scan_inputs(logic, vars_, depth):
    names = ("p", "q", "r")[:vars_]
    pool, _ = formula_pool(logic, names, depth, classical_benchmark(logic))
    seen = {}
    for e in pool:
        seen.setdefault((_pykernels.truth_mask(e.vector), _pykernels.truth_mask(e.classical)), None)
    lm = [k[0] for k in seen]
    cm = [k[1] for k in seen]
    return pool, lm, cm, (1 << len(pool[0].vector)) - 1, (1 << len(pool[0].classical)) - 1


def rows(presets, cases):
    for preset in presets:
        vars_, depth = cases[preset]
        logic = get_preset(preset)
        bounds = WitnessSearchBounds(vars_, depth, 2, None)
        pool, lm, cm, lf, cf = scan_inputs(logic, vars_, depth)
        table = next(c.table for c in logic.connectives if c.arity == 2)
        vecs = [e.vector for e in pool[:200]]

        def pairs(mod):
            return lambda: [mod.map_binary(table, x, y) for x in vecs for y in vecs]

        def scan(mod):
            return lambda: mod.witness_scan(lm, cm, lf, cf, 2)

        def search(mod):
            def run():
                with backend(mod):
                    find_contra_witnesses(logic, bounds, limit=1)

            return run

        label = f"{preset} vars={vars_} depth={depth}"
        yield f"{label}: map_binary x{len(vecs) ** 2}", pairs
        yield f"{label}: witness_scan over {len(lm)} classes", scan
        yield f"{label}: full search", search


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--preset", action="append", choices=sorted(CASES))
    ap.add_argument("--heavy", action="store_true", help="use the larger CP bounds")
    args = ap.parse_args(argv)
    cases = {**CASES, **HEAVY} if args.heavy else CASES
    if _ckernels is None:
        raise SystemExit("compiled extension not built; run: pip install -e . --no-build-isolation")
    print(f"{'workload':58} {'python':>10} {'cython':>10} {'speedup':>8}")
    for label, make in rows(args.preset or list(CASES), cases):
        slow = best(make(_pykernels), args.repeat)
        fast = best(make(_ckernels), args.repeat)
        print(f"{label:58} {slow:9.4f}s {fast:9.4f}s {slow / fast:7.1f}x")


if __name__ == "__main__":
    main()
