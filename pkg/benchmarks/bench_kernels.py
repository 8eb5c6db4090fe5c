"""Compare the compiled and numpy kernel backends.

Run with ``python3 benchmarks/bench_kernels.py``. Each case is timed with
``timeit`` (best of several repeats) on both backends; the scan results are
checked for equality before timings are reported.
"""

import argparse
import timeit

import numpy as np

from golaysds import kernels
from golaysds.orbits import close_subgroup, orbit_partition
from golaysds.search.space import CombinationSpace, SpectralScanner


def cases(scan_count):
    rng = np.random.default_rng(0)
    seq = rng.choice(np.array([-1, 1], dtype=np.int8), size=226)
    elems = np.flatnonzero(rng.random(226) < 0.45).astype(np.int64)
    space = CombinationSpace(orbit_partition(close_subgroup(74, [47])), 36)
    start = space.total // 3
    return {
        "paf v=226": lambda: kernels.paf(seq),
        "difference_counts v=226": lambda: kernels.difference_counts(elems, 226),
        f"scan v=74 ({scan_count} combos)":
            lambda: SpectralScanner(space).scan(start, start + scan_count),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scan", type=int, default=50_000, help="combinations per scan")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    previous = kernels.get_backend()
    timings, outputs = {}, {}
    try:
        for name in backends:
            kernels.set_backend(name)
            for label, fn in cases(args.scan).items():
                outputs[name, label] = fn()
                number = 1 if label.startswith("scan") else 200
                best = min(timeit.repeat(fn, number=number, repeat=args.repeat)) / number
                timings[name, label] = best
    finally:
        kernels.set_backend(previous)

    labels = list(cases(args.scan))
    scan_label = labels[-1]
    if len(backends) > 1:
        a, b = (outputs[n, scan_label] for n in backends)
        assert a[1] == b[1] and [tuple(c) for c in a[0]] == [tuple(c) for c in b[0]], \
            "backends disagree"

    print(f"{'case':32s}" + "".join(f"{n:>14s}" for n in backends)
          + ("     speedup" if len(backends) > 1 else ""))
    for label in labels:
        row = f"{label:32s}" + "".join(f"{timings[n, label] * 1e3:12.3f}ms" for n in backends)
        if "cython" in backends:
            row += f"{timings['python', label] / timings['cython', label]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
