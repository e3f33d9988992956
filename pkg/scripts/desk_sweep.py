"""Run the three desk-scale sweeps and print one timed summary line each."""

import argparse
import time

from ospwind.partitions import Kind
from ospwind.verify import SweepRange, default_jobs, sweep

SWEEPS = {
    "hypersimplex n<=8": SweepRange(Kind.HYPERSIMPLEX, 2, 8),
    "simplex 2<=r,n<=5": SweepRange(Kind.SIMPLEX, 2, 5, 2, 5),
    "slice r<=3, n<=5": SweepRange(Kind.SLICE, 1, 5, 1, 3),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--jobs", type=int, default=default_jobs())
    args = parser.parse_args()
    ok = True
    for name, rng in SWEEPS.items():
        t0 = time.perf_counter()
        reports = sweep(rng, workers=args.jobs)
        bad = [r.family.label() for r in reports if not r.passed]
        ok &= not bad
        print(f"{name:20s} {len(reports):3d} instances  {time.perf_counter() - t0:6.2f}s  "
              + ("all match" if not bad else "FAILED: " + ", ".join(bad)))
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
