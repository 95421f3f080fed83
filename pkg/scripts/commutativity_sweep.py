"""Sweep commutator checks across systems and multiplicity grids.

Usage: python scripts/commutativity_sweep.py [--max-degree 5]
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from fractions import Fraction

from dunklinv.dunkl import commutator_check, make_context
from dunklinv.exactalg import Polynomial, monomials_of_degree


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=5)
    args = ap.parse_args()

    grid = ["0", "1/2", "1", "7/3"]
    total = failures = 0
    started = time.monotonic()
    for system in ("A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3", "G2"):
        for k in grid:
            ctx = make_context(system, f"all={k}")
            bad = 0
            for d in range(args.max_degree + 1):
                for mono in monomials_of_degree(ctx.rank, d):
                    p = Polynomial(ctx.rank, {mono: Fraction(1)})
                    for i in range(ctx.rank):
                        for j in range(i + 1, ctx.rank):
                            xi = [Fraction(i == t) for t in range(ctx.rank)]
                            eta = [Fraction(j == t) for t in range(ctx.rank)]
                            total += 1
                            if commutator_check(ctx, xi, eta, p):
                                bad += 1
            failures += bad
            print(f"{system:>3}  k={k:>4}  commutators checked, failures: {bad}")
    elapsed = time.monotonic() - started
    print(f"\n{total} commutators, {failures} failures, {elapsed:.1f}s")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
